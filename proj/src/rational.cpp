#include "soliton/rational.hpp"

#include <cctype>

#include "soliton/errors.hpp"

namespace soliton {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto fail = [&]() -> Rational {
    throw DomainError(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Integer d{std::string(den)};
    if (d == 0) return fail();
    value = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      return fail();
    std::string digits = std::string(whole) + std::string(frac);
    Integer num{digits}, den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(num, den);
  } else {
    if (!all_digits(body)) return fail();
    value = Rational(Integer{std::string(body)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_rational(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' ||
        c == ']')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

}  // namespace soliton

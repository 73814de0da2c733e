#pragma once

// Exact scalar used throughout the combinatorial core, together with the
// Eigen glue that lets it live inside dense matrices.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace soliton {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RMatrix = Matrix<Rational>;

// Accepts "7", "-3/4", "1.5" and "-0.25e1"-free decimals.
Rational parse_rational(std::string_view text);

// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

// Parses a comma or whitespace separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace soliton

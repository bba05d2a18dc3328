#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace symbiont {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Expression templates are off so the type behaves
/// like a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Payoff vector indexed by agent id.
using Allocation = Vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational factorial(unsigned n);

Allocation zero_allocation(std::size_t n);

}  // namespace symbiont

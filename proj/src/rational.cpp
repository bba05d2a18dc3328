#include "symbiont/rational.hpp"

#include <stdexcept>

namespace symbiont {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  if (den.find_first_not_of('0') == std::string_view::npos)
    throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");

  // Leading zeros are stripped so the digits are never read as octal.
  auto integer = [](std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    return boost::multiprecision::mpz_int(first == std::string_view::npos ? std::string("0")
                                                                          : std::string(digits.substr(first)));
  };
  Rational value(integer(num), integer(den));
  return text.front() == '-' ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational factorial(unsigned n) {
  Rational out(1);
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Allocation zero_allocation(std::size_t n) {
  Allocation x(static_cast<Eigen::Index>(n));
  x.setZero();
  return x;
}

}  // namespace symbiont

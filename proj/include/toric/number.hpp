#ifndef TORIC_NUMBER_HPP
#define TORIC_NUMBER_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Arbitrary-precision integer used for every lattice coordinate.
using Integer = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational; always kept in lowest terms.
using Rational = boost::multiprecision::mpq_rational;

using RationalVector = std::vector<Rational>;

/// Base class for all errors thrown by the library.
class ToricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

/// Floor division for possibly negative operands.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Parses an optionally signed decimal integer; throws ToricError otherwise.
inline Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ToricError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ToricError("not an integer: '" + text + "'");
  }
  Integer value((text[0] == '+' ? text.substr(1) : text).c_str());
  return value;
}

}  // namespace toric

#endif  // TORIC_NUMBER_HPP

#include "fg/numeric.hpp"

#include <sstream>

namespace fg {

double ln(const BigInt& x) {
  // Shift large values into double range before taking the log.
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  unsigned shift = bits - 64;
  BigInt top = x / (BigInt(1) << shift);
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  if (boost::multiprecision::denominator(x) != 1) os << '/' << boost::multiprecision::denominator(x);
  return os.str();
}

}  // namespace fg

#include "cvgeo/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace cvgeo {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational literal: " + text);
    BigInt p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(p, q); // integer-pair ctor canonicalizes
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text), BigInt(1));
  // decimal literal: sign digits . digits
  std::string head = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed decimal literal: " + text);
  bool neg = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
  if (head.empty()) head = "0";
  BigInt scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt p = BigInt(head) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
  if (neg) p = -p;
  return Rational(p, scale);
}

std::string to_string(const Rational& r) { return r.str(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral
  BigInt num(static_cast<long long>(std::ldexp(m, 53)));
  exp -= 53;
  if (exp >= 0) return Rational(num << exp, BigInt(1));
  return Rational(num, BigInt(1) << (-exp));
}

} // namespace cvgeo

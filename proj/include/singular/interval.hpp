#pragma once

// Enclosures with exact rational endpoints. Rational pipelines produce
// width-0 (exact) intervals; transcendental quantities (logarithms, real
// powers) are enclosed by MPFR with directed rounding and converted back to
// rational endpoints losslessly (every MPFR value is a dyadic rational).

#include "singular/rational.hpp"

#include <string>

namespace singular {

// Target absolute error 2^-m.
struct PrecisionBudget {
  long m;

  explicit PrecisionBudget(long m_) : m(m_) {
    if (m < 1) throw std::invalid_argument("precision budget requires m >= 1");
  }
};

class RatInterval {
 public:
  RatInterval() : lo_(0), hi_(0) {}
  RatInterval(Rat lo, Rat hi);

  static RatInterval point(const Rat& v) { return RatInterval(v, v); }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat mid() const { return (lo_ + hi_) / 2; }
  bool exact() const { return lo_ == hi_; }

  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RatInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  // Comparisons that hold for every point of the enclosure.
  bool definitely_less(const Rat& v) const { return hi_ < v; }
  bool definitely_greater(const Rat& v) const { return lo_ > v; }

  RatInterval operator-() const { return RatInterval(-hi_, -lo_); }

 private:
  Rat lo_, hi_;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
// b must not contain 0.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

RatInterval operator+(const RatInterval& a, const Rat& b);
RatInterval operator-(const Rat& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const Rat& b);
RatInterval operator/(const RatInterval& a, const Rat& b);
RatInterval operator/(const Rat& a, const RatInterval& b);

std::string to_string(const RatInterval& iv);

// --- MPFR-backed enclosures (directed rounding at prec_bits working
// precision; results are exact rational endpoints of the rounded values) ---

// Natural log of x > 0.
RatInterval log_enclosure(const Rat& x, long prec_bits);

// Base-2 log of x > 0.
RatInterval log2_enclosure(const Rat& x, long prec_bits);

// exp over a rational-endpoint interval.
RatInterval exp_enclosure(const RatInterval& y, long prec_bits);

// base^e for base > 0 and an interval exponent, via exp(e * log base).
RatInterval pow_enclosure(const Rat& base, const RatInterval& expo,
                          long prec_bits);

// Critical density l0(a) = log(2a) / (log a - log(1-a)) enclosed to width
// <= 2^-m. Requires 0 < a < 1, a != 1/2.
RatInterval l0_enclosure(const Rat& a, long m);

} // namespace singular

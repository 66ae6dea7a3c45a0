#include "singular/interval.hpp"

#include <mpfr.h>

#include <algorithm>

namespace singular {

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() - b.hi(), a.hi() - b.lo());
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
  Rat p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
  return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains(0)) throw std::domain_error("interval division by zero");
  Rat p1 = a.lo() / b.lo(), p2 = a.lo() / b.hi();
  Rat p3 = a.hi() / b.lo(), p4 = a.hi() / b.hi();
  return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval operator+(const RatInterval& a, const Rat& b) {
  return RatInterval(a.lo() + b, a.hi() + b);
}

RatInterval operator-(const Rat& a, const RatInterval& b) {
  return RatInterval(a - b.hi(), a - b.lo());
}

RatInterval operator*(const RatInterval& a, const Rat& b) {
  if (b >= 0) return RatInterval(a.lo() * b, a.hi() * b);
  return RatInterval(a.hi() * b, a.lo() * b);
}

RatInterval operator/(const RatInterval& a, const Rat& b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (b > 0) return RatInterval(a.lo() / b, a.hi() / b);
  return RatInterval(a.hi() / b, a.lo() / b);
}

RatInterval operator/(const Rat& a, const RatInterval& b) {
  return RatInterval::point(a) / b;
}

std::string to_string(const RatInterval& iv) {
  if (iv.exact()) return to_string(iv.lo());
  return "[" + to_string(iv.lo()) + ", " + to_string(iv.hi()) + "]";
}

namespace {

// RAII mpfr_t.
class Fr {
 public:
  explicit Fr(long prec) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); }
  ~Fr() { mpfr_clear(v_); }
  Fr(const Fr&) = delete;
  Fr& operator=(const Fr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

Rat to_rat(mpfr_srcptr v) {
  if (!mpfr_number_p(v)) throw std::domain_error("non-finite enclosure endpoint");
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v);
  return q;
}

// f applied to rational x with each endpoint rounded outward; f must be
// nondecreasing.
template <typename F>
RatInterval monotone_enclosure(const Rat& x, long prec, F&& f) {
  Fr xlo(prec), xhi(prec), lo(prec), hi(prec);
  mpfr_set_q(xlo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xhi.get(), x.get_mpq_t(), MPFR_RNDU);
  f(lo.get(), xlo.get(), MPFR_RNDD);
  f(hi.get(), xhi.get(), MPFR_RNDU);
  return RatInterval(to_rat(lo.get()), to_rat(hi.get()));
}

} // namespace

RatInterval log_enclosure(const Rat& x, long prec_bits) {
  if (x <= 0) throw std::domain_error("log of nonpositive value");
  return monotone_enclosure(x, prec_bits, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    mpfr_log(r, a, rnd);
  });
}

RatInterval log2_enclosure(const Rat& x, long prec_bits) {
  if (x <= 0) throw std::domain_error("log2 of nonpositive value");
  return monotone_enclosure(x, prec_bits, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    mpfr_log2(r, a, rnd);
  });
}

RatInterval exp_enclosure(const RatInterval& y, long prec_bits) {
  Fr alo(prec_bits), ahi(prec_bits), lo(prec_bits), hi(prec_bits);
  mpfr_set_q(alo.get(), y.lo().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(ahi.get(), y.hi().get_mpq_t(), MPFR_RNDU);
  mpfr_exp(lo.get(), alo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), ahi.get(), MPFR_RNDU);
  return RatInterval(to_rat(lo.get()), to_rat(hi.get()));
}

RatInterval pow_enclosure(const Rat& base, const RatInterval& expo,
                          long prec_bits) {
  if (base <= 0) throw std::domain_error("pow_enclosure requires base > 0");
  RatInterval lb = log_enclosure(base, prec_bits);
  return exp_enclosure(expo * lb, prec_bits);
}

RatInterval l0_enclosure(const Rat& a, long m) {
  if (a <= 0 || a >= 1 || a == Rat(1, 2))
    throw std::domain_error("l0 requires 0 < a < 1 and a != 1/2");
  const Rat target = pow2_neg(m);
  for (long prec = std::max<long>(64, m + 16);; prec *= 2) {
    RatInterval num = log_enclosure(2 * a, prec);
    RatInterval den = log_enclosure(a / (1 - a), prec);
    RatInterval l0 = num / den; // den excludes 0 because a != 1/2
    if (l0.width() <= target) return l0;
    if (prec > (m + 64) * 64)
      throw std::runtime_error("l0 enclosure failed to converge");
  }
}

} // namespace singular

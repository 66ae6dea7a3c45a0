#include "singular/rational.hpp"

#include <cctype>

namespace singular {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat dyadic_rat(const Int& j, long n) {
  if (n < 0) throw std::invalid_argument("negative dyadic exponent");
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return make_rat(j, den);
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& r, unsigned long e) {
  return make_rat(pow_int(r.get_num(), e), pow_int(r.get_den(), e));
}

Rat pow2_neg(long n) { return dyadic_rat(1, n); }

bool is_dyadic(const Rat& r) {
  const Int& den = r.get_den(); // canonical, > 0
  // Power of two iff a single bit is set.
  return mpz_popcount(den.get_mpz_t()) == 1;
}

long dyadic_exponent(const Rat& r) {
  if (!is_dyadic(r)) throw std::invalid_argument("not a dyadic rational");
  return static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2)) - 1;
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  if (s.size() >= 3 && s.compare(s.size() - 3, 3, "...") == 0)
    throw std::invalid_argument(
        "repeating decimals are not representable; write the value as p/q");
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: " + text);
    value = make_rat(Int(num), Int(den));
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("malformed decimal literal: " + text);
    Int scale = pow_int(10, static_cast<unsigned long>(fp.size()));
    value = make_rat(Int(ip) * scale + Int(fp), scale);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational literal: " + text);
    value = Rat(Int(s));
  }
  return neg ? Rat(-value) : value;
}

std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace singular

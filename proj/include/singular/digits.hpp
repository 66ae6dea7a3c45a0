#pragma once

// Canonical binary expansions of points in [0,1] and the digit statistics
// (ones counts I_n, zero/one addresses p_k/q_k, densities) that the
// derivative classification consumes.
//
// Canonical form: a dyadic x < 1 uses the expansion that is eventually all
// zeros; x = 1 is the all-ones expansion. Eventually periodic expansions are
// stored with a primitive period and a minimal preamble, so structural
// equality coincides with value equality for the exact kinds.

#include "singular/interval.hpp"
#include "singular/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace singular {

// Declared limiting behavior of f(k) = p_k - k/D0 for programmatic
// expansions. Density existence is a tail property, so this is evidence the
// constructor supplies; it is never inferred from finitely many digits.
enum class FLimit { PlusInfinity, MinusInfinity, Bounded, Unknown };

// Density of the digit 1, either an exact rational or the critical density
// l0(bias) (the unique D1 with a^{D0}(1-a)^{D1} = 1/2), which is irrational
// for the biases used here.
class Density {
 public:
  enum class Kind { Rational, Critical };

  static Density rational(Rat value);
  static Density critical_for(Rat bias);

  Kind kind() const { return kind_; }
  const Rat& value() const;  // Rational only
  const Rat& bias() const;   // Critical only

  Density complement() const; // density of the other digit
  bool degenerate() const;    // D1 in {0,1} (Rational only; l0 never is)
  RatInterval enclosure(long m) const; // width <= 2^-m (0 when Rational)

  friend bool operator==(const Density& a, const Density& b) {
    return a.kind_ == b.kind_ && a.payload_ == b.payload_;
  }

 private:
  Density(Kind k, Rat payload) : kind_(k), payload_(std::move(payload)) {}
  Kind kind_;
  Rat payload_;
};

// Declared metadata carried by programmatic expansions.
struct ProgrammaticMeta {
  std::optional<Density> d1;
  FLimit f_limit = FLimit::Unknown;
  std::optional<Rat> limsup_ones_ratio; // limsup I_n/n
  std::optional<Rat> liminf_ones_ratio; // liminf I_n/n
};

class BinaryExpansion {
 public:
  enum class Kind { Finite, EventuallyPeriodic, Programmatic };

  // Digit rule: 1-based position -> digit in {0,1}. Must be pure.
  using DigitRule = std::function<int(long long)>;

  static BinaryExpansion programmatic(DigitRule rule, ProgrammaticMeta meta);

  Kind kind() const;
  // k >= 1.
  int digit(long long k) const;
  std::vector<std::uint8_t> prefix(long long n) const;
  // Dyadic bounds [lo, hi] with x in [lo, hi] and hi - lo <= 2^-m
  // (width 0 for the exact kinds).
  std::pair<Rat, Rat> bracket(long m) const;
  std::optional<Rat> exact_value() const; // Finite / EventuallyPeriodic
  bool is_dyadic() const;                 // Finite, or x = 1
  // Value of the shifted digit stream 0.e_{pos+1} e_{pos+2} ... ; exact
  // kinds only.
  Rat tail_value(long long pos) const;

  const ProgrammaticMeta* meta() const; // null unless Programmatic
  // Density of ones: exact for Finite/EventuallyPeriodic, declared for
  // Programmatic (may be absent).
  std::optional<Density> ones_density() const;

  // Expansion of 1 - x: bitwise complement for non-dyadic x, with declared
  // metadata mapped accordingly (D1 -> 1 - D1, f-limit sign flipped).
  BinaryExpansion reflected() const;

  // x + sign * j / 2^s, staying in [0,1]. For programmatic expansions this
  // rewrites the first s digits (no information about the tail is needed);
  // throws std::domain_error when the result would leave [0,1] or when that
  // cannot be decided from the first s digits.
  BinaryExpansion add_dyadic(const Int& j, long s, int sign) const;

  friend bool operator==(const BinaryExpansion& a, const BinaryExpansion& b);

 private:
  struct Finite {
    Int j;  // canonical: j = 0 with n = 0, or j odd
    long n; // value j / 2^n in [0, 1)
  };
  struct Periodic {
    std::vector<std::uint8_t> pre, per; // per nonempty, canonical
    Rat value;
  };
  struct Prog {
    DigitRule rule;
    ProgrammaticMeta meta;
  };

  explicit BinaryExpansion(std::variant<Finite, Periodic, Prog> rep)
      : rep_(std::move(rep)) {}

  std::variant<Finite, Periodic, Prog> rep_;

  friend BinaryExpansion canonicalize(const Rat& value);
  friend BinaryExpansion canonicalize(const std::vector<int>& preamble,
                                      const std::vector<int>& period);
};

// Canonicalization entry points (the only constructors for exact kinds).
BinaryExpansion canonicalize(const Rat& value); // any rational in [0,1]
BinaryExpansion canonicalize(const std::vector<int>& finite_digits);
BinaryExpansion canonicalize(const std::vector<int>& preamble,
                             const std::vector<int>& period);

std::vector<std::uint8_t> digit_prefix(const BinaryExpansion& x, long long n);

// Lazy digit statistics. Thread-safe; counts and positions are cached as
// they are discovered.
class DigitStats {
 public:
  explicit DigitStats(BinaryExpansion x);

  long long ones(long long n) const;  // I_n
  long long zeros(long long n) const; // O_n = n - I_n
  long long zero_position(long long k) const; // p_k
  long long one_position(long long k) const;  // q_k
  std::optional<Density> d1() const;
  std::optional<Density> d0() const;
  const BinaryExpansion& expansion() const { return x_; }

 private:
  void extend(long long upto) const;

  BinaryExpansion x_;
  std::optional<Density> d1_;
  mutable std::shared_ptr<struct StatsCache> cache_;
};

DigitStats stats(const BinaryExpansion& x);

// f(k) = p_k - k/D0 and g(k) = k/D1 - q_k for k = 1..K. Exact (width 0)
// when the density is rational; enclosures otherwise. prec_bits controls the
// enclosure of the irrational density.
std::vector<RatInterval> f_sequence(const BinaryExpansion& x, long long K,
                                    long prec_bits = 96);
std::vector<RatInterval> g_sequence(const BinaryExpansion& x, long long K,
                                    long prec_bits = 96);

// Programmatic expansion sitting on the critical boundary for bias a:
// zeros at positions p_k = round_half_up(k / D0) + offset(k), collisions
// resolved by shifting the later zero one slot right. D0 = 1 - l0(a).
// offset must keep a single sign with |offset| nondecreasing (validated for
// k <= k_max); declared metadata is D1 = l0(a) and the f-limit matching the
// offset's sign (offset == 0 -> Bounded).
BinaryExpansion make_boundary_expansion(const Rat& a,
                                        std::function<long long(long long)> offset,
                                        long long k_max);

} // namespace singular

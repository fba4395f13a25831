#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffv {

/// Exact rational scalar. All arithmetic in the library happens over this
/// type; there is no floating point anywhere in the evaluation paths.
///
/// Invariants: denominator > 0, gcd(|num|, den) = 1. Construction
/// canonicalizes; GMP keeps arithmetic results canonical from there.
/// Values are immutable in spirit: operators return fresh objects and the
/// class holds no shared state, so concurrent use from multiple threads is
/// safe as long as each thread owns its operands.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p/q", plain integers, and terminating decimals ("-3.25").
  static Rational parse(const std::string& text);

  /// Always "p/q" with an explicit denominator, e.g. "-4/1".
  std::string str() const;
  /// Decimal string when the denominator is of the form 2^a 5^b,
  /// otherwise falls back to str().
  std::string decimal_str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; note(); return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; note(); return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; note(); return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    note();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_, NoCanon{});
  }

  /// Digit watermarking for the bench tool: while enabled, every arithmetic
  /// result updates a process-wide high-water mark of decimal digit counts.
  static void watch_digits(bool on) {
    peak_digits_.store(0, std::memory_order_relaxed);
    track_digits_.store(on, std::memory_order_relaxed);
  }
  static std::size_t digit_watermark() {
    return peak_digits_.load(std::memory_order_relaxed);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}

  void note() const {
    if (!track_digits_.load(std::memory_order_relaxed)) return;
    std::size_t d = mpz_sizeinbase(mpq_numref(v_.get_mpq_t()), 10);
    std::size_t e = mpz_sizeinbase(mpq_denref(v_.get_mpq_t()), 10);
    if (e > d) d = e;
    std::size_t cur = peak_digits_.load(std::memory_order_relaxed);
    while (d > cur &&
           !peak_digits_.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
    }
  }

  static inline std::atomic<bool> track_digits_{false};
  static inline std::atomic<std::size_t> peak_digits_{0};

  mpq_class v_;
};

/// Canonical construction from an integer pair; sign ends up on the numerator.
inline Rational normalize(long num, long den) { return Rational(num, den); }

struct SamplePoint {
  Rational node;
  Rational value;
};

/// Degree of the minimal-degree polynomial interpolating the samples,
/// measured by divided differences: the largest k whose k-th divided
/// difference is nonzero. The zero polynomial has degree 0 by convention.
/// Throws on duplicate nodes or an empty sample set.
int exact_degree(const std::vector<SamplePoint>& samples);

/// Evaluates the Lagrange interpolant through the samples at x.
Rational lagrange_eval(const std::vector<SamplePoint>& samples, const Rational& x);

/// Deterministic seeded generator of small rationals: numerators in [-9, 9],
/// denominators in [1, 9]. splitmix64 underneath, so streams are identical
/// across platforms and runs.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t raw();
  Rational next();
  Rational next_nonzero();

 private:
  std::uint64_t state_;
};

/// One-way mix for deriving independent per-case seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace ffv

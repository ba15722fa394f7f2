#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace seqrel {

// Counts of field operations performed while a CountingScope is active.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;

  std::uint64_t basic() const { return multiplications + inversions; }

  OpCounter& operator+=(const OpCounter& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    inversions += o.inversions;
    return *this;
  }
};

namespace detail {
inline thread_local OpCounter* active_counter = nullptr;
}

inline void count_additions(std::uint64_t k = 1) {
  if (auto* c = detail::active_counter) c->additions += k;
}
inline void count_multiplications(std::uint64_t k = 1) {
  if (auto* c = detail::active_counter) c->multiplications += k;
}
inline void count_inversions(std::uint64_t k = 1) {
  if (auto* c = detail::active_counter) c->inversions += k;
}

class CountingScope {
 public:
  explicit CountingScope(OpCounter& c) : prev_(detail::active_counter) {
    detail::active_counter = &c;
  }
  ~CountingScope() { detail::active_counter = prev_; }
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* prev_;
};

// Suspends counting, e.g. while an oracle computes sequence terms.
class CountingPause {
 public:
  CountingPause() : prev_(detail::active_counter) { detail::active_counter = nullptr; }
  ~CountingPause() { detail::active_counter = prev_; }
  CountingPause(const CountingPause&) = delete;
  CountingPause& operator=(const CountingPause&) = delete;

 private:
  OpCounter* prev_;
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public FieldError {
 public:
  FieldMismatch() : FieldError("field mismatch") {}
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

bool is_prime(std::uint64_t n);

// Element of F_p, p < 2^62, stored as its canonical residue.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    count_additions();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    count_additions();
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    count_multiplications();
    auto prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return raw(static_cast<std::uint64_t>(prod % a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const;

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_ || a.p_ == 0) throw FieldMismatch();
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// Arbitrary-precision rational in lowest terms (GMP keeps it canonical).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    count_additions();
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    count_additions();
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    count_multiplications();
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  Rational inv() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Rational zero_like(const Rational&) { return Rational(0); }

std::string to_string(const Fp& a);        // symmetric representative, e.g. "-3"
std::string to_string(const Rational& a);  // "5/3"

class PrimeField {
 public:
  using Element = Fp;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long v) const;
  Fp from_integer(const mpz_class& v) const;
  Fp from_rational(const mpq_class& v) const;
  Fp parse(std::string_view text) const;
  Fp random(std::mt19937_64& rng) const;
  Fp random_nonzero(std::mt19937_64& rng) const;
  std::string spec() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using Element = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Rational from_integer(const mpz_class& v) const { return Rational(mpq_class(v)); }
  Rational from_rational(const mpq_class& v) const { return Rational(v); }
  Rational parse(std::string_view text) const;
  // Random integers in [-bound, bound]; keeps rational benchmarks readable.
  Rational random(std::mt19937_64& rng) const;
  Rational random_nonzero(std::mt19937_64& rng) const;
  std::string spec() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

  static constexpr long kRandomBound = 100;
};

using AnyField = std::variant<PrimeField, RationalField>;

// "Q" or "Fp:<prime>".
AnyField parse_field_spec(std::string_view spec);

}  // namespace seqrel

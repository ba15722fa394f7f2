#include "seqrel/field.hpp"

#include <charconv>
#include <string>

namespace seqrel {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpq_class parse_mpq(std::string_view text) {
  std::string s(trim(text));
  if (s.empty()) throw FieldError("empty coefficient");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FieldError("bad coefficient '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::inv() const {
  if (p_ == 0) throw FieldMismatch();
  if (v_ == 0) throw DivisionByZero();
  count_inversions();
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return Fp(static_cast<std::uint64_t>(t), p_);
}

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  count_inversions();
  return Rational(mpq_class(1 / q_));
}

std::string to_string(const Fp& a) {
  std::uint64_t v = a.value(), p = a.modulus();
  if (v > p / 2) return "-" + std::to_string(p - v);
  return std::to_string(v);
}

std::string to_string(const Rational& a) { return a.value().get_str(); }

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 62)) throw FieldError("modulus must be below 2^62");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
}

Fp PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_class m(std::to_string(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return Fp(std::stoull(r.get_str()), p_);
}

Fp PrimeField::from_rational(const mpq_class& v) const {
  Fp den = from_integer(v.get_den());
  if (den.is_zero()) throw DivisionByZero();
  CountingPause pause;
  return from_integer(v.get_num()) / den;
}

Fp PrimeField::parse(std::string_view text) const { return from_rational(parse_mpq(text)); }

Fp PrimeField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return Fp(dist(rng), p_);
}

Fp PrimeField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
  return Fp(dist(rng), p_);
}

Rational RationalField::parse(std::string_view text) const { return Rational(parse_mpq(text)); }

Rational RationalField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> dist(-kRandomBound, kRandomBound);
  return Rational(dist(rng));
}

Rational RationalField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> dist(1, kRandomBound);
  std::bernoulli_distribution neg(0.5);
  long v = dist(rng);
  return Rational(neg(rng) ? -v : v);
}

AnyField parse_field_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec == "Q" || spec == "QQ") return RationalField{};
  if (spec.starts_with("Fp:") || spec.starts_with("GF:")) {
    auto digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw FieldError("bad field spec '" + std::string(spec) + "'");
    return PrimeField(p);
  }
  throw FieldError("bad field spec '" + std::string(spec) + "' (expected Q or Fp:<prime>)");
}

}  // namespace seqrel

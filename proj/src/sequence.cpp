#include "seqrel/sequence.hpp"

namespace seqrel {

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

mpz_class fib(unsigned k) {
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), k);
  return r;
}

mpz_class binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_ui(unsigned long b, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

}  // namespace

BoundExceeded::BoundExceeded(std::vector<unsigned> index, std::vector<unsigned> shape)
    : SequenceError("index " + join(index) + " outside table shape " + join(shape)),
      index_(std::move(index)),
      shape_(std::move(shape)) {}

std::vector<unsigned> exponents(const Monomial& m) {
  std::vector<unsigned> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
  return e;
}

std::vector<std::string> generator_names() { return {"binomial", "pow23", "sq", "step", "fib4", "kron", "zero"}; }

GeneratorInfo generator_info(std::string_view name, std::size_t dim_for_zero) {
  if (name == "binomial") return {"binomial", 2, [](const Monomial& m) { return binom(m[0], m[1]); }};
  if (name == "pow23")
    return {"pow23", 2, [](const Monomial& m) { return mpz_class(pow_ui(2, m[0]) * pow_ui(3, m[1]) * (m[0] + 1)); }};
  if (name == "sq")
    return {"sq", 2, [](const Monomial& m) {
              mpz_class i = m[0], j = m[1];
              return mpz_class(i * i + j * j - 1);
            }};
  if (name == "step")
    return {"step", 2, [](const Monomial& m) {
              mpz_class i = m[0], j = m[1];
              return mpz_class(i * i + j + (3 * m[0] + 2 * m[1] > 9 ? 1 : 0));
            }};
  if (name == "fib4") return {"fib4", 3, [](const Monomial& m) { return fib(4 * m[0] + m[2]); }};
  if (name == "kron") return {"kron", 2, [](const Monomial& m) { return mpz_class(m[0] == 1 && m[1] == 1 ? 1 : 0); }};
  if (name == "zero") {
    if (dim_for_zero == 0 || dim_for_zero > kMaxVars) throw SequenceError("bad dimension for zero");
    return {"zero", dim_for_zero, [](const Monomial&) { return mpz_class(0); }};
  }
  throw SequenceError("unknown generator '" + std::string(name) + "'");
}

}  // namespace seqrel

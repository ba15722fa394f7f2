#pragma once

#include "seqrel/field.hpp"
#include "seqrel/monomial.hpp"
#include "seqrel/poly.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace seqrel {

class SequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PositiveDimensional : public SequenceError {
 public:
  using SequenceError::SequenceError;
};

// Raised when an index lies outside a finite table.
class BoundExceeded : public SequenceError {
 public:
  BoundExceeded(std::vector<unsigned> index, std::vector<unsigned> shape);

  const std::vector<unsigned>& index() const { return index_; }
  const std::vector<unsigned>& shape() const { return shape_; }

 private:
  std::vector<unsigned> index_;
  std::vector<unsigned> shape_;
};

std::vector<unsigned> exponents(const Monomial& m);

// Memoized u_i provider. Copies share the memo.
template <class F>
class SequenceOracle {
 public:
  using K = typename F::Element;
  using Provider = std::function<K(const Monomial&)>;

  SequenceOracle(F field, std::size_t dim, std::string name, Provider provider, std::vector<unsigned> shape = {})
      : field_(std::move(field)),
        dim_(dim),
        name_(std::move(name)),
        shape_(std::move(shape)),
        state_(std::make_shared<State>(std::move(provider))) {}

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  // Empty for infinite sequences.
  const std::vector<unsigned>& shape() const { return shape_; }

  K get(const Monomial& i) const {
    if (i.size() != dim_) throw SequenceError("index dimension " + std::to_string(i.size()) + " for a " +
                                              std::to_string(dim_) + "-dimensional sequence");
    if (!shape_.empty())
      for (std::size_t k = 0; k < dim_; ++k)
        if (i[k] >= shape_[k]) throw BoundExceeded(exponents(i), shape_);
    std::lock_guard lock(state_->mu);
    auto it = state_->memo.find(i);
    if (it != state_->memo.end()) return it->second;
    CountingPause pause;
    K v = state_->provider(i);
    state_->memo.emplace(i, v);
    state_->distinct.fetch_add(1, std::memory_order_relaxed);
    return v;
  }

  // Distinct indices ever fetched through this oracle (all runs).
  std::size_t distinct_fetched() const { return state_->distinct.load(std::memory_order_relaxed); }

 private:
  struct State {
    explicit State(Provider p) : provider(std::move(p)) {}
    std::mutex mu;
    Provider provider;
    std::unordered_map<Monomial, K, MonomialHash> memo;
    std::atomic<std::size_t> distinct{0};
  };

  F field_;
  std::size_t dim_;
  std::string name_;
  std::vector<unsigned> shape_;
  std::shared_ptr<State> state_;
};

// One run's view of an oracle; counts the distinct indices this run touched.
template <class F>
class Probe {
 public:
  using K = typename F::Element;

  explicit Probe(const SequenceOracle<F>& oracle) : oracle_(&oracle) {}

  K operator()(const Monomial& i) {
    seen_.insert(i);
    return oracle_->get(i);
  }

  std::size_t queries() const { return seen_.size(); }
  const SequenceOracle<F>& oracle() const { return *oracle_; }
  const F& field() const { return oracle_->field(); }

 private:
  const SequenceOracle<F>* oracle_;
  std::unordered_set<Monomial, MonomialHash> seen_;
};

// [shift * f] = sum_k a_k u_{k+shift}.
template <class F>
typename F::Element bracket(Probe<F>& u, const Poly<typename F::Element>& f, const Monomial& shift) {
  auto acc = u.field().zero();
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    auto term = c * u(m * shift);
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

// Uncounted evaluation for verification.
template <class F>
typename F::Element bracket(const SequenceOracle<F>& u, const Poly<typename F::Element>& f, const Monomial& shift) {
  CountingPause pause;
  auto acc = u.field().zero();
  for (const auto& [m, c] : f.terms()) acc += c * u.get(m * shift);
  return acc;
}

// Closed forms of the built-in generators, as integers.
struct GeneratorInfo {
  std::string name;
  std::size_t dim;
  std::function<mpz_class(const Monomial&)> value;
};

// binomial, pow23, sq, step, fib4, kron, zero (dim chosen by the caller).
GeneratorInfo generator_info(std::string_view name, std::size_t dim_for_zero = 2);
std::vector<std::string> generator_names();

template <class F>
SequenceOracle<F> make_generator(std::string_view name, const F& field, std::size_t dim_for_zero = 2) {
  auto info = generator_info(name, dim_for_zero);
  auto fn = info.value;
  return SequenceOracle<F>(field, info.dim, info.name, [field, fn](const Monomial& i) {
    return field.from_integer(fn(i));
  });
}

// Row-major table with the first index slowest.
template <class F>
SequenceOracle<F> make_table(const F& field, std::vector<unsigned> shape, std::vector<typename F::Element> entries,
                             std::string name = "table") {
  std::size_t total = 1;
  for (unsigned d : shape) total *= d;
  if (shape.empty() || total != entries.size())
    throw SequenceError("table has " + std::to_string(entries.size()) + " entries, shape needs " +
                        std::to_string(total));
  auto data = std::make_shared<std::vector<typename F::Element>>(std::move(entries));
  std::vector<unsigned> dims = shape;
  std::size_t n = shape.size();
  return SequenceOracle<F>(
      field, n, std::move(name),
      [data, dims](const Monomial& i) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) off = off * dims[k] + i[k];
        return (*data)[off];
      },
      std::move(shape));
}

template <class K>
struct IdealSequenceSpec {
  std::vector<Poly<K>> gb;
  MonomialOrder ord;
  std::vector<std::pair<Monomial, K>> initial;
};

// u_m = initial value on the staircase; elsewhere rewritten with the first
// basis element whose leading monomial divides m.
template <class F>
SequenceOracle<F> from_ideal(const F& field, const IdealSequenceSpec<typename F::Element>& spec,
                             std::string name = "ideal") {
  using K = typename F::Element;
  const auto& ord = spec.ord;
  struct Rule {
    Monomial lm;
    K lc_inv;
    std::vector<std::pair<Monomial, K>> tail;
  };
  auto lms = leading_monomials(spec.gb, ord);
  if (!lms_zero_dimensional(lms, ord.nvars()))
    throw PositiveDimensional("the leading monomials do not close a staircase");
  MonomialSet stairs = staircase_of_lms(lms, ord);
  auto values = std::make_shared<std::unordered_map<Monomial, K, MonomialHash>>();
  for (const auto& [m, v] : spec.initial) {
    if (!contains(stairs, m, ord))
      throw SequenceError("initial value at " + format_monomial(m, ord) + " outside the staircase");
    (*values)[m] = v;
  }
  if (values->size() != stairs.size() || spec.initial.size() != stairs.size())
    throw SequenceError("initial values must cover the staircase exactly (" + std::to_string(stairs.size()) +
                        " monomials)");
  auto rules = std::make_shared<std::vector<Rule>>();
  {
    CountingPause pause;
    for (const auto& g : sorted_by_lm(spec.gb, ord)) {
      if (g.is_zero()) continue;
      auto [m, c] = lt(g, ord);
      Rule r{m, c.inv(), {}};
      for (const auto& t : g.terms())
        if (t.first != m) r.tail.push_back(t);
      rules->push_back(std::move(r));
    }
  }
  auto mu = std::make_shared<std::mutex>();
  return SequenceOracle<F>(field, ord.nvars(), std::move(name), [values, rules, mu, field](const Monomial& want) {
    std::lock_guard lock(*mu);
    std::vector<Monomial> stack{want};
    while (!stack.empty()) {
      Monomial top = stack.back();
      if (values->count(top)) {
        stack.pop_back();
        continue;
      }
      const Rule* rule = nullptr;
      for (const auto& r : *rules)
        if (divides(r.lm, top)) {
          rule = &r;
          break;
        }
      if (!rule) throw SequenceError("monomial outside the staircase has no rewriting rule");
      Monomial t = quotient(top, rule->lm);
      bool missing = false;
      for (const auto& [k, c] : rule->tail) {
        Monomial tk = t * k;
        if (!values->count(tk)) {
          stack.push_back(tk);
          missing = true;
        }
      }
      if (missing) continue;
      K acc = field.zero();
      for (const auto& [k, c] : rule->tail) acc += c * values->at(t * k);
      (*values)[top] = -(acc * rule->lc_inv);
      stack.pop_back();
    }
    return values->at(want);
  });
}

template <class F>
struct RandomIdeal {
  SequenceOracle<F> oracle;
  std::vector<Poly<typename F::Element>> gb;
  MonomialSet staircase;
};

namespace detail {

template <class F>
typename F::Element power(const typename F::Element& a, unsigned e, const F& field) {
  auto r = field.one();
  for (unsigned k = 0; k < e; ++k) r *= a;
  return r;
}

}  // namespace detail

// Random sequence whose relation ideal has exactly the given leading
// monomials. The sequence is a weighted sum of point evaluations over a
// random grid shaped like the staircase; the basis element for the corner
// x^b is prod_k prod_{j<b_k} (x_k - sigma_k(j)), then inter-reduced.
template <class F>
RandomIdeal<F> random_from_lms(const MonomialSet& lms_in, const MonomialOrder& ord, const F& field,
                               std::uint64_t seed, std::string name = "random") {
  using K = typename F::Element;
  CountingPause pause;
  std::size_t n = ord.nvars();
  MonomialSet lms = min_divisibility(lms_in, ord);
  if (!lms_zero_dimensional(lms, n)) throw PositiveDimensional("the leading monomials do not close a staircase");
  MonomialSet stairs = staircase_of_lms(lms, ord);
  std::mt19937_64 rng(seed);

  std::vector<std::vector<K>> sigma(n);
  for (std::size_t k = 0; k < n; ++k) {
    unsigned need = 0;
    for (const auto& b : lms) need = std::max(need, b[k]);
    while (sigma[k].size() < need) {
      K c = field.random_nonzero(rng);
      if (std::find(sigma[k].begin(), sigma[k].end(), c) == sigma[k].end()) sigma[k].push_back(c);
    }
  }

  std::vector<Poly<K>> gb;
  for (const auto& b : lms) {
    auto p = Poly<K>::monomial(ord.one(), field.one());
    for (std::size_t k = 0; k < n; ++k)
      for (unsigned j = 0; j < b[k]; ++j) {
        // p * (x_k - sigma)
        auto shifted = mul_monomial(variable(n, k), p);
        p = sub(shifted, scale(sigma[k][j], p));
      }
    gb.push_back(std::move(p));
  }
  gb = inter_reduce(std::move(gb), ord);

  // Point coordinates for each staircase exponent, and random weights.
  std::vector<std::vector<K>> points;
  std::vector<K> weights;
  for (const auto& s : stairs) {
    std::vector<K> pt;
    for (std::size_t k = 0; k < n; ++k) pt.push_back(sigma[k][s[k]]);
    points.push_back(std::move(pt));
    weights.push_back(field.random_nonzero(rng));
  }
  IdealSequenceSpec<K> spec{gb, ord, {}};
  for (const auto& s : stairs) {
    K acc = field.zero();
    for (std::size_t p = 0; p < points.size(); ++p) {
      K term = weights[p];
      for (std::size_t k = 0; k < n; ++k) term *= detail::power(points[p][k], s[k], field);
      acc += term;
    }
    spec.initial.emplace_back(s, acc);
  }
  auto oracle = from_ideal(field, spec, std::move(name));
  return {std::move(oracle), std::move(gb), std::move(stairs)};
}

// Random initial values on the staircase of J.
template <class F>
SequenceOracle<F> random_from_ideal(const std::vector<Poly<typename F::Element>>& gb, const MonomialOrder& ord,
                                    const F& field, std::uint64_t seed) {
  using K = typename F::Element;
  auto lms = leading_monomials(gb, ord);
  if (!lms_zero_dimensional(lms, ord.nvars())) throw PositiveDimensional("the ideal is not zero-dimensional");
  std::mt19937_64 rng(seed);
  IdealSequenceSpec<K> spec{gb, ord, {}};
  for (const auto& s : staircase_of_lms(lms, ord)) spec.initial.emplace_back(s, field.random(rng));
  return from_ideal(field, spec);
}

}  // namespace seqrel

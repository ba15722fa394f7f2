#pragma once

#include "seqrel/bms.hpp"
#include "seqrel/rank_solver.hpp"
#include "seqrel/sfglm.hpp"

#include <chrono>
#include <ostream>

namespace seqrel {

template <class F>
bool verify_shift(const SequenceOracle<F>& oracle, const Poly<typename F::Element>& g, const MonomialSet& shifts) {
  for (const auto& m : shifts)
    if (!bracket(oracle, g, m).is_zero()) return false;
  return true;
}

// Every relation checked over its claimed shift set.
template <class F>
bool verify_relation_set(const SequenceOracle<F>& oracle, const RelationSet<typename F::Element>& rs) {
  for (const auto& r : rs.relations)
    if (!verify_shift(oracle, r.poly, certified_shifts(rs, r))) return false;
  return true;
}

template <class K>
bool is_zero_dimensional(const std::vector<Poly<K>>& G, const MonomialOrder& ord) {
  return lms_zero_dimensional(leading_monomials(G, ord), ord.nvars());
}

template <class K>
unsigned max_degree(const std::vector<Poly<K>>& G) {
  unsigned d = 0;
  for (const auto& g : G)
    for (const auto& t : g.terms()) d = std::max(d, t.first.degree());
  return d;
}

// Each element of `small` is a combination sum h_j g_j of `big` with every
// product of degree at most `window`.
template <class K>
bool ideal_contains_at_truncation(const std::vector<Poly<K>>& big, const std::vector<Poly<K>>& small,
                                  const MonomialOrder& ord, unsigned window) {
  CountingPause pause;
  if (small.empty()) return true;
  MonomialSet cols = monomials_up_to_degree(window, ord);
  std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
  for (std::size_t i = 0; i < cols.size(); ++i) pos.emplace(cols[i], i);
  std::optional<K> zero;
  for (const auto& g : small)
    if (!g.is_zero()) zero = zero_like(g.terms().front().second);
  for (const auto& g : big)
    if (!g.is_zero()) zero = zero_like(g.terms().front().second);
  if (!zero) return true;
  auto vec = [&](const Poly<K>& p) {
    std::vector<K> v(cols.size(), *zero);
    for (const auto& [m, c] : p.terms()) v[pos.at(m)] = c;
    return v;
  };
  IncrementalEchelon<K> ech(cols.size());
  for (const auto& g : big) {
    if (g.is_zero()) continue;
    unsigned dg = max_degree(std::vector<Poly<K>>{g});
    if (dg > window) continue;
    for (const auto& mu : monomials_up_to_degree(window - dg, ord)) ech.add(vec(mul_monomial(mu, g)));
  }
  for (const auto& g : small) {
    if (g.is_zero()) continue;
    if (max_degree(std::vector<Poly<K>>{g}) > window) return false;
    auto r = ech.reduce(vec(g));
    if (std::any_of(r.begin(), r.end(), [](const K& c) { return !c.is_zero(); })) return false;
  }
  return true;
}

template <class K>
struct ComparisonReport {
  std::vector<RelationSet<K>> runs;
  std::vector<bool> zero_dimensional;
  std::vector<bool> certified;
  std::vector<std::vector<bool>> contains;  // contains[i][j]: ideal(runs[j]) inside ideal(runs[i])
  unsigned window = 0;
};

template <class F>
ComparisonReport<typename F::Element> compare_runs(const SequenceOracle<F>& oracle,
                                                   std::vector<RelationSet<typename F::Element>> runs) {
  using K = typename F::Element;
  ComparisonReport<K> rep;
  rep.runs = std::move(runs);
  for (const auto& r : rep.runs) rep.window = std::max(rep.window, max_degree(r.polys()) + 1);
  for (const auto& r : rep.runs) {
    rep.zero_dimensional.push_back(is_zero_dimensional(r.polys(), r.order));
    rep.certified.push_back(verify_relation_set(oracle, r));
  }
  for (const auto& a : rep.runs) {
    std::vector<bool> row;
    for (const auto& b : rep.runs) row.push_back(ideal_contains_at_truncation(a.polys(), b.polys(), a.order, rep.window));
    rep.contains.push_back(std::move(row));
  }
  return rep;
}

enum class GorensteinVerdict { GorensteinLikely, NotGorenstein };

inline std::string to_string(GorensteinVerdict v) {
  return v == GorensteinVerdict::NotGorenstein ? "NotGorenstein" : "Gorenstein-likely";
}

template <class K>
struct GorensteinTrial {
  std::uint64_t seed;
  std::size_t rank;            // rank of H_{T,T}
  std::vector<Poly<K>> found;  // Scalar-FGLM relations
  bool larger;                 // relation ideal strictly contains J
};

template <class K>
struct GorensteinReport {
  GorensteinVerdict verdict = GorensteinVerdict::GorensteinLikely;
  std::size_t staircase_size = 0;
  MonomialSet T;
  std::vector<GorensteinTrial<K>> trials;
};

// Random sequences whose relation ideal contains J. A trial whose Hankel rank
// falls below the staircase size of J has a strictly larger relation ideal.
template <class F>
GorensteinReport<typename F::Element> gorenstein_test(const std::vector<Poly<typename F::Element>>& J,
                                                      const MonomialOrder& ord, const F& field, unsigned trials,
                                                      std::uint64_t seed) {
  using K = typename F::Element;
  auto lms = leading_monomials(J, ord);
  if (!lms_zero_dimensional(lms, ord.nvars())) throw PositiveDimensional("the ideal is not zero-dimensional");
  MonomialSet stairs = staircase_of_lms(lms, ord);
  unsigned d = 0;
  for (const auto& m : lms) d = std::max(d, m.degree());
  for (const auto& s : stairs) d = std::max(d, 2 * s.degree());
  GorensteinReport<K> rep;
  rep.staircase_size = stairs.size();
  rep.T = monomials_up_to_degree(d, ord);
  for (unsigned k = 0; k < trials; ++k) {
    std::uint64_t s = seed + k;
    auto oracle = random_from_ideal(J, ord, field, s);
    auto res = run_sfglm(oracle, ord, rep.T);
    bool larger = res.useful_staircase.size() < stairs.size();
    rep.trials.push_back({s, res.useful_staircase.size(), res.gb, larger});
    if (larger) rep.verdict = GorensteinVerdict::NotGorenstein;
  }
  return rep;
}

template <class F>
struct ShapePosition {
  std::vector<Poly<typename F::Element>> gb;  // g(z), y - f2(z), x - f1(z)
  MonomialOrder ord;
  SequenceOracle<F> oracle;
};

// Random ideal in shape position under lex(z<y<x); g has d distinct roots.
template <class F>
ShapePosition<F> shape_position(unsigned d, const F& field, std::uint64_t seed, bool zero_tails = false) {
  using K = typename F::Element;
  CountingPause pause;
  MonomialOrder ord = MonomialOrder::parse("lex(z<y<x)");
  std::mt19937_64 rng(seed);
  Monomial z = variable(3, 2);
  std::vector<K> roots;
  while (roots.size() < d) {
    K r = field.random(rng);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  auto g = Poly<K>::monomial(ord.one(), field.one());
  for (const auto& r : roots) g = sub(mul_monomial(z, g), scale(r, g));
  auto tail = [&](std::size_t var) {
    std::vector<typename Poly<K>::Term> terms{{variable(3, var), field.one()}};
    if (!zero_tails) {
      Monomial zk = ord.one();
      for (unsigned k = 0; k < d; ++k, zk = zk * z) terms.emplace_back(zk, -field.random(rng));
    }
    return Poly<K>::from_terms(std::move(terms));
  };
  std::vector<Poly<K>> gb{g, tail(1), tail(0)};
  auto oracle = random_from_ideal(gb, ord, field, seed ^ 0x5eed);
  return {std::move(gb), ord, std::move(oracle)};
}

enum class Family { Rectangle, LShape, Simplex };

std::string family_name(Family f);
Family parse_family(std::string_view s);

struct FamilySpec {
  Family family = Family::Simplex;
  unsigned n = 2;
  unsigned d = 2;
  std::uint64_t seed = 1;
};

MonomialOrder family_order(unsigned n);
MonomialSet family_lms(const FamilySpec& spec, const MonomialOrder& ord);

template <class F>
struct FamilyInstance {
  RandomIdeal<F> ideal;
  MonomialOrder ord;
  std::size_t staircase_size;
  unsigned d_S;  // largest staircase degree
  unsigned d_G;  // largest leading-monomial degree
  unsigned d_max;
};

template <class F>
FamilyInstance<F> make_family(const FamilySpec& spec, const F& field) {
  if (spec.d < 1) throw SequenceError("family degree must be positive");
  MonomialOrder ord = family_order(spec.n);
  auto lms = family_lms(spec, ord);
  auto ideal = random_from_lms(lms, ord, field, spec.seed, family_name(spec.family));
  unsigned dS = 0, dG = 0;
  for (const auto& s : ideal.staircase) dS = std::max(dS, s.degree());
  for (const auto& m : lms) dG = std::max(dG, m.degree());
  std::size_t size = ideal.staircase.size();
  return {std::move(ideal), ord, size, dS, dG, std::max(dS, dG)};
}

// Degree-closed BMS bound: every monomial of degree <= deg(stopping_bound).
template <class K>
Monomial bench_bms_bound(const std::vector<Poly<K>>& gb, const MonomialOrder& ord) {
  return largest_of_degree(stopping_bound(gb, ord).degree(), ord);
}

struct BenchRow {
  std::string family;
  unsigned n;
  unsigned d;
  std::string algorithm;
  std::size_t queries;
  std::uint64_t mults;
  std::uint64_t adds;
  std::size_t staircase_size;
  unsigned dmax;
  double wall_ms;
  bool recovered;  // output leading monomials equal the family's
};

std::vector<std::string> algorithm_names();
bool is_bms_family(std::string_view algo);

template <class F>
RelationSet<typename F::Element> run_algorithm(std::string_view algo, const SequenceOracle<F>& oracle,
                                               const MonomialOrder& ord, const std::optional<Monomial>& bound,
                                               const MonomialSet& T, std::vector<TraceEvent>* trace = nullptr) {
  if (is_bms_family(algo) && !bound) throw std::invalid_argument(std::string(algo) + " needs a bound monomial");
  if (algo == "bms") return run_bms(oracle, ord, *bound, BmsVariant::Plain, trace);
  if (algo == "bms-linalg") return run_bms(oracle, ord, *bound, BmsVariant::Linalg, trace);
  if (algo == "bms-tweaked") return run_bms(oracle, ord, *bound, BmsVariant::Tweaked, trace);
  if (algo == "rank") return run_rank_solver(oracle, ord, *bound);
  if (algo == "sfglm") return as_relation_set(run_sfglm(oracle, ord, T), ord, false);
  if (algo == "sfglm-tweaked") return as_relation_set(run_sfglm(oracle, ord, T, true), ord, true);
  throw std::invalid_argument("unknown algorithm '" + std::string(algo) + "'");
}

template <class F>
BenchRow bench_one(const FamilySpec& spec, const F& field, std::string_view algo) {
  auto inst = make_family(spec, field);
  std::optional<Monomial> bound;
  MonomialSet T;
  if (is_bms_family(algo))
    bound = bench_bms_bound(inst.ideal.gb, inst.ord);
  else
    T = monomials_up_to_degree(inst.d_max, inst.ord);
  auto t0 = std::chrono::steady_clock::now();
  auto rs = run_algorithm(algo, inst.ideal.oracle, inst.ord, bound, T);
  auto t1 = std::chrono::steady_clock::now();
  auto want = sorted_unique(leading_monomials(inst.ideal.gb, inst.ord), inst.ord);
  auto got = sorted_unique(rs.lms(), inst.ord);
  return {family_name(spec.family),
          spec.n,
          spec.d,
          std::string(algo),
          rs.queries,
          rs.ops.basic(),
          rs.ops.additions,
          inst.staircase_size,
          inst.d_max,
          std::chrono::duration<double, std::milli>(t1 - t0).count(),
          want == got};
}

void write_bench_header(std::ostream& os);
void write_bench_row(std::ostream& os, const BenchRow& row);
// gnuplot data: one block per algorithm, blocks split by two blank lines (use "index").
void write_gnuplot(std::ostream& os, const std::vector<BenchRow>& rows, const std::vector<std::string>& algos);

}  // namespace seqrel

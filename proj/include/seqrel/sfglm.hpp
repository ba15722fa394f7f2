#pragma once

#include "seqrel/multihankel.hpp"

namespace seqrel {

template <class K>
struct RejectedCandidate {
  Monomial t;
  Poly<K> relation;  // the in-S solution that failed the shift-T check
  Monomial row;      // first row of T \ S where it failed
  K value;
};

template <class K>
struct SfglmResult {
  std::vector<Poly<K>> gb;
  MonomialSet useful_staircase;  // column rank profile
  MonomialSet staircase;         // its stabilization
  MonomialSet T;
  std::vector<RejectedCandidate<K>> rejected;
  std::size_t queries = 0;
  OpCounter ops;
};

class SfglmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class F>
SfglmResult<typename F::Element> run_sfglm(const SequenceOracle<F>& oracle, const MonomialOrder& ord,
                                           const MonomialSet& terms, bool tweaked = false) {
  using K = typename F::Element;
  if (oracle.dim() != ord.nvars()) throw SequenceError("order and sequence dimensions differ");
  MonomialSet T = sorted_unique(terms, ord);
  if (!is_stable(T)) throw SfglmError("the set of terms must be stable by division");
  Probe<F> u(oracle);
  SfglmResult<K> out;
  out.T = T;
  {
    CountingScope scope(out.ops);
    const F& field = u.field();
    auto H = build_multihankel(u, T, T);
    auto prof = column_rank_profile(H);
    const MonomialSet& S = prof.profile;
    out.useful_staircase = S;
    out.staircase = stabilize(S, ord);
    const MonomialSet& Sp = out.staircase;

    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t i = 0; i < T.size(); ++i) pos.emplace(T[i], i);
    std::unordered_set<Monomial, MonomialHash> in_S(S.begin(), S.end());
    MonomialSet rows_out;  // T \ S
    for (const auto& r : T)
      if (!in_S.count(r)) rows_out.push_back(r);

    MonomialSet L;
    for (const auto& t : T)
      if (!contains(Sp, t, ord)) L.push_back(t);
    if (tweaked) {
      for (const auto& s : Sp)
        for (std::size_t i = 0; i < ord.nvars(); ++i) {
          Monomial c = s * variable(ord.nvars(), i);
          if (!contains(Sp, c, ord)) L.push_back(c);
        }
    }
    L = sorted_unique(std::move(L), ord);

    DenseMatrix<K> HSS(S.size(), S.size(), field.zero());
    for (std::size_t r = 0; r < S.size(); ++r)
      for (std::size_t c = 0; c < S.size(); ++c) HSS(r, c) = H(prof.columns[r], prof.columns[c]);
    SquareSolver<K> solver(std::move(HSS));

    auto entry = [&](const Monomial& r, const Monomial& t) {
      auto ir = pos.find(r), it = pos.find(t);
      if (ir != pos.end() && it != pos.end()) return H(ir->second, it->second);
      return u(r * t);
    };

    while (!L.empty()) {
      Monomial t = L.front();
      std::vector<K> rhs;
      for (const auto& s : S) rhs.push_back(entry(s, t));
      std::vector<K> sol = S.empty() ? std::vector<K>{} : solver.solve(rhs);
      std::vector<typename Poly<K>::Term> terms{{t, field.one()}};
      for (std::size_t i = 0; i < S.size(); ++i) terms.emplace_back(S[i], -sol[i]);
      auto rel = Poly<K>::from_terms(std::move(terms));

      // Shift-T check on the rows outside S.
      std::optional<std::pair<Monomial, K>> bad;
      for (const auto& r : rows_out) {
        K acc = entry(r, t);
        for (std::size_t i = 0; i < S.size(); ++i)
          if (!sol[i].is_zero()) acc -= sol[i] * entry(r, S[i]);
        if (!acc.is_zero()) {
          bad = std::make_pair(r, acc);
          break;
        }
      }
      bool in_T = pos.count(t) > 0;
      if (bad && in_T)
        throw SfglmError("in-T relation for " + format_monomial(t, ord) + " fails at row " +
                         format_monomial(bad->first, ord));
      if (bad)
        out.rejected.push_back({t, rel, bad->first, bad->second});
      else
        out.gb.push_back(std::move(rel));
      std::erase_if(L, [&](const Monomial& m) { return divides(t, m); });
    }
  }
  out.queries = u.queries();
  return out;
}

template <class F>
SfglmResult<typename F::Element> run_sfglm_tweaked(const SequenceOracle<F>& oracle, const MonomialOrder& ord,
                                                   const MonomialSet& T) {
  return run_sfglm(oracle, ord, T, true);
}

// Column rank profile of H_{T,T}; not stabilized.
template <class F>
MonomialSet useful_staircase(const SequenceOracle<F>& oracle, const MonomialOrder& ord, const MonomialSet& terms) {
  Probe<F> u(oracle);
  MonomialSet T = sorted_unique(terms, ord);
  return column_rank_profile(build_multihankel(u, T, T)).profile;
}

template <class K>
RelationSet<K> as_relation_set(const SfglmResult<K>& r, const MonomialOrder& ord, bool tweaked) {
  RelationSet<K> out{tweaked ? "sfglm-tweaked" : "sfglm", ord, {}, r.staircase, {}, r.queries, r.ops, true, {}};
  for (const auto& g : r.gb) out.relations.push_back({g, lm(g, ord), std::nullopt});
  out.shift_set = r.T;
  return out;
}

}  // namespace seqrel

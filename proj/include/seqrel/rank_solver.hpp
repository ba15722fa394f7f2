#pragma once

#include "seqrel/bms.hpp"

namespace seqrel {

// One rank comparison: rank H_{V+mu,S} against rank H_{V+mu,S+LM}.
struct RankTest {
  Monomial at;
  Monomial lm;
  Monomial mu;
  std::size_t rank_without;
  std::size_t rank_with;
  bool increase() const { return rank_with > rank_without; }
};

// True iff H_{rows,S} a + H_{rows,{lm}} = 0 has no solution.
template <class F>
bool staircase_membership_test(Probe<F>& u, const MonomialSet& S, const Monomial& lm, const MonomialSet& rows) {
  return !solve_on_rows(u, S, rows, lm).consistent();
}

template <class F>
RelationSet<typename F::Element> run_rank_solver(const SequenceOracle<F>& oracle, const MonomialOrder& ord,
                                                 const Monomial& M, std::vector<RankTest>* log = nullptr) {
  using K = typename F::Element;
  if (oracle.dim() != ord.nvars()) throw SequenceError("order and sequence dimensions differ");
  MonomialSet T = enumerate_up_to(M, ord);
  Probe<F> u(oracle);
  RelationSet<K> out{"rank", ord, {}, {}, {}, 0, {}, true, {}};

  struct Candidate {
    Monomial lm;
    MonomialSet V;
    IncrementalEchelon<K> ech;
  };
  MonomialSet S;
  auto row_for = [&](const Monomial& mu, const Monomial& L) {
    std::vector<K> v;
    v.reserve(S.size() + 1);
    for (const auto& s : S) v.push_back(u(mu * s));
    v.push_back(u(mu * L));
    return v;
  };
  auto rebuild = [&](std::size_t upto) {
    std::vector<Candidate> cs;
    for (const auto& b : border(S, ord)) {
      Candidate c{b, {}, IncrementalEchelon<K>(S.size() + 1)};
      for (std::size_t i = 0; i <= upto && i < T.size(); ++i) {
        if (ord.less(T[upto], T[i] * b)) continue;
        c.V.push_back(T[i]);
        c.ech.add(row_for(T[i], b));
      }
      cs.push_back(std::move(c));
    }
    return cs;
  };

  {
    CountingScope scope(out.ops);
    std::vector<Candidate> cands;
    cands.push_back({ord.one(), {}, IncrementalEchelon<K>(1)});
    for (std::size_t idx = 0; idx < T.size(); ++idx) {
      const Monomial& m = T[idx];
      MonomialSet grown = S;
      for (auto& c : cands) {
        if (!divides(c.lm, m)) continue;
        Monomial mu = quotient(m, c.lm);
        auto piv = c.ech.add(row_for(mu, c.lm));
        bool increase = piv && *piv == S.size();
        if (log) {
          std::size_t with = c.ech.rank();
          std::size_t without = with - (c.ech.has_pivot(S.size()) ? 1 : 0);
          log->push_back({m, c.lm, mu, without, with});
        }
        if (increase) grown.push_back(mu);
        c.V.push_back(mu);
      }
      MonomialSet next = stabilize(grown, ord);
      if (next != S) {
        S = std::move(next);
        cands = rebuild(idx);
      }
    }
    for (auto& c : cands) {
      if (c.ech.has_pivot(S.size())) {
        out.open_relations.push_back(c.lm);
        continue;
      }
      auto x = c.ech.solve_homogeneous_last(u.field().zero());
      std::vector<typename Poly<K>::Term> terms{{c.lm, u.field().one()}};
      for (std::size_t i = 0; i < S.size(); ++i) terms.emplace_back(S[i], x[i]);
      auto g = Poly<K>::from_terms(std::move(terms));
      std::optional<Monomial> shift;
      if (!c.V.empty()) shift = max_of(c.V, ord);
      out.relations.push_back({std::move(g), c.lm, shift});
    }
  }
  out.staircase = S;
  out.queries = u.queries();
  return out;
}

}  // namespace seqrel

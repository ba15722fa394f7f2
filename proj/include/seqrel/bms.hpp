#pragma once

#include "seqrel/multihankel.hpp"

#include <sstream>

namespace seqrel {

struct TraceEvent {
  enum class Kind { Test, StaircaseAdd, Translate, Update };
  Kind kind;
  Monomial at;
  std::string relation;  // relation involved (before the change)
  std::string result;    // value or new relation
  MonomialSet added;     // StaircaseAdd only
};

template <class K>
struct FailRecord {
  Poly<K> h;  // normalized so that its discrepancy at fail is 1
  Monomial lm;
  Monomial ratio;
  Monomial fail;
};

template <class K>
struct BmsState {
  std::vector<Poly<K>> G;  // ascending leading monomials
  std::vector<FailRecord<K>> records;
  MonomialSet staircase;
  std::optional<Monomial> m;
};

enum class BmsVariant { Plain, Linalg, Tweaked };

inline std::string bms_name(BmsVariant v) {
  switch (v) {
    case BmsVariant::Plain:
      return "bms";
    case BmsVariant::Linalg:
      return "bms-linalg";
    case BmsVariant::Tweaked:
      return "bms-tweaked";
  }
  return "bms";
}

template <class F>
class BmsEngine {
 public:
  using K = typename F::Element;

  BmsEngine(Probe<F>& u, MonomialOrder ord, BmsVariant variant, std::vector<TraceEvent>* trace = nullptr)
      : u_(u), ord_(std::move(ord)), variant_(variant), trace_(trace) {
    state_.G.push_back(Poly<K>::monomial(ord_.one(), u.field().one()));
  }

  const BmsState<K>& state() const { return state_; }
  const MonomialOrder& order() const { return ord_; }

  void step(const Monomial& m) {
    std::vector<std::optional<K>> disc(state_.G.size());
    std::vector<FailRecord<K>> fresh;
    for (std::size_t i = 0; i < state_.G.size(); ++i) {
      const auto& g = state_.G[i];
      Monomial L = lm(g, ord_);
      if (!divides(L, m)) continue;
      Monomial t = quotient(m, L);
      K e = evaluate(g, t);
      disc[i] = e;
      if (trace_) trace_->push_back({TraceEvent::Kind::Test, m, format_poly(g, ord_), to_string(e), {}});
      if (!e.is_zero()) fresh.push_back({scale(e.inv(), g), L, t, m});
    }

    auto records = prune(state_.records, fresh);
    MonomialSet ratios;
    for (const auto& r : records) ratios.push_back(r.ratio);
    MonomialSet stairs = stabilize(ratios, ord_);
    if (trace_ && stairs != state_.staircase) {
      MonomialSet added;
      for (const auto& s : stairs)
        if (!contains(state_.staircase, s, ord_)) added.push_back(s);
      trace_->push_back({TraceEvent::Kind::StaircaseAdd, m, "", format_set(stairs, ord_), added});
    }

    std::vector<Poly<K>> next;
    for (const auto& b : border(stairs, ord_)) {
      std::size_t gi = state_.G.size();
      for (std::size_t i = 0; i < state_.G.size(); ++i)
        if (divides(lm(state_.G[i], ord_), b)) {
          gi = i;
          break;
        }
      if (gi == state_.G.size()) throw std::logic_error("no relation below a border monomial");
      const auto& g = state_.G[gi];
      Monomial L = lm(g, ord_);
      Poly<K> moved = b == L ? g : mul_monomial(quotient(b, L), g);
      if (!divides(b, m) || !disc[gi] || disc[gi]->is_zero()) {
        if (trace_ && b != L)
          trace_->push_back({TraceEvent::Kind::Translate, m, format_poly(g, ord_), format_poly(moved, ord_), {}});
        next.push_back(std::move(moved));
        continue;
      }
      Monomial need = quotient(m, b);
      const FailRecord<K>* h = nullptr;
      for (const auto& r : state_.records)
        if (divides(need, r.ratio) && (!h || ord_.less(h->fail, r.fail))) h = &r;
      if (!h) throw std::logic_error("no fail record to cancel the discrepancy at " + format_monomial(m, ord_));
      Monomial mult = quotient(h->ratio * b, m);
      Poly<K> updated = sub_scaled(moved, *disc[gi], mult, h->h);
      if (trace_)
        trace_->push_back({TraceEvent::Kind::Update, m, format_poly(g, ord_), format_poly(updated, ord_), {}});
      next.push_back(std::move(updated));
    }
    if (variant_ == BmsVariant::Tweaked) next = inter_reduce(std::move(next), ord_);
    state_.G = sorted_by_lm(std::move(next), ord_);
    state_.records = std::move(records);
    state_.staircase = std::move(stairs);
    state_.m = m;
  }

 private:
  K evaluate(const Poly<K>& g, const Monomial& t) {
    if (variant_ != BmsVariant::Linalg) return bracket(u_, g, t);
    MonomialSet supp = g.support();
    auto H = build_multihankel(u_, MonomialSet{t}, supp);
    K acc = u_.field().zero();
    for (std::size_t c = 0; c < supp.size(); ++c) {
      K term = H(0, c) * *g.coeff(supp[c]);
      acc = c == 0 ? term : acc + term;
    }
    return acc;
  }

  // One record per ratio (smaller leading monomial wins, then the older one),
  // then only the divisibility-maximal ratios.
  std::vector<FailRecord<K>> prune(const std::vector<FailRecord<K>>& old, const std::vector<FailRecord<K>>& fresh) {
    std::vector<FailRecord<K>> all = old;
    all.insert(all.end(), fresh.begin(), fresh.end());
    std::vector<FailRecord<K>> uniq;
    for (const auto& r : all) {
      auto it = std::find_if(uniq.begin(), uniq.end(), [&](const auto& q) { return q.ratio == r.ratio; });
      if (it == uniq.end())
        uniq.push_back(r);
      else if (ord_.less(r.lm, it->lm))
        *it = r;
    }
    std::vector<FailRecord<K>> out;
    for (const auto& r : uniq) {
      bool maximal = true;
      for (const auto& q : uniq)
        if (q.ratio != r.ratio && divides(r.ratio, q.ratio)) maximal = false;
      if (maximal) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord_.less(a.ratio, b.ratio); });
    return out;
  }

  Probe<F>& u_;
  MonomialOrder ord_;
  BmsVariant variant_;
  std::vector<TraceEvent>* trace_;
  BmsState<K> state_;
};

// Largest t in the ascending set T with t*L <= M.
inline std::optional<Monomial> largest_shift(const MonomialSet& T, const Monomial& L, const Monomial& M,
                                             const MonomialOrder& ord) {
  auto it = std::partition_point(T.begin(), T.end(), [&](const Monomial& t) { return !ord.less(M, t * L); });
  if (it == T.begin()) return std::nullopt;
  return *std::prev(it);
}

template <class F>
RelationSet<typename F::Element> run_bms(const SequenceOracle<F>& oracle, const MonomialOrder& ord, const Monomial& M,
                                         BmsVariant variant = BmsVariant::Plain,
                                         std::vector<TraceEvent>* trace = nullptr) {
  using K = typename F::Element;
  if (oracle.dim() != ord.nvars()) throw SequenceError("order and sequence dimensions differ");
  MonomialSet T = enumerate_up_to(M, ord);
  Probe<F> u(oracle);
  RelationSet<K> out{bms_name(variant), ord, {}, {}, {}, 0, {}, true, {}};
  {
    CountingScope scope(out.ops);
    BmsEngine<F> engine(u, ord, variant, trace);
    for (const auto& m : T) engine.step(m);
    for (const auto& g : engine.state().G) {
      auto p = make_monic(g, ord);
      Monomial L = lm(p, ord);
      out.relations.push_back({p, L, largest_shift(T, L, M, ord)});
    }
    out.staircase = engine.state().staircase;
  }
  out.queries = u.queries();
  return out;
}

template <class F>
RelationSet<typename F::Element> run_bms_linalg(const SequenceOracle<F>& oracle, const MonomialOrder& ord,
                                                const Monomial& M, std::vector<TraceEvent>* trace = nullptr) {
  return run_bms(oracle, ord, M, BmsVariant::Linalg, trace);
}

template <class F>
RelationSet<typename F::Element> run_bms_tweaked(const SequenceOracle<F>& oracle, const MonomialOrder& ord,
                                                 const Monomial& M, std::vector<TraceEvent>* trace = nullptr) {
  return run_bms(oracle, ord, M, BmsVariant::Tweaked, trace);
}

// s_max * max(g_max, s_max) for a zero-dimensional target basis.
template <class K>
Monomial stopping_bound(const std::vector<Poly<K>>& gb, const MonomialOrder& ord) {
  auto lms = leading_monomials(gb, ord);
  if (!lms_zero_dimensional(lms, ord.nvars())) throw PositiveDimensional("stopping bound needs a closed staircase");
  MonomialSet stairs = staircase_of_lms(lms, ord);
  if (stairs.empty()) return ord.one();
  Monomial s = max_of(stairs, ord);
  Monomial g = max_of(lms, ord);
  return s * (ord.less(g, s) ? s : g);
}

std::string format_trace(const std::vector<TraceEvent>& events, const MonomialOrder& ord);

}  // namespace seqrel

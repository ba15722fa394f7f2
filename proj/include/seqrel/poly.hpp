#pragma once

#include "seqrel/field.hpp"
#include "seqrel/monomial.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace seqrel {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse polynomial: terms sorted by the canonical monomial comparison, no zeros.
template <class K>
class Poly {
 public:
  using Term = std::pair<Monomial, K>;

  Poly() = default;

  static Poly monomial(const Monomial& m, const K& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }

  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  std::optional<K> coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it == terms_.end() || it->first != m) return std::nullopt;
    return it->second;
  }

  MonomialSet support() const {
    MonomialSet s;
    for (const auto& t : terms_) s.push_back(t.first);
    return s;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

template <class K>
Monomial lm(const Poly<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw PolyError("leading monomial of the zero polynomial");
  const Monomial* best = &f.terms().front().first;
  for (const auto& t : f.terms())
    if (ord.less(*best, t.first)) best = &t.first;
  return *best;
}

template <class K>
std::pair<Monomial, K> lt(const Poly<K>& f, const MonomialOrder& ord) {
  Monomial m = lm(f, ord);
  return {m, *f.coeff(m)};
}

template <class K>
K lc(const Poly<K>& f, const MonomialOrder& ord) {
  return lt(f, ord).second;
}

template <class K>
Poly<K> add(const Poly<K>& f, const Poly<K>& g) {
  std::vector<typename Poly<K>::Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms().begin(), ae = f.terms().end();
  auto b = g.terms().begin(), be = g.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.push_back(*b++);
    } else {
      K c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return Poly<K>::from_terms(std::move(out));
}

template <class K>
Poly<K> scale(const K& c, const Poly<K>& f) {
  if (c.is_zero()) return {};
  std::vector<typename Poly<K>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.emplace_back(t.first, c * t.second);
  return Poly<K>::from_terms(std::move(out));
}

template <class K>
Poly<K> neg(const Poly<K>& f) {
  std::vector<typename Poly<K>::Term> out;
  for (const auto& t : f.terms()) out.emplace_back(t.first, -t.second);
  return Poly<K>::from_terms(std::move(out));
}

template <class K>
Poly<K> sub(const Poly<K>& f, const Poly<K>& g) {
  return add(f, neg(g));
}

template <class K>
Poly<K> mul_monomial(const Monomial& m, const Poly<K>& f) {
  std::vector<typename Poly<K>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.emplace_back(m * t.first, t.second);
  return Poly<K>::from_terms(std::move(out));
}

// f - c * m * g in one pass.
template <class K>
Poly<K> sub_scaled(const Poly<K>& f, const K& c, const Monomial& m, const Poly<K>& g) {
  if (c.is_zero()) return f;
  std::vector<typename Poly<K>::Term> out(f.terms());
  for (const auto& t : g.terms()) out.emplace_back(m * t.first, -(c * t.second));
  return Poly<K>::from_terms(std::move(out));
}

// f1 - (e1/e2) f2.
template <class K>
Poly<K> combine_failing(const Poly<K>& f1, const Poly<K>& f2, const K& e1, const K& e2) {
  if (e2.is_zero()) throw DivisionByZero();
  if (e1.is_zero()) return f1;
  return sub_scaled(f1, e1 / e2, Monomial(f2.is_zero() ? 0 : f2.terms().front().first.size()), f2);
}

template <class K>
Poly<K> make_monic(const Poly<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  K c = lc(f, ord);
  if (c.is_one()) return f;
  return scale(c.inv(), f);
}

template <class K>
std::vector<Poly<K>> sorted_by_lm(std::vector<Poly<K>> G, const MonomialOrder& ord) {
  std::stable_sort(G.begin(), G.end(),
                   [&](const Poly<K>& a, const Poly<K>& b) { return ord.less(lm(a, ord), lm(b, ord)); });
  return G;
}

// Full reduction: the largest reducible monomial goes first, divisors are
// tried by ascending leading monomial.
template <class K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& G, const MonomialOrder& ord) {
  std::vector<std::pair<Monomial, const Poly<K>*>> divs;
  for (const auto& g : G)
    if (!g.is_zero()) divs.emplace_back(lm(g, ord), &g);
  std::stable_sort(divs.begin(), divs.end(), [&](const auto& a, const auto& b) { return ord.less(a.first, b.first); });
  while (true) {
    const Monomial* best = nullptr;
    const std::pair<Monomial, const Poly<K>*>* by = nullptr;
    for (const auto& t : f.terms()) {
      if (best && !ord.less(*best, t.first)) continue;
      for (const auto& d : divs)
        if (divides(d.first, t.first)) {
          best = &t.first;
          by = &d;
          break;
        }
    }
    if (!best) return f;
    Monomial m = *best;
    K c = *f.coeff(m) / *by->second->coeff(by->first);
    f = sub_scaled(f, c, quotient(m, by->first), *by->second);
  }
}

template <class K>
std::vector<Poly<K>> inter_reduce(std::vector<Poly<K>> G, const MonomialOrder& ord) {
  std::erase_if(G, [](const Poly<K>& g) { return g.is_zero(); });
  bool changed = true;
  while (changed) {
    changed = false;
    G = sorted_by_lm(std::move(G), ord);
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<Poly<K>> others;
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      Poly<K> r = normal_form(G[i], others, ord);
      if (r.is_zero()) {
        G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (lm(r, ord) != lm(G[i], ord)) changed = true;
      G[i] = std::move(r);
      if (changed) break;
    }
  }
  for (auto& g : G) g = make_monic(g, ord);
  return sorted_by_lm(std::move(G), ord);
}

template <class K>
MonomialSet leading_monomials(const std::vector<Poly<K>>& G, const MonomialOrder& ord) {
  MonomialSet out;
  for (const auto& g : G)
    if (!g.is_zero()) out.push_back(lm(g, ord));
  return out;
}

inline bool lms_zero_dimensional(const MonomialSet& lms, std::size_t n) {
  if (n == 0) return false;
  for (const auto& m : lms)
    if (m.is_one()) return true;
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : lms) {
      if (m[v] == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found) return false;
  }
  return true;
}

// Monomials not divisible by any leading monomial. Finite when the LMs close
// the staircase; otherwise bounded by `bound`.
MonomialSet staircase_of_lms(const MonomialSet& lms, const MonomialOrder& ord,
                             const std::optional<Monomial>& bound = std::nullopt);

template <class K>
MonomialSet staircase_of(const std::vector<Poly<K>>& G, const MonomialOrder& ord,
                         const std::optional<Monomial>& bound = std::nullopt) {
  return staircase_of_lms(leading_monomials(G, ord), ord, bound);
}

template <class K>
std::string format_poly(const Poly<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return "0";
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string cs = to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += format_monomial(m, ord);
    }
  }
  return out;
}

namespace detail {
std::vector<std::pair<bool, std::string>> split_signed_terms(std::string_view text);
std::pair<std::string, std::string> split_coefficient(std::string_view term, const MonomialOrder& ord);
}  // namespace detail

// "x*y - y - 1", "2/3*x^2 + 1".
template <class F>
Poly<typename F::Element> parse_poly(std::string_view text, const MonomialOrder& ord, const F& field) {
  using K = typename F::Element;
  std::vector<typename Poly<K>::Term> terms;
  for (const auto& [negative, term] : detail::split_signed_terms(text)) {
    auto [coef, mono] = detail::split_coefficient(term, ord);
    K c = coef.empty() ? field.one() : field.parse(coef);
    if (negative) c = -c;
    terms.emplace_back(mono.empty() ? ord.one() : parse_monomial(mono, ord), c);
  }
  return Poly<K>::from_terms(std::move(terms));
}

template <class F>
std::vector<Poly<typename F::Element>> parse_poly_list(std::string_view text, const MonomialOrder& ord,
                                                       const F& field) {
  std::vector<Poly<typename F::Element>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(' || text[i] == '[')) ++depth;
    if (i < text.size() && (text[i] == ')' || text[i] == ']')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\n{}") != std::string_view::npos) {
        std::string cleaned(piece);
        std::erase(cleaned, '{');
        std::erase(cleaned, '}');
        out.push_back(parse_poly(cleaned, ord, field));
      }
      start = i + 1;
    }
  }
  return out;
}

// Relation with its certificate. shift == nullopt is the "0" sentinel: the
// relation was never tested.
template <class K>
struct Relation {
  Poly<K> poly;
  Monomial lm;
  std::optional<Monomial> shift;
};

template <class K>
struct RelationSet {
  std::string algorithm;
  MonomialOrder order;
  std::vector<Relation<K>> relations;
  MonomialSet staircase;
  MonomialSet open_relations;  // candidates with no consistent relation
  std::size_t queries = 0;
  OpCounter ops;
  bool minimal = true;
  // Set when every relation is certified over one shift set (Scalar-FGLM's T).
  std::optional<MonomialSet> shift_set;

  std::vector<Poly<K>> polys() const {
    std::vector<Poly<K>> out;
    for (const auto& r : relations) out.push_back(r.poly);
    return out;
  }
  MonomialSet lms() const {
    MonomialSet out;
    for (const auto& r : relations) out.push_back(r.lm);
    return out;
  }
};

// The shifts a relation is certified for: every t with t*LM <= shift*LM,
// or the common shift set when there is one.
template <class K>
MonomialSet certified_shifts(const RelationSet<K>& rs, const Relation<K>& r) {
  if (rs.shift_set) return *rs.shift_set;
  if (!r.shift) return {};
  return enumerate_up_to(*r.shift, rs.order);
}

}  // namespace seqrel

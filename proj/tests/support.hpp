#pragma once

#include "seqrel/io.hpp"

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<std::vector<std::string>> {
  static String convert(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return (s + "}").c_str();
  }
};
}  // namespace doctest

using namespace seqrel;

inline const RationalField QQ{};
inline const PrimeField GF{65537};

inline MonomialOrder ord2() { return MonomialOrder::parse("drl(y<x)"); }
inline MonomialOrder ord3() { return MonomialOrder::parse("drl(z<y<x)"); }

inline Monomial mono(std::string_view s, const MonomialOrder& o) { return parse_monomial(s, o); }
inline MonomialSet monos(std::string_view s, const MonomialOrder& o) { return parse_monomial_list(s, o); }

// Polynomials as text, sorted by leading monomial and made monic.
template <class K>
std::vector<std::string> canon(std::vector<Poly<K>> G, const MonomialOrder& o) {
  std::vector<std::string> out;
  for (auto& g : sorted_by_lm(std::move(G), o)) out.push_back(format_poly(make_monic(g, o), o));
  return out;
}

template <class F>
std::vector<std::string> canon(std::initializer_list<const char*> texts, const MonomialOrder& o, const F& f) {
  std::vector<Poly<typename F::Element>> G;
  for (const char* t : texts) G.push_back(parse_poly(t, o, f));
  return canon(std::move(G), o);
}

inline std::vector<std::string> names(const MonomialSet& s, const MonomialOrder& o) {
  std::vector<std::string> out;
  for (const auto& m : s) out.push_back(format_monomial(m, o));
  return out;
}

template <class K>
std::string shift_of(const RelationSet<K>& rs, std::string_view poly) {
  for (const auto& r : rs.relations)
    if (format_poly(r.poly, rs.order) == poly) return r.shift ? format_monomial(*r.shift, rs.order) : "0";
  return "missing";
}

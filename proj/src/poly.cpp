#include "seqrel/poly.hpp"

#include <cctype>

namespace seqrel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_number(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) return false;
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '/' && c != ' ') {
      return false;
    }
  }
  return digit;
}

}  // namespace

MonomialSet staircase_of_lms(const MonomialSet& lms, const MonomialOrder& ord, const std::optional<Monomial>& bound) {
  std::size_t n = ord.nvars();
  auto outside = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (divides(l, m)) return true;
    return false;
  };
  MonomialSet out;
  for (const auto& l : lms)
    if (l.is_one()) return out;
  if (lms_zero_dimensional(lms, n)) {
    std::vector<unsigned> box(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (const auto& m : lms) {
        if (m[v] == 0 || m.degree() != m[v]) continue;
        if (box[v] == 0 || m[v] < box[v]) box[v] = m[v];
      }
    }
    Monomial cur(n);
    while (true) {
      if (!outside(cur) && (!bound || !ord.less(*bound, cur))) out.push_back(cur);
      std::size_t i = 0;
      while (i < n && cur[i] + 1 == box[i]) {
        cur.set(i, 0);
        ++i;
      }
      if (i == n) break;
      cur.set(i, cur[i] + 1);
    }
    sort_ascending(out, ord);
    return out;
  }
  if (!bound) throw PolyError("staircase is infinite: a bound monomial is required");
  for (const auto& m : enumerate_up_to(*bound, ord))
    if (!outside(m)) out.push_back(m);
  return out;
}

namespace detail {

std::vector<std::pair<bool, std::string>> split_signed_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string>> out;
  text = trim(text);
  if (text.empty() || text == "0") return out;
  bool negative = false;
  std::string cur;
  int depth = 0;
  bool pending = false;
  auto flush = [&]() {
    std::string_view t = trim(cur);
    if (t.empty()) {
      if (pending) throw PolyError("dangling sign in '" + std::string(text) + "'");
    } else {
      out.emplace_back(negative, std::string(t));
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool after_caret = !trim(cur).empty() && trim(cur).back() == '^';
    if (depth == 0 && (c == '+' || c == '-') && !after_caret) {
      if (!trim(cur).empty()) {
        flush();
        negative = false;
      }
      if (c == '-') negative = !negative;
      pending = true;
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

std::pair<std::string, std::string> split_coefficient(std::string_view term, const MonomialOrder& ord) {
  (void)ord;
  std::string coef, mono;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= term.size(); ++i) {
    if (i == term.size() || term[i] == '*') {
      std::string_view f = trim(term.substr(start, i - start));
      if (f.empty()) throw PolyError("empty factor in '" + std::string(term) + "'");
      if (is_number(f)) {
        if (f.front() == '(') f = trim(f.substr(1, f.size() - 2));
        if (!coef.empty()) throw PolyError("two numeric factors in '" + std::string(term) + "'");
        coef = std::string(f);
      } else {
        if (!mono.empty()) mono += "*";
        mono += std::string(f);
      }
      start = i + 1;
    }
  }
  return {coef, mono};
}

}  // namespace detail

}  // namespace seqrel

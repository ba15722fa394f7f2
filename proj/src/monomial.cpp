#include "seqrel/monomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace seqrel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

unsigned parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw OrderError("bad exponent in '" + std::string(context) + "'");
  return v;
}

std::int64_t dot(const std::vector<std::int64_t>& w, const Monomial& m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * static_cast<std::int64_t>(m[i]);
  return s;
}

// Every exponent vector e with w.e <= limit (w strictly positive).
void bounded_weight(const std::vector<std::int64_t>& w, std::int64_t limit, std::size_t n, MonomialSet& out) {
  Monomial cur(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; static_cast<std::int64_t>(e) * w[i] <= left; ++e) {
      cur.set(i, e);
      rec(i + 1, left - static_cast<std::int64_t>(e) * w[i]);
    }
    cur.set(i, 0);
  };
  rec(0, limit);
}

Monomial drl_successor(const Monomial& m) {
  // Within a degree, DRL ascends like lex descending on the reversed vector.
  std::size_t n = m.size();
  if (n == 0) throw OrderError("successor in zero variables");
  std::vector<unsigned> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = m[n - 1 - k];
  std::size_t i = n - 1;
  bool found = false;
  for (std::size_t k = n - 1; k-- > 0;) {
    if (r[k] > 0) {
      i = k;
      found = true;
      break;
    }
  }
  std::vector<unsigned> next(n, 0);
  if (!found) {
    next[0] = m.degree() + 1;
  } else {
    unsigned tail = 0;
    for (std::size_t k = i + 1; k < n; ++k) tail += r[k];
    for (std::size_t k = 0; k < i; ++k) next[k] = r[k];
    next[i] = r[i] - 1;
    next[i + 1] = tail + 1;
  }
  Monomial out(n);
  for (std::size_t k = 0; k < n; ++k) out.set(n - 1 - k, next[k]);
  return out;
}

bool is_power_of_least(const Monomial& M) {
  for (std::size_t i = 0; i + 1 < M.size(); ++i)
    if (M[i] != 0) return false;
  return true;
}

}  // namespace

Monomial::Monomial(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxVars) throw OrderError("too many variables (max " + std::to_string(kMaxVars) + ")");
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned v) {
  if (v > 0xFFFF) throw OrderError("exponent overflow");
  e_[i] = static_cast<Exp>(v);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw OrderError("quotient of non-divisible monomials");
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q.set(i, b[i] - a[i]);
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q.set(i, std::max(a[i], b[i]));
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q.set(i, a[i] + b[i]);
  return q;
}

Monomial variable(std::size_t n, std::size_t i) {
  Monomial m(n);
  m.set(i, 1);
  return m;
}

MonomialOrder MonomialOrder::drl(std::vector<std::string> names) {
  if (names.empty()) throw OrderError("order needs at least one variable");
  if (names.size() > kMaxVars) throw OrderError("too many variables");
  return MonomialOrder(OrderKind::Drl, std::move(names));
}

MonomialOrder MonomialOrder::lex(std::vector<std::string> names) {
  if (names.empty()) throw OrderError("order needs at least one variable");
  if (names.size() > kMaxVars) throw OrderError("too many variables");
  return MonomialOrder(OrderKind::Lex, std::move(names));
}

MonomialOrder MonomialOrder::weight(std::vector<std::vector<std::string>> rows, std::vector<std::string> names) {
  std::size_t n = names.size();
  if (n == 0) throw OrderError("order needs at least one variable");
  if (n > kMaxVars) throw OrderError("too many variables");
  if (rows.size() != n) throw OrderError("weight matrix must be n x n");
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw OrderError("weight matrix must be n x n");
    for (std::size_t c = 0; c < n; ++c) {
      std::string s(trim(rows[r][c]));
      if (!s.empty() && s[0] == '+') s.erase(0, 1);
      if (q[r][c].set_str(s, 10) != 0) throw OrderError("bad weight entry '" + s + "'");
      q[r][c].canonicalize();
    }
  }
  // Invertibility by exact elimination.
  auto a = q;
  for (std::size_t c = 0, rank = 0; c < n; ++c) {
    std::size_t p = rank;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw OrderError("weight matrix is singular");
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  MonomialOrder o(OrderKind::Weight, std::move(names));
  for (auto& row : q) {
    mpz_class l = 1;
    for (auto& v : row) l = lcm(l, mpz_class(v.get_den()));
    std::vector<std::int64_t> ints;
    for (auto& v : row) {
      mpz_class z = v.get_num() * (l / v.get_den());
      if (!z.fits_slong_p()) throw OrderError("weight entry too large");
      ints.push_back(z.get_si());
    }
    o.rows_.push_back(std::move(ints));
  }
  return o;
}

MonomialOrder MonomialOrder::parse(std::string_view spec) {
  spec = trim(spec);
  auto open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')')
    throw OrderError("bad order spec '" + std::string(spec) + "'");
  std::string kind(trim(spec.substr(0, open)));
  std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
  std::string_view body = spec.substr(open + 1, spec.size() - open - 2);
  std::string_view vars = body;
  std::vector<std::vector<std::string>> rows;
  if (kind == "weight") {
    auto semi = body.rfind(';');
    if (semi == std::string_view::npos) throw OrderError("weight order needs ';' before the variables");
    std::string_view mat = trim(body.substr(0, semi));
    vars = body.substr(semi + 1);
    if (mat.size() < 2 || mat.front() != '[' || mat.back() != ']') throw OrderError("bad weight matrix");
    mat = trim(mat.substr(1, mat.size() - 2));
    while (!mat.empty()) {
      if (mat.front() != '[') throw OrderError("bad weight matrix");
      auto close = mat.find(']');
      if (close == std::string_view::npos) throw OrderError("bad weight matrix");
      std::vector<std::string> row;
      for (auto e : split(mat.substr(1, close - 1), ',')) row.emplace_back(e);
      rows.push_back(std::move(row));
      mat = trim(mat.substr(close + 1));
      if (!mat.empty() && mat.front() == ',') mat = trim(mat.substr(1));
    }
  }
  std::vector<std::string> names;
  for (auto v : split(vars, '<')) {
    if (v.empty()) throw OrderError("empty variable name in '" + std::string(spec) + "'");
    names.emplace(names.begin(), v);
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw OrderError("duplicate variable '" + names[i] + "'");
  if (kind == "drl" || kind == "grevlex" || kind == "degrevlex") return drl(std::move(names));
  if (kind == "lex" || kind == "plex") return lex(std::move(names));
  if (kind == "weight") return weight(std::move(rows), std::move(names));
  throw OrderError("unknown order kind '" + kind + "'");
}

bool MonomialOrder::is_weight_order() const {
  switch (kind_) {
    case OrderKind::Drl:
      return true;
    case OrderKind::Lex:
      return false;
    case OrderKind::Weight:
      return std::all_of(rows_[0].begin(), rows_[0].end(), [](std::int64_t v) { return v > 0; });
  }
  return false;
}

std::string MonomialOrder::spec() const {
  std::string vars;
  for (std::size_t i = names_.size(); i-- > 0;) {
    vars += names_[i];
    if (i) vars += "<";
  }
  switch (kind_) {
    case OrderKind::Drl:
      return "drl(" + vars + ")";
    case OrderKind::Lex:
      return "lex(" + vars + ")";
    case OrderKind::Weight: {
      std::string m = "[";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        m += "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
          m += std::to_string(rows_[r][c]);
          if (c + 1 < rows_[r].size()) m += ",";
        }
        m += "]";
        if (r + 1 < rows_.size()) m += ",";
      }
      return "weight(" + m + "];" + vars + ")";
    }
  }
  return {};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::size_t n = names_.size();
  if (a.size() != n || b.size() != n) throw OrderError("monomial dimension does not match the order");
  switch (kind_) {
    case OrderKind::Drl: {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case OrderKind::Weight:
      for (const auto& row : rows_) {
        std::int64_t wa = dot(row, a), wb = dot(row, b);
        if (wa != wb) return wa <=> wb;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

void sort_ascending(MonomialSet& s, const MonomialOrder& ord) {
  std::sort(s.begin(), s.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

MonomialSet sorted_unique(MonomialSet s, const MonomialOrder& ord) {
  sort_ascending(s, ord);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

const Monomial& max_of(const MonomialSet& s, const MonomialOrder& ord) {
  if (s.empty()) throw OrderError("max of empty monomial set");
  return *std::max_element(s.begin(), s.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

bool contains(const MonomialSet& sorted, const Monomial& m, const MonomialOrder& ord) {
  return std::binary_search(sorted.begin(), sorted.end(), m,
                            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
}

Monomial successor(const Monomial& m, const MonomialOrder& ord) {
  if (!ord.is_weight_order()) throw UnsupportedOrder("successor needs a weight order (" + ord.spec() + ")");
  if (m.size() != ord.nvars()) throw OrderError("monomial dimension does not match the order");
  if (ord.kind() == OrderKind::Drl) return drl_successor(m);
  const auto& w = ord.matrix()[0];
  std::int64_t base = dot(w, m);
  std::int64_t step = *std::min_element(w.begin(), w.end());
  MonomialSet cands;
  bounded_weight(w, base + step, m.size(), cands);
  const Monomial* best = nullptr;
  for (const auto& c : cands) {
    if (ord.less(m, c) && (!best || ord.less(c, *best))) best = &c;
  }
  return *best;
}

MonomialSet enumerate_up_to(const Monomial& M, const MonomialOrder& ord) {
  if (M.size() != ord.nvars()) throw OrderError("monomial dimension does not match the order");
  MonomialSet out;
  if (ord.kind() == OrderKind::Drl) {
    Monomial cur = ord.one();
    out.push_back(cur);
    while (cur != M) {
      cur = drl_successor(cur);
      out.push_back(cur);
    }
    return out;
  }
  if (ord.is_weight_order()) {
    MonomialSet all;
    bounded_weight(ord.matrix()[0], dot(ord.matrix()[0], M), M.size(), all);
    for (auto& c : all)
      if (!ord.less(M, c)) out.push_back(c);
    sort_ascending(out, ord);
    return out;
  }
  if (ord.kind() == OrderKind::Lex && is_power_of_least(M)) {
    std::size_t last = M.size() - 1;
    for (unsigned k = 0; k <= M[last]; ++k) {
      Monomial m(M.size());
      m.set(last, k);
      out.push_back(m);
    }
    return out;
  }
  throw UnsupportedOrder("infinite enumeration below " + format_monomial(M, ord) + " in " + ord.spec());
}

MonomialSet monomials_up_to_degree(unsigned d, const MonomialOrder& ord) {
  MonomialSet out;
  bounded_weight(std::vector<std::int64_t>(ord.nvars(), 1), d, ord.nvars(), out);
  sort_ascending(out, ord);
  return out;
}

Monomial largest_of_degree(unsigned d, const MonomialOrder& ord) {
  if (ord.kind() == OrderKind::Drl || ord.kind() == OrderKind::Lex) {
    Monomial m(ord.nvars());
    m.set(0, d);
    return m;
  }
  MonomialSet all;
  bounded_weight(std::vector<std::int64_t>(ord.nvars(), 1), d, ord.nvars(), all);
  std::erase_if(all, [&](const Monomial& m) { return m.degree() != d; });
  return max_of(all, ord);
}

MonomialSet stabilize(const MonomialSet& s, const MonomialOrder& ord) {
  std::unordered_set<Monomial, MonomialHash> seen;
  MonomialSet out;
  for (const auto& m : s) {
    if (seen.count(m)) continue;
    // Walk every divisor of m.
    Monomial d(m.size());
    while (true) {
      if (seen.insert(d).second) out.push_back(d);
      std::size_t i = 0;
      while (i < m.size() && d[i] == m[i]) {
        d.set(i, 0);
        ++i;
      }
      if (i == m.size()) break;
      d.set(i, d[i] + 1);
    }
  }
  sort_ascending(out, ord);
  return out;
}

MonomialSet border(const MonomialSet& s, const MonomialOrder& ord) {
  if (s.empty()) return {ord.one()};
  std::unordered_set<Monomial, MonomialHash> in(s.begin(), s.end());
  std::unordered_set<Monomial, MonomialHash> seen;
  MonomialSet out;
  std::size_t n = ord.nvars();
  for (const auto& m : s) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial c = m * variable(n, i);
      if (in.count(c) || !seen.insert(c).second) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j)
        if (c[j] > 0 && !in.count(quotient(c, variable(n, j)))) minimal = false;
      if (minimal) out.push_back(c);
    }
  }
  sort_ascending(out, ord);
  return out;
}

MonomialSet max_divisibility(const MonomialSet& s, const MonomialOrder& ord) {
  MonomialSet out;
  for (const auto& a : s) {
    bool maximal = true;
    for (const auto& b : s)
      if (a != b && divides(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return sorted_unique(std::move(out), ord);
}

MonomialSet min_divisibility(const MonomialSet& s, const MonomialOrder& ord) {
  MonomialSet out;
  for (const auto& a : s) {
    bool minimal = true;
    for (const auto& b : s)
      if (a != b && divides(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return sorted_unique(std::move(out), ord);
}

bool is_stable(const MonomialSet& s) {
  std::unordered_set<Monomial, MonomialHash> in(s.begin(), s.end());
  for (const auto& m : s)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0 && !in.count(quotient(m, variable(m.size(), j)))) return false;
  return true;
}

std::string format_monomial(const Monomial& m, const MonomialOrder& ord) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ord.names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_set(const MonomialSet& s, const MonomialOrder& ord) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(s[i], ord);
  }
  return out + "}";
}

Monomial parse_monomial(std::string_view text, const MonomialOrder& ord) {
  text = trim(text);
  Monomial m = ord.one();
  if (text == "1") return m;
  if (text.empty()) throw OrderError("empty monomial");
  for (auto factor : split(text, '*')) {
    auto caret = factor.find('^');
    std::string_view name = trim(factor.substr(0, caret));
    unsigned e = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), text);
    if (name == "1" && caret == std::string_view::npos) continue;
    auto it = std::find(ord.names().begin(), ord.names().end(), name);
    if (it == ord.names().end())
      throw OrderError("unknown variable '" + std::string(name) + "' (order " + ord.spec() + ")");
    std::size_t i = static_cast<std::size_t>(it - ord.names().begin());
    m.set(i, m[i] + e);
  }
  return m;
}

MonomialSet parse_monomial_list(std::string_view text, const MonomialOrder& ord) {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = trim(text.substr(1, text.size() - 2));
  MonomialSet out;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) out.push_back(parse_monomial(item, ord));
  return sorted_unique(std::move(out), ord);
}

}  // namespace seqrel

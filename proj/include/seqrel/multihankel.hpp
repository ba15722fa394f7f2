#pragma once

#include "seqrel/sequence.hpp"

#include <optional>
#include <random>
#include <sstream>
#include <type_traits>

namespace seqrel {

template <class K>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const K& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

// H_{U,T}: entry (r, c) is u at U[r] * T[c].
template <class K>
struct MultiHankelMatrix {
  MonomialSet row_labels;
  MonomialSet col_labels;
  DenseMatrix<K> entries;

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
  const K& operator()(std::size_t r, std::size_t c) const { return entries(r, c); }
};

class HankelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class F>
MultiHankelMatrix<typename F::Element> build_multihankel(Probe<F>& u, const MonomialSet& U, const MonomialSet& T) {
  using K = typename F::Element;
  MultiHankelMatrix<K> H{U, T, DenseMatrix<K>(U.size(), T.size(), u.field().zero())};
  for (std::size_t r = 0; r < U.size(); ++r)
    for (std::size_t c = 0; c < T.size(); ++c) H.entries(r, c) = u(U[r] * T[c]);
  // Spot-check the Hankel structure on coincident label products.
  if (U.size() > 1 && T.size() > 1) {
    std::mt19937_64 rng(U.size() * 7919 + T.size());
    std::uniform_int_distribution<std::size_t> ru(0, U.size() - 1), rt(0, T.size() - 1);
    std::unordered_map<Monomial, std::pair<std::size_t, std::size_t>, MonomialHash> seen;
    for (int k = 0, hits = 0; k < 200 && hits < 10; ++k) {
      std::size_t r = ru(rng), c = rt(rng);
      Monomial p = U[r] * T[c];
      auto [it, fresh] = seen.emplace(p, std::make_pair(r, c));
      if (fresh) continue;
      ++hits;
      if (!(H.entries(r, c) == H.entries(it->second.first, it->second.second)))
        throw HankelError("entries with equal label products differ");
    }
  }
  return H;
}

template <class K>
struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> columns;
  MonomialSet profile;
};

// Greedy left-to-right independent columns. Rationals use fraction-free
// elimination; prime fields use ordinary elimination.
template <class K>
RankProfile<K> column_rank_profile(DenseMatrix<K> A, const MonomialSet& col_labels = {}) {
  RankProfile<K> out;
  std::size_t R = A.rows(), C = A.cols();
  std::optional<K> prev;
  for (std::size_t j = 0; j < C && out.rank < R; ++j) {
    std::size_t p = out.rank;
    while (p < R && A(p, j).is_zero()) ++p;
    if (p == R) continue;
    std::size_t top = out.rank;
    if (p != top)
      for (std::size_t k = j; k < C; ++k) std::swap(A(p, k), A(top, k));
    const K piv = A(top, j);
    if constexpr (std::is_same_v<K, Rational>) {
      for (std::size_t i = top + 1; i < R; ++i) {
        K a = A(i, j);
        for (std::size_t k = j + 1; k < C; ++k) {
          K v = piv * A(i, k) - a * A(top, k);
          A(i, k) = prev ? v / *prev : v;
        }
        A(i, j) = K(0);
      }
      prev = piv;
    } else {
      K inv = piv.inv();
      for (std::size_t i = top + 1; i < R; ++i) {
        if (A(i, j).is_zero()) continue;
        K f = A(i, j) * inv;
        for (std::size_t k = j + 1; k < C; ++k)
          if (!A(top, k).is_zero()) A(i, k) -= f * A(top, k);
        A(i, j) = zero_like(A(i, j));
      }
    }
    out.columns.push_back(j);
    if (!col_labels.empty()) out.profile.push_back(col_labels[j]);
    ++out.rank;
  }
  return out;
}

template <class K>
RankProfile<K> column_rank_profile(const MultiHankelMatrix<K>& H) {
  return column_rank_profile(H.entries, H.col_labels);
}

template <class K>
std::size_t rank(const DenseMatrix<K>& A) {
  return column_rank_profile(A).rank;
}

template <class K>
std::size_t rank(const MultiHankelMatrix<K>& H) {
  return column_rank_profile(H.entries).rank;
}

// Row echelon form grown one row at a time. Stored rows are monic at their
// pivot and sorted by pivot column.
template <class K>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the stored rows.
  std::vector<K> reduce(std::vector<K> v) const {
    if (v.size() != cols_) throw HankelError("row length mismatch");
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      K f = v[p];
      for (std::size_t k = p + 1; k < cols_; ++k)
        if (!row[k].is_zero()) v[k] -= f * row[k];
      v[p] = zero_like(v[p]);
    }
    return v;
  }

  // Returns the new pivot column, or nullopt if v is dependent.
  std::optional<std::size_t> add(std::vector<K> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return std::nullopt;
    K inv = v[p].inv();
    for (std::size_t k = p + 1; k < cols_; ++k)
      if (!v[k].is_zero()) v[k] *= inv;
    v[p] = v[p] * inv;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p, [](const auto& r, std::size_t q) { return r.first < q; });
    rows_.insert(it, {p, std::move(v)});
    return p;
  }

  // Rows encode a.x + b = 0 with b the last column. Free unknowns are 0.
  // Requires no pivot in the last column.
  std::vector<K> solve_homogeneous_last(const K& zero) const {
    std::size_t n = cols_ - 1;
    std::vector<K> x(n, zero);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const auto& [p, row] = *it;
      if (p == n) throw HankelError("inconsistent system");
      K acc = row[n];
      for (std::size_t k = p + 1; k < n; ++k)
        if (!row[k].is_zero() && !x[k].is_zero()) acc += row[k] * x[k];
      x[p] = -acc;
    }
    return x;
  }

  bool has_pivot(std::size_t c) const {
    return std::any_of(rows_.begin(), rows_.end(), [c](const auto& r) { return r.first == c; });
  }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<K>>> rows_;
};

// LU factorization of a nonsingular square matrix, reused across right-hand sides.
template <class K>
class SquareSolver {
 public:
  explicit SquareSolver(DenseMatrix<K> A) : lu_(std::move(A)), perm_(lu_.rows()) {
    std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw HankelError("square system expected");
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t p = j;
      while (p < n && lu_(p, j).is_zero()) ++p;
      if (p == n) throw HankelError("singular system");
      if (p != j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(lu_(p, k), lu_(j, k));
        std::swap(perm_[p], perm_[j]);
      }
      K inv = lu_(j, j).inv();
      for (std::size_t i = j + 1; i < n; ++i) {
        if (lu_(i, j).is_zero()) continue;
        K f = lu_(i, j) * inv;
        lu_(i, j) = f;
        for (std::size_t k = j + 1; k < n; ++k)
          if (!lu_(j, k).is_zero()) lu_(i, k) -= f * lu_(j, k);
      }
    }
  }

  std::vector<K> solve(const std::vector<K>& b) const {
    std::size_t n = lu_.rows();
    std::vector<K> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      K acc = b[perm_[i]];
      for (std::size_t k = 0; k < i; ++k)
        if (!lu_(i, k).is_zero()) acc -= lu_(i, k) * y[k];
      y[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      K acc = y[i];
      for (std::size_t k = i + 1; k < n; ++k)
        if (!lu_(i, k).is_zero()) acc -= lu_(i, k) * y[k];
      y[i] = acc / lu_(i, i);
    }
    return y;
  }

 private:
  DenseMatrix<K> lu_;
  std::vector<std::size_t> perm_;
};

template <class K>
struct SolveResult {
  std::optional<Poly<K>> relation;     // monic, leading term t
  std::optional<Monomial> failing_row;  // first row that broke consistency
  bool consistent() const { return relation.has_value(); }
};

// Rows-only system H_{rows,S} a + H_{rows,{t}} = 0, rows taken in order.
template <class F>
SolveResult<typename F::Element> solve_on_rows(Probe<F>& u, const MonomialSet& S, const MonomialSet& rows,
                                               const Monomial& t) {
  using K = typename F::Element;
  IncrementalEchelon<K> ech(S.size() + 1);
  for (const auto& r : rows) {
    std::vector<K> v;
    v.reserve(S.size() + 1);
    for (const auto& s : S) v.push_back(u(r * s));
    v.push_back(u(r * t));
    auto piv = ech.add(std::move(v));
    if (piv && *piv == S.size()) return {std::nullopt, r};
  }
  auto x = ech.solve_homogeneous_last(u.field().zero());
  std::vector<typename Poly<K>::Term> terms{{t, u.field().one()}};
  for (std::size_t i = 0; i < S.size(); ++i) terms.emplace_back(S[i], x[i]);
  return {Poly<K>::from_terms(std::move(terms)), std::nullopt};
}

// The S rows come first, then the extra rows in the given order.
template <class F>
SolveResult<typename F::Element> solve_relation(Probe<F>& u, const MonomialSet& S, const MonomialSet& rows,
                                                const Monomial& t) {
  MonomialSet all = S;
  std::unordered_set<Monomial, MonomialHash> in(S.begin(), S.end());
  for (const auto& r : rows)
    if (in.insert(r).second) all.push_back(r);
  return solve_on_rows(u, S, all, t);
}

// Basis of the right kernel, one vector per free column of the RREF.
template <class K>
std::vector<std::vector<K>> kernel_basis(DenseMatrix<K> A, const K& zero, const K& one) {
  std::size_t R = A.rows(), C = A.cols(), r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < C && r < R; ++j) {
    std::size_t p = r;
    while (p < R && A(p, j).is_zero()) ++p;
    if (p == R) continue;
    for (std::size_t k = 0; k < C; ++k) std::swap(A(p, k), A(r, k));
    K inv = A(r, j).inv();
    for (std::size_t k = j; k < C; ++k) A(r, k) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || A(i, j).is_zero()) continue;
      K f = A(i, j);
      for (std::size_t k = j; k < C; ++k) A(i, k) -= f * A(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  std::vector<std::vector<K>> out;
  std::size_t next = 0;
  for (std::size_t f = 0; f < C; ++f) {
    if (next < pivots.size() && pivots[next] == f) {
      ++next;
      continue;
    }
    std::vector<K> x(C, zero);
    x[f] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -A(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(const MultiHankelMatrix<K>& H, const K& zero, const K& one) {
  return kernel_basis(H.entries, zero, one);
}

template <class K>
std::string format_matrix(const MultiHankelMatrix<K>& H, const MonomialOrder& ord) {
  std::vector<std::string> rl, cl;
  for (const auto& m : H.row_labels) rl.push_back(format_monomial(m, ord));
  for (const auto& m : H.col_labels) cl.push_back(format_monomial(m, ord));
  std::vector<std::vector<std::string>> cells(H.rows(), std::vector<std::string>(H.cols()));
  std::size_t w0 = 0;
  for (auto& s : rl) w0 = std::max(w0, s.size());
  std::vector<std::size_t> w(H.cols());
  for (std::size_t c = 0; c < H.cols(); ++c) {
    w[c] = cl[c].size();
    for (std::size_t r = 0; r < H.rows(); ++r) {
      cells[r][c] = to_string(H(r, c));
      w[c] = std::max(w[c], cells[r][c].size());
    }
  }
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(w0, ' ');
  for (std::size_t c = 0; c < H.cols(); ++c) os << "  " << pad(cl[c], w[c]);
  os << "\n";
  for (std::size_t r = 0; r < H.rows(); ++r) {
    os << pad(rl[r], w0);
    for (std::size_t c = 0; c < H.cols(); ++c) os << "  " << pad(cells[r][c], w[c]);
    os << "\n";
  }
  return os.str();
}

template <class K>
std::string format_matrix_csv(const MultiHankelMatrix<K>& H, const MonomialOrder& ord) {
  std::ostringstream os;
  os << "label";
  for (const auto& m : H.col_labels) os << "," << format_monomial(m, ord);
  os << "\n";
  for (std::size_t r = 0; r < H.rows(); ++r) {
    os << format_monomial(H.row_labels[r], ord);
    for (std::size_t c = 0; c < H.cols(); ++c) os << "," << to_string(H(r, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace seqrel

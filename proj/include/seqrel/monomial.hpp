#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqrel {

inline constexpr std::size_t kMaxVars = 8;

class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedOrder : public OrderError {
 public:
  using OrderError::OrderError;
};

// Exponent vector x^i. Slot 0 is the largest variable of the ambient order.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t n);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned degree() const;
  bool is_one() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  // Canonical (order-independent) comparison for containers only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<Exp, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial variable(std::size_t n, std::size_t i);

enum class OrderKind { Drl, Lex, Weight };

class MonomialOrder {
 public:
  // names are in slot order: names[0] is the largest variable.
  static MonomialOrder drl(std::vector<std::string> names);
  static MonomialOrder lex(std::vector<std::string> names);
  static MonomialOrder weight(std::vector<std::vector<std::string>> rows, std::vector<std::string> names);
  // "drl(y<x)", "lex(z<y<x)", "weight([[1,1],[0,-1]];y<x)".
  static MonomialOrder parse(std::string_view spec);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return rows_; }
  bool is_weight_order() const;
  std::string spec() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  Monomial one() const { return Monomial(nvars()); }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.names_ == b.names_ && a.rows_ == b.rows_;
  }

 private:
  MonomialOrder(OrderKind k, std::vector<std::string> names) : kind_(k), names_(std::move(names)) {}

  OrderKind kind_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::int64_t>> rows_;
};

using MonomialSet = std::vector<Monomial>;

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

void sort_ascending(MonomialSet& s, const MonomialOrder& ord);
MonomialSet sorted_unique(MonomialSet s, const MonomialOrder& ord);
const Monomial& max_of(const MonomialSet& s, const MonomialOrder& ord);
bool contains(const MonomialSet& sorted, const Monomial& m, const MonomialOrder& ord);

Monomial successor(const Monomial& m, const MonomialOrder& ord);
// All monomials <= M, ascending. Weight orders, plus LEX when M is a power of
// the least variable (the only LEX bounds with a finite down-set).
MonomialSet enumerate_up_to(const Monomial& M, const MonomialOrder& ord);
MonomialSet monomials_up_to_degree(unsigned d, const MonomialOrder& ord);
Monomial largest_of_degree(unsigned d, const MonomialOrder& ord);

MonomialSet stabilize(const MonomialSet& s, const MonomialOrder& ord);
MonomialSet border(const MonomialSet& s, const MonomialOrder& ord);
MonomialSet max_divisibility(const MonomialSet& s, const MonomialOrder& ord);
MonomialSet min_divisibility(const MonomialSet& s, const MonomialOrder& ord);
bool is_stable(const MonomialSet& s);

std::string format_monomial(const Monomial& m, const MonomialOrder& ord);
std::string format_set(const MonomialSet& s, const MonomialOrder& ord);
Monomial parse_monomial(std::string_view text, const MonomialOrder& ord);
MonomialSet parse_monomial_list(std::string_view text, const MonomialOrder& ord);

}  // namespace seqrel

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

namespace {
template <class K>
std::vector<std::string> row_text(const MultiHankelMatrix<K>& H, std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < H.cols(); ++c) out.push_back(to_string(H(r, c)));
  return out;
}
}  // namespace

TEST_CASE("multi-Hankel matrices") {
  auto o = ord2();
  auto T = monomials_up_to_degree(2, o);
  auto bin = make_generator("binomial", QQ);
  Probe pb(bin);
  auto H = build_multihankel(pb, T, T);
  CHECK(row_text(H, 0) == std::vector<std::string>{"1", "0", "1", "0", "1", "1"});
  auto p23 = make_generator("pow23", QQ);
  Probe pp(p23);
  CHECK(row_text(build_multihankel(pp, T, T), 0) == std::vector<std::string>{"1", "3", "4", "9", "12", "12"});
  Probe p1(p23);
  auto one = build_multihankel(p1, monos("1", o), monos("1", o));
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == Rational(1));
  CHECK(pb.queries() == 15);
}

TEST_CASE("entries depend only on the label product") {
  auto o = ord2();
  auto u = make_generator("sq", QQ);
  Probe p(u);
  auto T = monomials_up_to_degree(3, o);
  auto H = build_multihankel(p, T, T);
  for (std::size_t r = 0; r < T.size(); ++r)
    for (std::size_t c = 0; c < T.size(); ++c) CHECK(H(r, c) == u.get(T[r] * T[c]));
  MonomialSet U(T.rbegin(), T.rend());
  auto H2 = build_multihankel(p, U, T);
  for (std::size_t r = 0; r < T.size(); ++r)
    for (std::size_t c = 0; c < T.size(); ++c) CHECK(H2(T.size() - 1 - r, c) == H(r, c));
}

TEST_CASE("column rank profiles") {
  auto o = ord2();
  auto T2 = monomials_up_to_degree(2, o);
  auto prof = [&](const char* g, const MonomialSet& T) {
    auto u = make_generator(g, QQ);
    Probe p(u);
    return column_rank_profile(build_multihankel(p, T, T));
  };
  auto b = prof("binomial", T2);
  CHECK(b.rank == 5);
  CHECK(names(b.profile, o) == std::vector<std::string>{"1", "y", "x", "y^2", "x^2"});
  auto k = prof("kron", monos("1,y,x,y^2", o));
  CHECK(k.rank == 2);
  CHECK(names(k.profile, o) == std::vector<std::string>{"y", "x"});
  auto p = prof("pow23", T2);
  CHECK(p.rank == 2);
  CHECK(names(p.profile, o) == std::vector<std::string>{"1", "x"});
  auto k2 = prof("kron", T2);
  CHECK(k2.rank == 4);
  CHECK(names(stabilize(k2.profile, o), o) == std::vector<std::string>{"1", "y", "x", "x*y"});
  CHECK(rank(DenseMatrix<Rational>(3, 4, Rational(0))) == 0);
}

TEST_CASE("prime field and rational elimination agree") {
  auto o = ord2();
  auto T = monomials_up_to_degree(3, o);
  for (auto g : {"binomial", "pow23", "sq", "step", "kron"}) {
    auto uq = make_generator(g, QQ);
    auto uf = make_generator(g, GF);
    Probe pq(uq);
    Probe pf(uf);
    auto a = column_rank_profile(build_multihankel(pq, T, T));
    auto b = column_rank_profile(build_multihankel(pf, T, T));
    CHECK(a.profile == b.profile);
  }
}

TEST_CASE("relation solves") {
  auto o = ord2();
  auto p23 = make_generator("pow23", QQ);
  Probe p(p23);
  auto S = monos("1,x", o);
  auto r1 = solve_relation(p, S, S, mono("y", o));
  REQUIRE(r1.consistent());
  CHECK(format_poly(*r1.relation, o) == "y - 3");
  auto r2 = solve_relation(p, S, S, mono("x^2", o));
  REQUIRE(r2.consistent());
  CHECK(format_poly(*r2.relation, o) == "x^2 - 4*x + 4");

  auto st = make_generator("step", QQ);
  Probe ps(st);
  auto in_S = solve_relation(ps, monos("1,y,x", o), monos("y^2", o), mono("x^2", o));
  CHECK_FALSE(in_S.consistent());
  REQUIRE(in_S.failing_row);
  CHECK(*in_S.failing_row == mono("y^2", o));
}

TEST_CASE("relations lie in the kernel") {
  auto o = ord2();
  auto u = make_generator("sq", QQ);
  Probe p(u);
  auto T = monomials_up_to_degree(3, o);
  auto prof = column_rank_profile(build_multihankel(p, T, T));
  CHECK(rank(build_multihankel(p, prof.profile, prof.profile)) == prof.profile.size());
  for (const auto& t : T) {
    if (contains(sorted_unique(prof.profile, o), t, o)) continue;
    auto r = solve_relation(p, prof.profile, T, t);
    REQUIRE(r.consistent());
    MonomialSet cols = prof.profile;
    cols.push_back(t);
    auto K = kernel_basis(build_multihankel(p, T, cols), QQ.zero(), QQ.one());
    REQUIRE(K.size() == 1);
    // kernel is one-dimensional with last entry 1 after scaling
    auto v = K[0];
    Rational s = v.back().inv();
    for (std::size_t i = 0; i < prof.profile.size(); ++i) CHECK(r.relation->coeff(prof.profile[i]).value_or(Rational(0)) == v[i] * s);
  }
}

TEST_CASE("binomial kernel is spanned by multiples of Pascal's rule") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  Probe p(u);
  auto T = monomials_up_to_degree(3, o);
  auto K = kernel_basis(build_multihankel(p, T, T), QQ.zero(), QQ.one());
  CHECK(K.size() == 3);
  std::vector<Poly<Rational>> rule{parse_poly("x*y - y - 1", o, QQ)};
  for (const auto& v : K) {
    std::vector<Poly<Rational>::Term> terms;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (!v[i].is_zero()) terms.emplace_back(T[i], v[i]);
    CHECK(normal_form(Poly<Rational>::from_terms(terms), rule, o).is_zero());
  }
}

TEST_CASE("incremental echelon") {
  IncrementalEchelon<Rational> e(3);
  CHECK(e.add({Rational(1), Rational(2), Rational(3)}) == std::optional<std::size_t>(0));
  CHECK(e.add({Rational(2), Rational(4), Rational(6)}) == std::nullopt);
  CHECK(e.add({Rational(0), Rational(0), Rational(5)}) == std::optional<std::size_t>(2));
  CHECK(e.rank() == 2);
  CHECK(e.has_pivot(2));
  CHECK_FALSE(e.has_pivot(1));
}

TEST_CASE("matrix dumps") {
  auto o = ord2();
  auto u = make_generator("kron", QQ);
  Probe p(u);
  auto H = build_multihankel(p, monos("1,y,x", o), monos("1,y,x", o));
  auto text = format_matrix(H, o);
  CHECK(text.find("x") != std::string::npos);
  auto csv = format_matrix_csv(H, o);
  CHECK(csv.substr(0, csv.find('\n')) == "label,1,y,x");
  CHECK(csv.find("\nx,0,1,0") != std::string::npos);
}

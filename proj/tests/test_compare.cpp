#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

TEST_CASE("verify_shift") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  CHECK(verify_shift(u, parse_poly("x*y - y - 1", o, QQ), monomials_up_to_degree(5, o)));
  CHECK(verify_shift(u, parse_poly("x^2 - x", o, QQ), monos("1", o)));
  CHECK_FALSE(verify_shift(u, parse_poly("x^2 - x", o, QQ), monos("1,y", o)));
  CHECK(verify_shift(u, Poly<Rational>{}, monomials_up_to_degree(3, o)));
}

TEST_CASE("zero-dimensionality") {
  auto o = ord2();
  CHECK_FALSE(is_zero_dimensional(parse_poly_list("x*y - y - 1", o, QQ), o));
  CHECK(is_zero_dimensional(parse_poly_list("y^2, x*y - y - 1, x^2 - 2*x + 1", o, QQ), o));
  CHECK_FALSE(is_zero_dimensional(std::vector<Poly<Rational>>{}, o));
}

TEST_CASE("ideal containment at a truncation") {
  auto o = ord2();
  auto sf = parse_poly_list("x*y - y - 1", o, QQ);
  auto bms = parse_poly_list("x*y - y - 1, y^3, x^3 - 3*x^2 + 3*x - 1", o, QQ);
  CHECK_FALSE(ideal_contains_at_truncation(sf, bms, o, 4));
  CHECK(ideal_contains_at_truncation(bms, sf, o, 4));
  CHECK(ideal_contains_at_truncation(bms, bms, o, 3));
  CHECK(ideal_contains_at_truncation(sf, std::vector<Poly<Rational>>{}, o, 3));
  // y^2 - 1 = (y - 1)(y + 1): needs degree 2 products
  auto big = parse_poly_list("y - 1", o, QQ);
  auto small = parse_poly_list("y^2 - 1", o, QQ);
  CHECK(ideal_contains_at_truncation(big, small, o, 2));
  CHECK_FALSE(ideal_contains_at_truncation(big, small, o, 1));
}

TEST_CASE("scalar-FGLM ideal sits inside the BMS ideal") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  auto b = run_bms(u, o, mono("x^5", o));
  auto s = as_relation_set(run_sfglm(u, o, monomials_up_to_degree(3, o)), o, false);
  auto rep = compare_runs(u, {b, s});
  CHECK(rep.zero_dimensional[0]);
  CHECK_FALSE(rep.zero_dimensional[1]);
  CHECK(rep.certified[0]);
  CHECK(rep.certified[1]);
  CHECK(rep.contains[0][1]);
  CHECK_FALSE(rep.contains[1][0]);
}

TEST_CASE("step reports differing ideals") {
  auto o = ord2();
  auto u = make_generator("step", QQ);
  auto rep = compare_runs(u, {run_bms(u, o, mono("y^3", o)),
                              as_relation_set(run_sfglm(u, o, monos("1,y,x,y^2", o)), o, false)});
  CHECK_FALSE(rep.contains[1][0]);
  auto same = compare_runs(u, {run_bms(u, o, mono("y^3", o)), run_bms(u, o, mono("y^3", o))});
  CHECK(canon(same.runs[0].polys(), o) == canon(same.runs[1].polys(), o));
  CHECK(same.contains[0][1]);
  CHECK(same.contains[1][0]);
}

TEST_CASE("gorenstein test") {
  auto o = ord2();
  auto bad = gorenstein_test(parse_poly_list("x^2, x*y, y^2", o, GF), o, GF, 10, 1);
  CHECK(bad.verdict == GorensteinVerdict::NotGorenstein);
  for (const auto& t : bad.trials) {
    CHECK(t.larger);
    bool linear = std::any_of(t.found.begin(), t.found.end(), [&](const auto& g) { return lm(g, o).degree() == 1; });
    CHECK(linear);
  }
  CHECK(gorenstein_test(parse_poly_list("y^2, x^2", o, GF), o, GF, 10, 1).verdict == GorensteinVerdict::GorensteinLikely);
  CHECK(gorenstein_test(parse_poly_list("y - 3, x - 5", o, GF), o, GF, 5, 1).verdict == GorensteinVerdict::GorensteinLikely);
  CHECK_THROWS_AS(gorenstein_test(parse_poly_list("x*y", o, GF), o, GF, 1, 1), PositiveDimensional);
}

TEST_CASE("family sizes") {
  auto size = [](Family f, unsigned n, unsigned d) { return make_family(FamilySpec{f, n, d, 1}, GF).staircase_size; };
  CHECK(size(Family::Rectangle, 2, 4) == 8);
  CHECK(size(Family::LShape, 3, 5) == 13);
  CHECK(size(Family::Simplex, 3, 4) == 20);
  CHECK(size(Family::Simplex, 2, 2) == 3);
  CHECK(size(Family::LShape, 2, 4) == 7);
  for (unsigned d = 2; d <= 8; ++d) {
    CHECK(size(Family::LShape, 2, d) == 2 * d - 1);
    CHECK(size(Family::LShape, 3, d) == 3 * d - 2);
    CHECK(size(Family::Simplex, 2, d) == d * (d + 1) / 2);
    CHECK(size(Family::Rectangle, 2, d) == d * (d / 2));
  }
}

TEST_CASE("query counts") {
  auto q = [](Family f, unsigned n, unsigned d, const char* a) { return bench_one(FamilySpec{f, n, d, 1}, GF, a).queries; };
  CHECK(q(Family::Simplex, 2, 2, "sfglm") == 15);
  CHECK(q(Family::Simplex, 2, 2, "bms") == 10);
  CHECK(q(Family::Simplex, 3, 2, "sfglm") == 35);
  CHECK(q(Family::Simplex, 3, 2, "bms") == 20);
  CHECK(q(Family::Rectangle, 2, 4, "sfglm") == 45);
  CHECK(q(Family::Rectangle, 2, 4, "bms") == 45);
  auto binom = [](unsigned n, unsigned k) {
    unsigned long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (auto f : {Family::Rectangle, Family::LShape, Family::Simplex})
    for (unsigned d = 2; d <= 6; ++d) {
      auto inst = make_family(FamilySpec{f, 2, d, 1}, GF);
      CHECK(q(f, 2, d, "sfglm") == binom(2 + 2 * inst.d_max, 2));
      auto b = q(f, 2, d, "bms");
      CHECK(b >= binom(1 + inst.d_S + inst.d_max, 2));
      CHECK(b <= binom(2 + inst.d_S + inst.d_max, 2));
    }
}

TEST_CASE("bench rows recover the family") {
  for (auto f : {Family::Rectangle, Family::LShape, Family::Simplex})
    for (const auto& a : algorithm_names()) CHECK(bench_one(FamilySpec{f, 2, 3, 2}, GF, a).recovered);
  std::ostringstream os;
  write_bench_header(os);
  write_bench_row(os, bench_one(FamilySpec{Family::Simplex, 2, 2, 1}, GF, "bms"));
  auto text = os.str();
  CHECK(text.rfind("family,n,d,algorithm,queries,mults,adds,staircase_size,dmax,wall_ms\n", 0) == 0);
  CHECK(text.find("\nsimplex,2,2,bms,10,") != std::string::npos);
  CHECK(parse_family("LShape") == Family::LShape);
  CHECK_THROWS(parse_family("disc"));
}

TEST_CASE("shift laws on binomial") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  for (unsigned d : {3u, 4u}) {
    Monomial M(2);
    M.set(0, 2 * d - 1);
    auto rs = run_bms(u, o, M);
    REQUIRE(rs.relations.size() == 3);
    for (const auto& r : rs.relations) {
      unsigned want = r.lm == mono("x*y", o) ? 2 * d - 3 : d - 1;
      CHECK(r.shift->degree() == want);
    }
  }
}

TEST_CASE("shape position") {
  for (unsigned d = 2; d <= 6; ++d)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto sp = shape_position(d, GF, seed);
      auto& o = sp.ord;
      MonomialSet T;
      for (unsigned k = 0; k <= d + 2; ++k) {
        Monomial m(3);
        m.set(2, k);
        T.push_back(m);
      }
      CHECK(canon(run_sfglm_tweaked(sp.oracle, o, T).gb, o) == canon(sp.gb, o));
      // a degree d recurrence in z needs terms up to z^(2d-1)
      Monomial stop(3);
      stop.set(2, std::max(d + 2, 2 * d - 1));
      auto b = run_bms(sp.oracle, o, stop);
      std::vector<Poly<Fp>> want{sp.gb[0], parse_poly("y", o, GF), parse_poly("x", o, GF)};
      CHECK(canon(b.polys(), o) == canon(want, o));
      CHECK(canon(b.polys(), o) != canon(sp.gb, o));
      auto flat = shape_position(d, GF, seed, true);
      CHECK(canon(run_bms(flat.oracle, o, stop).polys(), o) == canon(flat.gb, o));
    }
}

TEST_CASE("closed staircase law") {
  auto o = ord2();
  for (auto g : {"binomial", "pow23", "sq", "step", "kron", "zero"})
    for (auto M : {"x", "y^2", "x^3", "x*y^3"})
      CHECK(is_zero_dimensional(run_bms(make_generator(g, QQ), o, mono(M, o)).polys(), o));
  CHECK_FALSE(is_zero_dimensional(run_sfglm(make_generator("binomial", QQ), o, monomials_up_to_degree(3, o)).gb, o));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

TEST_CASE("binomial golden and trace") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  std::vector<TraceEvent> trace;
  auto rs = run_bms(u, o, mono("x^3", o), BmsVariant::Plain, &trace);
  CHECK(canon(rs.polys(), o) == canon({"y^2", "x*y - y - 1", "x^2 - 2*x + 1"}, o, QQ));
  for (const auto& r : rs.relations) CHECK(format_monomial(*r.shift, o) == "x");
  CHECK(names(rs.staircase, o) == std::vector<std::string>{"1", "y", "x"});
  CHECK(rs.queries == 10);

  std::vector<std::string> adds, updates;
  for (const auto& e : trace) {
    if (e.kind == TraceEvent::Kind::StaircaseAdd) adds.push_back(format_monomial(e.at, o));
    if (e.kind == TraceEvent::Kind::Update) updates.push_back(format_monomial(e.at, o));
  }
  CHECK(adds == std::vector<std::string>{"1", "x*y"});
  CHECK(updates == std::vector<std::string>{"x", "x*y", "x^2*y", "x^2*y"});
  auto text = format_trace(trace, o);
  CHECK(text.find("update x*y - 1 -> x*y - y - 1") != std::string::npos);
  CHECK(text.find("update x^2 - x -> x^2 - 2*x + 1") != std::string::npos);
}

TEST_CASE("single steps") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  Probe p(u);
  BmsEngine<RationalField> eng(p, o, BmsVariant::Plain);
  for (const auto& m : enumerate_up_to(mono("x*y", o), o)) eng.step(m);
  CHECK(canon(eng.state().G, o) == canon({"y^2", "x*y - 1", "x^2 - x"}, o, QQ));
  std::vector<std::string> recs;
  for (const auto& r : eng.state().records) recs.push_back(format_poly(r.h, o) + " @ " + format_monomial(r.ratio, o));
  std::sort(recs.begin(), recs.end());
  CHECK(recs == std::vector<std::string>{"x - 1 @ y", "y @ x"});
  auto before = eng.state().G;
  eng.step(mono("y^3", o));  // y^2 has discrepancy 0 at y^3; nothing else divides it
  CHECK(canon(eng.state().G, o) == canon(before, o));
}

TEST_CASE("shift laws on binomial") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  auto r5 = run_bms(u, o, mono("x^5", o));
  CHECK(canon(r5.polys(), o) == canon({"x*y - y - 1", "y^3", "x^3 - 3*x^2 + 3*x - 1"}, o, QQ));
  CHECK(shift_of(r5, "x*y - y - 1") == "x^3");
  CHECK(shift_of(r5, "y^3") == "x^2");
  CHECK(shift_of(r5, "x^3 - 3*x^2 + 3*x - 1") == "x^2");
  auto r7 = run_bms(u, o, mono("x^7", o));
  CHECK(shift_of(r7, "x*y - y - 1") == "x^5");
  CHECK(shift_of(r7, "y^4") == "x^3");
  CHECK(shift_of(r7, "x^4 - 4*x^3 + 6*x^2 - 4*x + 1") == "x^3");
}

TEST_CASE("sq golden: minimal but not reduced") {
  auto o = ord2();
  auto u = make_generator("sq", QQ);
  auto rs = run_bms(u, o, mono("y^5", o));
  CHECK(canon(rs.polys(), o) == canon({"x*y - x - y + 1", "x^2 - 1/3*x*y - y^2 - 5/3*x + 7/3*y - 1/3",
                                       "y^3 - 1/2*x*y - 3*y^2 + 1/2*x + 7/2*y - 3/2"},
                                      o, QQ));
  CHECK(shift_of(rs, "x*y - x - y + 1") == "x^2");
  CHECK(shift_of(rs, "x^2 - 1/3*x*y - y^2 - 5/3*x + 7/3*y - 1/3") == "x^2");
  CHECK(shift_of(rs, "y^3 - 1/2*x*y - 3*y^2 + 1/2*x + 7/2*y - 3/2") == "y^2");
  auto tw = run_bms_tweaked(u, o, mono("y^5", o));
  CHECK(canon(tw.polys(), o) == canon({"x*y - x - y + 1", "x^2 - y^2 - 2*x + 2*y", "y^3 - 3*y^2 + 3*y - 1"}, o, QQ));
}

TEST_CASE("step with bound y^3") {
  // The table forces rank H_{{1,y,x},{1,y,x}} = 3, so no degree-1 relation exists.
  auto o = ord2();
  auto u = make_generator("step", QQ);
  auto rs = run_bms(u, o, mono("y^3", o));
  CHECK(canon(rs.polys(), o) == canon({"y^2 - 2*y + 1", "x*y - y^2", "x^2 - x*y - 2*y"}, o, QQ));
  CHECK(names(rs.staircase, o) == std::vector<std::string>{"1", "y", "x"});
  CHECK_FALSE(bracket(u, parse_poly("x - y", o, QQ), mono("x", o)).is_zero());
  CHECK_FALSE(bracket(u, parse_poly("y^2 - 2*y", o, QQ), mono("y", o)).is_zero());
}

TEST_CASE("pow23, fib4 and zero") {
  auto o = ord2();
  auto p = run_bms(make_generator("pow23", QQ), o, mono("x^2", o));
  CHECK(canon(p.polys(), o) == canon({"y - 3", "x^2 - 4*x + 4"}, o, QQ));
  CHECK(canon(run_bms_linalg(make_generator("pow23", QQ), o, mono("x^2", o)).polys(), o) == canon(p.polys(), o));

  auto lex = MonomialOrder::parse("lex(z<y<x)");
  auto f = run_bms(make_generator("fib4", QQ), lex, mono("z^6", lex));
  CHECK(canon(f.polys(), lex) == canon({"z^2 - z - 1", "y", "x"}, lex, QQ));
  CHECK(shift_of(f, "z^2 - z - 1") == "z^4");
  CHECK(shift_of(f, "y") == "0");
  CHECK(shift_of(f, "x") == "0");

  auto z = run_bms(make_generator("zero", QQ), o, mono("x^2", o));
  CHECK(canon(z.polys(), o) == canon({"1"}, o, QQ));
  CHECK(z.staircase.empty());
  auto zl = run_bms_linalg(make_generator("zero", QQ), o, mono("x^2", o));
  CHECK(canon(zl.polys(), o) == canon({"1"}, o, QQ));
}

TEST_CASE("tweaked is inter-reduced plain on the built-in oracles") {
  auto o = ord2();
  auto lex = MonomialOrder::parse("lex(z<y<x)");
  struct Case {
    const char* gen;
    MonomialOrder ord;
    const char* bound;
  };
  for (const auto& c : {Case{"binomial", o, "x^5"}, Case{"pow23", o, "x^3"}, Case{"sq", o, "y^5"},
                        Case{"step", o, "y^4"}, Case{"fib4", lex, "z^6"}, Case{"kron", o, "x^4"}}) {
    auto u = make_generator(c.gen, QQ);
    auto plain = run_bms(u, c.ord, mono(c.bound, c.ord));
    auto tw = run_bms_tweaked(u, c.ord, mono(c.bound, c.ord));
    CHECK_MESSAGE(canon(tw.polys(), c.ord) == canon(inter_reduce(plain.polys(), c.ord), c.ord), c.gen);
  }
  auto b = run_bms(make_generator("binomial", QQ), o, mono("x^3", o));
  CHECK(canon(run_bms_tweaked(make_generator("binomial", QQ), o, mono("x^3", o)).polys(), o) == canon(b.polys(), o));
}

TEST_CASE("stopping bound") {
  auto o = ord2();
  CHECK(format_monomial(stopping_bound(parse_poly_list("x, y^4", o, QQ), o), o) == "y^7");
  CHECK(format_monomial(stopping_bound(parse_poly_list("x^2, y^3", o, QQ), o), o) == "x^2*y^4");
  CHECK(format_monomial(stopping_bound(parse_poly_list("x^3, y^5", o, QQ), o), o) == "x^4*y^8");
  CHECK(format_monomial(stopping_bound(parse_poly_list("x, y", o, QQ), o), o) == "x");
}

TEST_CASE("output certificates, minimality and stabilization") {
  auto o = ord2();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (auto lms : {"y^2,x^3", "x*y,y^3,x^3", "y^2,x*y,x^2", "y^3,x^2*y,x^3"}) {
      auto r = random_from_lms(monos(lms, o), o, GF, seed);
      auto M = stopping_bound(r.gb, o);
      auto rs = run_bms(r.oracle, o, M);
      for (const auto& rel : rs.relations)
        for (const auto& t : certified_shifts(rs, rel)) CHECK(bracket(r.oracle, rel.poly, t).is_zero());
      auto L = rs.lms();
      CHECK(sorted_unique(L, o) == border(rs.staircase, o));
      CHECK(sorted_unique(L, o) == monos(lms, o));
      // past the stopping bound nothing changes
      auto later = run_bms(r.oracle, o, successor(successor(M, o), o));
      CHECK(canon(later.polys(), o) == canon(rs.polys(), o));
    }
  }
}

TEST_CASE("staircase grows monotonically") {
  auto o = ord2();
  auto r = random_from_lms(monos("x*y,y^4,x^4", o), o, GF, 3);
  Probe p(r.oracle);
  BmsEngine<PrimeField> eng(p, o, BmsVariant::Plain);
  MonomialSet prev;
  for (const auto& m : enumerate_up_to(mono("x^7", o), o)) {
    eng.step(m);
    for (const auto& s : prev) CHECK(contains(eng.state().staircase, s, o));
    prev = eng.state().staircase;
  }
}

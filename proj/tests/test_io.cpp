#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

TEST_CASE("relation sets round-trip through JSON") {
  auto o = ord2();
  auto u = make_generator("sq", QQ);
  for (auto rs : {run_bms(u, o, mono("y^5", o)), run_rank_solver(u, o, mono("y^5", o)),
                  as_relation_set(run_sfglm(u, o, monomials_up_to_degree(3, o)), o, false)}) {
    auto j = to_json(rs);
    auto back = relation_set_from_json(json::parse(j.dump()), QQ);
    CHECK(back.algorithm == rs.algorithm);
    CHECK(canon(back.polys(), o) == canon(rs.polys(), o));
    CHECK(back.staircase == rs.staircase);
    CHECK(verify_relation_set(u, back) == verify_relation_set(u, rs));
    CHECK(verify_relation_set(u, back));
    CHECK(to_json(back)["relations"] == j["relations"]);
  }
}

TEST_CASE("scalar-FGLM result JSON") {
  auto o = ord2();
  auto r = run_sfglm(make_generator("pow23", QQ), o, monomials_up_to_degree(2, o));
  auto j = to_json(r, o, false);
  CHECK(j["gb"] == json::array({"y - 3", "x^2 - 4*x + 4"}));
  CHECK(j["staircase"] == json::array({"1", "x"}));
  CHECK(j["certified_shift_set"].size() == 6);
  CHECK(j["queries"] == 15);
  CHECK(j["ops"].contains("mults"));
}

TEST_CASE("tables and specs") {
  auto o = ord2();
  auto j = json::parse(R"({"dim": 2, "field": "Q", "shape": [2, 3], "entries": [0, 1, 2, "3/2", 4, 5]})");
  auto t = table_from_json(j, QQ);
  CHECK(t.get(mono("x", o)) == Rational(3, 2));
  CHECK(table_to_json(t, {2, 3})["entries"][3] == "3/2");
  CHECK_THROWS(table_from_json(json::parse(R"({"dim": 3, "shape": [2, 3], "entries": [0,1,2,3,4,5]})"), QQ));

  auto g = oracle_from_json(json::parse(R"({"generator": "pow23"})"), QQ);
  CHECK(g.get(mono("x*y", o)) == Rational(12));
  auto z = oracle_from_json(json::parse(R"({"generator": "zero", "params": {"dim": 3}})"), QQ);
  CHECK(z.dim() == 3);

  auto spec = json::parse(R"j({"ideal": {"gb": ["y - 3", "x^2 - 4*x + 4"], "order": "drl(y<x)",
                                         "initial": {"1": 1, "x": 4}}})j");
  auto i = oracle_from_json(spec, QQ);
  CHECK(i.get(mono("x^2*y", o)) == Rational(36));
  auto spec2 = json::parse(R"j({"ideal": {"gb": [[{"monomial": "y", "coefficient": 1}, {"monomial": "1", "coefficient": "-3"}],
                                                 "x^2 - 4*x + 4"],
                                          "order": "drl(y<x)",
                                          "initial": [{"monomial": "1", "value": 1}, {"monomial": "x", "value": "4"}]}})j");
  CHECK(oracle_from_json(spec2, QQ).get(mono("x^2*y", o)) == Rational(36));
  CHECK_THROWS_AS(oracle_from_json(json::parse(R"({"foo": 1})"), QQ), InputError);
}

TEST_CASE("comparison and gorenstein JSON") {
  auto o = ord2();
  auto u = make_generator("binomial", QQ);
  auto rep = compare_runs(u, {run_bms(u, o, mono("x^5", o)),
                              as_relation_set(run_sfglm(u, o, monomials_up_to_degree(3, o)), o, false)});
  auto j = to_json(rep);
  CHECK(j["runs"][0]["zero_dimensional"] == true);
  CHECK(j["runs"][1]["zero_dimensional"] == false);
  CHECK(j["equal_ideals"] == false);
  auto g = gorenstein_test(parse_poly_list("x^2, x*y, y^2", o, GF), o, GF, 2, 1);
  CHECK(to_json(g, o)["verdict"] == "NotGorenstein");
}

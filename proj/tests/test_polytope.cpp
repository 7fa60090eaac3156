#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "fnt/compose.hpp"
#include "fnt/planar.hpp"
#include "fnt/polytope.hpp"

using namespace fnt;
using fixtures::iv;

namespace {

hpoly box2() {
  // 0 <= x <= 1, 0 <= y <= 1
  hpoly p;
  p.vars = {"x", "y"};
  p.rows.push_back({{rat(1), rat(0)}, false, rat(1)});
  p.rows.push_back({{rat(-1), rat(0)}, false, rat(0)});
  p.rows.push_back({{rat(0), rat(1)}, false, rat(1)});
  p.rows.push_back({{rat(0), rat(-1)}, false, rat(0)});
  return p;
}

}  // namespace

TEST_CASE("Fourier-Motzkin projection of a triangle") {
  // 0 <= y <= x <= 1; eliminating y leaves 0 <= x <= 1
  hpoly p = box2();
  p.rows.push_back({{rat(-1), rat(1)}, false, rat(0)});  // y - x <= 0
  hpoly q = fm_eliminate(p, {"y"});
  auto r = minmax_objective(q, {{"x", 1}});
  REQUIRE(r.has_value());
  CHECK(r->lo == rat(0));
  CHECK(r->hi == rat(1));
}

TEST_CASE("minmax over a box") {
  auto r = minmax_objective(box2(), {{"x", 1}, {"y", 1}});
  REQUIRE(r.has_value());
  CHECK(r->lo == rat(0));
  CHECK(r->hi == rat(2));
  auto d = minmax_objective(box2(), {{"x", 1}, {"y", -1}});
  REQUIRE(d.has_value());
  CHECK(d->lo == rat(-1));
  CHECK(d->hi == rat(1));
}

TEST_CASE("empty polytopes are detected") {
  hpoly p = box2();
  p.rows.push_back({{rat(1), rat(1)}, false, rat(-1)});  // x + y <= -1
  auto r = minmax_objective(p, {{"x", 1}});
  CHECK_FALSE(r.has_value());
}

TEST_CASE("unbounded objectives throw") {
  hpoly p;
  p.vars = {"x"};
  p.rows.push_back({{rat(-1)}, false, rat(0)});  // x >= 0 only
  CHECK_THROWS_AS(minmax_objective(p, {{"x", 1}}), poly_error);
}

TEST_CASE("vertex enumeration of the unit square") {
  vertex_set vs = vertices(box2());
  CHECK(vs.size() == 4);
  for (const auto& pt : vs) CHECK(point_satisfies(box2(), pt));
}

TEST_CASE("vertex enumeration respects equalities") {
  hpoly p = box2();
  p.rows.push_back({{rat(1), rat(1)}, true, rat(1)});  // x + y = 1
  vertex_set vs = vertices(p);
  CHECK(vs.size() == 2);
}

TEST_CASE("polytope inclusion through vertices") {
  hpoly small = box2();
  hpoly big = box2();
  big.rows[0].rhs = rat(2);  // x <= 2
  big.rows[2].rhs = rat(2);  // y <= 2
  CHECK(poly_includes(big, small));
  CHECK_FALSE(poly_includes(small, big));
}

TEST_CASE("typing polytopes nest per the reference examples") {
  hpoly p1 = constraints_of_typing(fixtures::t1());
  hpoly p2 = constraints_of_typing(fixtures::t2());
  hpoly p3 = constraints_of_typing(fixtures::t3());
  CHECK(poly_includes(p1, p3));
  CHECK(poly_includes(p2, p3));
  CHECK_FALSE(poly_includes(p1, p2));
  CHECK_FALSE(poly_includes(p2, p1));
}

TEST_CASE("oracle agrees with hand-computed chain entries") {
  flow_network net = parse_network(std::string(fixtures::kChain));
  auto out = oracle_pt(net);
  REQUIRE(out.feasible());
  CHECK(*out.value->entry({"a"}) == iv(2, 3));
  CHECK(*out.value->entry({"c"}) == iv(-3, -2));
}

TEST_CASE("oracle flags infeasible networks with a witness") {
  flow_network net = parse_network(std::string(
      "node u\nnode v\narc a _ u 0 5\narc b u v 2 4\narc c v _ 0 1\n"));
  auto out = oracle_pt(net);
  REQUIRE_FALSE(out.feasible());
}

TEST_CASE("oracle equals composition on the diamond") {
  flow_network net = parse_network(std::string(fixtures::kDiamond));
  auto o = oracle_pt(net);
  auto c = comp_pt(net, greedy_schedule(net));
  REQUIRE(o.feasible());
  REQUIRE(c.feasible());
  CHECK(typing_equal(*o.value, *c.value));
}

TEST_CASE("tightness check accepts the reference typing, rejects slack") {
  CHECK(check_tight(fixtures::t1()));
  typing loose = fixtures::t1();
  loose.blocks[0].set(1u, iv(0, 100));
  CHECK_FALSE(check_tight(loose));
}

TEST_CASE("strong subtyping splits from plain subtyping") {
  CHECK(is_subtyping(fixtures::t2(), fixtures::t3()));
  CHECK_FALSE(strong_sub(fixtures::t2(), fixtures::t3()));
  CHECK(strong_sub(fixtures::t1(), fixtures::t1()));  // reflexivity
}

TEST_CASE("input and output safety on the capped variants") {
  CHECK(input_safe(fixtures::t3_prime(), fixtures::t2()));
  CHECK(output_safe(fixtures::t3_dprime(), fixtures::t2()));
}

TEST_CASE("max-flow cross-check on the diamond") {
  flow_network net = parse_network(std::string(fixtures::kDiamond));
  CHECK(maxflow_augmenting(net) == rat(7));
  flow_network lc = parse_network(std::string(fixtures::kChain));
  CHECK_THROWS_AS(maxflow_augmenting(lc), poly_error);  // nonzero lower bound
}

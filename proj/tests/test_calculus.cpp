#include "doctest.h"
#include "kit/functions.hpp"
#include "setopt/builtins.hpp"
#include "setopt/calculus.hpp"
#include "setopt/error.hpp"

using namespace setopt;

namespace {
Vec v1(long a) { return Vec{Q(a)}; }
Vec v2(long a, long b) { return Vec{Q(a), Q(b)}; }
}  // namespace

TEST_CASE("quotients and derivative of the absolute diagonal") {
  SetFunction f = builtins::abs_diagonal();
  const Workspace& ws = f.ws();
  UpperSet expect = point_plus_cone(ws, v2(1, 1));
  for (Q t : {Q(1, 10), Q(1), Q(7)}) CHECK(set_equal(diff_quotient(f, v1(0), v1(1), t), expect));
  DerivativeResult d = set_derivative(f, v1(0), v1(1));
  CHECK(d.exact);
  CHECK(set_equal(d.value, expect));
  REQUIRE(d.t_star.has_value());
  CHECK(d.t_star->is_plus_inf());
  // phi(x) = |x| along the diagonal scalarization
  CHECK(scalar_dini(f, v2(-1, 0), v1(0), v1(-3)).value == ExtReal(3));
  CHECK(scalar_dini(f, v2(-1, -1), v1(0), v1(2)).value == ExtReal(4));
  RegularityReport rr = regularity_check(f, v1(0), v1(1), ws.directions());
  CHECK(rr.SR);
  CHECK(rr.WR);
}

TEST_CASE("derivative at the origin of the first polyhedral example") {
  SetFunction f = builtins::heyde_a();
  CHECK(set_equal(f.eval(v2(0, 0)), cone_set(f.ws())));
  CHECK(f.scalarize(v2(-1, -1), v2(2, 5)) == ExtReal(2));
  CHECK(f.eval(v2(-1, 0)).empty);
  CHECK(f.scalarize(v2(-1, 0), v2(-1, 0)).is_plus_inf());
  // leaving the domain immediately
  DerivativeResult out = set_derivative(f, v2(0, 0), v2(-1, 0));
  CHECK(out.value.empty);
  CHECK(set_equal(set_derivative(f, v2(0, 0), v2(0, 0)).value, cone_set(f.ws())));
}

TEST_CASE("derivative off the domain") {
  SetFunction f = builtins::heyde_a();
  CHECK(set_derivative(f, v2(-1, 0), v2(1, 0)).value.is_all());
  CHECK(diff_quotient(f, v2(-1, 0), v2(1, 0), Q(1, 3)).is_all());
  CHECK(scalar_dini(f, v2(-1, 0), v2(-1, 0), v2(1, 1)).value.is_minus_inf());
  CHECK(scalarized_derivative_intersection(f, v2(-1, 0), v2(1, 0), f.ws().directions()).is_all());
}

TEST_CASE("circle: empty derivative against a point intersection") {
  SetFunction f = builtins::circle();
  const Workspace& ws = f.ws();
  for (long u : {1L, -1L}) {
    DerivativeResult d = set_derivative(f, v1(0), v1(u));
    CHECK_FALSE(d.exact);
    CHECK(d.value.empty);
    for (const auto& z : ws.directions()) {
      ScalarDini sd = scalar_dini(f, z, v1(0), v1(u));
      CHECK_FALSE(sd.exact);
      CHECK(sd.value == ExtReal(0));
    }
    UpperSet inter = scalarized_derivative_intersection(f, v1(0), v1(u), ws.directions());
    CHECK(set_equal(inter, point_plus_cone(ws, v1(0))));
    RegularityReport rr = regularity_check(f, v1(0), v1(u), ws.directions());
    CHECK_FALSE(rr.WR);
    CHECK_FALSE(rr.SR);
  }
}

TEST_CASE("oracle without a convexity declaration is rejected") {
  auto ws = builtins::quadrant();
  OracleData o;
  o.declared_convex = false;
  o.eval = [ws](const Vec&) { return cone_set(*ws); };
  SetFunction g = SetFunction::oracle(ws, 1, o);
  CHECK_THROWS_AS(set_derivative(g, v1(0), v1(1)), Error);
}

TEST_CASE("epigraphical functions are strongly regular") {
  kit::Rng r(5);
  auto ws = builtins::quadrant({v2(-1, -2), v2(-3, -1)});
  for (int i = 0; i < 60; ++i) {
    SetFunction g = kit::random_epi_vector(r, ws, 1 + i % 2);
    Vec x = g.xdim() == 1 ? v1(0) : v2(0, 0);
    Vec u = kit::random_direction(r, g.xdim());
    RegularityReport rr = regularity_check(g, x, u, ws->directions());
    CHECK(rr.SR);
    CHECK(rr.WR);
    DerivativeResult d = set_derivative(g, x, u);
    if (d.t_star && d.t_star->finite())
      CHECK(set_equal(diff_quotient(g, x, u, d.t_star->value() / 3), d.value));
  }
}

TEST_CASE("affine ParamPoly functions are strongly regular") {
  auto ws = builtins::quadrant({v2(-1, -1)});
  ParamPolyData d;
  d.normals = {v2(-1, 0), v2(0, -1), v2(-1, -2)};
  d.offsets = {ConcavePWL{{Affine{v1(2), Q(1)}}}, ConcavePWL{{Affine{v1(-1), Q(0)}}},
               ConcavePWL{{Affine{v1(1), Q(3)}}}};
  SetFunction f = SetFunction::param_poly(ws, 1, d);
  for (long u : {-2L, 1L, 3L}) {
    RegularityReport rr = regularity_check(f, v1(1), v1(u), ws->directions());
    CHECK(rr.SR);
    CHECK(rr.WR);
  }
}

TEST_CASE("set function property suite") {
  auto r = kit::setfun_suite(300, 21);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("derivative property suite") {
  auto r = kit::derivative_suite(250, 22);
  CHECK_MESSAGE(r.passed(), r.summary());
}

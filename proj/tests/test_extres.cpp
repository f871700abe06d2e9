#include <vector>

#include "doctest.h"
#include "setopt/extreal.hpp"

using namespace setopt;

namespace {

std::vector<ExtReal> sample() {
  std::vector<ExtReal> s{ExtReal::minus_inf(), ExtReal::plus_inf()};
  for (const char* q : {"-3", "-1/2", "0", "1/3", "2", "7/4"}) s.emplace_back(parse_rational(q));
  return s;
}

}  // namespace

TEST_CASE("rational parsing and simplest fraction") {
  CHECK(parse_rational("-2/4") == Q(-1, 2));
  CHECK(parse_rational("0.125") == Q(1, 8));
  CHECK(parse_rational("1e-6") == Q(1, 1000000));
  CHECK(parse_rational("-1.5e3") == Q(-1500));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(simplest_between(Q(3, 10), Q(4, 10)) == Q(1, 3));
  CHECK(simplest_between(Q(-1, 10), Q(1, 10)) == 0);
  CHECK(simplest_between(Q(9, 4), Q(9, 4)) == Q(9, 4));
  CHECK(simplest_between(Q(-7, 10), Q(-6, 10)) == Q(-2, 3));
  CHECK(from_double(0.5) == Q(1, 2));
}

TEST_CASE("inf-addition table") {
  CHECK(inf_add(ExtReal(2), ExtReal(3)) == ExtReal(5));
  CHECK(inf_add(ExtReal::plus_inf(), ExtReal::minus_inf()).is_plus_inf());
  CHECK(inf_add(ExtReal::minus_inf(), ExtReal(7)).is_minus_inf());
  CHECK(inf_add(ExtReal::minus_inf(), ExtReal::minus_inf()).is_minus_inf());
}

TEST_CASE("residual table") {
  const ExtReal P = ExtReal::plus_inf(), M = ExtReal::minus_inf();
  CHECK(residual(ExtReal(5), ExtReal(3)) == ExtReal(2));
  CHECK(residual(P, P).is_minus_inf());
  CHECK(residual(ExtReal(4), M).is_plus_inf());
  CHECK(residual(P, M).is_plus_inf());
  CHECK(residual(P, ExtReal(1)).is_plus_inf());
  CHECK(residual(M, M).is_minus_inf());
  CHECK(residual(M, P).is_minus_inf());
  CHECK(residual(ExtReal(1), P).is_minus_inf());
}

TEST_CASE("order is total with infinities at the ends") {
  CHECK(ExtReal::minus_inf() < ExtReal(-1000));
  CHECK(ExtReal(1000) < ExtReal::plus_inf());
  CHECK(ExtReal(Q(1, 3)) < ExtReal(Q(1, 2)));
}

// a <= b ⊞ t  <=>  a ÷ b <= t, quantified over the sample and both infinities.
TEST_CASE("residuation law over a sample grid") {
  auto s = sample();
  for (const auto& a : s)
    for (const auto& b : s) {
      ExtReal r = residual(a, b);
      for (const auto& t : s) {
        CHECK_MESSAGE((a <= inf_add(b, t)) == (r <= t), a.str() << " " << b.str() << " " << t.str());
      }
      CHECK(a <= inf_add(b, r));
    }
}

TEST_CASE("residual monotonicity and homogeneity") {
  auto s = sample();
  for (const auto& a : s)
    for (const auto& a2 : s)
      for (const auto& b : s) {
        if (a <= a2) CHECK(residual(a, b) <= residual(a2, b));
        if (a <= a2) CHECK(residual(b, a2) <= residual(b, a));
      }
  for (const auto& a : s)
    for (const auto& b : s)
      for (const Q& k : {Q(1, 3), Q(2), Q(5, 2)})
        CHECK(residual(scale(k, a), scale(k, b)) == scale(k, residual(a, b)));
}

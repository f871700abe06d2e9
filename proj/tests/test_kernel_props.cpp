#include "doctest.h"
#include "kit/corpus.hpp"

TEST_CASE("canonical form against independent oracles") {
  auto r = kit::canonical_form_suite(300, 11);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("lattice laws on random triples") {
  auto r = kit::lattice_suite(200, 12);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("scalarization identities") {
  auto r = kit::scalarization_suite(200, 13);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("recession cone identities") {
  auto r = kit::recession_suite(200, 14);
  CHECK_MESSAGE(r.passed(), r.summary());
}

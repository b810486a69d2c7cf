#include <doctest.h>

#include "helpers.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ideal.hpp"

using namespace ringlab;
using testing::gen;
using testing::members;
using testing::to_set;

TEST_CASE("ideal closure") {
  const FiniteRing z12 = zmod(12);
  CHECK(members(gen(z12, {4})) == std::vector<int>{0, 4, 8});
  CHECK(members(gen(zmod(8), {})) == std::vector<int>{0});
  CHECK(gen(zmod(8), {3}).size() == 8);
  CHECK_FALSE(gen(zmod(8), {3}).proper());
}

TEST_CASE("from_members verifies") {
  CHECK_THROWS_AS(Ideal::from_members(zmod(8), {0, 2}), Error);
  CHECK(Ideal::from_members(zmod(8), {0, 4}).size() == 2);
}

TEST_CASE("lattice sizes") {
  CHECK(enumerate_ideals(zmod(12))->size() == 6);
  CHECK(enumerate_ideals(product(zmod(2), zmod(2)))->size() == 4);
  CHECK(enumerate_ideals(trivial_extension(zmod(2), RModule(zmod(2), {2, 2})))->size() == 6);
  for (std::size_t n = 1; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(enumerate_ideals(zmod(n))->size()) ==
          oracle::divisor_count(static_cast<int>(n)));
  }
}

TEST_CASE("lattice equals exhaustive subset search") {
  for (const auto& p : testing::oracle_catalog()) {
    CAPTURE(p.lib.expr());
    const auto lat = enumerate_ideals(p.lib);
    std::set<oracle::Set> expected;
    for (const auto& s : oracle::all_ideals(p.ref)) expected.insert(s);
    std::set<oracle::Set> got;
    for (const Ideal& i : lat->all()) got.insert(to_set(i));
    CHECK(got == expected);
    for (std::size_t k = 1; k < lat->size(); ++k) CHECK((*lat)[k - 1] < (*lat)[k]);
  }
}

TEST_CASE("radical examples") {
  CHECK(members(radical(zero_ideal(zmod(8)))) == std::vector<int>{0, 2, 4, 6});
  CHECK(members(radical(gen(zmod(12), {4}))) == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(radical(unit_ideal(zmod(12))) == unit_ideal(zmod(12)));
}

TEST_CASE("radical laws on every lattice") {
  for (const auto& p : testing::oracle_catalog()) {
    CAPTURE(p.lib.expr());
    const auto lat = enumerate_ideals(p.lib);
    for (const Ideal& i : lat->all()) {
      const Ideal r = radical(i);
      CHECK(to_set(r) == oracle::radical(p.ref, to_set(i)));
      CHECK(radical(r) == r);
      CHECK(i.subset_of(r));
      for (const Ideal& j : lat->all()) {
        CHECK(radical(ideal_intersect(i, j)) == ideal_intersect(r, radical(j)));
      }
    }
  }
}

TEST_CASE("ideal algebra") {
  const FiniteRing z12 = zmod(12);
  CHECK(ideal_intersect(gen(z12, {4}), gen(z12, {6})).is_zero());
  CHECK(ideal_sum(gen(z12, {4}), gen(z12, {6})) == gen(z12, {2}));
  CHECK(ideal_product(gen(z12, {2}), gen(z12, {6})).is_zero());
  CHECK(ideal_algebra(IdealOp::sum, gen(z12, {3}), gen(z12, {4})) == unit_ideal(z12));
}

TEST_CASE("ideal operations yield ideals and closure is monotone") {
  for (const auto& p : testing::oracle_catalog()) {
    const auto lat = enumerate_ideals(p.lib);
    for (const Ideal& i : lat->all()) {
      for (const Ideal& j : lat->all()) {
        for (IdealOp op : {IdealOp::sum, IdealOp::product, IdealOp::intersect}) {
          CHECK(oracle::is_ideal(p.ref, to_set(ideal_algebra(op, i, j))));
        }
      }
    }
    for (Index a = 0; a < p.lib.size(); ++a) {
      for (Index b = 0; b < p.lib.size(); ++b) {
        CHECK(gen(p.lib, {a}).subset_of(gen(p.lib, {a, b})));
        CHECK(to_set(gen(p.lib, {a, b})) == oracle::closure(p.ref, {int(a), int(b)}));
      }
    }
  }
}

TEST_CASE("quotients") {
  const auto q = quotient_ring(zmod(12), gen(zmod(12), {4}));
  CHECK(q.ring.size() == 4);
  CHECK(find_isomorphism(q.ring, zmod(4)).has_value());
  CHECK(quotient_ring(zmod(8), zero_ideal(zmod(8))).ring.size() == 8);
  CHECK(quotient_ring(zmod(8), unit_ideal(zmod(8))).ring.size() == 1);
  CHECK(q.projection(5) == q.projection(1));
}

TEST_CASE("prime and maximal ideals") {
  const auto lat = enumerate_ideals(zmod(12));
  const auto primes = lat->prime_ideals();
  CHECK(primes.size() == 2);
  CHECK(lat->maximal_ideals().size() == 2);
  const auto lat6 = enumerate_ideals(zmod(7));
  CHECK(lat6->prime_ideals().size() == 1);  // (0)
}

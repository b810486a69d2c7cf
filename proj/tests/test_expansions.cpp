#include <doctest.h>

#include "helpers.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/expansion.hpp"

using namespace ringlab;
using testing::gen;
using testing::members;

TEST_CASE("builtin expansions") {
  const auto z8 = enumerate_ideals(zmod(8));
  CHECK(members(identity_delta(z8).eval(gen(zmod(8), {4}))) == std::vector<int>{0, 4});
  CHECK(members(radical_delta(z8).eval(zero_ideal(zmod(8)))) == std::vector<int>{0, 2, 4, 6});
  const FiniteRing z12 = zmod(12);
  const auto l12 = enumerate_ideals(z12);
  const Index four[] = {4};
  CHECK_FALSE(addk_delta(l12, four).eval(gen(z12, {3})).proper());
}

TEST_CASE("composition") {
  const FiniteRing z12 = zmod(12);
  const auto l12 = enumerate_ideals(z12);
  const ExpansionFn rad = radical_delta(l12);
  const ExpansionFn rr = delta_compose(rad, rad);
  for (std::size_t i = 0; i < l12->size(); ++i) CHECK(rr.eval_index(i) == rad.eval_index(i));
  CHECK(rr.label() == "comp(rad,rad)");

  const auto z8 = enumerate_ideals(zmod(8));
  const ExpansionFn ir = delta_compose(identity_delta(z8), radical_delta(z8));
  CHECK(members(ir.eval(zero_ideal(zmod(8)))) == std::vector<int>{0, 2, 4, 6});
  const ExpansionFn ri = delta_compose(rad, identity_delta(l12));
  CHECK(ri.eval(gen(z12, {4})) == gen(z12, {2}));
}

TEST_CASE("axiom checker") {
  const auto l12 = enumerate_ideals(zmod(12));
  CHECK(check_expansion_axioms(*l12, [](const Ideal& i) { return std::optional(radical(i)); }));
  const Index four[] = {4};
  const Ideal k = ideal_closure(zmod(12), four);
  CHECK(check_expansion_axioms(*l12, [&](const Ideal& i) { return std::optional(ideal_sum(i, k)); }));

  const auto l8 = enumerate_ideals(zmod(8));
  const AxiomCheck bad = check_expansion_axioms(
      *l8, [](const Ideal& i) { return std::optional(zero_ideal(i.ring())); });
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.violation->axiom == "extensive");
  CHECK_FALSE((*l8)[bad.violation->first].is_zero());

  // Monotonicity failure: (0) ↦ R, everything else fixed.
  const AxiomCheck mono = check_expansion_axioms(*l8, [](const Ideal& i) {
    return std::optional(i.is_zero() ? unit_ideal(i.ring()) : i);
  });
  REQUIRE_FALSE(mono.holds);
  CHECK(mono.violation->axiom == "monotone");
  CHECK_THROWS_AS(ExpansionFn(l8, {3, 3, 2, 3}, "bad"), Error);
}

TEST_CASE("finite intersection property") {
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto lat = enumerate_ideals(zmod(n));
    CHECK(check_fip(identity_delta(lat)));
    CHECK(check_fip(radical_delta(lat)));
  }
  CHECK(check_fip(radical_delta(enumerate_ideals(zmod(12)))));

  // triv(Z2, M[2,2]): the three lines 0(+)L are {0,2}, {0,1}, {0,3}.
  const FiniteRing t = trivial_extension(zmod(2), RModule(zmod(2), {2, 2}));
  const auto lat = enumerate_ideals(t);
  const Index l1[] = {2};
  const ExpansionFn d = addk_delta(lat, l1);
  const AxiomCheck fip = check_fip(d);
  REQUIRE_FALSE(fip.holds);
  std::set<std::vector<int>> pair{members((*lat)[fip.violation->first]),
                                  members((*lat)[*fip.violation->second])};
  CHECK(pair == std::set<std::vector<int>>{{0, 1}, {0, 3}});
  CHECK(check_fip(identity_delta(lat)));
}

TEST_CASE("quotient expansion") {
  const FiniteRing z12 = zmod(12);
  const auto l12 = enumerate_ideals(z12);
  {
    const auto q = quotient_ring(z12, gen(z12, {6}));
    const auto ql = enumerate_ideals(q.ring);
    const ExpansionFn dq = delta_quotient(radical_delta(l12), ql);
    const Ideal two = hom_image(q.projection, gen(z12, {2})).ideal;
    CHECK(dq.eval(two) == two);
  }
  {
    const auto q = quotient_ring(z12, gen(z12, {4}));
    const auto ql = enumerate_ideals(q.ring);
    const ExpansionFn dq = delta_quotient(radical_delta(l12), ql);
    const Ideal four = hom_image(q.projection, gen(z12, {4})).ideal;
    CHECK(dq.eval(four) == hom_image(q.projection, gen(z12, {2})).ideal);
    // Preimage of δ_q(J/I) is δ(J) + I.
    for (const Ideal& j : ql->all()) {
      const Ideal pre = hom_preimage(q.projection, dq.eval(j));
      const Ideal jj = hom_preimage(q.projection, j);
      CHECK(pre == ideal_sum(radical(jj), gen(z12, {4})));
    }
  }
  {
    const FiniteRing z8 = zmod(8);
    const auto q = quotient_ring(z8, zero_ideal(z8));
    const auto ql = enumerate_ideals(q.ring);
    const ExpansionFn dq = delta_quotient(identity_delta(enumerate_ideals(z8)), ql);
    for (std::size_t i = 0; i < ql->size(); ++i) CHECK(dq.eval_index(i) == i);
  }
}

TEST_CASE("product expansion") {
  const FiniteRing a = zmod(4), b = zmod(2);
  const FiniteRing p = product(a, b);
  const auto pl = enumerate_ideals(p);
  const auto la = enumerate_ideals(a), lb = enumerate_ideals(b);
  const ExpansionFn ii = delta_product(identity_delta(la), identity_delta(lb), pl);
  const Ideal zero_x_z2 = Ideal::from_members(p, {0, 1});
  CHECK(ii.eval(zero_x_z2) == zero_x_z2);
  const ExpansionFn rr = delta_product(radical_delta(la), radical_delta(lb), pl);
  CHECK(members(rr.eval(zero_ideal(p))) == std::vector<int>{0, 4});

  const FiniteRing p2 = product(zmod(8), zmod(3));
  const ExpansionFn ri = delta_product(radical_delta(enumerate_ideals(zmod(8))),
                                       identity_delta(enumerate_ideals(zmod(3))),
                                       enumerate_ideals(p2));
  CHECK(members(ri.eval(zero_ideal(p2))) == std::vector<int>{0, 6, 12, 18});
  // Componentwise containment is respected.
  for (const Ideal& i : pl->all()) {
    for (const Ideal& j : pl->all()) {
      if (i.subset_of(j) && rr.defined_at(i) && rr.defined_at(j)) {
        CHECK(rr.eval(i).subset_of(rr.eval(j)));
      }
    }
  }
}

TEST_CASE("idealization expansion") {
  const FiniteRing z4 = zmod(4);
  const FiniteRing t = trivial_extension(z4, RModule(z4, {4}));
  const auto tl = enumerate_ideals(t);
  const auto l4 = enumerate_ideals(z4);
  const ExpansionFn id = delta_idealization(identity_delta(l4), tl);
  const Ideal zero_m = Ideal::from_members(t, {0, 1, 2, 3});
  CHECK(id.eval(zero_m) == zero_m);
  const ExpansionFn rad = delta_idealization(radical_delta(l4), tl);
  CHECK(members(rad.eval(zero_ideal(t))) == std::vector<int>{0, 1, 2, 3, 8, 9, 10, 11});

  const FiniteRing z8 = zmod(8);
  const FiniteRing t8 = trivial_extension(z8, RModule(z8, {8}));
  const ExpansionFn id8 =
      delta_idealization(identity_delta(enumerate_ideals(z8)), enumerate_ideals(t8));
  std::vector<Index> four_m;
  for (Index r : {0u, 4u}) {
    for (Index m = 0; m < 8; ++m) four_m.push_back(r * 8 + m);
  }
  const Ideal im = Ideal::from_members(t8, four_m);
  CHECK(id8.eval(im) == im);

  // Non-homogeneous ideals are outside the domain.
  const FiniteRing t22 = trivial_extension(zmod(2), RModule(zmod(2), {2}));
  const auto l22 = enumerate_ideals(t22);
  const ExpansionFn p = delta_idealization(identity_delta(enumerate_ideals(zmod(2))), l22);
  CHECK(p.total());
}

TEST_CASE("amalgam expansion") {
  const FiniteRing z4 = zmod(4);
  const Amalgam am = amalgamate(z4, z4, RingHom::identity(z4), gen(z4, {2}));
  const auto lat = enumerate_ideals(am.carrier());
  const auto sub = subring_fA_plus_J(am);
  const auto sub_lat = enumerate_ideals(sub.ring);
  const auto la = enumerate_ideals(z4);
  const ExpansionFn bow_id = delta_amalgam(identity_delta(la), identity_delta(sub_lat), lat);
  const Ideal zero_j = amalgam_ideal_ij(am, zero_ideal(z4));
  CHECK(bow_id.eval(zero_j) == zero_j);
  const ExpansionFn bow_rad = delta_amalgam(radical_delta(la), radical_delta(sub_lat), lat);
  CHECK(bow_rad.eval(zero_j) == amalgam_ideal_ij(am, gen(z4, {2})));

  // K = (0) of f(A)+J with δ1 = id: {(a, f(a)+j) : f(a)+j = 0}.
  const Ideal kbar = amalgam_ideal_kbar(am, zero_ideal(sub.ring));
  if (bow_id.defined_at(kbar)) {
    const Ideal image = bow_id.eval(kbar);
    for (Index x : image.members()) CHECK(am.b_of(x) == 0);
  }
}

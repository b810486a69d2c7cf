#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;

namespace {

const CatalogContext& small_context() {
  static const CatalogContext ctx(Catalog::small(), 4);
  return ctx;
}

CatalogContext custom(const std::string& text) { return CatalogContext(Catalog::parse(text, "t")); }

}  // namespace

TEST_CASE("registry contents") {
  const auto list = list_theorems();
  CHECK(list.size() >= 24);
  std::set<std::string> ids;
  for (const auto& t : list) {
    CHECK(ids.insert(t.id).second);
    CHECK_FALSE(t.anchor.empty());
    CHECK(t.expected_false == (t.id.rfind("F-", 0) == 0));
  }
  for (const char* id : {"T-NIL", "T-SHIFT", "T-AM2", "T-AM5", "T-PROD2", "T-LOC", "F-W2C",
                         "F-EX35", "F-RMK45"}) {
    CHECK(is_registered(id));
  }
  CHECK_FALSE(is_registered("T-NOPE"));
  CHECK_THROWS_AS(verify_theorem("T-NOPE", small_context()), Error);
}

TEST_CASE("small catalog") {
  const Catalog c = Catalog::small();
  CHECK(c.rings.size() == 28);
  CHECK(c.rings.front() == "Z1");
  CHECK(c.rings.back() == "loc(Z12,{1,5,7,11})");
  CHECK(small_context().entries().size() == c.rings.size());
  const Catalog p = Catalog::parse("# comment\n Z4 \n\nZ2xZ2 # trailing\n", "x");
  CHECK(p.rings == std::vector<std::string>{"Z4", "Z2xZ2"});
  CHECK_THROWS_AS(Catalog::parse("# nothing\n", "x"), Error);
  CHECK_THROWS_AS(custom("Z4\nZ0\n"), Error);
  CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.txt"), Error);

  const std::string path = "catalog_test_tmp.txt";
  std::ofstream(path) << "Z8\nZ2xZ2\n";
  CHECK(Catalog::load(path).rings.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("worked instances") {
  // T-SHIFT: Z8, {0,4}, id, (3,1): 2 is unbreakable and (2+4)^3 = 0.
  const FiniteRing z8 = zmod(8);
  const auto lat = enumerate_ideals(z8);
  const Ideal i = testing::gen(z8, {4});
  const ExpansionFn id = identity_delta(lat);
  CHECK(classify_mn(i, {3, 1}, &id, true).holds);
  const auto u = unbreakable_zero_set(i, id, {3, 1});
  CHECK(std::find(u.begin(), u.end(), 2u) != u.end());
  CHECK(z8.pow(z8.add(2, 4), 3) == 0);

  // T-NIL: Z4, (0), id, (2,1) is weakly but not closed and (0) ⊆ Nil.
  const FiniteRing z4 = zmod(4);
  const ExpansionFn id4 = identity_delta(enumerate_ideals(z4));
  CHECK(classify_mn(zero_ideal(z4), {2, 1}, &id4, true).holds);
  CHECK_FALSE(classify_mn(zero_ideal(z4), {2, 1}, &id4, false).holds);
}

TEST_CASE("registered theorems on focused catalogs") {
  for (const char* id : {"T-SHIFT", "T-NIL", "T-3.7a", "T-COMP", "T-QUOT1", "T-INT"}) {
    CAPTURE(id);
    const TheoremReport r = verify_theorem(id, small_context());
    CHECK(r.counterexamples.empty());
    CHECK(r.hypothesis_hits >= 5);
    CHECK(r.as_expected());
  }
  const CatalogContext am = custom("amal(Z4,Z4,id,{2})\n");
  const TheoremReport r = verify_theorem("T-AM2", am);
  CHECK(r.counterexamples.empty());
  CHECK(r.hypothesis_hits + r.vacuous > 0);
}

TEST_CASE("known-false entries are refuted") {
  const TheoremReport w2c = verify_theorem("F-W2C", small_context());
  REQUIRE_FALSE(w2c.counterexamples.empty());
  const Counterexample& c = w2c.counterexamples.front();
  CHECK(c.ring == "Z4");
  CHECK(c.ideal == "{0}");
  CHECK(c.delta == "id");
  CHECK(c.m == 2);
  CHECK(c.n == 1);
  CHECK(c.witness == std::vector<Index>{2});
  CHECK(w2c.as_expected());

  const TheoremReport ex35 = verify_theorem("F-EX35", small_context());
  bool rad_z8 = false;
  for (const auto& x : ex35.counterexamples) {
    CHECK(x.delta == "rad");
    if (x.ring == "Z8" && x.m == 3 && x.n == 1) rad_z8 = x.detail == "2 ∈ √(0) in Z8";
  }
  CHECK(rad_z8);

  const TheoremReport rmk = verify_theorem("F-RMK45", small_context());
  REQUIRE(rmk.counterexamples.size() == 1);
  CHECK(rmk.counterexamples[0].delta == "bow(rad,rad)");
  CHECK(rmk.counterexamples[0].detail.rfind("2 ∈ √(0) in Z8", 0) == 0);
  CHECK(rmk.passes == 1);  // the δ = id instance behaves as claimed
}

TEST_CASE("counterexamples reproduce through classify") {
  const TheoremReport w2c = verify_theorem("F-W2C", small_context());
  for (const auto& c : w2c.counterexamples) {
    const FiniteRing r = parse_ring(c.ring);
    const auto lat = enumerate_ideals(r);
    const Ideal i = parse_ideal(c.ideal, r);
    const ExpansionFn d = parse_delta(c.delta, r, lat);
    CHECK(classify_mn(i, {c.m, c.n}, &d, true).holds);
    const Verdict v = classify_mn(i, {c.m, c.n}, &d, false);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == c.witness);
  }
}

TEST_CASE("product prediction matches direct classification") {
  std::size_t checked = 0;
  for (const auto& e : small_context().entries()) {
    if (!e.ring.is_product()) continue;
    const ProductInfo& info = e.ring.product_info();
    const auto l1 = enumerate_ideals(info.left), l2 = enumerate_ideals(info.right);
    for (std::size_t k : e.proper) {
      const Ideal& I = (*e.lattice)[k];
      std::vector<Index> a, b;
      for (Index x : I.members()) {
        a.push_back(info.left_of(x));
        b.push_back(info.right_of(x));
      }
      const Ideal j1 = ideal_closure(info.left, a), j2 = ideal_closure(info.right, b);
      for (const ExpansionFn& d1 : {identity_delta(l1), radical_delta(l1)}) {
        for (const ExpansionFn& d2 : {identity_delta(l2), radical_delta(l2)}) {
          const ExpansionFn d = delta_product(d1, d2, e.lattice);
          for (int m = 2; m <= 4; ++m) {
            for (int n = 1; n < m; ++n) {
              CHECK(classify_mn(I, {m, n}, &d, true).holds ==
                    product_prediction(j1, j2, d1, d2, {m, n}));
              ++checked;
            }
          }
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("fuzzing") {
  FuzzOptions o;
  o.seed = 1;
  o.trials = 400;
  const TheoremReport bad = fuzz(small_context(), "weakly => closed", o);
  REQUIRE_FALSE(bad.counterexamples.empty());
  CHECK(bad.counterexamples.front().ring_size <= 4);
  const TheoremReport nil = fuzz(small_context(), "weakly & !closed => in_nil", o);
  CHECK(nil.counterexamples.empty());
  CHECK(nil.hypothesis_hits > 0);
  o.trials = 0;
  const TheoremReport empty = fuzz(small_context(), "weakly => closed", o);
  CHECK(empty.instances == 0);
  CHECK(empty.counterexamples.empty());
  CHECK_THROWS_AS(fuzz(small_context(), "weakly =>", o), Error);
}

TEST_CASE("reports do not depend on the worker count") {
  const CatalogContext one(Catalog::small(), 1);
  const std::vector<std::string> ids{"T-3.2a", "T-LOC", "T-AM1", "T-PROD2", "F-W2C"};
  const VerifyHeader h{"small", 7, 4, 3, 5};
  const std::string a =
      render_theorem_reports(h, verify_theorems(ids, one, VerifyOptions{1}), Format::json);
  const std::string b =
      render_theorem_reports(h, verify_theorems(ids, small_context(), VerifyOptions{4}), Format::json);
  CHECK(a == b);

  FuzzOptions f1{5, 300, 1}, f4{5, 300, 4};
  CHECK(render_fuzz(h, fuzz(one, "closed => weakly_semi", f1), Format::json) ==
        render_fuzz(h, fuzz(small_context(), "closed => weakly_semi", f4), Format::json));
}

TEST_CASE("parameter ranges are validated") {
  Catalog c = Catalog::parse("Z4\n", "x");
  c.max_m = 1;
  CHECK_THROWS_AS(CatalogContext{c}, Error);
  c.max_m = 4;
  c.absorbing_max_n = 4;
  CHECK_THROWS_AS(CatalogContext{c}, Error);
}

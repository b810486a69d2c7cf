#include <doctest.h>

#include "helpers.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"

using namespace ringlab;

namespace {

Error parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::parse_error, "unreachable");
}

}  // namespace

TEST_CASE("ring expressions") {
  CHECK(parse_ring("Z8") == zmod(8));
  CHECK(parse_ring("triv(Z2, M[2,2])").size() == 8);
  CHECK(parse_ring(" Z2 x Z3 ").size() == 6);
  CHECK(parse_ring("(Z2xZ2)xZ3").size() == 12);
  CHECK(parse_ring("quot(Z16,{8})").size() == 8);
  CHECK(parse_ring("loc(Z12,{1,5,7,11})").size() == 12);
  CHECK(parse_ring("dup(Z4,{2})").size() == 8);
  CHECK(parse_ring("amal(Z4,Z4,id,{2})").size() == 8);
  CHECK(parse_ring("amal(Z8,Z4,map[0,1,2,3,0,1,2,3],{2})").size() == 16);
  CHECK(parse_ring("sub(Z2xZ2,{})").size() == 2);
}

TEST_CASE("ring expression errors carry positions") {
  const Error z0 = parse_error_of([] { parse_ring("Z0"); });
  CHECK(z0.kind() == ErrorKind::invalid_modulus);
  CHECK(z0.position() == std::optional<std::size_t>(1));

  const Error bad = parse_error_of([] { parse_ring("Z2xQ3"); });
  CHECK(bad.kind() == ErrorKind::parse_error);
  CHECK(bad.position() == std::optional<std::size_t>(4));

  CHECK(parse_error_of([] { parse_ring("triv(Z4,M[3])"); }).kind() == ErrorKind::invalid_module);
  CHECK(parse_error_of([] { parse_ring("amal(Z2,Z4,id,{0})"); }).kind() == ErrorKind::hom_invalid);
  CHECK(parse_error_of([] { parse_ring("amal(Z12,Z5,canon,{0})"); }).kind() ==
        ErrorKind::hom_invalid);
  CHECK(parse_error_of([] { parse_ring("amal(Z2,Z2,inj,{0})"); }).kind() == ErrorKind::hom_invalid);
  CHECK(parse_error_of([] { parse_ring("loc(Z8,{2})"); }).kind() == ErrorKind::invalid_mult_set);
  CHECK(parse_error_of([] { parse_ring("Z8 trailing"); }).kind() == ErrorKind::parse_error);
  CHECK(parse_error_of([] { parse_ring("quot(Z8,{9})"); }).position().has_value());
}

TEST_CASE("printing and re-parsing gives the same ring") {
  for (const char* expr :
       {"Z8", "Z2xZ3", "Z2 x (Z2 x Z2)", "triv(Z2, M[2,2])", "quot(Z12,{4})", "loc(Z12,{3})",
        "amal(Z4,Z4,id,{2})", "dup(Z8,{4})", "amal(Z8,Z4,canon,{2})",
        "amal(Z2,triv(Z2,M[2]),inj,{1})", "sub(Z4xZ2,{})", "quot(Z2xZ4,{1})"}) {
    CAPTURE(expr);
    const FiniteRing r = parse_ring(expr);
    const FiniteRing again = parse_ring(r.expr());
    CHECK(again.expr() == r.expr());
    REQUIRE(again.size() == r.size());
    for (Index a = 0; a < r.size(); ++a) {
      CHECK(again.label(a) == r.label(a));
      for (Index b = 0; b < r.size(); ++b) {
        CHECK(again.add(a, b) == r.add(a, b));
        CHECK(again.mul(a, b) == r.mul(a, b));
      }
    }
  }
}

TEST_CASE("ideals from generator lists") {
  const FiniteRing z12 = zmod(12);
  CHECK(parse_ideal("{4}", z12) == testing::gen(z12, {4}));
  CHECK(parse_ideal("{ }", z12).is_zero());
  CHECK_THROWS_AS(parse_ideal("{12}", z12), Error);
  CHECK_THROWS_AS(parse_ideal("4", z12), Error);
}

TEST_CASE("expansion expressions") {
  const FiniteRing z8 = zmod(8);
  CHECK(parse_delta("rad", z8).label() == "rad");
  CHECK(parse_delta("comp(rad,id)", zmod(12)).label() == "comp(rad,id)");
  const Error e = parse_error_of([&] { parse_delta("prod(rad,id)", z8); });
  CHECK(e.kind() == ErrorKind::shape_mismatch);
  CHECK(parse_error_of([&] { parse_delta("q(id)", z8); }).kind() == ErrorKind::shape_mismatch);
  CHECK(parse_error_of([&] { parse_delta("plus(id)", z8); }).kind() == ErrorKind::shape_mismatch);
  CHECK(parse_error_of([&] { parse_delta("bow(id,id)", z8); }).kind() == ErrorKind::shape_mismatch);
  CHECK(parse_error_of([&] { parse_delta("bogus", z8); }).kind() == ErrorKind::parse_error);

  const FiniteRing p = parse_ring("Z4xZ2");
  CHECK(parse_delta("prod(rad,id)", p).label() == "prod(rad,id)");
  CHECK(parse_delta("q(rad)", parse_ring("quot(Z12,{4})")).label() == "q(rad)");
  CHECK(parse_delta("plus(rad)", parse_ring("triv(Z4,M[4])")).label() == "plus(rad)");
  CHECK(parse_delta("bow(rad,id)", parse_ring("amal(Z4,Z4,id,{2})")).label() == "bow(rad,id)");
  CHECK(parse_delta("addk({4})", zmod(12)).label() == "addk({4})");
}

TEST_CASE("expansion labels parse back to the same map") {
  for (const auto& [ring, expr] : std::vector<std::pair<const char*, const char*>>{
           {"Z12", "comp(rad,addk({4}))"},
           {"Z4xZ2", "prod(comp(rad,id),addk({}))"},
           {"triv(Z4,M[4])", "plus(rad)"},
           {"quot(Z16,{8})", "q(addk({2}))"},
           {"amal(Z4,Z4,id,{2})", "bow(rad,rad)"}}) {
    const FiniteRing r = parse_ring(ring);
    const ExpansionFn d = parse_delta(expr, r);
    const ExpansionFn again = parse_delta(d.label(), r);
    CHECK(again.table() == d.table());
  }
}

TEST_CASE("conjectures") {
  const ConjecturePtr c = parse_conjecture("weakly & !closed => in_nil");
  CHECK(c->op == Conjecture::Op::implication);
  CHECK(to_string(*c) == "((weakly & !closed) => in_nil)");
  CHECK(to_string(*parse_conjecture(to_string(*c))) == to_string(*c));
  CHECK_THROWS_AS(parse_conjecture("weakly =>"), Error);
  CHECK_THROWS_AS(parse_conjecture("nonsense"), Error);
  CHECK_THROWS_AS(parse_conjecture("(weakly"), Error);
  for (const auto& atom : conjecture_atoms()) CHECK_NOTHROW(parse_conjecture(atom));
}

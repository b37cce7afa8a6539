#include "monalg/coeffring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace monalg;

TEST_CASE("spec parse and print round trip") {
  for (const char* s : {"Z", "Q", "Z/4", "Z/6", "Dual(Q)", "Dual(Z/2)", "Dual(Dual(Z/2))"}) {
    RingSpec spec = RingSpec::parse(s);
    REQUIRE(spec.to_string() == s);
  }
  REQUIRE_THROWS_AS(RingSpec::parse("Z/1"), input_error);
}

TEST_CASE("arithmetic canonical forms") {
  RingSpec z4 = RingSpec::zmod(4), z6 = RingSpec::zmod(6), dq = RingSpec::dual(RingSpec::rationals());
  REQUIRE((RingElem::from_int(z4, 2) + RingElem::from_int(z4, 2)).is_zero());
  REQUIRE((RingElem::from_int(z6, 2) * RingElem::from_int(z6, 3)).is_zero());
  RingElem e1 = RingElem::parse(dq, "1+eps"), e2 = RingElem::parse(dq, "1-eps");
  REQUIRE((e1 * e2).is_one());
}

TEST_CASE("element literals") {
  RingSpec dq = RingSpec::dual(RingSpec::rationals());
  REQUIRE(RingElem::parse(dq, "eps").to_string() == "eps");
  REQUIRE(RingElem::parse(dq, "1+2*eps").to_string() == "1+2*eps");
  REQUIRE(RingElem::parse(dq, "1-eps").to_string() == "1-eps");
  REQUIRE(RingElem::parse(dq, "1/2+1/3*eps").to_string() == "1/2+1/3*eps");
  REQUIRE(RingElem::parse(RingSpec::rationals(), "-3/4").to_string() == "-3/4");
  REQUIRE(RingElem::parse(RingSpec::zmod(4), "7").to_string() == "3");
}

TEST_CASE("nilpotency with index") {
  RingSpec z4 = RingSpec::zmod(4), z6 = RingSpec::zmod(6), dq = RingSpec::dual(RingSpec::rationals());
  auto i = RingElem::from_int(z4, 2).nilpotency_index();
  REQUIRE(i);
  REQUIRE(*i == 2);
  REQUIRE_FALSE(RingElem::from_int(z6, 2).nilpotency_index());
  auto j = RingElem::parse(dq, "eps").nilpotency_index();
  REQUIRE(j);
  REQUIRE(*j == 2);
  REQUIRE(RingElem::zero(z4).nilpotency_index() == 1u);
}

TEST_CASE("units and inverses") {
  RingSpec z4 = RingSpec::zmod(4), dq = RingSpec::dual(RingSpec::rationals());
  RingElem three = RingElem::from_int(z4, 3);
  REQUIRE(three.is_unit());
  REQUIRE(three.inverse() == three);
  REQUIRE_FALSE(RingElem::from_int(z4, 2).is_unit());
  RingElem u = RingElem::parse(dq, "1+eps");
  REQUIRE(u.inverse() == RingElem::parse(dq, "1-eps"));
  REQUIRE_THROWS_AS(RingElem::from_int(z4, 2).inverse(), input_error);
}

TEST_CASE("exhaustive unit round trip in finite specs") {
  for (const char* s : {"Z/4", "Z/6", "Z/8", "Dual(Z/2)", "Dual(Z/4)"}) {
    RingSpec spec = RingSpec::parse(s);
    for (const RingElem& x : enumerate_ring(spec)) {
      if (x.is_unit()) {
        REQUIRE((x * x.inverse()).is_one());
      }
    }
  }
}

TEST_CASE("brute-force nilpotence agrees with the criterion in finite specs") {
  for (const char* s : {"Z/4", "Z/6", "Z/8", "Z/12", "Dual(Z/2)", "Dual(Z/4)"}) {
    RingSpec spec = RingSpec::parse(s);
    size_t card = static_cast<size_t>(spec.cardinality());
    for (const RingElem& x : enumerate_ring(spec)) {
      bool brute = false;
      RingElem p = RingElem::one(spec);
      for (size_t n = 1; n <= card && !brute; ++n) {
        p = p * x;
        if (p.is_zero()) brute = true;
      }
      REQUIRE(brute == x.is_nilpotent());
      if (auto idx = x.nilpotency_index()) {
        REQUIRE(x.pow(*idx).is_zero());
        if (*idx > 1) REQUIRE_FALSE(x.pow(*idx - 1).is_zero());
      }
    }
  }
}

TEST_CASE("nil generators and reducedness") {
  RingSpec z4 = RingSpec::zmod(4), z6 = RingSpec::zmod(6);
  auto g4 = nil_generators(z4);
  REQUIRE(g4.size() == 1);
  REQUIRE(g4[0] == RingElem::from_int(z4, 2));
  REQUIRE_FALSE(z4.is_reduced());

  auto g6 = nil_generators(z6);
  REQUIRE(g6.size() == 1);
  REQUIRE(g6[0].is_zero());
  REQUIRE(z6.is_reduced());

  RingSpec dz2 = RingSpec::dual(RingSpec::zmod(2));
  REQUIRE(enumerate_ring(dz2).size() == 4);
  REQUIRE_FALSE(dz2.is_reduced());
  REQUIRE_THROWS_AS(enumerate_ring(RingSpec::rationals()), capability_error);
}

TEST_CASE("coefficient extensions embed only along dual layers") {
  RingSpec f2 = RingSpec::zmod(2);
  CoeffExtension e(f2, RingSpec::dual(RingSpec::dual(f2)));
  RingElem x = e.embed(RingElem::one(f2));
  REQUIRE(e.contains(x));
  REQUIRE(e.preimage(x) == RingElem::one(f2));
  REQUIRE_FALSE(e.contains(RingElem::parse(e.super(), "eps")));
  // Z/2 does not embed into Z/4: rejected at construction
  REQUIRE_THROWS_AS(CoeffExtension(f2, RingSpec::zmod(4)), input_error);
}

TEST_CASE("reduction mod nil") {
  REQUIRE(spec_mod_nil(RingSpec::zmod(4)) == RingSpec::zmod(2));
  REQUIRE(spec_mod_nil(RingSpec::dual(RingSpec::rationals())) == RingSpec::rationals());
  RingElem x = RingElem::parse(RingSpec::zmod(4), "3");
  REQUIRE(reduce_mod_nil(x) == RingElem::from_int(RingSpec::zmod(2), 1));
}

TEST_CASE("coordinates round trip") {
  RingSpec dz4 = RingSpec::dual(RingSpec::zmod(4));
  REQUIRE(dz4.coord_dim() == 2);
  REQUIRE(dz4.coord_moduli() == Vec{4, 4});
  for (const RingElem& x : enumerate_ring(dz4))
    REQUIRE(RingElem::from_coords(dz4, x.coords()) == x);
}

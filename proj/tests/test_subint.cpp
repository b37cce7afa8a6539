#include "monalg/subint.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace monalg;

namespace {

// Z[2t, t^2] inside Z[t]
MonomialSubring z2t_t2(const Int& d = 12) {
  HodgeAlgebra amb(RingSpec::integers(), AffineMonoid(1, {Vec{1}}));
  std::vector<SubringGenerator> gens{{RingElem::from_int(RingSpec::integers(), 2), Vec{1}},
                                     {RingElem::one(RingSpec::integers()), Vec{2}}};
  return MonomialSubring(amb, gens, std::nullopt, d);
}

// F_p[x^p] inside F_p[x]
MonomialSubring fp_xp(int p, const Int& d = 12) {
  RingSpec fp = RingSpec::zmod(p);
  HodgeAlgebra amb(fp, AffineMonoid(1, {Vec{1}}));
  std::vector<SubringGenerator> gens{{RingElem::one(fp), Vec{p}}};
  return MonomialSubring(amb, gens, CoeffExtension::trivial(fp), d);
}

AlgebraElement mono1(const HodgeAlgebra& a, int c, int e) {
  return AlgebraElement::monomial(a, RingElem::from_int(a.coeff(), c), Vec{e});
}

}  // namespace

TEST_CASE("coefficient table of Z[2t,t^2]") {
  auto a = z2t_t2();
  const HodgeAlgebra& amb = a.ambient();
  REQUIRE(a.contains(mono1(amb, 3, 2)) == Tri::yes);   // 3t^2
  REQUIRE(a.contains(mono1(amb, 1, 3)) == Tri::no);    // t^3: odd-power coefficients are 2Z
  REQUIRE(a.contains(mono1(amb, 2, 3)) == Tri::yes);   // 2t^3 = 2t * t^2
  REQUIRE(a.contains(mono1(amb, 1, 13)) == Tri::unknown);  // beyond the table
  REQUIRE(a.contains(AlgebraElement::one(amb)) == Tri::yes);
  a.verify_table_consistency();
}

TEST_CASE("coefficient table of F_2[x^2]") {
  auto a = fp_xp(2);
  const HodgeAlgebra& amb = a.ambient();
  REQUIRE(a.contains(mono1(amb, 1, 2)) == Tri::yes);
  REQUIRE(a.contains(mono1(amb, 1, 3)) == Tri::no);
  REQUIRE(a.contains(mono1(amb, 1, 4)) == Tri::yes);
  a.verify_table_consistency();
}

TEST_CASE("elementary subintegral element checks") {
  // Q inside Dual(Q): eps is elementary (eps^2 = eps^3 = 0)
  RingSpec dq = RingSpec::dual(RingSpec::rationals());
  HodgeAlgebra amb(dq, AffineMonoid::trivial(1));
  MonomialSubring q(amb, {}, CoeffExtension(RingSpec::rationals(), dq), 4);
  AlgebraElement eps = AlgebraElement::constant(amb, RingElem::parse(dq, "eps"));
  REQUIRE(is_elementary_subintegral_element(q, eps) == Tri::yes);

  auto zt = z2t_t2();
  REQUIRE(is_elementary_subintegral_element(zt, mono1(zt.ambient(), 1, 1)) == Tri::no);  // t^3 not in A

  auto f2 = fp_xp(2);
  REQUIRE(is_elementary_subintegral_element(f2, mono1(f2.ambient(), 1, 1)) == Tri::no);  // x^3 not in A
}

TEST_CASE("weak witness over F_2[x^2]") {
  auto a = fp_xp(2);
  AlgebraElement x = mono1(a.ambient(), 1, 1);
  auto res = is_weakly_subintegral_element(a, x, 4, 12);
  REQUIRE(res.witness);
  REQUIRE(res.witness->p == 1);
  // the found witness re-verified internally; check it is c_1 = x
  REQUIRE(res.witness->cs[0] == x);
}

TEST_CASE("weak witness over Z[2t,t^2]") {
  auto a = z2t_t2();
  AlgebraElement t = mono1(a.ambient(), 1, 1);
  auto res = is_weakly_subintegral_element(a, t, 4, 12);
  REQUIRE(res.witness);
  REQUIRE(res.witness->p == 1);
  // c_1 = c * t with odd c
  auto& c1 = res.witness->cs[0];
  REQUIRE(c1.terms().size() == 1);
  REQUIRE(c1.terms().begin()->first == Vec{1});
  REQUIRE(c1.terms().begin()->second.int_value() % 2 != 0);
}

TEST_CASE("weak witness trivial when b is already inside") {
  auto a = z2t_t2();
  auto res = is_weakly_subintegral_element(a, mono1(a.ambient(), 1, 2), 4, 12);
  REQUIRE(res.witness);
  REQUIRE(res.witness->p == 0);
}

TEST_CASE("no weak witness for x over Z[x^2]") {
  RingSpec z = RingSpec::integers();
  HodgeAlgebra amb(z, AffineMonoid(1, {Vec{1}}));
  MonomialSubring a(amb, {{RingElem::one(z), Vec{2}}}, std::nullopt, 12);
  auto res = is_weakly_subintegral_element(a, mono1(amb, 1, 1), 3, 12);
  REQUIRE_FALSE(res.witness);
}

TEST_CASE("monic-form verifier") {
  // over F_2[x^2]: b = x with a_1 = 0, a_2 = x^2, a_3 = 0 satisfies the
  // monic equations for n = 2, 3 (p = 1).
  auto a = fp_xp(2);
  const HodgeAlgebra& amb = a.ambient();
  AlgebraElement x = mono1(amb, 1, 1);
  std::vector<AlgebraElement> as{AlgebraElement::zero(amb), mono1(amb, 1, 2), AlgebraElement::zero(amb)};
  REQUIRE(verify_monic_weak_equations(a, x, as));
  std::vector<AlgebraElement> bad{AlgebraElement::zero(amb), AlgebraElement::zero(amb), AlgebraElement::zero(amb)};
  REQUIRE_FALSE(verify_monic_weak_equations(a, x, bad));
}

TEST_CASE("ring closure modes separate the characteristic-p example") {
  auto a = fp_xp(2, 8);
  AlgebraElement x = mono1(a.ambient(), 1, 1);
  auto weak = subintegral_closure_ring(a, 4, ClosureMode::weak);
  REQUIRE(weak.closure.contains(x) == Tri::yes);  // 2x = 0, x^2 in A
  auto subi = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
  REQUIRE(subi.closure.contains(x) == Tri::no);
  REQUIRE(subi.adjoined.empty());
}

TEST_CASE("elementary closure adjoins t for Q[t^2,t^3]") {
  RingSpec q = RingSpec::rationals();
  HodgeAlgebra amb(q, AffineMonoid(1, {Vec{1}}));
  MonomialSubring a(amb, {{RingElem::one(q), Vec{2}}, {RingElem::one(q), Vec{3}}},
                    CoeffExtension::trivial(q), 8);
  auto clo = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
  REQUIRE(clo.closure.contains(mono1(amb, 1, 1)) == Tri::yes);
}

TEST_CASE("closure of Z[2t,t^2] is itself") {
  auto a = z2t_t2(8);
  auto clo = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
  REQUIRE(clo.adjoined.empty());
  REQUIRE(clo.closure.contains(mono1(a.ambient(), 1, 1)) == Tri::no);
}

TEST_CASE("closure monotone and idempotent") {
  auto a = fp_xp(2, 8);
  auto weak = subintegral_closure_ring(a, 4, ClosureMode::weak);
  auto sub = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
  // subintegral closure is contained in weak closure
  for (const AlgebraElement& b : sub.adjoined) REQUIRE(weak.closure.contains(b) == Tri::yes);
  auto weak2 = subintegral_closure_ring(weak.closure, 4, ClosureMode::weak);
  REQUIRE(weak2.adjoined.empty());
}

TEST_CASE("elementary implies weak with p <= 1") {
  RingSpec q = RingSpec::rationals();
  HodgeAlgebra amb(q, AffineMonoid(1, {Vec{1}}));
  MonomialSubring a(amb, {{RingElem::one(q), Vec{2}}, {RingElem::one(q), Vec{3}}},
                    CoeffExtension::trivial(q), 12);
  AlgebraElement t = mono1(amb, 1, 1);
  REQUIRE(is_elementary_subintegral_element(a, t) == Tri::yes);
  auto res = is_weakly_subintegral_element(a, t, 4, 12);
  REQUIRE(res.witness);
  REQUIRE(res.witness->p <= 1);
}

TEST_CASE("thm35 consistency over Z and divergence over F_2") {
  AffineMonoid m2x(1, {Vec{2}}), full(1, {Vec{1}});
  auto repz = check_thm35(RingSpec::integers(), m2x, full, 64, 4, 12);
  REQUIRE(repz.monoid_verdict.status == SubintStatus::no);
  REQUIRE_FALSE(repz.all_weak);
  REQUIRE_FALSE(repz.char_p_divergence);

  auto repp = check_thm35(RingSpec::zmod(2), m2x, full, 64, 4, 12);
  REQUIRE(repp.monoid_verdict.status == SubintStatus::no);
  REQUIRE(repp.all_weak);
  REQUIRE(repp.char_p_divergence);

  AffineMonoid m23(1, {Vec{2}, Vec{3}});
  auto repy = check_thm35(RingSpec::integers(), m23, full, 64, 4, 12);
  REQUIRE(repy.monoid_verdict.status == SubintStatus::yes);
  REQUIRE(repy.all_weak);

  auto repeq = check_thm35(RingSpec::integers(), m23, m23, 64, 4, 12);
  REQUIRE(repeq.monoid_verdict.status == SubintStatus::yes);
  REQUIRE(repeq.all_weak);
}

TEST_CASE("witness modules over dual numbers") {
  RingSpec dq = RingSpec::dual(RingSpec::rationals());
  HodgeAlgebra amb(dq, AffineMonoid(1, {Vec{1}}));
  MonomialSubring q(amb, {{RingElem::one(dq), Vec{1}}}, CoeffExtension(RingSpec::rationals(), dq), 12);
  AlgebraElement eps = AlgebraElement::constant(amb, RingElem::parse(dq, "eps"));
  auto wm = witness_modules(q, eps, Vec{1}, WitnessVariant::pm);
  REQUIRE(wm.j_gens.size() == 2);
  REQUIRE(wm.j_gens[0].is_zero());  // eps^2 = 0
  auto wc = witness_modules(q, eps, std::nullopt, WitnessVariant::cyclotomic);
  REQUIRE(wc.certificate.size() == 2);
}

TEST_CASE("witness modules over Z/4 constants") {
  RingSpec z4 = RingSpec::zmod(4);
  AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
  HodgeAlgebra amb(z4, quad, MonomialIdeal(quad, {Vec{1, 1}}));
  MonomialSubring a(amb, {{RingElem::one(z4), Vec{1, 0}}, {RingElem::one(z4), Vec{0, 1}}},
                    CoeffExtension::trivial(z4), 10);
  AlgebraElement b = AlgebraElement::constant(amb, RingElem::from_int(z4, 2));
  auto wm = witness_modules(a, b, Vec{1, 0}, WitnessVariant::pm);
  REQUIRE(wm.j_gens[0].is_zero());  // 4 = 0
  REQUIRE_THROWS_AS(witness_modules(a, b, Vec{1, 1}, WitnessVariant::pm), input_error);  // m in ideal
}

TEST_CASE("weak solver agrees with exhaustive search over finite coefficients") {
  // Enumerate every candidate c_1 with bounded support and compare the
  // resulting feasibility with the linear solver's verdict at p = 1.
  for (int p : {2, 3}) {
    for (int power : {p, 4}) {
      RingSpec fp = RingSpec::zmod(p);
      HodgeAlgebra amb(fp, AffineMonoid(1, {Vec{1}}));
      MonomialSubring a(amb, {{RingElem::one(fp), Vec{power}}}, CoeffExtension::trivial(fp), 12);
      AlgebraElement b = mono1(amb, 1, 1);
      if (a.contains(b) == Tri::yes) continue;

      std::vector<Vec> support = amb.carrier_up_to(4);
      std::vector<AlgebraElement> candidates{AlgebraElement::zero(amb)};
      for (const Vec& m : support) {
        std::vector<AlgebraElement> next;
        for (const AlgebraElement& e : candidates)
          for (const RingElem& c : enumerate_ring(fp))
            next.push_back(c.is_zero() ? e : e + AlgebraElement::monomial(amb, c, m));
        candidates = std::move(next);
      }
      bool exhaustive = false;
      for (const AlgebraElement& c1 : candidates) {
        bool ok = true;
        for (unsigned n = 1; n <= 3 && ok; ++n) {
          AlgebraElement t =
              b.pow(n) + c1.scale(RingElem::from_int(fp, binomial(Int(n), Int(1)))) * b.pow(n - 1);
          ok = a.contains(t) == Tri::yes;
        }
        if (ok) {
          exhaustive = true;
          break;
        }
      }
      auto solved = is_weakly_subintegral_element(a, b, 1, 12);
      bool solver = solved.witness.has_value() && solved.witness->p == 1;
      INFO("p=" << p << " power=" << power);
      REQUIRE(exhaustive == solver);
    }
  }
}

TEST_CASE("module_contains basic cases") {
  RingSpec dq = RingSpec::dual(RingSpec::rationals());
  HodgeAlgebra amb(dq, AffineMonoid(1, {Vec{1}}));
  MonomialSubring q(amb, {}, CoeffExtension(RingSpec::rationals(), dq), 6);
  AlgebraElement one = AlgebraElement::one(amb);
  AlgebraElement eps_x = AlgebraElement::monomial(amb, RingElem::parse(dq, "eps"), Vec{1});
  AlgebraElement g = one - eps_x;
  auto r = module_contains(q, {g}, g, 6);
  REQUIRE(r.found);
  // (1 - eps x)(1 + eps x) = 1, so 1 is in the module generated by both
  AlgebraElement h = one + eps_x;
  auto r2 = module_contains(q, {g * h}, one, 6);
  REQUIRE(r2.found);
  // t^3 is not in the module generated by 2t and t^2 over Z[2t, t^2]
  auto zt = z2t_t2(8);
  auto r3 = module_contains(zt, {mono1(zt.ambient(), 2, 1), mono1(zt.ambient(), 1, 2)},
                            mono1(zt.ambient(), 1, 3), 6);
  REQUIRE_FALSE(r3.found);
  // but 2 t^3 = (t^2) * (2t) is
  auto r4 = module_contains(zt, {mono1(zt.ambient(), 2, 1), mono1(zt.ambient(), 1, 2)},
                            mono1(zt.ambient(), 2, 3), 6);
  REQUIRE(r4.found);
}

// Named verification suites: the acceptance checks of the library, runnable
// from the acceptance binary and from the CLI. Every case is exact; random
// instances are drawn from a fixed-seed generator so runs are reproducible.
#pragma once

#include "monalg/classgroup.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace monalg::verify {

struct CaseResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

template <typename F>
CaseResult run_case(int id, const std::string& title, F&& body) {
  CaseResult r;
  r.id = id;
  r.title = title;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string detail = body();
    r.pass = true;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace detail

// 1. Binomial determinant: closed formula vs fraction-free elimination.
inline CaseResult binom_det_suite(uint64_t seed) {
  return detail::run_case(1, "binomial determinant: formula == elimination, 1000 random tuples", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> plen(1, 7), val(1, 30);
    for (int iter = 0; iter < 1000; ++iter) {
      std::set<int> vals;
      int len = plen(rng);
      while (static_cast<int>(vals.size()) < len) vals.insert(val(rng));
      std::vector<Int> a(vals.begin(), vals.end());
      Int d = binom_det(a);  // asserts both routes agree
      detail::check(d > 0, "determinant not positive");
    }
    return std::string("1000 tuples, both routes agree");
  });
}

// 2. Golden subintegrality verdicts with the Frobenius threshold.
inline CaseResult frobenius_golden_suite() {
  return detail::run_case(2, "subintegrality golden cases: <2,3> yes with threshold 2, <2> no", [&] {
    AffineMonoid m23(1, {Vec{2}, Vec{3}}), m2(1, {Vec{2}}), full(1, {Vec{1}});
    auto yes = is_subintegral_extension(m23, full, 64);
    detail::check(yes.status == SubintStatus::yes, "<2,3> in <1> must be subintegral");
    detail::check(yes.witnesses.size() == 1 && yes.witnesses[0].j1 == 2 && yes.witnesses[0].j2 == 3,
                  "witness pair must be (2,3)");
    detail::check(yes.witnesses[0].threshold == 2, "threshold must be 2");
    auto no = is_subintegral_extension(m2, full, 64);
    detail::check(no.status == SubintStatus::no && no.no_gcd == 2, "<2> in <1> must fail with gcd 2");
    return std::string("witness (2,3), threshold 2; structural gcd 2 rejection");
  });
}

// 3. Fixpoint closure vs cofiniteness filter on random extensions.
inline CaseResult closure_oracle_suite(uint64_t seed) {
  return detail::run_case(3, "closure oracle agreement on 50 random extensions", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> g(2, 7), cnt(1, 3), mode(0, 2), pick(0, 2), combo(1, 2);
    int done = 0;
    while (done < 50) {
      if (mode(rng) < 2) {
        // numerical semigroup inside <1>
        std::set<int> gens;
        int n = cnt(rng);
        for (int i = 0; i < n; ++i) gens.insert(g(rng));
        std::vector<Vec> gv;
        for (int x : gens) gv.push_back(Vec{Int(x)});
        AffineMonoid m(1, gv), full(1, {Vec{1}});
        subintegral_closure(m, full, 12, 64);  // internal fixpoint == filter assert
      } else {
        // 2-d: M generated by random sums of N-generators
        AffineMonoid n2 = pick(rng) ? AffineMonoid(2, {Vec{1, 0}, Vec{0, 1}})
                                    : AffineMonoid(2, {Vec{1, 0}, Vec{1, 1}, Vec{0, 1}});
        std::vector<Vec> mg;
        int k = 2 + cnt(rng);
        for (int i = 0; i < k; ++i) {
          Vec v = zero_vec(2);
          int parts = combo(rng);
          for (int j = 0; j <= parts; ++j) {
            const auto& ng = n2.generators();
            v = vec_add(v, ng[static_cast<size_t>(pick(rng)) % ng.size()]);
          }
          mg.push_back(v);
        }
        AffineMonoid m(2, mg);
        subintegral_closure(m, n2, 10, 64);
      }
      ++done;
    }
    return std::string("50 closures, element-for-element agreement");
  });
}

// 4. The characteristic-p example: weak witness, closure exclusion, divergence.
inline CaseResult char_p_example_suite() {
  return detail::run_case(4, "F_2[x^2] in F_2[x]: weak yes, subintegral no, divergence flagged", [&] {
    RingSpec f2 = RingSpec::zmod(2);
    HodgeAlgebra amb(f2, AffineMonoid(1, {Vec{1}}));
    MonomialSubring a(amb, {{RingElem::one(f2), Vec{2}}}, CoeffExtension::trivial(f2), 12);
    AlgebraElement x = AlgebraElement::monomial(amb, RingElem::one(f2), Vec{1});
    auto weak = is_weakly_subintegral_element(a, x, 4, 12);
    detail::check(weak.witness.has_value(), "weak solver must find a witness");
    auto clo = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
    detail::check(clo.closure.contains(x) == Tri::no, "subintegral closure must exclude x");
    auto rep = check_thm35(f2, AffineMonoid(1, {Vec{2}}), AffineMonoid(1, {Vec{1}}), 64, 4, 12);
    detail::check(rep.char_p_divergence, "characteristic-p divergence must be flagged");
    return std::string("witness p=" + std::to_string(weak.witness->p) + ", divergence flagged");
  });
}

// 5. Z[2t,t^2] inside Z[t].
inline CaseResult z2t_example_suite() {
  return detail::run_case(5, "Z[2t,t^2] in Z[t]: weak witness p=1, not elementary, closed", [&] {
    RingSpec z = RingSpec::integers();
    HodgeAlgebra amb(z, AffineMonoid(1, {Vec{1}}));
    MonomialSubring a(amb, {{RingElem::from_int(z, 2), Vec{1}}, {RingElem::one(z), Vec{2}}},
                      std::nullopt, 12);
    AlgebraElement t = AlgebraElement::monomial(amb, RingElem::one(z), Vec{1});
    auto weak = is_weakly_subintegral_element(a, t, 4, 12);
    detail::check(weak.witness.has_value() && weak.witness->p == 1, "weak witness with p=1 expected");
    detail::check(is_elementary_subintegral_element(a, t) == Tri::no, "t^3 outside A: not elementary");
    auto clo = subintegral_closure_ring(a, 4, ClosureMode::subintegral);
    detail::check(clo.adjoined.empty(), "bounded subintegral closure must equal A");
    return std::string("weak witness p=1, closure = A");
  });
}

namespace detail {

struct SweepInstance {
  RingSpec spec;
  AffineMonoid monoid;
  MonomialIdeal ideal;
  Int support_slab;
  std::string name;
};

inline std::vector<SweepInstance> nil_sweep_instances(const std::vector<std::string>& specs) {
  AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
  AffineMonoid num(1, {Vec{2}, Vec{3}});
  std::vector<SweepInstance> out;
  for (const std::string& s : specs) {
    RingSpec spec = RingSpec::parse(s);
    out.push_back({spec, quad, MonomialIdeal::empty(quad), 2, s + "[N^2]"});
    out.push_back({spec, quad, MonomialIdeal(quad, {Vec{1, 1}}), 2, s + "[N^2]/(xy)"});
    out.push_back({spec, quad, MonomialIdeal(quad, {Vec{1, 0}, Vec{0, 1}}), 2, s + "[N^2]/max"});
    out.push_back({spec, num, MonomialIdeal::empty(num), 5, s + "[<2,3>]"});
    // the only proper nonempty radical ideal of a numerical semigroup is the
    // maximal ideal, so it stands in for the (xy) analogue as well
    out.push_back({spec, num, MonomialIdeal(num, {Vec{2}, Vec{3}}), 5, s + "[<2,3>]/max"});
  }
  return out;
}

template <typename Fn>
void sweep_elements(const HodgeAlgebra& alg, const Int& slab, size_t max_support, Fn&& fn) {
  std::vector<Vec> carrier = alg.carrier_up_to(slab);
  std::vector<RingElem> coeffs;
  for (const RingElem& c : enumerate_ring(alg.coeff()))
    if (!c.is_zero()) coeffs.push_back(c);
  std::vector<size_t> idx;
  std::function<void(size_t, AlgebraElement)> rec = [&](size_t start, AlgebraElement cur) {
    fn(cur);
    if (idx.size() == max_support) return;
    for (size_t i = start; i < carrier.size(); ++i) {
      idx.push_back(i);
      for (const RingElem& c : coeffs) rec(i + 1, cur + AlgebraElement::monomial(alg, c, carrier[i]));
      idx.pop_back();
    }
  };
  rec(0, AlgebraElement::zero(alg));
}

}  // namespace detail

// 6. The nilradical description versus the powering oracle, exhaustively.
inline CaseResult nil_sweep_suite() {
  return detail::run_case(6, "nil criterion == powering oracle, exhaustive small sweep", [&] {
    size_t checked = 0;
    for (const auto& inst : detail::nil_sweep_instances({"Z/4", "Z/8", "Dual(Z/2)"})) {
      HodgeAlgebra alg(inst.spec, inst.monoid, inst.ideal);
      detail::check(alg.ideal_radical() == HodgeAlgebra::Radical::yes, "sweep ideal must be radical");
      detail::sweep_elements(alg, inst.support_slab, 3, [&](const AlgebraElement& f) {
        // is_nilpotent_elem asserts the equivalence internally (radical case)
        auto v = is_nilpotent_elem(f, 16);
        bool crit = true;
        for (const auto& [m, c] : f.terms()) crit = crit && c.is_nilpotent();
        detail::check(v.nilpotent == crit, "criterion mismatch in " + inst.name);
        ++checked;
      });
    }
    return std::to_string(checked) + " elements, zero discrepancies";
  });
}

// 7. Units: over reduced coefficients exactly the constant units; every unit
// verdict ships a verified inverse.
inline CaseResult units_sweep_suite() {
  return detail::run_case(7, "unit criterion sweep: constants over reduced specs, inverses verified", [&] {
    size_t units_seen = 0;
    for (const auto& inst : detail::nil_sweep_instances({"Z/2", "Z/3", "Z/6"})) {
      HodgeAlgebra alg(inst.spec, inst.monoid, inst.ideal);
      detail::sweep_elements(alg, inst.support_slab, 2, [&](const AlgebraElement& f) {
        bool unit = is_unit_elem(f);
        bool constant_unit = f.terms().size() == 1 && is_zero_vec(f.terms().begin()->first) &&
                             f.terms().begin()->second.is_unit();
        detail::check(unit == constant_unit, "non-constant unit over reduced coefficients in " + inst.name);
        if (unit) {
          inverse_elem(f);  // asserts f * f^-1 == 1
          ++units_seen;
        }
      });
    }
    for (const auto& inst : detail::nil_sweep_instances({"Z/4", "Z/8", "Dual(Z/2)"})) {
      HodgeAlgebra alg(inst.spec, inst.monoid, inst.ideal);
      detail::sweep_elements(alg, std::min(inst.support_slab, Int(2)), 2, [&](const AlgebraElement& f) {
        if (is_unit_elem(f)) {
          inverse_elem(f);  // round trip asserted inside
          ++units_seen;
        }
      });
    }
    return std::to_string(units_seen) + " verified inverses";
  });
}

// 8. Milnor patching on random radical splits.
inline CaseResult milnor_patch_suite(uint64_t seed) {
  return detail::run_case(8, "milnor patching: 200 round trips, nilpotents patch to nilpotents", [&] {
    std::mt19937_64 rng(seed);
    std::vector<AffineMonoid> hosts{AffineMonoid(2, {Vec{1, 0}, Vec{0, 1}}),
                                    AffineMonoid(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}})};
    std::vector<RingSpec> specs{RingSpec::zmod(4), RingSpec::zmod(2), RingSpec::dual(RingSpec::zmod(2))};
    size_t pairs = 0, nil_pairs = 0;
    while (pairs < 200) {
      const AffineMonoid& host = hosts[rng() % hosts.size()];
      const RingSpec& spec = specs[rng() % specs.size()];
      auto primes = prime_ideals(host);
      std::shuffle(primes.begin(), primes.end(), rng);
      size_t k = 2 + rng() % std::min<size_t>(primes.size() - 1, 2);
      std::vector<MonomialIdeal> chosen(primes.begin(), primes.begin() + k);
      MonomialIdeal p1 = chosen[0];
      MonomialIdeal j = intersect_ideals(std::vector<MonomialIdeal>(chosen.begin() + 1, chosen.end()));
      MonomialIdeal i = intersect_ideals(chosen);
      HodgeAlgebra target(spec, host, i), aj(spec, host, j), ap(spec, host, p1);

      auto random_elem = [&](const HodgeAlgebra& a, bool nilpotent) {
        AlgebraElement f = AlgebraElement::zero(a);
        std::vector<Vec> carrier = a.carrier_up_to(3);
        std::vector<RingElem> pool;
        if (nilpotent) {
          for (const RingElem& g : nil_generators(a.coeff()))
            if (!g.is_zero()) pool.push_back(g);
          if (pool.empty()) return f;
        } else {
          for (const RingElem& c : enumerate_ring(a.coeff()))
            if (!c.is_zero()) pool.push_back(c);
        }
        size_t terms = 1 + rng() % 3;
        for (size_t t = 0; t < terms; ++t)
          f = f + AlgebraElement::monomial(a, pool[rng() % pool.size()], carrier[rng() % carrier.size()]);
        return f;
      };

      // patch(project(f)) == f
      AlgebraElement f = random_elem(target, false);
      AlgebraElement f1 = project_to(f, aj), f2 = project_to(f, ap);
      detail::check(milnor_patch(target, f1, f2) == f, "patch(project(f)) != f");
      ++pairs;

      // project(patch(g1, g2)) == (g1, g2) for a compatible random pair: take a
      // random lift of g1's corner and add J-supported noise.
      AlgebraElement g1 = random_elem(aj, false);
      HodgeAlgebra corner(spec, host, ideal_union(j, p1));
      AlgebraElement c0 = project_to(g1, corner);
      AlgebraElement g2(ap);
      for (const auto& [m, c] : c0.terms()) g2 = g2 + AlgebraElement::monomial(ap, c, m);
      for (const Vec& m : ap.carrier_up_to(3))
        if (j.contains(m) && rng() % 3 == 0)
          g2 = g2 + AlgebraElement::monomial(
                        ap, enumerate_ring(spec)[1 + rng() % (static_cast<size_t>(spec.cardinality()) - 1)], m);
      AlgebraElement g = milnor_patch(target, g1, g2);  // asserts re-projection
      detail::check(project_to(g, aj) == g1 && project_to(g, ap) == g2, "project(patch) mismatch");
      ++pairs;

      // nilpotent pairs patch to nilpotents (also asserted inside milnor_patch)
      AlgebraElement n0 = random_elem(target, true);
      if (!n0.is_zero()) {
        AlgebraElement n1 = project_to(n0, aj), n2 = project_to(n0, ap);
        AlgebraElement np = milnor_patch(target, n1, n2);
        detail::check(is_nilpotent_elem(np, 16).nilpotent, "nilpotent pair patched to a non-nilpotent");
        ++nil_pairs;
      }
    }
    return std::to_string(pairs) + " round trips, " + std::to_string(nil_pairs) + " nilpotent patches";
  });
}

// 9. Radical structure on random monomial ideals.
inline CaseResult radical_suite(uint64_t seed) {
  return detail::run_case(9, "radical: face route == power oracle, decompositions re-intersect", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> e(0, 3), cnt(1, 4);
    std::vector<AffineMonoid> hosts{AffineMonoid(2, {Vec{1, 0}, Vec{0, 1}}),
                                    AffineMonoid(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}})};
    for (int iter = 0; iter < 30; ++iter) {
      const AffineMonoid& host = hosts[iter % 2];
      std::vector<Vec> gens;
      int n = cnt(rng);
      for (int i = 0; i < n; ++i) {
        Vec v(host.dim());
        bool zero = true;
        for (auto& x : v) {
          x = e(rng);
          if (x != 0) zero = false;
        }
        if (!zero) gens.push_back(v);
      }
      MonomialIdeal ideal(host, gens);
      Int bound = host.dim() == 2 ? 8 : 6;
      auto rad = radical(ideal, 32, bound);  // asserts the two routes agree
      auto primes = prime_decomposition(rad.radical, 32, bound);  // asserts re-intersection
      for (const auto& p : primes)
        for (const Vec& x : host.elements_up_to(bound))
          if (rad.radical.contains(x)) detail::check(p.contains(x), "prime does not contain the radical");
    }
    return std::string("30 ideals in N^2 and N^3, both routes agree");
  });
}

// 10. The three-term sequence on finite truncation instances.
inline CaseResult lemma46_suite() {
  return detail::run_case(10, "three-term exact sequence on 3 finite truncation squares", [&] {
    AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
    AffineMonoid diag(2, {Vec{1, 1}});
    MonomialIdeal px(quad, {Vec{1, 0}}), py(quad, {Vec{0, 1}});
    RingSpec f2 = RingSpec::zmod(2), z4 = RingSpec::zmod(4), d2 = RingSpec::dual(f2);
    std::ostringstream os;
    for (const auto& [name, coeff_ext, sub] :
         {std::make_tuple("F2-diag", CoeffExtension::trivial(f2), diag),
          std::make_tuple("Z4-diag", CoeffExtension::trivial(z4), diag),
          std::make_tuple("F2-in-Dual", CoeffExtension(f2, d2), quad)}) {
      auto sq = make_milnor_square(coeff_ext, sub, quad, px, py, 2);
      auto rep = verify_lemma46(sq);
      detail::check(rep.pass, std::string(name) + ": exactness failed");
      os << name << " orders " << rep.order_i << "/" << rep.order_j << "+" << rep.order_p << "/"
         << rep.order_jp << "; ";
    }
    return os.str();
  });
}

// 11. Kernel triviality with witness, and coset agreement on a truncation.
inline CaseResult kernel_suite() {
  return detail::run_case(11, "kernel triviality: criterion, witness, coset enumeration", [&] {
    AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
    AffineMonoid even(2, {Vec{2, 0}, Vec{0, 2}, Vec{1, 1}});
    MonomialIdeal ixy(quad, {Vec{1, 1}});
    RingSpec z4 = RingSpec::zmod(4), f2 = RingSpec::zmod(2);

    auto r1 = ker_main_trivial(z4, quad, quad, ixy, 8);
    detail::check(r1.trivial, "M = N must be trivial");
    auto r2 = ker_main_trivial(f2, even, quad, ixy, 8);
    detail::check(r2.trivial, "reduced coefficients must be trivial");
    auto r3 = ker_main_trivial(z4, even, quad, ixy, 8);
    detail::check(!r3.trivial && r3.witness.has_value(), "Z/4 with M != N must be nontrivial");
    detail::check(is_unit_elem(*r3.witness), "witness must be a unit");

    auto cosets = ker_main_coset_check(z4, even, quad, ixy, 2);
    detail::check(cosets.trivial == r3.trivial, "coset enumeration disagrees with the criterion");
    auto cosets2 = ker_main_coset_check(z4, quad, quad, ixy, 2);
    detail::check(cosets2.trivial, "M = N cosets must collapse");
    return "index " + std::to_string(cosets.index) + " on the truncation";
  });
}

// 12. Witness-module certificates across coefficient specs.
inline CaseResult witness_modules_suite() {
  return detail::run_case(12, "witness modules: 20 sampled (b, m) certificates evaluate to 1", [&] {
    size_t count = 0;
    // Z/4 and Dual(Z/2) over N^2/(xy); Dual(Q) over N
    {
      RingSpec z4 = RingSpec::zmod(4);
      AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
      HodgeAlgebra amb(z4, quad, MonomialIdeal(quad, {Vec{1, 1}}));
      MonomialSubring a(amb, {{RingElem::one(z4), Vec{1, 0}}, {RingElem::one(z4), Vec{0, 1}}},
                        CoeffExtension::trivial(z4), 10);
      AlgebraElement b = AlgebraElement::constant(amb, RingElem::from_int(z4, 2));
      for (const Vec& m : {Vec{1, 0}, Vec{0, 1}, Vec{2, 0}, Vec{0, 2}, Vec{0, 0}}) {
        witness_modules(a, b, m, WitnessVariant::pm);
        ++count;
      }
      witness_modules(a, b, std::nullopt, WitnessVariant::cyclotomic);
      ++count;
    }
    {
      RingSpec d2 = RingSpec::dual(RingSpec::zmod(2));
      AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
      HodgeAlgebra amb(d2, quad, MonomialIdeal(quad, {Vec{1, 1}}));
      MonomialSubring a(amb, {{RingElem::one(d2), Vec{1, 0}}, {RingElem::one(d2), Vec{0, 1}}},
                        CoeffExtension(RingSpec::zmod(2), d2), 10);
      AlgebraElement b = AlgebraElement::constant(amb, RingElem::parse(d2, "eps"));
      for (const Vec& m : {Vec{1, 0}, Vec{0, 1}, Vec{2, 0}, Vec{1, 0}, Vec{0, 0}}) {
        witness_modules(a, b, m, WitnessVariant::pm);
        ++count;
      }
      witness_modules(a, b, std::nullopt, WitnessVariant::cyclotomic);
      ++count;
    }
    {
      RingSpec dq = RingSpec::dual(RingSpec::rationals());
      AffineMonoid line(1, {Vec{1}});
      HodgeAlgebra amb(dq, line);
      MonomialSubring a(amb, {{RingElem::one(dq), Vec{1}}}, CoeffExtension(RingSpec::rationals(), dq), 12);
      for (const char* lit : {"eps", "2*eps", "-1/2*eps", "3*eps"}) {
        AlgebraElement b = AlgebraElement::constant(amb, RingElem::parse(dq, lit));
        for (const Vec& m : {Vec{1}, Vec{2}}) {
          witness_modules(a, b, m, WitnessVariant::pm);
          ++count;
        }
      }
    }
    detail::check(count >= 20, "need at least 20 sampled pairs");
    return std::to_string(count) + " certificates re-evaluated to 1";
  });
}

// 13. The exp correspondence over Q.
inline CaseResult diagram_suite(uint64_t seed) {
  return detail::run_case(13, "exp homomorphism law and the dual-numbers golden correspondence", [&] {
    RingSpec q = RingSpec::rationals();
    RingSpec dq = RingSpec::dual(q);
    // 50 random nilpotent pairs over Dual(Q)[N^2]/(xy)
    AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
    HodgeAlgebra amb(dq, quad, MonomialIdeal(quad, {Vec{1, 1}}));
    ExtensionPair ext{MonomialSubring(amb, {{RingElem::one(dq), Vec{1, 0}}, {RingElem::one(dq), Vec{0, 1}}},
                                      CoeffExtension(q, dq), 8)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(-3, 3), den(1, 2), pickm(0, 4);
    std::vector<Vec> monos = amb.carrier_up_to(2);
    auto random_nil = [&]() {
      AlgebraElement f = AlgebraElement::zero(amb);
      for (int t = 0; t < 2; ++t) {
        int nu = numer(rng);
        if (nu == 0) continue;
        RingElem c = RingElem::from_rat(dq, Rat(nu, den(rng))) * RingElem::parse(dq, "eps");
        f = f + AlgebraElement::monomial(amb, c, monos[static_cast<size_t>(pickm(rng)) % monos.size()]);
      }
      return f;
    };
    for (int iter = 0; iter < 50; ++iter) {
      AlgebraElement b1 = random_nil(), b2 = random_nil();
      InvertibleModule lhs = exp_submodule(ext, b1).mul(exp_submodule(ext, b2));
      detail::check(lhs.equals(exp_submodule(ext, b1 + b2), 8), "hom law failed");
    }
    // golden case: Q inside Dual(Q), quotient by the maximal ideal of N
    AffineMonoid line(1, {Vec{1}});
    DiagramConfig cfg{CoeffExtension(q, dq), line, MonomialIdeal(line, {Vec{1}}), 4, 8, seed};
    auto rep = diagram_thm_check(cfg);
    detail::check(rep.plus_a_is_super, "the closure of Q in Dual(Q) must be everything");
    detail::check(rep.pass(), "diagram checks failed");
    return std::string("50 hom-law pairs; golden correspondence on ") + std::to_string(rep.sampled) + " cosets";
  });
}

// 14. The six-term sequence on the dual-number pairs.
inline CaseResult six_term_suite() {
  return detail::run_case(14, "six-term sequence: F_2 and F_3 inside their dual numbers", [&] {
    std::ostringstream os;
    for (int p : {2, 3}) {
      RingSpec base = RingSpec::zmod(p);
      RingSpec dual = RingSpec::dual(base);
      auto ring = std::make_shared<const FiniteRing>(HodgeAlgebra(dual, AffineMonoid::trivial(1)));
      FiniteExt ext = FiniteExt::from_spec(ring, CoeffExtension(base, dual), AffineMonoid::trivial(1));
      auto rep = verify_six_term(ext);
      detail::check(rep.pass, "six-term exactness failed for p=" + std::to_string(p));
      detail::check(rep.i_group == static_cast<size_t>(p), "group order must be p");
      os << "p=" << p << ": |I|=" << rep.i_group << " ";
    }
    return os.str();
  });
}

inline std::vector<CaseResult> run_all(uint64_t seed) {
  return {
      binom_det_suite(seed),
      frobenius_golden_suite(),
      closure_oracle_suite(seed + 1),
      char_p_example_suite(),
      z2t_example_suite(),
      nil_sweep_suite(),
      units_sweep_suite(),
      milnor_patch_suite(seed + 2),
      radical_suite(seed + 3),
      lemma46_suite(),
      kernel_suite(),
      witness_modules_suite(),
      diagram_suite(seed + 4),
      six_term_suite(),
  };
}

}  // namespace monalg::verify

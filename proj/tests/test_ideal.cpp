#include "monalg/ideal.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace monalg;

namespace {
AffineMonoid quad() { return AffineMonoid(2, {Vec{1, 0}, Vec{0, 1}}); }
}  // namespace

TEST_CASE("ideal membership with certificate") {
  MonomialIdeal i(quad(), {Vec{1, 1}});
  auto cert = i.contains_cert(Vec{2, 1});
  REQUIRE(cert);
  REQUIRE(vec_add(cert->generator, cert->cofactor) == Vec{2, 1});
  REQUIRE_FALSE(i.contains(Vec{2, 0}));
  MonomialIdeal e = MonomialIdeal::empty(quad());
  REQUIRE_FALSE(e.contains(Vec{3, 3}));
}

TEST_CASE("prime ideals of the quadrant") {
  auto primes = prime_ideals(quad());
  REQUIRE(primes.size() == 3);
  // the maximal ideal (complement of {0}) contains both axes
  bool found_maximal = false;
  for (const auto& p : primes)
    if (p.contains(Vec{1, 0}) && p.contains(Vec{0, 1})) found_maximal = true;
  REQUIRE(found_maximal);
}

TEST_CASE("prime ideals of a numerical semigroup and the octant") {
  AffineMonoid m(1, {Vec{2}, Vec{3}});
  REQUIRE(prime_ideals(m).size() == 1);
  AffineMonoid oct(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}});
  REQUIRE(prime_ideals(oct).size() == 7);
}

TEST_CASE("radical golden cases") {
  auto r1 = radical(MonomialIdeal(quad(), {Vec{2, 1}}), 32, 8);
  REQUIRE(r1.radical.generators() == std::vector<Vec>{Vec{1, 1}});

  auto r2 = radical(MonomialIdeal(quad(), {Vec{1, 1}}), 32, 8);
  REQUIRE(r2.radical.generators() == std::vector<Vec>{Vec{1, 1}});

  auto r3 = radical(MonomialIdeal::empty(quad()), 32, 8);
  REQUIRE(r3.radical.is_empty());
}

TEST_CASE("is_radical") {
  REQUIRE(is_radical(MonomialIdeal(quad(), {Vec{1, 1}}), 32, 8));
  REQUIRE_FALSE(is_radical(MonomialIdeal(quad(), {Vec{2, 1}}), 32, 8));
  for (const auto& p : prime_ideals(quad())) REQUIRE(is_radical(p, 32, 8));
}

TEST_CASE("radical laws on random ideals") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> e(0, 3), cnt(1, 3), dimpick(0, 1);
  for (int iter = 0; iter < 30; ++iter) {
    AffineMonoid host = dimpick(rng) ? quad() : AffineMonoid(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}});
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
    auto rad = radical(ideal, 32, bound);
    // I subset Rad(I), and Rad(Rad(I)) = Rad(I)
    for (const Vec& x : host.elements_up_to(bound)) {
      if (ideal.contains(x)) REQUIRE(rad.radical.contains(x));
    }
    auto rad2 = radical(rad.radical, 32, bound);
    for (const Vec& x : host.elements_up_to(bound))
      REQUIRE(rad.radical.contains(x) == rad2.radical.contains(x));
    // decomposition of the radical re-intersects to it
    auto primes = prime_decomposition(rad.radical, 32, bound);
    for (const Vec& x : host.elements_up_to(bound)) {
      bool inter = true;
      for (const auto& p : primes) inter = inter && p.contains(x);
      REQUIRE(inter == rad.radical.contains(x));
    }
  }
}

TEST_CASE("prime decomposition golden cases") {
  auto primes = prime_decomposition(MonomialIdeal(quad(), {Vec{1, 1}}), 32, 8);
  REQUIRE(primes.size() == 2);

  MonomialIdeal maximal(quad(), {Vec{1, 0}, Vec{0, 1}});
  REQUIRE(prime_decomposition(maximal, 32, 8).size() == 1);

  auto empty_dec = prime_decomposition(MonomialIdeal::empty(quad()), 32, 8);
  REQUIRE(empty_dec.size() == 1);
  REQUIRE(empty_dec[0].is_empty());

  REQUIRE_THROWS_AS(prime_decomposition(MonomialIdeal(quad(), {Vec{2, 1}}), 32, 8), input_error);
}

TEST_CASE("intersection with a submonoid") {
  AffineMonoid diag(2, {Vec{1, 1}});
  MonomialIdeal ix(quad(), {Vec{1, 0}});
  auto inter = intersect_submonoid(ix, diag, 8);
  REQUIRE(inter.ideal.generators() == std::vector<Vec>{Vec{1, 1}});

  AffineMonoid even(2, {Vec{2, 0}, Vec{1, 1}, Vec{0, 2}});
  MonomialIdeal ixy(quad(), {Vec{1, 1}});
  auto inter2 = intersect_submonoid(ixy, even, 6);
  REQUIRE(inter2.ideal.generators() == std::vector<Vec>{Vec{1, 1}});
}

TEST_CASE("ideal union") {
  MonomialIdeal ix(quad(), {Vec{1, 0}}), iy(quad(), {Vec{0, 1}});
  auto u = ideal_union(ix, iy);
  for (const Vec& x : quad().elements_up_to(4)) {
    bool expect = !is_zero_vec(x);
    REQUIRE(u.contains(x) == expect);
  }
  auto ue = ideal_union(ix, MonomialIdeal::empty(quad()));
  REQUIRE(ue == ix);
}

TEST_CASE("upward closure of ideal membership") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 3);
  MonomialIdeal i(quad(), {Vec{2, 0}, Vec{1, 1}});
  for (int iter = 0; iter < 100; ++iter) {
    Vec x{e(rng), e(rng)}, m{e(rng), e(rng)};
    if (i.contains(x)) REQUIRE(i.contains(vec_add(x, m)));
  }
}

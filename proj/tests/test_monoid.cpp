#include "monalg/monoid.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace monalg;

namespace {
AffineMonoid nsg(std::initializer_list<int> gens) {  // numerical semigroup in Z^1
  std::vector<Vec> g;
  for (int x : gens) g.push_back(Vec{Int(x)});
  return AffineMonoid(1, g);
}
AffineMonoid m2(std::initializer_list<std::pair<int, int>> gens) {
  std::vector<Vec> g;
  for (auto [a, b] : gens) g.push_back(Vec{Int(a), Int(b)});
  return AffineMonoid(2, g);
}
}  // namespace

TEST_CASE("membership in numerical semigroup <2,3>") {
  auto m = nsg({2, 3});
  auto rep = m.contains(Vec{7});
  REQUIRE(rep);
  REQUIRE((*rep)[0] * 2 + (*rep)[1] * 3 == 7);
  REQUIRE_FALSE(m.contains(Vec{1}));
  REQUIRE(m.contains(Vec{0}));
}

TEST_CASE("membership certificate resubstitutes in 2d") {
  auto m = m2({{1, 0}, {1, 1}, {1, 2}});
  auto rep = m.contains(Vec{2, 1});
  REQUIRE(rep);
  Vec sum{0, 0};
  const auto& gens = m.generators();
  for (size_t i = 0; i < gens.size(); ++i) sum = vec_add(sum, vec_scale((*rep)[i], gens[i]));
  REQUIRE(sum == Vec{2, 1});
}

TEST_CASE("positivity certificates") {
  auto quad = m2({{1, 0}, {0, 1}});
  REQUIRE(quad.is_positive());
  for (const Vec& g : quad.generators()) REQUIRE(dot(quad.positivity().lambda, g) >= 1);

  auto line = nsg({1, -1});
  REQUIRE_FALSE(line.is_positive());
  const Vec& u = line.positivity().unit_witness;
  REQUIRE_FALSE(is_zero_vec(u));
  REQUIRE(line.contains(u, 4u));
  Vec neg = vec_scale(-1, u);
  REQUIRE(line.contains(neg, 4u));

  auto slanted = m2({{1, 2}, {1, -1}});
  REQUIRE(slanted.is_positive());
}

TEST_CASE("gp membership") {
  REQUIRE(nsg({2, 3}).gp_contains(Vec{1}));
  REQUIRE_FALSE(nsg({2}).gp_contains(Vec{1}));
  REQUIRE(m2({{2, 0}, {0, 3}}).gp_contains(Vec{2, 3}));
}

TEST_CASE("gp_index detects structural gcd") {
  REQUIRE(nsg({2}).gp_index(Vec{1}) == 2);
  REQUIRE(nsg({2, 3}).gp_index(Vec{1}) == 1);
  // (1,1) never lands in the span of (2,0)
  REQUIRE(m2({{2, 0}}).gp_index(Vec{1, 1}) == 0);
  REQUIRE(m2({{2, 2}}).gp_index(Vec{1, 1}) == 2);
}

TEST_CASE("faces of the quadrant") {
  auto quad = m2({{1, 0}, {0, 1}});
  const auto& fs = quad.faces();
  REQUIRE(fs.size() == 4);
  REQUIRE(fs.front().gen_indices.empty());          // {0}
  REQUIRE(fs.back().gen_indices.size() == 2);       // whole cone
}

TEST_CASE("faces of a 1-dim pointed cone") {
  auto m = nsg({2, 3});
  REQUIRE(m.faces().size() == 2);
}

TEST_CASE("faces with an interior generator") {
  auto m = m2({{1, 0}, {1, 1}, {0, 1}});
  REQUIRE(m.faces().size() == 4);
}

TEST_CASE("faces of a non-pointed monoid") {
  // the group Z has only the improper face and hence no proper prime ideals
  auto line = nsg({1, -1});
  REQUIRE(line.faces().size() == 1);
  REQUIRE(line.faces()[0].gen_indices.size() == 2);
}

TEST_CASE("faces of the octant") {
  AffineMonoid m(3, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}});
  REQUIRE(m.faces().size() == 8);
}

TEST_CASE("face cap is enforced") {
  std::vector<Vec> gens;
  for (int i = 0; i < 17; ++i) gens.push_back(Vec{Int(i + 1), Int(1)});
  AffineMonoid m(2, gens);
  REQUIRE_THROWS_AS(m.faces(), capability_error);
}

TEST_CASE("power profiles") {
  auto p = power_profile(nsg({2, 3}), Vec{1}, 6);
  REQUIRE(p == std::vector<unsigned>{2, 3, 4, 5, 6});
  auto q = power_profile(nsg({2}), Vec{1}, 8);
  REQUIRE(q == std::vector<unsigned>{2, 4, 6, 8});
  auto r = power_profile(m2({{2, 2}}), Vec{1, 1}, 5);
  REQUIRE(r == std::vector<unsigned>{2, 4});
}

TEST_CASE("subintegral extension golden cases") {
  auto yes = is_subintegral_extension(nsg({2, 3}), nsg({1}), 64);
  REQUIRE(yes.status == SubintStatus::yes);
  REQUIRE(yes.witnesses.size() == 1);
  REQUIRE(yes.witnesses[0].j1 == 2);
  REQUIRE(yes.witnesses[0].j2 == 3);
  REQUIRE(yes.witnesses[0].threshold == 2);

  auto no = is_subintegral_extension(nsg({2}), nsg({1}), 64);
  REQUIRE(no.status == SubintStatus::no);
  REQUIRE(no.no_gcd == 2);

  auto trivial = is_subintegral_extension(nsg({2, 3}), nsg({2, 3}), 64);
  REQUIRE(trivial.status == SubintStatus::yes);
}

TEST_CASE("extension validation") {
  REQUIRE_THROWS_AS(is_subintegral_extension(nsg({2, 3}), nsg({2}), 64), input_error);
}

TEST_CASE("subintegral closure examples") {
  auto full = subintegral_closure(nsg({2, 3}), nsg({1}), 10, 64);
  REQUIRE(full.elements.size() == 11);  // all of 0..10
  REQUIRE(monoids_equal(full.closure, nsg({1})));

  auto closed = subintegral_closure(nsg({2}), nsg({1}), 10, 64);
  REQUIRE(monoids_equal(closed.closure, nsg({2})));

  auto same = subintegral_closure(nsg({2, 3}), nsg({2, 3}), 10, 64);
  REQUIRE(monoids_equal(same.closure, nsg({2, 3})));
}

TEST_CASE("closure idempotence") {
  auto first = subintegral_closure(nsg({3, 4, 5}), nsg({1}), 12, 64);
  auto again = subintegral_closure(first.closure, nsg({1}), 12, 64);
  REQUIRE(first.elements == again.elements);
}

TEST_CASE("is_subintegrally_closed examples") {
  REQUIRE(is_subintegrally_closed(nsg({2}), nsg({1}), 12, 64));
  REQUIRE_FALSE(is_subintegrally_closed(nsg({2, 3}), nsg({1}), 12, 64));
  REQUIRE_FALSE(is_subintegrally_closed(nsg({3, 4, 5}), nsg({1}), 12, 64));
}

TEST_CASE("closure matches extension verdict") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> g(2, 7), cnt(1, 3);
  for (int iter = 0; iter < 25; ++iter) {
    std::set<int> gens;
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) gens.insert(g(rng));
    std::vector<Vec> gv;
    for (int x : gens) gv.push_back(Vec{Int(x)});
    AffineMonoid m(1, gv);
    AffineMonoid full = nsg({1});
    auto verdict = is_subintegral_extension(m, full, 64);
    auto clo = subintegral_closure(m, full, 12, 64);
    bool closure_is_everything = clo.elements.size() == 13;
    if (verdict.status == SubintStatus::yes) REQUIRE(closure_is_everything);
    if (verdict.status == SubintStatus::no) REQUIRE_FALSE(closure_is_everything);
  }
}

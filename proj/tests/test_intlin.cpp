#include "monalg/intlin.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace monalg;

TEST_CASE("lattice_solve one-dimensional gcd") {
  // columns {2}, {3} generate Z; 1 = -2 + 3
  auto sol = lattice_solve({Vec{2}, Vec{3}}, Vec{1});
  REQUIRE(sol);
  REQUIRE((*sol)[0] * 2 + (*sol)[1] * 3 == 1);
}

TEST_CASE("lattice_solve misses odd coordinate") {
  REQUIRE_FALSE(lattice_solve({Vec{2, 0}, Vec{0, 2}}, Vec{1, 0}));
}

TEST_CASE("lattice_solve substitution example") {
  auto sol = lattice_solve({Vec{1, 2}, Vec{1, -1}}, Vec{2, 1});
  REQUIRE(sol);
  REQUIRE((*sol)[0] + (*sol)[1] == 2);
  REQUIRE((*sol)[0] * 2 - (*sol)[1] == 1);
}

TEST_CASE("lattice_solve agrees with brute force on small instances") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-4, 4), dimd(1, 3), cnt(1, 3);
  for (int iter = 0; iter < 200; ++iter) {
    int d = dimd(rng), n = cnt(rng);
    std::vector<Vec> cols(n, Vec(d));
    for (auto& c : cols)
      for (auto& x : c) x = entry(rng);
    Vec t(d);
    for (auto& x : t) x = entry(rng);
    auto sol = lattice_solve(cols, t);
    if (sol) {
      Vec check(d, 0);
      for (int j = 0; j < n; ++j) check = vec_add(check, vec_scale((*sol)[j], cols[j]));
      REQUIRE(check == t);
    } else {
      // brute force |x_i| <= 10
      std::vector<Int> x(n, -10);
      bool found = false;
      while (!found) {
        Vec check(d, 0);
        for (int j = 0; j < n; ++j) check = vec_add(check, vec_scale(x[j], cols[j]));
        if (check == t) found = true;
        int j = 0;
        while (j < n && x[j] == 10) x[j++] = -10;
        if (j == n) break;
        if (!found) ++x[j];
      }
      REQUIRE_FALSE(found);
    }
  }
}

TEST_CASE("binom_det golden cases") {
  REQUIRE(binom_det({Int(1), Int(2)}) == 1);
  REQUIRE(binom_det({Int(1), Int(2), Int(3)}) == 1);
  REQUIRE(binom_det({Int(2), Int(4), Int(6)}) == 8);
}

TEST_CASE("binom_det rejects bad input") {
  REQUIRE_THROWS_AS(binom_det({Int(2), Int(2)}), input_error);
  REQUIRE_THROWS_AS(binom_det({Int(0), Int(1)}), input_error);
}

TEST_CASE("binom_det formula equals elimination on random tuples") {
  std::mt19937_64 rng(987);
  std::uniform_int_distribution<int> plen(1, 7), val(1, 30);
  for (int iter = 0; iter < 500; ++iter) {
    int len = plen(rng);
    std::set<int> vals;
    while (static_cast<int>(vals.size()) < len) vals.insert(val(rng));
    std::vector<Int> a(vals.begin(), vals.end());
    Int d = binom_det(a);  // internal cross-check of both routes
    REQUIRE(d > 0);
  }
}

TEST_CASE("frobenius_pair golden cases") {
  REQUIRE(frobenius_pair(2, 3) == 1);
  REQUIRE(frobenius_pair(1, 5) == -1);
  REQUIRE(frobenius_pair(3, 5) == 7);
  REQUIRE_THROWS_AS(frobenius_pair(2, 4), input_error);
  REQUIRE_THROWS_AS(frobenius_pair(0, 3), input_error);
}

TEST_CASE("frobenius_pair brute-force representability") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> val(1, 12);
  auto representable = [](int n, int a, int b) {
    for (int i = 0; i * a <= n; ++i)
      if ((n - i * a) % b == 0) return true;
    return false;
  };
  int done = 0;
  while (done < 50) {
    int a = val(rng), b = val(rng);
    if (std::gcd(a, b) != 1) continue;
    ++done;
    Int f = frobenius_pair(a, b);
    if (f >= 0) REQUIRE_FALSE(representable(static_cast<int>(f), a, b));
    for (int n = static_cast<int>(f) + 1; n <= static_cast<int>(f) + a * b; ++n)
      REQUIRE(representable(n, a, b));
  }
}

TEST_CASE("gauss_solve and nullspace") {
  QMat m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1;
  auto sol = gauss_solve(m, {Rat(6), Rat(2)});
  REQUIRE(sol);
  REQUIRE((*sol)[0] + 2 * (*sol)[1] + 3 * (*sol)[2] == 6);
  auto ns = gauss_nullspace(m);
  REQUIRE(ns.size() == 1);
  const QVec& v = ns[0];
  REQUIRE(v[0] + 2 * v[1] + 3 * v[2] == 0);
  REQUIRE(v[1] + v[2] == 0);
}

TEST_CASE("integer_solve_mod congruences") {
  // 3y = 1 mod 4 -> y = 3 works
  IntMat a(1, 1);
  a.at(0, 0) = 3;
  auto sol = integer_solve_mod(a, Vec{1}, Vec{4});
  REQUIRE(sol);
  REQUIRE(((*sol)[0] * 3 - 1) % 4 == 0);
  // 2y = 1 mod 4 is infeasible
  a.at(0, 0) = 2;
  REQUIRE_FALSE(integer_solve_mod(a, Vec{1}, Vec{4}));
}

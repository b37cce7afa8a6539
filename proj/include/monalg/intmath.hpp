// Basic exact-arithmetic aliases and helpers shared by the whole library.
// All integer work uses arbitrary-precision cpp_int; rationals appear only
// where linear functionals or field coefficients require them.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace monalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Error taxonomy: bad caller input vs. exceeded desk-scale capability vs.
// a broken internal cross-check (the bug traps required by the contracts).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& msg) : std::runtime_error(msg) {}
};

class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (Int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vec_add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("vec_sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero_vec(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(size_t d) { return Vec(d, 0); }

// Divide out the gcd of the entries; sign convention: first nonzero entry > 0.
inline Vec primitive(Vec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

inline std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace monalg

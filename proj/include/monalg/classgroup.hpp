// Invertible submodules of ring extensions and the verification suites built
// on them: the group I(A,B) by exhaustive enumeration over finite instances,
// the six-term sequence through units and (trivial) Picard groups, the
// three-term Milnor sequence over a split square of truncated quotients, the
// kernel-triviality criterion with explicit witnesses, and property-level
// checks of the closedness and exp-correspondence statements.
#pragma once

#include "monalg/subint.hpp"

#include <functional>
#include <random>

namespace monalg {

// A ring extension presented as a monomial subring inside its ambient
// quotient algebra.
struct ExtensionPair {
  MonomialSubring sub;

  const HodgeAlgebra& super() const { return sub.ambient(); }
};

// Invertible A-submodule of B with explicit inverse generators and a
// certificate expressing 1 as sum a_k * g_i * h_j with a_k in A. The
// certificate re-evaluates exactly at construction.
class InvertibleModule {
 public:
  using CertTerm = std::tuple<AlgebraElement, size_t, size_t>;

  InvertibleModule(ExtensionPair ext, std::vector<AlgebraElement> gens,
                   std::vector<AlgebraElement> inv_gens, std::vector<CertTerm> cert)
      : ext_(std::move(ext)), gens_(std::move(gens)), inv_gens_(std::move(inv_gens)), cert_(std::move(cert)) {
    const HodgeAlgebra& amb = ext_.super();
    AlgebraElement sum = AlgebraElement::zero(amb);
    for (const auto& [a, i, j] : cert_) {
      if (ext_.sub.contains_or_throw(a) == false)
        throw invariant_error("InvertibleModule: certificate coefficient outside A");
      sum = sum + a * gens_.at(i) * inv_gens_.at(j);
    }
    if (sum != AlgebraElement::one(amb))
      throw invariant_error("InvertibleModule: certificate does not evaluate to 1");
    for (const AlgebraElement& g : gens_)
      for (const AlgebraElement& h : inv_gens_)
        if (!ext_.sub.contains_or_throw(g * h))
          throw invariant_error("InvertibleModule: product of generator sets escapes A");
  }

  static InvertibleModule identity(const ExtensionPair& ext) {
    AlgebraElement one = AlgebraElement::one(ext.super());
    return InvertibleModule(ext, {one}, {one}, {{one, 0, 0}});
  }

  const ExtensionPair& ext() const { return ext_; }
  const std::vector<AlgebraElement>& generators() const { return gens_; }
  const std::vector<AlgebraElement>& inverse_generators() const { return inv_gens_; }
  const std::vector<CertTerm>& certificate() const { return cert_; }

  InvertibleModule inverse() const {
    std::vector<CertTerm> cert;
    for (const auto& [a, i, j] : cert_) cert.emplace_back(a, j, i);
    return InvertibleModule(ext_, inv_gens_, gens_, cert);
  }

  InvertibleModule mul(const InvertibleModule& o) const {
    std::vector<AlgebraElement> gens, inv;
    for (const AlgebraElement& g : gens_)
      for (const AlgebraElement& h : o.gens_) gens.push_back(g * h);
    for (const AlgebraElement& g : inv_gens_)
      for (const AlgebraElement& h : o.inv_gens_) inv.push_back(g * h);
    std::vector<CertTerm> cert;
    for (const auto& [a, i, j] : cert_)
      for (const auto& [b, k, l] : o.cert_)
        cert.emplace_back(a * b, i * o.gens_.size() + k, j * o.inv_gens_.size() + l);
    return InvertibleModule(ext_, std::move(gens), std::move(inv), std::move(cert));
  }

  // Membership of a target element in the A-module spanned by the generators.
  bool module_member(const AlgebraElement& target, const Int& support_degree) const {
    return module_contains(ext_.sub, gens_, target, support_degree).found;
  }

  bool is_identity(const Int& support_degree) const {
    for (const AlgebraElement& g : gens_)
      if (ext_.sub.contains(g) != Tri::yes) return false;
    return module_member(AlgebraElement::one(ext_.super()), support_degree);
  }

  bool equals(const InvertibleModule& o, const Int& support_degree) const {
    for (const AlgebraElement& g : gens_)
      if (!o.module_member(g, support_degree)) return false;
    for (const AlgebraElement& g : o.gens_)
      if (!module_member(g, support_degree)) return false;
    return true;
  }

 private:
  ExtensionPair ext_;
  std::vector<AlgebraElement> gens_, inv_gens_;
  std::vector<CertTerm> cert_;
};

// theta(b) = A b for a unit b of B.
inline InvertibleModule theta(const ExtensionPair& ext, const AlgebraElement& b) {
  if (!is_unit_elem(b)) throw input_error("theta: b is not a unit");
  AlgebraElement bi = inverse_elem(b);
  return InvertibleModule(ext, {b}, {bi}, {{AlgebraElement::one(ext.super()), 0, 0}});
}

// A exp(b) for nilpotent b over a coefficient ring containing Q.
inline InvertibleModule exp_submodule(const ExtensionPair& ext, const AlgebraElement& b) {
  const RingSpec& spec = ext.super().coeff();
  if (!spec.contains_q()) throw capability_error("exp_submodule: coefficient ring must contain Q");
  auto nv = is_nilpotent_elem(b, 64);
  if (!nv.nilpotent) throw input_error("exp_submodule: b is not nilpotent");
  unsigned idx = nv.index ? *nv.index : detail::nilpotency_index_exact(b);
  auto exp_of = [&](const AlgebraElement& x) {
    AlgebraElement r = AlgebraElement::zero(ext.super());
    AlgebraElement p = AlgebraElement::one(ext.super());
    for (unsigned k = 0; k < idx; ++k) {
      r = r + p.scale(RingElem::from_rat(spec, Rat(1, factorial(k))));
      p = p * x;
    }
    return r;
  };
  AlgebraElement e = exp_of(b), ei = exp_of(-b);
  if (e * ei != AlgebraElement::one(ext.super()))
    throw invariant_error("exp_submodule: exp(b) exp(-b) != 1");
  return InvertibleModule(ext, {e}, {ei}, {{AlgebraElement::one(ext.super()), 0, 0}});
}

// ---- finite quotient rings and exhaustive enumeration ----------------------

// A quotient algebra that is finite as a set: finite coefficient spec and a
// cofinite monomial ideal. Elements are fully enumerated; desk cap 256.
class FiniteRing {
 public:
  explicit FiniteRing(HodgeAlgebra alg) : alg_(std::move(alg)) {
    if (!alg_.coeff().is_finite()) throw capability_error("FiniteRing: coefficient ring is infinite");
    carrier_ = finite_carrier(alg_);
    Int size = 1;
    for (size_t i = 0; i < carrier_.size(); ++i) {
      size *= alg_.coeff().cardinality();
      if (size > 256) throw capability_error("FiniteRing: more than 256 elements");
    }
    std::vector<RingElem> coeffs = enumerate_ring(alg_.coeff());
    elems_.push_back(AlgebraElement::zero(alg_));
    for (const Vec& m : carrier_) {
      std::vector<AlgebraElement> next;
      next.reserve(elems_.size() * coeffs.size());
      for (const AlgebraElement& e : elems_)
        for (const RingElem& c : coeffs)
          next.push_back(c.is_zero() ? e : e + AlgebraElement::monomial(alg_, c, m));
      elems_ = std::move(next);
    }
    std::sort(elems_.begin(), elems_.end());
    for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
    zero_ = at(AlgebraElement::zero(alg_));
    one_ = at(AlgebraElement::one(alg_));
    const size_t n = elems_.size();
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    neg_.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      neg_[i] = at(-elems_[i]);
      for (size_t j = i; j < n; ++j) {
        int s = at(elems_[i] + elems_[j]);
        int p = at(elems_[i] * elems_[j]);
        add_[i * n + j] = add_[j * n + i] = s;
        mul_[i * n + j] = mul_[j * n + i] = p;
        if (p == one_) {
          units_.push_back(static_cast<int>(i));
          if (j != i) units_.push_back(static_cast<int>(j));
        }
      }
    }
    std::sort(units_.begin(), units_.end());
    units_.erase(std::unique(units_.begin(), units_.end()), units_.end());
  }

  const HodgeAlgebra& algebra() const { return alg_; }
  const std::vector<AlgebraElement>& elements() const { return elems_; }
  const std::vector<int>& units() const { return units_; }
  int zero_index() const { return zero_; }
  int one_index() const { return one_; }
  size_t size() const { return elems_.size(); }

  int at(const AlgebraElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw invariant_error("FiniteRing: element not in the enumeration");
    return it->second;
  }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * elems_.size() + b]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * elems_.size() + b]; }

  int inverse_of_unit(int u) const {
    for (int v : units_)
      if (mul(u, v) == one_) return v;
    throw input_error("FiniteRing: not a unit");
  }

  // Carrier of a cofinite ideal: every generator has a bounded multiple in the
  // ideal, so multiplicities are bounded coordinatewise.
  static std::vector<Vec> finite_carrier(const HodgeAlgebra& alg) {
    const AffineMonoid& mon = alg.monoid();
    const MonomialIdeal& ideal = alg.ideal();
    std::vector<unsigned> caps;
    for (const Vec& g : mon.generators()) {
      unsigned k = 0;
      for (unsigned n = 1; n <= 64; ++n)
        if (ideal.contains(vec_scale(Int(n), g))) {
          k = n;
          break;
        }
      if (k == 0) throw capability_error("FiniteRing: ideal is not cofinite in the monoid");
      caps.push_back(k);
    }
    std::set<Vec> out;
    std::function<void(size_t, Vec)> rec = [&](size_t i, Vec cur) {
      if (i == mon.generators().size()) {
        if (!ideal.contains(cur)) out.insert(cur);
        return;
      }
      for (unsigned n = 0; n < caps[i]; ++n) {
        rec(i + 1, cur);
        cur = vec_add(cur, mon.generators()[i]);
      }
    };
    rec(0, zero_vec(mon.dim()));
    return {out.begin(), out.end()};
  }

 private:
  HodgeAlgebra alg_;
  std::vector<Vec> carrier_;
  std::vector<AlgebraElement> elems_;
  std::map<AlgebraElement, int> index_;
  std::vector<int> units_;
  std::vector<int> add_, mul_, neg_;
  int zero_ = 0, one_ = 0;
};

// A finite ring extension: the value set of the subring inside a FiniteRing.
class FiniteExt {
 public:
  FiniteExt(std::shared_ptr<const FiniteRing> ring, std::vector<int> sub_elems)
      : ring_(std::move(ring)), sub_(std::move(sub_elems)) {
    std::sort(sub_.begin(), sub_.end());
    sub_.erase(std::unique(sub_.begin(), sub_.end()), sub_.end());
    in_sub_.assign(ring_->size(), false);
    for (int i : sub_) in_sub_[i] = true;
    if (!in_sub_[ring_->one_index()] || !in_sub_[ring_->zero_index()])
      throw input_error("FiniteExt: subring must contain 0 and 1");
    for (int a : sub_) {
      if (!in_sub_[ring_->neg(a)]) throw input_error("FiniteExt: subring not closed under negation");
      for (int b : sub_)
        if (!in_sub_[ring_->add(a, b)] || !in_sub_[ring_->mul(a, b)])
          throw input_error("FiniteExt: subring not closed under the ring operations");
    }
  }

  // Subring = image of the coefficient sub-spec on monomials of the sub-monoid.
  static FiniteExt from_spec(std::shared_ptr<const FiniteRing> ring, const CoeffExtension& coeff_ext,
                             const AffineMonoid& sub_monoid) {
    std::vector<int> sub;
    for (size_t i = 0; i < ring->size(); ++i) {
      const AlgebraElement& e = ring->elements()[i];
      bool ok = true;
      for (const auto& [m, c] : e.terms()) {
        if (!sub_monoid.contains(m) || !coeff_ext.contains(c)) {
          ok = false;
          break;
        }
      }
      if (ok) sub.push_back(static_cast<int>(i));
    }
    return FiniteExt(std::move(ring), std::move(sub));
  }

  const FiniteRing& ring() const { return *ring_; }
  std::shared_ptr<const FiniteRing> ring_ptr() const { return ring_; }
  const std::vector<int>& sub_elements() const { return sub_; }
  bool in_sub(int i) const { return in_sub_[i]; }

  std::vector<int> sub_units() const {
    std::vector<int> out;
    for (int u : ring_->units())
      if (in_sub_[u] && in_sub_[ring_->inverse_of_unit(u)]) out.push_back(u);
    return out;
  }

  // A-module closure of a seed set.
  std::vector<int> closure(std::vector<int> seed) const {
    std::set<int> s{ring_->zero_index()};
    std::vector<int> queue;
    auto push = [&](int x) {
      if (s.insert(x).second) queue.push_back(x);
    };
    for (int x : seed) push(x);
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      push(ring_->neg(x));
      for (int a : sub_) push(ring_->mul(a, x));
      for (int y : std::vector<int>(s.begin(), s.end())) push(ring_->add(x, y));
    }
    return {s.begin(), s.end()};
  }

  std::vector<int> module_mul(const std::vector<int>& p, const std::vector<int>& q) const {
    std::vector<int> seed;
    for (int x : p)
      for (int y : q) seed.push_back(ring_->mul(x, y));
    return closure(seed);
  }

  // Largest candidate inverse (A : P); if any inverse exists this one works.
  std::vector<int> colon_sub(const std::vector<int>& p) const {
    std::vector<int> out;
    for (size_t b = 0; b < ring_->size(); ++b) {
      bool ok = true;
      for (int x : p)
        if (!in_sub_[ring_->mul(static_cast<int>(b), x)]) {
          ok = false;
          break;
        }
      if (ok) out.push_back(static_cast<int>(b));
    }
    return out;
  }

  std::vector<int> sub_as_module() const { return closure({ring_->one_index()}); }

  // Every A-submodule of B, generated by breadth-first adjunction of single
  // elements (generator indices taken increasing along each chain).
  std::vector<std::vector<int>> all_submodules(size_t cap = 20000) const {
    std::map<std::vector<int>, int> seen;  // module -> max generator index used
    std::vector<std::vector<int>> queue;
    std::vector<int> zero_mod = closure({});
    seen.emplace(zero_mod, -1);
    queue.push_back(zero_mod);
    std::vector<std::vector<int>> out{zero_mod};
    while (!queue.empty()) {
      std::vector<int> cur = queue.back();
      queue.pop_back();
      int last = seen.at(cur);
      for (size_t b = last < 0 ? 0 : static_cast<size_t>(last) + 1; b < ring_->size(); ++b) {
        if (std::binary_search(cur.begin(), cur.end(), static_cast<int>(b))) continue;
        std::vector<int> seed = cur;
        seed.push_back(static_cast<int>(b));
        std::vector<int> next = closure(seed);
        auto it = seen.find(next);
        if (it == seen.end()) {
          seen.emplace(next, static_cast<int>(b));
          queue.push_back(next);
          out.push_back(next);
          if (out.size() > cap) throw capability_error("all_submodules: module explosion");
        } else if (it->second > static_cast<int>(b)) {
          it->second = static_cast<int>(b);
          queue.push_back(next);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::shared_ptr<const FiniteRing> ring_;
  std::vector<int> sub_;
  std::vector<bool> in_sub_;
};

// The group I(A,B) of a finite extension by full enumeration, with the
// U(B)/U(A) identification asserted (finite commutative rings are products of
// local rings, so the Picard terms vanish and theta is onto).
struct FiniteIGroup {
  std::vector<std::vector<int>> modules;    // sorted canonical list
  size_t identity = 0;
  std::vector<std::vector<size_t>> mult;
  std::vector<size_t> inverse;

  size_t find(const std::vector<int>& m) const {
    auto it = std::lower_bound(modules.begin(), modules.end(), m);
    if (it == modules.end() || *it != m) throw invariant_error("FiniteIGroup: module not in the group");
    return static_cast<size_t>(it - modules.begin());
  }

  size_t order() const { return modules.size(); }
};

inline FiniteIGroup brute_force_I(const FiniteExt& ext) {
  FiniteIGroup g;
  std::vector<int> a_mod = ext.sub_as_module();
  for (const std::vector<int>& p : ext.all_submodules()) {
    std::vector<int> q = ext.colon_sub(p);
    if (ext.module_mul(p, q) == a_mod) g.modules.push_back(p);
  }
  std::sort(g.modules.begin(), g.modules.end());
  g.identity = g.find(a_mod);

  g.mult.assign(g.order(), std::vector<size_t>(g.order()));
  for (size_t i = 0; i < g.order(); ++i)
    for (size_t j = i; j < g.order(); ++j) {
      size_t k = g.find(ext.module_mul(g.modules[i], g.modules[j]));
      g.mult[i][j] = g.mult[j][i] = k;
    }
  g.inverse.assign(g.order(), 0);
  for (size_t i = 0; i < g.order(); ++i) {
    bool found = false;
    for (size_t j = 0; j < g.order(); ++j)
      if (g.mult[i][j] == g.identity) {
        g.inverse[i] = j;
        found = true;
        break;
      }
    if (!found) throw invariant_error("brute_force_I: module without inverse survived the filter");
  }

  // Pic-trivial identification: theta is onto and |I| = |U(B)| / |U(A)|.
  std::set<size_t> theta_image;
  for (int u : ext.ring().units()) theta_image.insert(g.find(ext.closure({u})));
  if (theta_image.size() != g.order())
    throw invariant_error("brute_force_I: theta is not onto the enumerated group");
  size_t ua = ext.sub_units().size();
  if (ext.ring().units().size() % ua != 0 || ext.ring().units().size() / ua != g.order())
    throw invariant_error("brute_force_I: |I(A,B)| differs from |U(B)|/|U(A)|");
  return g;
}

struct SixTermReport {
  size_t u_a = 0, u_b = 0, i_group = 0;
  bool exact_at_ub = false;  // kernel of theta equals the image of U(A)
  bool exact_at_i = false;   // theta onto I(A,B)  (Pic(A) trivial, finite ring)
  bool pass = false;
};

inline SixTermReport verify_six_term(const FiniteExt& ext) {
  SixTermReport rep;
  FiniteIGroup g = brute_force_I(ext);
  std::vector<int> a_mod = ext.sub_as_module();
  std::vector<int> ua = ext.sub_units();
  rep.u_a = ua.size();
  rep.u_b = ext.ring().units().size();
  rep.i_group = g.order();

  std::set<int> kernel;
  std::set<size_t> image;
  for (int u : ext.ring().units()) {
    size_t t = g.find(ext.closure({u}));
    image.insert(t);
    if (t == g.identity) kernel.insert(u);
  }
  rep.exact_at_ub = kernel == std::set<int>(ua.begin(), ua.end());
  rep.exact_at_i = image.size() == g.order();
  rep.pass = rep.exact_at_ub && rep.exact_at_i;
  return rep;
}

// ---- split Milnor square over a truncated quotient -------------------------

// Data of the square: a coefficient extension, a monoid extension M inside N,
// a radical ideal I of N split as p (one prime) against J (the rest), and a
// truncation degree making all four corners finite. The corners are
//   (I), (J), (p), (J u p),   each further cut by the truncation ideal.
struct MilnorSquareExt {
  FiniteExt corner_i, corner_j, corner_p, corner_jp;
  // element-level maps by index
  std::vector<int> p1, p2;        // corner_i -> corner_j, corner_i -> corner_p
  std::vector<int> q1, q2;        // corner_j -> corner_jp, corner_p -> corner_jp
  std::vector<int> q1_section;    // corner_jp -> corner_j, splits q1

  MilnorSquareExt(FiniteExt ci, FiniteExt cj, FiniteExt cp, FiniteExt cjp)
      : corner_i(std::move(ci)), corner_j(std::move(cj)), corner_p(std::move(cp)), corner_jp(std::move(cjp)) {}
};

namespace detail {

inline std::vector<int> quotient_map(const FiniteRing& src, const FiniteRing& dst) {
  std::vector<int> map(src.size());
  for (size_t i = 0; i < src.size(); ++i)
    map[i] = dst.at(project_to(src.elements()[i], dst.algebra()));
  return map;
}

}  // namespace detail

// Assemble the split square; verifies that both component squares are
// Cartesian on every compatible pair, that the section is a ring map
// splitting q1, and that everything restricts to the subrings.
inline MilnorSquareExt make_milnor_square(const CoeffExtension& coeff_ext, const AffineMonoid& sub_monoid,
                                          const AffineMonoid& super_monoid, const MonomialIdeal& prime_part,
                                          const MonomialIdeal& rest_part, const Int& truncation_degree) {
  const AffineMonoid& n = super_monoid;
  MonomialIdeal trunc = truncation_ideal(n, truncation_degree);
  MonomialIdeal ideal_i = intersect_ideals({prime_part, rest_part});
  auto make_ring = [&](const MonomialIdeal& k) {
    return std::make_shared<const FiniteRing>(
        HodgeAlgebra(coeff_ext.super(), n, ideal_union(k, trunc)));
  };
  auto ring_i = make_ring(ideal_i);
  auto ring_j = make_ring(rest_part);
  auto ring_p = make_ring(prime_part);
  auto ring_jp = make_ring(ideal_union(rest_part, prime_part));

  MilnorSquareExt sq(FiniteExt::from_spec(ring_i, coeff_ext, sub_monoid),
                     FiniteExt::from_spec(ring_j, coeff_ext, sub_monoid),
                     FiniteExt::from_spec(ring_p, coeff_ext, sub_monoid),
                     FiniteExt::from_spec(ring_jp, coeff_ext, sub_monoid));
  sq.p1 = detail::quotient_map(*ring_i, *ring_j);
  sq.p2 = detail::quotient_map(*ring_i, *ring_p);
  sq.q1 = detail::quotient_map(*ring_j, *ring_jp);
  sq.q2 = detail::quotient_map(*ring_p, *ring_jp);

  // Section of q1: corner monomials avoid the prime part, and the complement
  // of a prime is a submonoid, so re-reading a corner element in B[N]/(J u T)
  // is a ring homomorphism.
  sq.q1_section.resize(ring_jp->size());
  for (size_t i = 0; i < ring_jp->size(); ++i) {
    const AlgebraElement& e = ring_jp->elements()[i];
    AlgebraElement lift(ring_j->algebra());
    for (const auto& [m, c] : e.terms()) lift = lift + AlgebraElement::monomial(ring_j->algebra(), c, m);
    sq.q1_section[i] = ring_j->at(lift);
  }
  for (size_t i = 0; i < ring_jp->size(); ++i)
    if (sq.q1[sq.q1_section[i]] != static_cast<int>(i))
      throw invariant_error("make_milnor_square: section does not split q1");
  for (size_t a = 0; a < ring_jp->size(); ++a)
    for (size_t b = 0; b < ring_jp->size(); ++b) {
      int lift_ab = sq.q1_section[ring_jp->mul(static_cast<int>(a), static_cast<int>(b))];
      if (lift_ab != ring_j->mul(sq.q1_section[a], sq.q1_section[b]) ||
          sq.q1_section[ring_jp->add(static_cast<int>(a), static_cast<int>(b))] !=
              ring_j->add(sq.q1_section[a], sq.q1_section[b]))
        throw invariant_error("make_milnor_square: section is not a ring homomorphism");
    }
  for (size_t i = 0; i < ring_jp->size(); ++i)
    if (sq.corner_jp.in_sub(static_cast<int>(i)) && !sq.corner_j.in_sub(sq.q1_section[i]))
      throw invariant_error("make_milnor_square: section does not restrict to the subrings");

  // Cartesian: compatible pairs correspond bijectively to elements of the
  // I-corner, for the super rings and for the subrings.
  std::map<std::pair<int, int>, int> patch;
  for (size_t f = 0; f < ring_i->size(); ++f) {
    auto key = std::make_pair(sq.p1[f], sq.p2[f]);
    if (!patch.emplace(key, static_cast<int>(f)).second)
      throw invariant_error("make_milnor_square: projections are not jointly injective");
  }
  size_t compatible = 0;
  for (size_t x = 0; x < ring_j->size(); ++x)
    for (size_t y = 0; y < ring_p->size(); ++y)
      if (sq.q1[x] == sq.q2[y]) {
        ++compatible;
        auto it = patch.find({static_cast<int>(x), static_cast<int>(y)});
        if (it == patch.end()) throw invariant_error("make_milnor_square: compatible pair without a patch");
        bool sub_pair = sq.corner_j.in_sub(static_cast<int>(x)) && sq.corner_p.in_sub(static_cast<int>(y));
        if (sub_pair && !sq.corner_i.in_sub(it->second))
          throw invariant_error("make_milnor_square: subring pair patches outside the subring");
      }
  if (compatible != ring_i->size())
    throw invariant_error("make_milnor_square: compatible pair count mismatch");
  return sq;
}

struct Lemma46Report {
  size_t order_i = 0, order_j = 0, order_p = 0, order_jp = 0;
  bool phi_injective = false;
  bool image_equals_kernel = false;
  bool psi_surjective = false;
  bool pass = false;
};

// The three-term sequence 1 -> I(corner_i) -> I(corner_j) + I(corner_p)
// -> I(corner_jp) -> 1 with phi(M) = (p1(M), p2(M)) and
// psi(M1, M2) = q1(M1) * q2(M2)^{-1}, checked by full enumeration.
inline Lemma46Report verify_lemma46(const MilnorSquareExt& sq) {
  Lemma46Report rep;
  FiniteIGroup gi = brute_force_I(sq.corner_i);
  FiniteIGroup gj = brute_force_I(sq.corner_j);
  FiniteIGroup gp = brute_force_I(sq.corner_p);
  FiniteIGroup gjp = brute_force_I(sq.corner_jp);
  rep.order_i = gi.order();
  rep.order_j = gj.order();
  rep.order_p = gp.order();
  rep.order_jp = gjp.order();

  auto push_module = [](const FiniteExt& dst, const std::vector<int>& mod, const std::vector<int>& map) {
    std::vector<int> seed;
    for (int x : mod) seed.push_back(map[x]);
    return dst.closure(seed);
  };

  // phi and its injectivity
  std::set<std::pair<size_t, size_t>> image;
  bool injective = true;
  for (size_t i = 0; i < gi.order(); ++i) {
    size_t a = gj.find(push_module(sq.corner_j, gi.modules[i], sq.p1));
    size_t b = gp.find(push_module(sq.corner_p, gi.modules[i], sq.p2));
    if (!image.emplace(a, b).second) injective = false;
  }
  rep.phi_injective = injective;

  // psi over all pairs; kernel must equal the phi-image, and the full image
  // must be everything.
  std::vector<size_t> q1_of(gj.order()), q2_of(gp.order());
  for (size_t a = 0; a < gj.order(); ++a)
    q1_of[a] = gjp.find(push_module(sq.corner_jp, gj.modules[a], sq.q1));
  for (size_t b = 0; b < gp.order(); ++b)
    q2_of[b] = gjp.find(push_module(sq.corner_jp, gp.modules[b], sq.q2));
  std::set<size_t> psi_image;
  bool kernel_matches = true;
  for (size_t a = 0; a < gj.order(); ++a)
    for (size_t b = 0; b < gp.order(); ++b) {
      size_t val = gjp.mult[q1_of[a]][gjp.inverse[q2_of[b]]];
      psi_image.insert(val);
      bool in_kernel = val == gjp.identity;
      bool in_image = image.count({a, b}) > 0;
      if (in_kernel != in_image) kernel_matches = false;
    }
  rep.image_equals_kernel = kernel_matches;
  rep.psi_surjective = psi_image.size() == gjp.order();
  rep.pass = rep.phi_injective && rep.image_equals_kernel && rep.psi_surjective;
  return rep;
}

// ---- kernel triviality ------------------------------------------------------

struct KerMainReport {
  bool reduced = false;
  bool m_equals_n = false;
  bool supports_equal = false;  // within the degree bound
  bool trivial = false;
  std::optional<AlgebraElement> witness;  // 1 + n*x for a support gap x
  Int degree_bound;
};

// The group (1 + Nil(B)[N]/I) / (1 + Nil(B)[M]/(I cap M)) is trivial exactly
// when B is reduced or the two supports coincide; a support gap x in N\M off
// the ideal yields the explicit nontrivial element 1 + n x.
inline KerMainReport ker_main_trivial(const RingSpec& b_spec, const AffineMonoid& m,
                                      const AffineMonoid& n, const MonomialIdeal& ideal,
                                      const Int& degree_bound) {
  require_submonoid(m, n);
  if (ideal.host() != n) throw input_error("ker_main_trivial: ideal must live in the super-monoid");
  KerMainReport rep;
  rep.degree_bound = degree_bound;
  rep.reduced = b_spec.is_reduced();
  rep.m_equals_n = monoids_equal(m, n);
  rep.supports_equal = true;
  std::optional<Vec> gap;
  for (const Vec& x : n.elements_up_to(degree_bound)) {
    if (ideal.contains(x) || m.contains(x)) continue;
    rep.supports_equal = false;
    if (!gap) gap = x;
  }
  rep.trivial = rep.reduced || rep.supports_equal;
  if (!rep.trivial) {
    RingElem nil = RingElem::zero(b_spec);
    for (const RingElem& g : nil_generators(b_spec))
      if (!g.is_zero()) {
        nil = g;
        break;
      }
    if (nil.is_zero()) throw invariant_error("ker_main_trivial: non-reduced spec without a nil generator");
    HodgeAlgebra alg(b_spec, n, ideal);
    AlgebraElement w = AlgebraElement::one(alg) + AlgebraElement::monomial(alg, nil, *gap);
    if (!is_unit_elem(w)) throw invariant_error("ker_main_trivial: witness is not a unit");
    rep.witness = std::move(w);
  }
  return rep;
}

// Direct coset enumeration on a truncated finite instance: the group of
// coefficient-nilpotent 1+n elements against the subgroup supported on the
// sub-monoid.
struct KerMainCosets {
  size_t group_order = 0, subgroup_order = 0, index = 0;
  bool trivial = false;
};

inline KerMainCosets ker_main_coset_check(const RingSpec& b_spec, const AffineMonoid& m,
                                          const AffineMonoid& n, const MonomialIdeal& ideal,
                                          const Int& truncation_degree) {
  require_submonoid(m, n);
  MonomialIdeal cut = ideal_union(ideal, truncation_ideal(n, truncation_degree));
  FiniteRing ring(HodgeAlgebra(b_spec, n, cut));
  std::vector<int> group, subgroup;
  AlgebraElement one = AlgebraElement::one(ring.algebra());
  for (size_t i = 0; i < ring.size(); ++i) {
    const AlgebraElement& e = ring.elements()[i];
    AlgebraElement d = e - one;
    bool nil_coeffs = true, in_m = true;
    for (const auto& [mm, c] : d.terms()) {
      if (!c.is_nilpotent()) nil_coeffs = false;
      if (!m.contains(mm)) in_m = false;
    }
    if (!nil_coeffs) continue;
    group.push_back(static_cast<int>(i));
    if (in_m) subgroup.push_back(static_cast<int>(i));
  }
  // closure sanity: both sets are multiplicative groups
  for (int a : group)
    for (int b : group) {
      int p = ring.mul(a, b);
      if (!std::binary_search(group.begin(), group.end(), p))
        throw invariant_error("ker_main_coset_check: 1+Nil part is not closed");
    }
  KerMainCosets res;
  res.group_order = group.size();
  res.subgroup_order = subgroup.size();
  if (res.subgroup_order == 0 || res.group_order % res.subgroup_order != 0)
    throw invariant_error("ker_main_coset_check: subgroup order does not divide the group order");
  res.index = res.group_order / res.subgroup_order;
  res.trivial = res.index == 1;
  return res;
}

// ---- property-level checks of the main theorem ------------------------------

enum class CheckStatus { pass, fail, skipped, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SmokeConfig {
  CoeffExtension coeff_ext;
  AffineMonoid sub_monoid, super_monoid;
  MonomialIdeal ideal;  // radical, hosted in super_monoid
  Int degree_bound = 8;
};

struct SmokeReport {
  CheckStatus retraction = CheckStatus::skipped;
  CheckStatus witness_certificates = CheckStatus::skipped;
  bool quotient_closed = true;  // no b outside A with b^2, b^3 in A was found
  std::optional<AlgebraElement> closedness_counterexample;
  CheckStatus closedness_transfer = CheckStatus::skipped;
  std::string transfer_note;
  CheckStatus nil_support = CheckStatus::skipped;
  std::string nil_note;
  size_t sampled_b = 0;

  bool pass() const {
    auto ok = [](CheckStatus s) { return s != CheckStatus::fail; };
    return ok(retraction) && ok(witness_certificates) && ok(closedness_transfer) && ok(nil_support);
  }
};

namespace detail {

// Is the coefficient sub-spec subintegrally closed in the super-spec? Equal
// specs are closed; a dual layer never is (eps has square and cube zero).
inline bool coeff_ext_closed(const CoeffExtension& e) { return e.is_identity(); }

}  // namespace detail

inline SmokeReport main_theorem_smoke(const SmokeConfig& cfg) {
  SmokeReport rep;
  const RingSpec& b_spec = cfg.coeff_ext.super();
  const AffineMonoid& m = cfg.sub_monoid;
  const AffineMonoid& n = cfg.super_monoid;
  require_submonoid(m, n);

  HodgeAlgebra bq(b_spec, n, cfg.ideal);
  if (bq.ideal_radical() == HodgeAlgebra::Radical::no)
    throw input_error("main_theorem_smoke: ideal must be radical");
  std::vector<SubringGenerator> agens;
  for (const Vec& g : m.generators())
    if (!cfg.ideal.contains(g)) agens.push_back(SubringGenerator{RingElem::one(b_spec), g});
  ExtensionPair ext{MonomialSubring(bq, agens, cfg.coeff_ext, cfg.degree_bound)};

  // (1) the augmentation retracts the constant embedding; on theta-modules the
  // induced composite is the identity.
  {
    std::vector<RingElem> sample_units;
    if (b_spec.is_finite()) {
      for (const RingElem& x : enumerate_ring(b_spec))
        if (x.is_unit()) sample_units.push_back(x);
    } else {
      sample_units.push_back(RingElem::one(b_spec));
      sample_units.push_back(-RingElem::one(b_spec));
    }
    HodgeAlgebra const_alg(b_spec, AffineMonoid::trivial(n.dim()));
    ExtensionPair const_ext{MonomialSubring(const_alg, {}, cfg.coeff_ext, 0)};
    bool ok = true;
    for (const RingElem& u : sample_units) {
      AlgebraElement cu = AlgebraElement::constant(bq, u);
      if (cu.augmentation() != u) ok = false;  // pi restricted to the section
      InvertibleModule up = theta(ext, cu);
      // push through pi: augment every generator
      std::vector<AlgebraElement> g1, g2;
      for (const AlgebraElement& x : up.generators())
        g1.push_back(AlgebraElement::constant(const_alg, x.augmentation()));
      for (const AlgebraElement& x : up.inverse_generators())
        g2.push_back(AlgebraElement::constant(const_alg, x.augmentation()));
      InvertibleModule down(const_ext, g1, g2, {{AlgebraElement::one(const_alg), 0, 0}});
      if (!down.equals(theta(const_ext, AlgebraElement::constant(const_alg, u)), 2)) ok = false;
    }
    rep.retraction = ok ? CheckStatus::pass : CheckStatus::fail;
  }

  // (2) witness-module certificates for sampled b with b^2, b^3 in A, plus the
  // closedness scan.
  {
    std::vector<AlgebraElement> candidates;
    std::vector<RingElem> coeff_pool = b_spec.is_finite()
                                           ? enumerate_ring(b_spec)
                                           : detail::candidate_coefficients(b_spec);
    for (const RingElem& c : coeff_pool)
      if (!c.is_zero()) candidates.push_back(AlgebraElement::constant(bq, c));
    for (const RingElem& nil : nil_generators(b_spec)) {
      if (nil.is_zero()) continue;
      for (const Vec& x : bq.carrier_up_to(std::min(cfg.degree_bound, Int(2))))
        if (!is_zero_vec(x)) candidates.push_back(AlgebraElement::monomial(bq, nil, x));
    }
    Vec wm_monomial = zero_vec(n.dim());
    for (const Vec& g : m.generators())
      if (!cfg.ideal.contains(g)) {
        wm_monomial = g;
        break;
      }
    bool certs_ok = true;
    for (const AlgebraElement& b : candidates) {
      if (ext.sub.contains(b * b) != Tri::yes || ext.sub.contains(b * b * b) != Tri::yes) continue;
      ++rep.sampled_b;
      if (ext.sub.contains(b) != Tri::yes) {
        rep.quotient_closed = false;
        if (!rep.closedness_counterexample) rep.closedness_counterexample = b;
      }
      try {
        witness_modules(ext.sub, b, wm_monomial, WitnessVariant::pm);
        witness_modules(ext.sub, b, std::nullopt, WitnessVariant::cyclotomic);
      } catch (const invariant_error&) {
        certs_ok = false;
      }
    }
    rep.witness_certificates = certs_ok ? CheckStatus::pass : CheckStatus::fail;
  }

  // (3) closedness transfer: closed coefficients (reduced) and a closed monoid
  // extension must leave the quotient pair closed on the sampled candidates.
  {
    bool coeff_closed = detail::coeff_ext_closed(cfg.coeff_ext);
    bool monoid_closed = is_subintegrally_closed(m, n, cfg.degree_bound, 64);
    bool reduced = b_spec.is_reduced();
    if (!coeff_closed || !monoid_closed || !reduced) {
      rep.closedness_transfer = CheckStatus::skipped;
      rep.transfer_note = std::string("premises not met: ") + (coeff_closed ? "" : "coefficients not closed; ") +
                          (monoid_closed ? "" : "monoid not closed; ") + (reduced ? "" : "B not reduced;");
    } else {
      rep.closedness_transfer = rep.quotient_closed ? CheckStatus::pass : CheckStatus::fail;
      if (!rep.quotient_closed) rep.transfer_note = "counterexample survives the transfer premises";
    }
  }

  // (4) nil-support comparison: the nilradicals of the two quotients coincide
  // exactly when B is reduced or the supports agree.
  {
    KerMainReport kr = ker_main_trivial(b_spec, m, n, cfg.ideal, cfg.degree_bound);
    if (kr.supports_equal != kr.m_equals_n && !kr.reduced) {
      rep.nil_support = CheckStatus::inconclusive;
      rep.nil_note = "ideal swallows the support difference; support-level criterion used";
    } else {
      rep.nil_support = CheckStatus::pass;
    }
  }
  return rep;
}

// ---- the exp correspondence over Q ------------------------------------------

struct DiagramConfig {
  CoeffExtension coeff_ext;  // rational sub-spec inside its dual layers
  AffineMonoid monoid;
  MonomialIdeal ideal;  // radical, hosted in the monoid
  Int degree_bound = 6;
  unsigned samples = 8;
  uint64_t seed = 1;
};

struct DiagramReport {
  bool plus_a_is_super = false;
  CheckStatus hom_law = CheckStatus::skipped;
  CheckStatus injectivity = CheckStatus::skipped;
  CheckStatus surjectivity_on_samples = CheckStatus::skipped;
  CheckStatus square_commutes = CheckStatus::skipped;
  size_t sampled = 0;

  bool pass() const {
    auto ok = [](CheckStatus s) { return s != CheckStatus::fail; };
    return ok(hom_law) && ok(injectivity) && ok(surjectivity_on_samples) && ok(square_commutes);
  }
};

inline DiagramReport diagram_thm_check(const DiagramConfig& cfg) {
  if (!cfg.coeff_ext.sub().contains_q())
    throw capability_error("diagram_thm_check: the sub-spec must contain Q");
  const RingSpec& b_spec = cfg.coeff_ext.super();
  DiagramReport rep;

  // Coefficient-level subintegral closure of A in B: over a dual layer the
  // nilpotent directions are elementary, so the closure reaches all of B.
  {
    HodgeAlgebra consts(b_spec, AffineMonoid::trivial(cfg.monoid.dim()));
    MonomialSubring a0(consts, {}, cfg.coeff_ext, 2);
    auto clo = subintegral_closure_ring(a0, 0, ClosureMode::subintegral);
    rep.plus_a_is_super = true;
    for (size_t i = 0; i < b_spec.coord_dim(); ++i) {
      QVec e(b_spec.coord_dim(), Rat(0));
      e[i] = 1;
      AlgebraElement basis = AlgebraElement::constant(consts, RingElem::from_coords(b_spec, e));
      if (clo.closure.contains(basis) != Tri::yes) rep.plus_a_is_super = false;
    }
  }
  if (!rep.plus_a_is_super) return rep;  // supported instances close to the full dual layer

  HodgeAlgebra bq(b_spec, cfg.monoid, cfg.ideal);
  std::vector<SubringGenerator> agens;
  for (const Vec& g : cfg.monoid.generators())
    if (!cfg.ideal.contains(g)) agens.push_back(SubringGenerator{RingElem::one(b_spec), g});
  ExtensionPair ext{MonomialSubring(bq, agens, cfg.coeff_ext, cfg.degree_bound)};

  // Sampled nilpotent coset representatives q * nu * x over the carrier.
  std::vector<RingElem> nil_dirs;
  for (const RingElem& g : nil_generators(b_spec))
    if (!g.is_zero()) nil_dirs.push_back(g);
  std::vector<Vec> monos = bq.carrier_up_to(std::min(cfg.degree_bound, Int(3)));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> numer(-4, 4), denom(1, 3);
  auto random_rat = [&]() {
    int nu = numer(rng);
    if (nu == 0) nu = 1;
    return Rat(nu, denom(rng));
  };
  std::vector<AlgebraElement> reps;
  for (unsigned s = 0; s < cfg.samples; ++s) {
    const RingElem& dir = nil_dirs[s % nil_dirs.size()];
    const Vec& mono = monos[s % monos.size()];
    RingElem c = RingElem::from_rat(b_spec, random_rat()) * dir;
    reps.push_back(AlgebraElement::monomial(bq, c, mono));
  }
  rep.sampled = reps.size();

  // Homomorphism law on sampled pairs.
  {
    bool ok = true;
    for (size_t i = 0; i + 1 < reps.size() && ok; i += 2) {
      InvertibleModule lhs = exp_submodule(ext, reps[i]).mul(exp_submodule(ext, reps[i + 1]));
      InvertibleModule rhs = exp_submodule(ext, reps[i] + reps[i + 1]);
      ok = lhs.equals(rhs, cfg.degree_bound);
    }
    rep.hom_law = ok ? CheckStatus::pass : CheckStatus::fail;
  }

  // Injectivity: distinct representatives give distinct modules.
  {
    bool ok = true;
    size_t limit = std::min<size_t>(reps.size(), 5);
    for (size_t i = 0; i < limit && ok; ++i)
      for (size_t j = i + 1; j < limit && ok; ++j) {
        if (reps[i] == reps[j]) continue;
        if (exp_submodule(ext, reps[i]).equals(exp_submodule(ext, reps[j]), cfg.degree_bound)) ok = false;
      }
    rep.injectivity = ok ? CheckStatus::pass : CheckStatus::fail;
  }

  // Surjectivity on sampled units: every theta-module matches exp(log(...)).
  {
    bool ok = true;
    for (unsigned s = 0; s < cfg.samples && ok; ++s) {
      RingElem c0 = RingElem::from_rat(b_spec, random_rat());
      AlgebraElement u = AlgebraElement::constant(bq, c0) + reps[s % reps.size()];
      if (!is_unit_elem(u)) continue;
      AlgebraElement w = u.scale(c0.inverse()) - AlgebraElement::one(bq);
      auto nv = is_nilpotent_elem(w, 64);
      if (!nv.nilpotent) {
        ok = false;
        break;
      }
      unsigned idx = nv.index ? *nv.index : detail::nilpotency_index_exact(w);
      AlgebraElement logw = AlgebraElement::zero(bq);
      AlgebraElement p = w;
      for (unsigned k = 1; k < idx; ++k) {
        Rat coeff = Rat(k % 2 ? 1 : -1, k);
        logw = logw + p.scale(RingElem::from_rat(b_spec, coeff));
        p = p * w;
      }
      ok = theta(ext, u).equals(exp_submodule(ext, logw), cfg.degree_bound);
    }
    rep.surjectivity_on_samples = ok ? CheckStatus::pass : CheckStatus::fail;
  }

  // Commutativity of the square on sampled coefficient-level modules: pushing
  // A exp(b) down to the algebra pair agrees with exp of the pushed element.
  {
    HodgeAlgebra consts(b_spec, AffineMonoid::trivial(cfg.monoid.dim()));
    ExtensionPair const_ext{MonomialSubring(consts, {}, cfg.coeff_ext, 2)};
    bool ok = true;
    for (unsigned s = 0; s < std::min(cfg.samples, 4u) && ok; ++s) {
      RingElem dir = nil_dirs[s % nil_dirs.size()];
      RingElem c = RingElem::from_rat(b_spec, random_rat()) * dir;
      AlgebraElement b_const = AlgebraElement::constant(consts, c);
      InvertibleModule top = exp_submodule(const_ext, b_const);
      // push down: constants include into the quotient algebra
      std::vector<AlgebraElement> g1, g2;
      for (const AlgebraElement& x : top.generators())
        g1.push_back(AlgebraElement::constant(bq, x.augmentation()));
      for (const AlgebraElement& x : top.inverse_generators())
        g2.push_back(AlgebraElement::constant(bq, x.augmentation()));
      InvertibleModule pushed(ext, g1, g2, {{AlgebraElement::one(bq), 0, 0}});
      ok = pushed.equals(exp_submodule(ext, AlgebraElement::constant(bq, c)), cfg.degree_bound);
    }
    rep.square_commutes = ok ? CheckStatus::pass : CheckStatus::fail;
  }
  return rep;
}

}  // namespace monalg

// Generalized discrete Hodge algebras R[M]/I: sparse elements over the
// monomials of a positive affine monoid outside a monomial ideal, with exact
// ring arithmetic, the augmentation onto the coefficient ring, nilpotence by
// a coefficient criterion cross-checked against a powering oracle, units and
// inverses through finite geometric series, and Milnor patching along a
// radical ideal split.
#pragma once

#include "monalg/coeffring.hpp"
#include "monalg/ideal.hpp"

namespace monalg {

class HodgeAlgebra {
 public:
  HodgeAlgebra(RingSpec coeff, AffineMonoid monoid, MonomialIdeal ideal)
      : data_(std::make_shared<Data>(std::move(coeff), std::move(monoid), std::move(ideal))) {
    if (!data_->monoid.is_positive())
      throw input_error("HodgeAlgebra: monoid must be positive");
    if (data_->ideal.host() != data_->monoid)
      throw input_error("HodgeAlgebra: ideal must be hosted in the monoid");
  }

  HodgeAlgebra(RingSpec coeff, AffineMonoid monoid)
      : HodgeAlgebra(std::move(coeff), monoid, MonomialIdeal::empty(monoid)) {}

  const RingSpec& coeff() const { return data_->coeff; }
  const AffineMonoid& monoid() const { return data_->monoid; }
  const MonomialIdeal& ideal() const { return data_->ideal; }

  bool operator==(const HodgeAlgebra& o) const {
    if (data_ == o.data_) return true;
    return data_->coeff == o.data_->coeff && data_->monoid == o.data_->monoid && data_->ideal == o.data_->ideal;
  }
  bool operator!=(const HodgeAlgebra& o) const { return !(*this == o); }

  // Radicality of the defining ideal: yes / no / unknown (face computation out
  // of desk range). The nil criterion is only asserted when this is yes.
  enum class Radical { yes, no, unknown };
  Radical ideal_radical() const {
    std::lock_guard<std::mutex> lk(data_->mtx);
    if (!data_->radical) {
      try {
        Int bound = 4;
        for (const Vec& g : data_->ideal.generators())
          bound = std::max(bound, 2 * data_->monoid.degree(g));
        data_->radical = is_radical(data_->ideal, 32, bound) ? Radical::yes : Radical::no;
      } catch (const capability_error&) {
        data_->radical = Radical::unknown;
      }
    }
    return *data_->radical;
  }

  // Monomials outside the ideal with degree <= bound (the degree-bounded
  // carrier of the quotient).
  std::vector<Vec> carrier_up_to(const Int& degree_bound) const {
    std::vector<Vec> out;
    for (const Vec& m : data_->monoid.elements_up_to(degree_bound))
      if (!data_->ideal.contains(m)) out.push_back(m);
    return out;
  }

 private:
  struct Data {
    Data(RingSpec c, AffineMonoid m, MonomialIdeal i)
        : coeff(std::move(c)), monoid(std::move(m)), ideal(std::move(i)) {}
    RingSpec coeff;
    AffineMonoid monoid;
    MonomialIdeal ideal;
    mutable std::mutex mtx;
    mutable std::optional<Radical> radical;
  };
  std::shared_ptr<Data> data_;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(HodgeAlgebra parent) : parent_(std::move(parent)) {}

  static AlgebraElement zero(const HodgeAlgebra& a) { return AlgebraElement(a); }

  static AlgebraElement constant(const HodgeAlgebra& a, const RingElem& c) {
    AlgebraElement e(a);
    e.set_term(zero_vec(a.monoid().dim()), c);
    return e;
  }

  static AlgebraElement one(const HodgeAlgebra& a) {
    return constant(a, RingElem::one(a.coeff()));
  }

  static AlgebraElement monomial(const HodgeAlgebra& a, const RingElem& c, const Vec& exp) {
    if (!a.monoid().contains(exp))
      throw input_error("AlgebraElement: exponent " + vec_to_string(exp) + " not in the monoid");
    AlgebraElement e(a);
    e.set_term(exp, c);
    return e;
  }

  const HodgeAlgebra& parent() const { return parent_; }
  const std::map<Vec, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const AlgebraElement& o) const {
    return parent_ == o.parent_ && terms_ == o.terms_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  bool operator<(const AlgebraElement& o) const {  // canonical container order
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return it->first < jt->first;
      if (it->second != jt->second) return it->second < jt->second;
    }
    return jt != o.terms_.end();
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check_parent(o);
    AlgebraElement r(parent_);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  AlgebraElement operator-() const {
    AlgebraElement r(parent_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }

  AlgebraElement operator*(const AlgebraElement& o) const {
    check_parent(o);
    AlgebraElement r(parent_);
    const MonomialIdeal& ideal = parent_.ideal();
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Vec m = vec_add(m1, m2);
        if (ideal.contains(m)) continue;  // quotient reduction, eager
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  AlgebraElement scale(const RingElem& c) const {
    AlgebraElement r(parent_);
    for (const auto& [m, x] : terms_) r.add_term(m, c * x);
    return r;
  }

  AlgebraElement pow(unsigned n) const {
    AlgebraElement r = one(parent_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Coefficient of the identity monomial; a ring retraction onto R for
  // positive monoids, split by the constant embedding.
  RingElem augmentation() const {
    auto it = terms_.find(zero_vec(parent_.monoid().dim()));
    return it == terms_.end() ? RingElem::zero(parent_.coeff()) : it->second;
  }

  RingElem coefficient(const Vec& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RingElem::zero(parent_.coeff()) : it->second;
  }

  Int support_degree() const {
    Int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, parent_.monoid().degree(m));
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*x^" + vec_to_string(m);
    }
    return s;
  }

 private:
  HodgeAlgebra parent_;
  std::map<Vec, RingElem> terms_;

  void check_parent(const AlgebraElement& o) const {
    if (parent_ != o.parent_) throw input_error("AlgebraElement: parent mismatch");
  }

  void set_term(const Vec& m, const RingElem& c) {
    if (c.spec() != parent_.coeff()) throw input_error("AlgebraElement: coefficient spec mismatch");
    if (c.is_zero() || parent_.ideal().contains(m)) return;
    terms_.emplace(m, c);
  }

  void add_term(const Vec& m, const RingElem& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, c);
      return;
    }
    RingElem s = it->second + c;
    if (s.is_zero()) terms_.erase(it);
    else it->second = s;
  }
};

struct NilVerdict {
  bool nilpotent = false;
  std::optional<unsigned> index;  // minimal k with f^k = 0, when confirmed
  bool oracle_confirmed = false;  // powering reached zero within k_max
  bool coeff_criterion = false;   // every coefficient nilpotent in R
  bool widen_kmax = false;        // criterion positive, oracle bound too small
};

// Nilpotence via dual criteria. Over a radical ideal the coefficient
// criterion is exact and must match the powering oracle whenever the oracle
// terminates; the match is asserted. Without radicality only the oracle is
// trusted.
inline NilVerdict is_nilpotent_elem(const AlgebraElement& f, unsigned k_max = 16) {
  NilVerdict v;
  v.coeff_criterion = true;
  for (const auto& [m, c] : f.terms())
    if (!c.is_nilpotent()) {
      v.coeff_criterion = false;
      break;
    }
  AlgebraElement p = f;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (p.is_zero()) {
      v.oracle_confirmed = true;
      v.index = k;
      break;
    }
    p = p * f;
  }
  if (!v.oracle_confirmed && p.is_zero()) {
    v.oracle_confirmed = true;
    v.index = k_max + 1;
  }
  // f == 0 edge: index 1.
  if (f.is_zero()) {
    v.nilpotent = true;
    v.oracle_confirmed = true;
    v.index = 1;
    return v;
  }

  bool radical = f.parent().ideal_radical() == HodgeAlgebra::Radical::yes;
  if (radical && v.oracle_confirmed && !v.coeff_criterion)
    throw invariant_error("is_nilpotent_elem: oracle found zero power but a coefficient is not nilpotent");
  if (radical) {
    v.nilpotent = v.coeff_criterion;
    if (v.coeff_criterion && !v.oracle_confirmed) v.widen_kmax = true;
  } else {
    v.nilpotent = v.oracle_confirmed;
  }
  return v;
}

namespace detail {
// Exact nilpotency index by unbounded powering; caller guarantees nilpotence.
inline unsigned nilpotency_index_exact(const AlgebraElement& f) {
  AlgebraElement p = f;
  for (unsigned k = 1; k <= 4096; ++k) {
    if (p.is_zero()) return k;
    p = p * f;
  }
  throw invariant_error("nilpotency_index_exact: no zero power within 4096");
}
}  // namespace detail

// f is a unit iff its augmentation is a unit of R and the rest is nilpotent;
// the inverse is the finite geometric series, re-checked by multiplication.
inline bool is_unit_elem(const AlgebraElement& f, unsigned k_max = 16) {
  RingElem c = f.augmentation();
  if (!c.is_unit()) return false;
  AlgebraElement n = f - AlgebraElement::constant(f.parent(), c);
  return is_nilpotent_elem(n, k_max).nilpotent;
}

inline AlgebraElement inverse_elem(const AlgebraElement& f, unsigned k_max = 16) {
  if (!is_unit_elem(f, k_max)) throw input_error("inverse_elem: not a unit");
  RingElem c = f.augmentation();
  RingElem ci = c.inverse();
  AlgebraElement n = f - AlgebraElement::constant(f.parent(), c);
  AlgebraElement inv = AlgebraElement::zero(f.parent());
  if (n.is_zero()) {
    inv = AlgebraElement::constant(f.parent(), ci);
  } else {
    unsigned idx = detail::nilpotency_index_exact(n);
    AlgebraElement t = n.scale(-ci);  // -c^{-1} n
    AlgebraElement power = AlgebraElement::one(f.parent());
    for (unsigned k = 0; k < idx; ++k) {
      inv = inv + power.scale(ci);
      power = power * t;
    }
  }
  if ((inv * f) != AlgebraElement::one(f.parent()))
    throw invariant_error("inverse_elem: round trip failed");
  return inv;
}

// Quotient map R[M]/I -> R[M]/J for J containing I (verified on generators).
inline AlgebraElement project_to(const AlgebraElement& f, const HodgeAlgebra& target) {
  if (target.coeff() != f.parent().coeff() || target.monoid() != f.parent().monoid())
    throw input_error("project_to: algebras differ beyond the ideal");
  for (const Vec& g : f.parent().ideal().generators())
    if (!target.ideal().contains(g))
      throw input_error("project_to: target ideal does not contain the source ideal");
  AlgebraElement r(target);
  for (const auto& [m, c] : f.terms())
    if (!target.ideal().contains(m)) r = r + AlgebraElement::monomial(target, c, m);
  return r;
}

// Patch along a Milnor square: I = J cap P (verified exactly on the degree
// range carrying all minimal generators), f1 over R[M]/J and f2 over R[M]/P
// with equal corner images in R[M]/(J u P). The result is the unique element
// projecting to both; nilpotent inputs must patch to a nilpotent output.
inline AlgebraElement milnor_patch(const HodgeAlgebra& target, const AlgebraElement& f1,
                                   const AlgebraElement& f2) {
  const HodgeAlgebra& aj = f1.parent();
  const HodgeAlgebra& ap = f2.parent();
  if (aj.coeff() != target.coeff() || ap.coeff() != target.coeff() ||
      aj.monoid() != target.monoid() || ap.monoid() != target.monoid())
    throw input_error("milnor_patch: corner algebras do not match the target");
  const MonomialIdeal &i = target.ideal(), &j = aj.ideal(), &p = ap.ideal();
  const AffineMonoid& mon = target.monoid();
  for (const Vec& g : i.generators())
    if (!j.contains(g) || !p.contains(g)) throw input_error("milnor_patch: I is not inside J and P");
  // I = J cap P: all minimal generators of either side have degree at most
  // maxdeg(J gens) + maxdeg(P gens), so agreement up to that degree is exact.
  Int check_deg = 2;
  for (const Vec& g : j.generators()) check_deg = std::max(check_deg, mon.degree(g));
  Int pdeg = 2;
  for (const Vec& g : p.generators()) pdeg = std::max(pdeg, mon.degree(g));
  check_deg += pdeg;
  for (const Vec& x : mon.elements_up_to(check_deg))
    if ((j.contains(x) && p.contains(x)) != i.contains(x))
      throw input_error("milnor_patch: ideal is not the intersection of the split parts");

  HodgeAlgebra corner(target.coeff(), mon, ideal_union(j, p));
  if (project_to(f1, corner) != project_to(f2, corner))
    throw input_error("milnor_patch: corner images disagree");

  AlgebraElement f(target);
  for (const auto& [m, c] : f1.terms()) f = f + AlgebraElement::monomial(target, c, m);
  for (const auto& [m, c] : f2.terms())
    if (j.contains(m)) f = f + AlgebraElement::monomial(target, c, m);

  if (project_to(f, aj) != f1 || project_to(f, ap) != f2)
    throw invariant_error("milnor_patch: re-projection failed");

  auto n1 = is_nilpotent_elem(f1), n2 = is_nilpotent_elem(f2);
  if (n1.nilpotent && n1.index && n2.nilpotent && n2.index) {
    AlgebraElement q = f.pow(*n1.index + *n2.index);
    if (!q.is_zero()) throw invariant_error("milnor_patch: nilpotents did not patch to a nilpotent");
  }
  return f;
}

// Description of Nil(R[M]/I) for radical I: the coefficients range over
// Nil(R) on the carrier monomials.
struct NilradicalDescription {
  HodgeAlgebra algebra;
  std::vector<RingElem> coefficient_generators;  // generators of Nil(R)

  bool contains(const AlgebraElement& f) const {
    if (f.parent() != algebra) throw input_error("nilradical description: parent mismatch");
    for (const auto& [m, c] : f.terms())
      if (!c.is_nilpotent()) return false;
    return true;
  }
};

inline NilradicalDescription nilradical_description(const HodgeAlgebra& a) {
  if (a.ideal_radical() != HodgeAlgebra::Radical::yes)
    throw input_error("nilradical_description: ideal must be radical");
  return NilradicalDescription{a, nil_generators(a.coeff())};
}

// R[M]/I -> (R/Nil(R))[M]/I with coefficient-wise transport.
struct ModNilReduction {
  HodgeAlgebra reduced;

  AlgebraElement transport(const AlgebraElement& f) const {
    AlgebraElement r(reduced);
    for (const auto& [m, c] : f.terms()) {
      RingElem rc = reduce_mod_nil(c);
      if (!rc.is_zero()) r = r + AlgebraElement::monomial(reduced, rc, m);
    }
    return r;
  }
};

inline ModNilReduction reduce_algebra_mod_nil(const HodgeAlgebra& a) {
  return ModNilReduction{HodgeAlgebra(spec_mod_nil(a.coeff()), a.monoid(), a.ideal())};
}

}  // namespace monalg

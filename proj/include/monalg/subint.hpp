// Subintegrality and weak subintegrality for ring extensions presented by
// monomial generators. A subring is carried by a per-monomial table of
// coefficient modules (the linearization that turns the weak-subintegrality
// criterion into exact linear feasibility), built to a fixed degree bound.
// On top of the table: membership, elementary subintegral tests, the weak
// witness solver, closure fixpoints in both modes, the characteristic-zero
// equivalence check with its characteristic-p divergence flag, and the
// witness-module construction with an explicit full-ring certificate.
#pragma once

#include "monalg/algebra.hpp"

namespace monalg {

enum class Tri { no, yes, unknown };

// Finitely generated module of coefficients inside (R_B, +), closed under the
// base-ring action. Membership is an exact lattice solve (integer scalars,
// with moduli from Z/m slots) or a rational solve (when the base contains Q).
class CoeffSpan {
 public:
  CoeffSpan(RingSpec spec, bool rational_scalars)
      : spec_(std::move(spec)), rational_(rational_scalars), moduli_(spec_.coord_moduli()) {}

  const std::vector<RingElem>& generators() const { return gens_; }
  bool rational_scalars() const { return rational_; }

  bool member(const RingElem& x) const {
    if (x.is_zero()) return true;
    if (gens_.empty()) return false;
    QVec t = x.coords();
    if (rational_) {
      QMat a(t.size(), gens_.size());
      for (size_t j = 0; j < gens_.size(); ++j) {
        QVec c = gens_[j].coords();
        for (size_t i = 0; i < t.size(); ++i) a.at(i, j) = c[i];
      }
      return gauss_solve(a, t).has_value();
    }
    // Integer scalars; clear denominators jointly (moduli slots are integral).
    Int lcm = 1;
    auto bump = [&](const Rat& r) { lcm = lcm / gcd(lcm, Int(denominator(r))) * Int(denominator(r)); };
    for (const Rat& r : t) bump(r);
    for (const RingElem& g : gens_)
      for (const Rat& r : g.coords()) bump(r);
    IntMat a(t.size(), gens_.size());
    Vec tv(t.size()), mod(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
      tv[i] = Int(numerator(t[i])) * (lcm / Int(denominator(t[i])));
      mod[i] = moduli_[i] * lcm;
    }
    for (size_t j = 0; j < gens_.size(); ++j) {
      QVec c = gens_[j].coords();
      for (size_t i = 0; i < t.size(); ++i) a.at(i, j) = Int(numerator(c[i])) * (lcm / Int(denominator(c[i])));
    }
    return integer_solve_mod(a, tv, mod).has_value();
  }

  // Returns true when the span grew.
  bool add(const RingElem& x) {
    if (member(x)) return false;
    gens_.push_back(x);
    return true;
  }

 private:
  RingSpec spec_;
  bool rational_;
  Vec moduli_;
  std::vector<RingElem> gens_;
};

struct SubringGenerator {
  RingElem coeff;
  Vec monomial;
};

class MonomialSubring {
 public:
  MonomialSubring(HodgeAlgebra ambient, std::vector<SubringGenerator> gens,
                  std::optional<CoeffExtension> base, Int degree_bound)
      : ambient_(std::move(ambient)),
        gens_(std::move(gens)),
        base_(std::move(base)),
        degree_bound_(std::move(degree_bound)) {
    if (base_ && base_->super() != ambient_.coeff())
      throw input_error("MonomialSubring: base inclusion does not target the coefficient ring");
    for (const auto& g : gens_) {
      if (g.coeff.spec() != ambient_.coeff()) throw input_error("MonomialSubring: generator coefficient spec mismatch");
      if (!ambient_.monoid().contains(g.monomial))
        throw input_error("MonomialSubring: generator monomial not in the monoid");
      if (ambient_.ideal().contains(g.monomial))
        throw input_error("MonomialSubring: generator monomial lies in the ideal");
    }
    rational_ = base_ && base_->sub().contains_q();
    build_table();
  }

  const HodgeAlgebra& ambient() const { return ambient_; }
  const std::vector<SubringGenerator>& generators() const { return gens_; }
  const std::optional<CoeffExtension>& base() const { return base_; }
  const Int& degree_bound() const { return degree_bound_; }

  const CoeffSpan* span_at(const Vec& m) const {
    auto it = table_.find(m);
    return it == table_.end() ? nullptr : &it->second;
  }

  // Per-monomial membership: every coefficient of f must lie in the tabulated
  // module at its monomial. Support beyond the table is unknown.
  Tri contains(const AlgebraElement& f) const {
    if (f.parent() != ambient_) throw input_error("MonomialSubring: element from a different ambient algebra");
    for (const auto& [m, c] : f.terms()) {
      if (ambient_.monoid().degree(m) > degree_bound_) return Tri::unknown;
      auto it = table_.find(m);
      if (it == table_.end()) return Tri::no;  // tabulated degree, unreachable monomial
      if (!it->second.member(c)) return Tri::no;
    }
    return Tri::yes;
  }

  bool contains_or_throw(const AlgebraElement& f) const {
    Tri t = contains(f);
    if (t == Tri::unknown) throw bound_error("subring membership: support exceeds the tabulated degree bound");
    return t == Tri::yes;
  }

  // Table invariant: products of tabulated modules land in the tabulated
  // module of the product monomial (checked where the product is in range).
  void verify_table_consistency() const {
    for (const auto& [m1, s1] : table_)
      for (const auto& [m2, s2] : table_) {
        Vec w = vec_add(m1, m2);
        if (ambient_.ideal().contains(w)) continue;
        if (ambient_.monoid().degree(w) > degree_bound_) continue;
        auto it = table_.find(w);
        for (const RingElem& a : s1.generators())
          for (const RingElem& b : s2.generators()) {
            RingElem p = a * b;
            if (p.is_zero()) continue;
            if (it == table_.end() || !it->second.member(p))
              throw invariant_error("MonomialSubring: table not multiplicatively consistent");
          }
      }
  }

  MonomialSubring with_extra_generators(std::vector<SubringGenerator> extra) const {
    std::vector<SubringGenerator> all = gens_;
    all.insert(all.end(), extra.begin(), extra.end());
    return MonomialSubring(ambient_, std::move(all), base_, degree_bound_);
  }

  // Additive coordinate basis of the base ring, embedded upstairs (just {1}
  // when no base inclusion was supplied).
  std::vector<RingElem> base_action_elems() const {
    std::vector<RingElem> out;
    if (!base_) {
      out.push_back(RingElem::one(ambient_.coeff()));
      return out;
    }
    size_t dim = base_->sub().coord_dim();
    for (size_t i = 0; i < dim; ++i) {
      QVec e(dim, Rat(0));
      e[i] = 1;
      out.push_back(base_->embed(RingElem::from_coords(base_->sub(), e)));
    }
    return out;
  }

  bool rational_scalars() const { return rational_; }

 private:
  HodgeAlgebra ambient_;
  std::vector<SubringGenerator> gens_;
  std::optional<CoeffExtension> base_;
  Int degree_bound_;
  bool rational_ = false;
  std::map<Vec, CoeffSpan> table_;

  void build_table() {
    const RingSpec& spec = ambient_.coeff();
    std::vector<RingElem> action = base_action_elems();
    auto add_closed = [&](CoeffSpan& span, const RingElem& x) {
      bool changed = false;
      std::vector<RingElem> queue{x};
      while (!queue.empty()) {
        RingElem cur = queue.back();
        queue.pop_back();
        if (cur.is_zero() || !span.add(cur)) continue;
        changed = true;
        for (const RingElem& u : action) queue.push_back(cur * u);
      }
      return changed;
    };

    Vec zero = zero_vec(ambient_.monoid().dim());
    table_.emplace(zero, CoeffSpan(spec, rational_));
    add_closed(table_.at(zero), RingElem::one(spec));

    std::set<Vec> dirty{zero};
    while (!dirty.empty()) {
      Vec m = *dirty.begin();
      dirty.erase(dirty.begin());
      // Copy the current span generators: new ones re-mark the monomial.
      std::vector<RingElem> src = table_.at(m).generators();
      for (const auto& g : gens_) {
        Vec w = vec_add(m, g.monomial);
        if (ambient_.ideal().contains(w)) continue;
        if (ambient_.monoid().degree(w) > degree_bound_) continue;
        auto [it, unused] = table_.try_emplace(w, CoeffSpan(spec, rational_));
        bool changed = false;
        for (const RingElem& s : src) changed |= add_closed(it->second, g.coeff * s);
        if (changed) dirty.insert(w);
      }
    }
  }
};

// ---- linear solving over the table ---------------------------------------

namespace detail {

// Incremental linear system over the additive coordinates of the coefficient
// ring; rows carry the modulus of their coordinate slot.
struct CoeffSystem {
  bool rational;
  size_t nvars = 0;
  std::vector<QVec> rows;
  QVec rhs;
  Vec row_moduli;

  explicit CoeffSystem(bool rat) : rational(rat) {}

  size_t add_vars(size_t n) {
    size_t first = nvars;
    nvars += n;
    for (QVec& r : rows) r.resize(nvars, Rat(0));
    return first;
  }

  size_t add_row(const Rat& rhs_value, const Int& modulus) {
    rows.emplace_back(nvars, Rat(0));
    rhs.push_back(rhs_value);
    row_moduli.push_back(modulus);
    return rows.size() - 1;
  }

  void add_coeff(size_t row, size_t var, const Rat& c) { rows[row][var] += c; }

  std::optional<QVec> solve() const {
    if (rational) {
      QMat a(rows.size(), nvars);
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nvars; ++j) a.at(i, j) = rows[i][j];
      return gauss_solve(a, rhs);
    }
    Int lcm = 1;
    auto bump = [&](const Rat& r) { lcm = lcm / gcd(lcm, Int(denominator(r))) * Int(denominator(r)); };
    for (const QVec& r : rows)
      for (const Rat& x : r) bump(x);
    for (const Rat& x : rhs) bump(x);
    IntMat a(rows.size(), nvars);
    Vec t(rows.size()), mod(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = 0; j < nvars; ++j) a.at(i, j) = Int(numerator(rows[i][j])) * (lcm / Int(denominator(rows[i][j])));
      t[i] = Int(numerator(rhs[i])) * (lcm / Int(denominator(rhs[i])));
      mod[i] = row_moduli[i] * lcm;
    }
    auto sol = integer_solve_mod(a, t, mod);
    if (!sol) return std::nullopt;
    QVec out(nvars);
    for (size_t j = 0; j < nvars; ++j) out[j] = Rat((*sol)[j]);
    return out;
  }
};

}  // namespace detail

struct ModuleContainsResult {
  bool found = false;
  bool bound_limited = false;            // support restriction may have hidden a solution
  std::vector<AlgebraElement> coefficients;  // a_i with target = sum a_i * gens[i]
};

// Does target = sum a_i * gens[i] with each a_i drawn from the subring A?
// The a_i supports are restricted to tabulated monomials with degree at most
// `support_degree`; each coefficient slot is parametrized by the span
// generators of A's table, so the question is one exact linear system.
inline ModuleContainsResult module_contains(const MonomialSubring& a,
                                            const std::vector<AlgebraElement>& gens,
                                            const AlgebraElement& target, const Int& support_degree) {
  const HodgeAlgebra& amb = a.ambient();
  for (const AlgebraElement& g : gens)
    if (g.parent() != amb) throw input_error("module_contains: generator from a different algebra");
  if (target.parent() != amb) throw input_error("module_contains: target from a different algebra");

  ModuleContainsResult res;
  // Collect the allowed support monomials of the a_i.
  std::vector<Vec> support;
  for (const Vec& m : amb.carrier_up_to(std::min(support_degree, a.degree_bound())))
    if (a.span_at(m) && !a.span_at(m)->generators().empty()) support.push_back(m);
  if (support_degree > a.degree_bound()) res.bound_limited = true;

  detail::CoeffSystem sys(a.rational_scalars());
  const size_t cdim = amb.coeff().coord_dim();
  Vec moduli = amb.coeff().coord_moduli();

  // Variable layout per (generator index, support monomial, span generator).
  struct VarBlock {
    size_t gen, first;
    Vec monomial;
    const CoeffSpan* span;
  };
  std::vector<VarBlock> blocks;
  for (size_t i = 0; i < gens.size(); ++i)
    for (const Vec& m : support) {
      const CoeffSpan* span = a.span_at(m);
      blocks.push_back(VarBlock{i, sys.add_vars(span->generators().size()), m, span});
    }

  // Equations per (result monomial, coordinate slot).
  std::map<Vec, size_t> row_of;  // monomial -> first row index
  auto rows_for = [&](const Vec& w) {
    auto it = row_of.find(w);
    if (it != row_of.end()) return it->second;
    QVec t = target.coefficient(w).coords();
    size_t first = SIZE_MAX;
    for (size_t c = 0; c < cdim; ++c) {
      size_t r = sys.add_row(t[c], moduli[c]);
      if (c == 0) first = r;
    }
    row_of.emplace(w, first);
    return first;
  };
  for (const auto& [w, c] : target.terms()) rows_for(w);
  for (const VarBlock& b : blocks)
    for (const auto& [n, gc] : gens[b.gen].terms()) {
      Vec w = vec_add(b.monomial, n);
      if (amb.ideal().contains(w)) continue;
      size_t first = rows_for(w);
      for (size_t j = 0; j < b.span->generators().size(); ++j) {
        RingElem contrib = b.span->generators()[j] * gc;
        QVec cc = contrib.coords();
        for (size_t c = 0; c < cdim; ++c) sys.add_coeff(first + c, b.first + j, cc[c]);
      }
    }

  auto sol = sys.solve();
  if (!sol) return res;

  // Reassemble the witnesses and re-check the combination exactly.
  std::vector<AlgebraElement> coeffs(gens.size(), AlgebraElement::zero(amb));
  for (const VarBlock& b : blocks) {
    RingElem c = RingElem::zero(amb.coeff());
    for (size_t j = 0; j < b.span->generators().size(); ++j) {
      const Rat& y = (*sol)[b.first + j];
      if (y == 0) continue;
      if (a.rational_scalars()) {
        c = c + RingElem::from_rat(amb.coeff(), y) * b.span->generators()[j];
      } else {
        // integer multiple: k * x = (k * 1_R) * x
        c = c + RingElem::from_int(amb.coeff(), Int(numerator(y))) * b.span->generators()[j];
      }
    }
    if (!c.is_zero()) coeffs[b.gen] = coeffs[b.gen] + AlgebraElement::monomial(amb, c, b.monomial);
  }
  AlgebraElement sum = AlgebraElement::zero(amb);
  for (size_t i = 0; i < gens.size(); ++i) sum = sum + coeffs[i] * gens[i];
  if (sum != target) throw invariant_error("module_contains: reassembled combination mismatch");
  for (const AlgebraElement& c : coeffs)
    if (a.contains(c) != Tri::yes) throw invariant_error("module_contains: witness coefficient not in the subring");
  res.found = true;
  res.coefficients = std::move(coeffs);
  return res;
}

// ---- elementary and weak subintegrality -----------------------------------

inline Tri is_elementary_subintegral_element(const MonomialSubring& a, const AlgebraElement& b) {
  Tri t2 = a.contains(b * b);
  Tri t3 = a.contains(b * b * b);
  if (t2 == Tri::no || t3 == Tri::no) return Tri::no;
  if (t2 == Tri::unknown || t3 == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}

struct WeakWitness {
  unsigned p = 0;
  std::vector<AlgebraElement> cs;  // c_1 ... c_p
};

struct WeakResult {
  std::optional<WeakWitness> witness;
  bool bound_limited = false;  // some p was skipped because conditions left the table
};

namespace detail {

// Re-verify a weak witness by direct evaluation of all 2p+1 conditions.
inline void verify_weak_witness(const MonomialSubring& a, const AlgebraElement& b,
                                const WeakWitness& w) {
  const RingSpec& spec = a.ambient().coeff();
  for (unsigned n = 1; n <= 2 * w.p + 1; ++n) {
    AlgebraElement t = b.pow(n);
    for (unsigned i = 1; i <= w.p; ++i)
      t = t + w.cs[i - 1].scale(RingElem::from_int(spec, binomial(Int(n), Int(i)))) * b.pow(n - i);
    if (a.contains(t) != Tri::yes)
      throw invariant_error("weak witness failed re-verification at n=" + std::to_string(n));
  }
}

}  // namespace detail

// Search for c_1..c_p with b^n + sum binom(n,i) c_i b^{n-i} in A for all
// 1 <= n <= 2p+1, increasing p up to p_max. For a single-monomial b = c*z the
// c_i supports collapse to the monomial i*z (complete for such b); otherwise
// supports are degree-capped and the verdict is bound-complete only.
inline WeakResult is_weakly_subintegral_element(const MonomialSubring& a, const AlgebraElement& b,
                                                unsigned p_max, const Int& degree_bound) {
  const HodgeAlgebra& amb = a.ambient();
  const RingSpec& spec = amb.coeff();
  const size_t cdim = spec.coord_dim();
  Vec moduli = spec.coord_moduli();
  WeakResult result;

  // p = 0: the condition degenerates to b in A.
  switch (a.contains(b)) {
    case Tri::yes: result.witness = WeakWitness{0, {}}; return result;
    case Tri::unknown: result.bound_limited = true; break;
    case Tri::no: break;
  }
  if (b.is_zero()) return result;

  bool monomial_b = b.terms().size() == 1;
  for (unsigned p = 1; p <= p_max; ++p) {
    if (monomial_b) {
      const Vec& z = b.terms().begin()->first;
      const RingElem& c = b.terms().begin()->second;
      // Unknowns: coordinates of c_i' in R_B, where c_i = c_i' * z^i.
      detail::CoeffSystem sys(a.rational_scalars());
      std::vector<size_t> var_of(p);
      for (unsigned i = 1; i <= p; ++i) var_of[i - 1] = sys.add_vars(cdim);
      bool skip_p = false;
      for (unsigned n = 1; n <= 2 * p + 1 && !skip_p; ++n) {
        Vec w = vec_scale(Int(n), z);
        if (amb.ideal().contains(w)) continue;  // the whole condition element is 0
        if (amb.monoid().degree(w) > a.degree_bound()) {
          skip_p = true;
          break;
        }
        const CoeffSpan* span = a.span_at(w);
        // condition: c^n + sum_i binom(n,i) c^{n-i} c_i'  in  span(w)
        size_t first = SIZE_MAX;
        QVec rhsv = (-c.pow(n)).coords();
        for (size_t cc = 0; cc < cdim; ++cc) {
          size_t r = sys.add_row(rhsv[cc], moduli[cc]);
          if (cc == 0) first = r;
        }
        for (unsigned i = 1; i <= p && i <= n; ++i) {
          RingElem factor = RingElem::from_int(spec, binomial(Int(n), Int(i))) * c.pow(n - i);
          // factor * c_i' as a linear map on the coordinates of c_i'
          for (size_t s = 0; s < cdim; ++s) {
            QVec unit(cdim, Rat(0));
            unit[s] = 1;
            RingElem basis = RingElem::from_coords(spec, unit);
            QVec col = (factor * basis).coords();
            for (size_t cc = 0; cc < cdim; ++cc) sys.add_coeff(first + cc, var_of[i - 1] + s, col[cc]);
          }
        }
        if (span && !span->generators().empty()) {
          size_t sv = sys.add_vars(span->generators().size());
          for (size_t j = 0; j < span->generators().size(); ++j) {
            QVec col = span->generators()[j].coords();
            for (size_t cc = 0; cc < cdim; ++cc) sys.add_coeff(first + cc, sv + j, -col[cc]);
          }
        }
      }
      if (skip_p) {
        result.bound_limited = true;
        continue;
      }
      auto sol = sys.solve();
      if (!sol) continue;
      WeakWitness wit;
      wit.p = p;
      for (unsigned i = 1; i <= p; ++i) {
        QVec cv(cdim);
        for (size_t s = 0; s < cdim; ++s) cv[s] = (*sol)[var_of[i - 1] + s];
        RingElem ci = RingElem::from_coords(spec, cv);
        wit.cs.push_back(AlgebraElement::monomial(amb, ci, vec_scale(Int(i), z)));
      }
      detail::verify_weak_witness(a, b, wit);
      result.witness = std::move(wit);
      return result;
    }

    // General b: unknown c_i supported on carrier monomials of capped degree.
    Int bdeg = b.support_degree();
    if (bdeg == 0) bdeg = 1;
    Int cap = degree_bound - Int(2 * p + 1) * bdeg;
    if (cap < 0) {
      result.bound_limited = true;
      continue;
    }
    std::vector<Vec> support = amb.carrier_up_to(cap);
    detail::CoeffSystem sys(a.rational_scalars());
    std::vector<std::pair<Vec, size_t>> vars;  // (monomial, first var) per c_i block, i-major
    for (unsigned i = 1; i <= p; ++i)
      for (const Vec& m : support) vars.emplace_back(m, sys.add_vars(cdim));

    std::map<Vec, size_t> row_of;
    bool skip_p = false;
    for (unsigned n = 1; n <= 2 * p + 1 && !skip_p; ++n) {
      // element: b^n + sum_i binom(n,i) c_i b^{n-i}; every surviving monomial
      // must have its coefficient in the span at that monomial.
      AlgebraElement bn = b.pow(n);
      std::set<Vec> monos;
      for (const auto& [m, cc] : bn.terms()) monos.insert(m);
      std::vector<AlgebraElement> bpow(n + 1, AlgebraElement::one(amb));
      for (unsigned k = 1; k <= n; ++k) bpow[k] = bpow[k - 1] * b;
      for (unsigned i = 1; i <= p && i <= n; ++i)
        for (const Vec& m : support)
          for (const auto& [nn, gc] : bpow[n - i].terms()) {
            Vec w = vec_add(m, nn);
            if (!amb.ideal().contains(w)) monos.insert(w);
          }
      for (const Vec& w : monos) {
        if (amb.monoid().degree(w) > a.degree_bound()) {
          skip_p = true;
          break;
        }
        // one row block per (condition n, monomial w)
        QVec rhsv = (-bn.coefficient(w)).coords();
        size_t first = SIZE_MAX;
        for (size_t cc = 0; cc < cdim; ++cc) {
          size_t r = sys.add_row(rhsv[cc], moduli[cc]);
          if (cc == 0) first = r;
        }
        size_t block = 0;
        for (unsigned i = 1; i <= p; ++i)
          for (const Vec& m : support) {
            size_t var0 = vars[block++].second;
            if (i > n) continue;
            Vec need = vec_sub(w, m);
            RingElem gc = bpow[n - i].coefficient(need);
            if (gc.is_zero()) continue;
            RingElem factor = RingElem::from_int(spec, binomial(Int(n), Int(i))) * gc;
            for (size_t s = 0; s < cdim; ++s) {
              QVec unit(cdim, Rat(0));
              unit[s] = 1;
              QVec col = (factor * RingElem::from_coords(spec, unit)).coords();
              for (size_t cc = 0; cc < cdim; ++cc) sys.add_coeff(first + cc, var0 + s, col[cc]);
            }
          }
        const CoeffSpan* span = a.span_at(w);
        if (span && !span->generators().empty()) {
          size_t sv = sys.add_vars(span->generators().size());
          for (size_t j = 0; j < span->generators().size(); ++j) {
            QVec col = span->generators()[j].coords();
            for (size_t cc = 0; cc < cdim; ++cc) sys.add_coeff(first + cc, sv + j, -col[cc]);
          }
        }
      }
    }
    if (skip_p) {
      result.bound_limited = true;
      continue;
    }
    auto sol = sys.solve();
    if (!sol) continue;
    WeakWitness wit;
    wit.p = p;
    size_t block = 0;
    for (unsigned i = 1; i <= p; ++i) {
      AlgebraElement ci = AlgebraElement::zero(amb);
      for (const Vec& m : support) {
        size_t var0 = vars[block++].second;
        QVec cv(cdim);
        for (size_t s = 0; s < cdim; ++s) cv[s] = (*sol)[var0 + s];
        RingElem c = RingElem::from_coords(spec, cv);
        if (!c.is_zero()) ci = ci + AlgebraElement::monomial(amb, c, m);
      }
      wit.cs.push_back(ci);
    }
    detail::verify_weak_witness(a, b, wit);
    result.witness = std::move(wit);
    return result;
  }
  return result;
}

// Verifier for the monic-equation form of weak subintegrality: given
// externally supplied a_1..a_{2p+1} in A, check
// b^n + sum_{i=1..n} (-1)^i binom(n,i) a_i b^{n-i} = 0 for p+1 <= n <= 2p+1.
inline bool verify_monic_weak_equations(const MonomialSubring& a, const AlgebraElement& b,
                                        const std::vector<AlgebraElement>& as) {
  if (as.size() % 2 == 0) throw input_error("verify_monic_weak_equations: need 2p+1 coefficients");
  unsigned p = (static_cast<unsigned>(as.size()) - 1) / 2;
  const RingSpec& spec = a.ambient().coeff();
  for (const AlgebraElement& ai : as)
    if (a.contains(ai) != Tri::yes) throw input_error("verify_monic_weak_equations: coefficient not in A");
  for (unsigned n = p + 1; n <= 2 * p + 1; ++n) {
    AlgebraElement t = b.pow(n);
    for (unsigned i = 1; i <= n; ++i) {
      Int sign = i % 2 ? -1 : 1;
      t = t + as[i - 1].scale(RingElem::from_int(spec, sign * binomial(Int(n), Int(i)))) * b.pow(n - i);
    }
    if (!t.is_zero()) return false;
  }
  return true;
}

// ---- ring-level closure fixpoints -----------------------------------------

enum class ClosureMode { subintegral, weak };

struct RingClosureResult {
  MonomialSubring closure;
  std::vector<AlgebraElement> adjoined;
  bool bound_limited = false;
};

namespace detail {

inline std::vector<RingElem> candidate_coefficients(const RingSpec& spec) {
  if (spec.is_finite()) {
    std::vector<RingElem> out;
    for (const RingElem& x : enumerate_ring(spec))
      if (!x.is_zero()) out.push_back(x);
    return out;
  }
  size_t dim = spec.coord_dim();
  int range = spec.contains_q() ? 1 : 3;  // rational directions vs small lattice steps
  std::vector<RingElem> out;
  std::vector<int> k(dim, -range);
  while (true) {
    QVec v(dim);
    bool zero = true;
    for (size_t i = 0; i < dim; ++i) {
      v[i] = k[i];
      if (k[i] != 0) zero = false;
    }
    if (!zero) out.push_back(RingElem::from_coords(spec, v));
    size_t i = 0;
    while (i < dim && k[i] == range) k[i++] = -range;
    if (i == dim) break;
    ++k[i];
  }
  return out;
}

}  // namespace detail

// Fixpoint closure of A inside its ambient algebra over single-monomial
// candidates c*m with degree <= candidate_degree. In weak mode a candidate is
// adjoined also when b^p and p*b land in the current ring for a small prime p.
inline RingClosureResult subintegral_closure_ring(const MonomialSubring& a, const Int& candidate_degree,
                                                  ClosureMode mode) {
  const HodgeAlgebra& amb = a.ambient();
  std::vector<RingElem> coeffs = detail::candidate_coefficients(amb.coeff());
  std::vector<Vec> monos = amb.carrier_up_to(candidate_degree);
  if (coeffs.size() * monos.size() > 50000)
    throw capability_error("subintegral_closure_ring: candidate explosion (" +
                           std::to_string(coeffs.size() * monos.size()) + " candidates)");
  std::vector<AlgebraElement> candidates;
  for (const Vec& m : monos)
    for (const RingElem& c : coeffs) candidates.push_back(AlgebraElement::monomial(amb, c, m));

  const unsigned primes[] = {2, 3, 5, 7};
  RingClosureResult res{a, {}, false};
  MonomialSubring cur = a;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SubringGenerator> adjoin;
    for (const AlgebraElement& b : candidates) {
      if (b.is_zero() || cur.contains(b) == Tri::yes) continue;
      Tri elem = is_elementary_subintegral_element(cur, b);
      bool take = elem == Tri::yes;
      if (elem == Tri::unknown) res.bound_limited = true;
      if (!take && mode == ClosureMode::weak) {
        for (unsigned pr : primes) {
          AlgebraElement bp = b.pow(pr);
          AlgebraElement pb = b.scale(RingElem::from_int(amb.coeff(), pr));
          Tri t1 = cur.contains(bp), t2 = cur.contains(pb);
          if (t1 == Tri::unknown || t2 == Tri::unknown) res.bound_limited = true;
          if (t1 == Tri::yes && t2 == Tri::yes) {
            take = true;
            break;
          }
        }
      }
      if (take) {
        adjoin.push_back(SubringGenerator{b.terms().begin()->second, b.terms().begin()->first});
        res.adjoined.push_back(b);
        changed = true;
      }
    }
    if (changed) cur = cur.with_extra_generators(adjoin);
  }
  res.closure = cur;
  return res;
}

// ---- the characteristic-zero equivalence check ----------------------------

struct Thm35Report {
  SubintegralityVerdict monoid_verdict;
  std::vector<std::pair<Vec, WeakResult>> generator_weak;  // per super-monoid generator
  bool all_weak = false;
  bool any_bound_limited = false;
  Int characteristic;
  bool char_p_divergence = false;  // weak holds but the monoid extension fails (positive char only)
};

// Compare the monoid-level subintegrality of M in N with element-level weak
// subintegrality of the N-generators over R[M] inside R[N]. Over
// characteristic zero the two must agree (a disagreement is a bug trap);
// over characteristic p the divergence is expected and flagged.
inline Thm35Report check_thm35(const RingSpec& spec, const AffineMonoid& m, const AffineMonoid& n,
                               unsigned j_max, unsigned p_max, const Int& degree_bound) {
  require_submonoid(m, n);
  if (!n.is_positive()) throw input_error("check_thm35: ambient monoid must be positive");
  Thm35Report rep;
  rep.characteristic = spec.characteristic();
  rep.monoid_verdict = is_subintegral_extension(m, n, j_max);

  HodgeAlgebra ambient(spec, n);
  std::vector<SubringGenerator> gens;
  for (const Vec& g : m.generators()) gens.push_back(SubringGenerator{RingElem::one(spec), g});
  MonomialSubring a(ambient, gens, CoeffExtension::trivial(spec), degree_bound);

  rep.all_weak = true;
  for (const Vec& g : n.generators()) {
    AlgebraElement b = AlgebraElement::monomial(ambient, RingElem::one(spec), g);
    WeakResult w = is_weakly_subintegral_element(a, b, p_max, degree_bound);
    if (!w.witness) rep.all_weak = false;
    if (w.bound_limited) rep.any_bound_limited = true;
    rep.generator_weak.emplace_back(g, std::move(w));
  }

  if (rep.characteristic == 0) {
    if (rep.all_weak && rep.monoid_verdict.status == SubintStatus::no)
      throw invariant_error("check_thm35: weak witnesses over characteristic zero contradict the monoid verdict");
  } else if (rep.all_weak && rep.monoid_verdict.status == SubintStatus::no) {
    rep.char_p_divergence = true;
  }
  return rep;
}

// ---- witness modules -------------------------------------------------------

enum class WitnessVariant { pm, cyclotomic };

struct WitnessModules {
  std::vector<AlgebraElement> j_gens, jprime_gens;
  // certificate: sum of coeff * j_gens[i] * jprime_gens[j] equals 1, with
  // every coeff inside the subring.
  std::vector<std::tuple<AlgebraElement, size_t, size_t>> certificate;
};

// The paired modules J, J' attached to b with b^2, b^3 in A: either
// J = (b^2, 1 - b m), J' = (b^2, 1 + b m) for a carrier monomial m, via
//   (1 + b^2 m^2) (1 - bm)(1 + bm) + m^4 (b^2 b^2) = 1,
// or the cyclotomic pair J = (g^2, 1 + g + g^2), J' = (g^2, 1 - g + g^2), via
//   (1 - g^2) (1+g+g^2)(1-g+g^2) + g^2 (g^2 g^2) = 1.
inline WitnessModules witness_modules(const MonomialSubring& a, const AlgebraElement& b,
                                      const std::optional<Vec>& m, WitnessVariant variant) {
  const HodgeAlgebra& amb = a.ambient();
  if (a.contains(b * b) != Tri::yes || a.contains(b * b * b) != Tri::yes)
    throw input_error("witness_modules: b^2 and b^3 must lie in the subring");
  AlgebraElement one = AlgebraElement::one(amb);
  WitnessModules wm;
  if (variant == WitnessVariant::pm) {
    if (!m) throw input_error("witness_modules: pm variant needs a monoid element");
    if (!amb.monoid().contains(*m)) throw input_error("witness_modules: m not in the monoid");
    if (amb.ideal().contains(*m)) throw input_error("witness_modules: m lies in the ideal");
    AlgebraElement xm = AlgebraElement::monomial(amb, RingElem::one(amb.coeff()), *m);
    AlgebraElement bm = b * xm;
    wm.j_gens = {b * b, one - bm};
    wm.jprime_gens = {b * b, one + bm};
    wm.certificate.emplace_back(one + (b * b) * (xm * xm), 1, 1);
    wm.certificate.emplace_back(xm * xm * xm * xm, 0, 0);
  } else {
    wm.j_gens = {b * b, one + b + b * b};
    wm.jprime_gens = {b * b, one - b + b * b};
    wm.certificate.emplace_back(one - b * b, 1, 1);
    wm.certificate.emplace_back(b * b, 0, 0);
  }

  // Re-evaluate: coefficients in A, pairwise products in A, and the sum is 1.
  AlgebraElement sum = AlgebraElement::zero(amb);
  for (const auto& [coeff, i, j] : wm.certificate) {
    if (!a.contains_or_throw(coeff))
      throw invariant_error("witness_modules: certificate coefficient escapes the subring");
    sum = sum + coeff * wm.j_gens[i] * wm.jprime_gens[j];
  }
  if (sum != one) throw invariant_error("witness_modules: certificate does not evaluate to 1");
  for (const AlgebraElement& gj : wm.j_gens)
    for (const AlgebraElement& gp : wm.jprime_gens)
      if (!a.contains_or_throw(gj * gp))
        throw invariant_error("witness_modules: J J' is not contained in the subring");
  return wm;
}

}  // namespace monalg

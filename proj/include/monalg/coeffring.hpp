// Exact coefficient rings with decidable nilpotence and unit structure:
// Z, Q, Z/m, and dual numbers Dual(R) = R[eps]/(eps^2), nested freely.
// Elements are kept in canonical form so equality is structural; finite
// specs can be enumerated for brute-force oracles.
#pragma once

#include "monalg/intmath.hpp"

#include <memory>
#include <optional>

namespace monalg {

class RingSpec {
 public:
  enum class Kind { integers, rationals, zmod, dual };

  static RingSpec integers() { return RingSpec(Kind::integers, 0, nullptr); }
  static RingSpec rationals() { return RingSpec(Kind::rationals, 0, nullptr); }
  static RingSpec zmod(const Int& m) {
    if (m < 2) throw input_error("RingSpec: modulus must be >= 2");
    return RingSpec(Kind::zmod, m, nullptr);
  }
  static RingSpec dual(const RingSpec& base) {
    return RingSpec(Kind::dual, 0, std::make_shared<RingSpec>(base));
  }

  Kind kind() const { return kind_; }
  const Int& modulus() const { return modulus_; }
  const RingSpec& base() const {
    if (kind_ != Kind::dual) throw input_error("RingSpec: not a dual spec");
    return *base_;
  }

  bool operator==(const RingSpec& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::zmod) return modulus_ == o.modulus_;
    if (kind_ == Kind::dual) return *base_ == *o.base_;
    return true;
  }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  bool is_finite() const {
    switch (kind_) {
      case Kind::integers:
      case Kind::rationals: return false;
      case Kind::zmod: return true;
      case Kind::dual: return base_->is_finite();
    }
    return false;
  }

  Int cardinality() const {
    switch (kind_) {
      case Kind::zmod: return modulus_;
      case Kind::dual: return base_->cardinality() * base_->cardinality();
      default: throw capability_error("RingSpec: infinite ring has no cardinality");
    }
  }

  Int characteristic() const {
    switch (kind_) {
      case Kind::integers:
      case Kind::rationals: return 0;
      case Kind::zmod: return modulus_;
      case Kind::dual: return base_->characteristic();
    }
    return 0;
  }

  bool contains_q() const {
    if (kind_ == Kind::rationals) return true;
    if (kind_ == Kind::dual) return base_->contains_q();
    return false;
  }

  bool is_reduced() const {
    switch (kind_) {
      case Kind::integers:
      case Kind::rationals: return true;
      case Kind::zmod: {
        Int m = modulus_;
        for (const Int& p : prime_factors(m))
          if (m % (p * p) == 0) return false;
        return true;
      }
      case Kind::dual: return false;  // eps is a nonzero nilpotent
    }
    return true;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::integers: return "Z";
      case Kind::rationals: return "Q";
      case Kind::zmod: return "Z/" + modulus_.str();
      case Kind::dual: return "Dual(" + base_->to_string() + ")";
    }
    return "?";
  }

  static RingSpec parse(const std::string& s) {
    std::string t;
    for (char c : s)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Z") return integers();
    if (t == "Q") return rationals();
    if (t.rfind("Z/", 0) == 0) return zmod(Int(t.substr(2)));
    if (t.rfind("Dual(", 0) == 0 && t.back() == ')')
      return dual(parse(t.substr(5, t.size() - 6)));
    throw input_error("RingSpec: cannot parse '" + s + "'");
  }

  static std::vector<Int> prime_factors(Int m) {
    std::vector<Int> ps;
    for (Int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        ps.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) ps.push_back(m);
    return ps;
  }

  // Product of the distinct prime divisors.
  static Int radical_of(const Int& m) {
    Int r = 1;
    for (const Int& p : prime_factors(m)) r *= p;
    return r;
  }

  size_t coord_dim() const {
    return kind_ == Kind::dual ? 2 * base_->coord_dim() : 1;
  }

  // Additive coordinates: each Z or Q slot has modulus 0, each Z/m slot has
  // modulus m; dual doubles the base slots.
  Vec coord_moduli() const {
    switch (kind_) {
      case Kind::integers:
      case Kind::rationals: return Vec{0};
      case Kind::zmod: return Vec{modulus_};
      case Kind::dual: {
        Vec b = base_->coord_moduli();
        Vec r = b;
        r.insert(r.end(), b.begin(), b.end());
        return r;
      }
    }
    return {};
  }

 private:
  RingSpec(Kind k, Int m, std::shared_ptr<RingSpec> b)
      : kind_(k), modulus_(std::move(m)), base_(std::move(b)) {}
  Kind kind_;
  Int modulus_;
  std::shared_ptr<RingSpec> base_;
};

class RingElem {
 public:
  explicit RingElem(const RingSpec& spec) : spec_(spec) { init_zero(); }

  static RingElem zero(const RingSpec& spec) { return RingElem(spec); }
  static RingElem one(const RingSpec& spec) { return from_int(spec, 1); }

  static RingElem from_int(const RingSpec& spec, const Int& v) {
    RingElem e(spec);
    switch (spec.kind()) {
      case RingSpec::Kind::integers: e.z_ = v; break;
      case RingSpec::Kind::rationals: e.q_ = Rat(v); break;
      case RingSpec::Kind::zmod: e.z_ = mod_reduce(v, spec.modulus()); break;
      case RingSpec::Kind::dual: e.parts_[0] = from_int(spec.base(), v); break;
    }
    return e;
  }

  static RingElem from_rat(const RingSpec& spec, const Rat& v) {
    if (spec.kind() == RingSpec::Kind::rationals) {
      RingElem e(spec);
      e.q_ = v;
      return e;
    }
    if (spec.kind() == RingSpec::Kind::dual) {
      RingElem e(spec);
      e.parts_[0] = from_rat(spec.base(), v);
      return e;
    }
    if (denominator(v) != 1) throw input_error("RingElem: non-integral value for integral spec");
    return from_int(spec, Int(numerator(v)));
  }

  static RingElem dual_of(const RingElem& a, const RingElem& b) {
    if (a.spec() != b.spec()) throw input_error("RingElem: dual parts over different specs");
    RingElem e(RingSpec::dual(a.spec()));
    e.parts_[0] = a;
    e.parts_[1] = b;
    return e;
  }

  const RingSpec& spec() const { return spec_; }

  bool is_zero() const {
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: return z_ == 0;
      case RingSpec::Kind::rationals: return q_ == 0;
      case RingSpec::Kind::dual: return parts_[0].is_zero() && parts_[1].is_zero();
    }
    return false;
  }

  bool is_one() const { return *this == one(spec_); }

  const Int& int_value() const { return z_; }
  const Rat& rat_value() const { return q_; }
  const RingElem& dual_a() const { return parts_[0]; }
  const RingElem& dual_b() const { return parts_[1]; }

  bool operator==(const RingElem& o) const {
    if (spec_ != o.spec_) return false;
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: return z_ == o.z_;
      case RingSpec::Kind::rationals: return q_ == o.q_;
      case RingSpec::Kind::dual: return parts_ == o.parts_;
    }
    return false;
  }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Total order on elements of one spec, for canonical containers.
  bool operator<(const RingElem& o) const {
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: return z_ < o.z_;
      case RingSpec::Kind::rationals: return q_ < o.q_;
      case RingSpec::Kind::dual:
        if (parts_[0] < o.parts_[0]) return true;
        if (o.parts_[0] < parts_[0]) return false;
        return parts_[1] < o.parts_[1];
    }
    return false;
  }

  RingElem operator+(const RingElem& o) const {
    check_spec(o);
    RingElem r(spec_);
    switch (spec_.kind()) {
      case RingSpec::Kind::integers: r.z_ = z_ + o.z_; break;
      case RingSpec::Kind::rationals: r.q_ = q_ + o.q_; break;
      case RingSpec::Kind::zmod: r.z_ = mod_reduce(z_ + o.z_, spec_.modulus()); break;
      case RingSpec::Kind::dual:
        r.parts_[0] = parts_[0] + o.parts_[0];
        r.parts_[1] = parts_[1] + o.parts_[1];
        break;
    }
    return r;
  }

  RingElem operator-() const {
    RingElem r(spec_);
    switch (spec_.kind()) {
      case RingSpec::Kind::integers: r.z_ = -z_; break;
      case RingSpec::Kind::rationals: r.q_ = -q_; break;
      case RingSpec::Kind::zmod: r.z_ = mod_reduce(-z_, spec_.modulus()); break;
      case RingSpec::Kind::dual:
        r.parts_[0] = -parts_[0];
        r.parts_[1] = -parts_[1];
        break;
    }
    return r;
  }

  RingElem operator-(const RingElem& o) const { return *this + (-o); }

  RingElem operator*(const RingElem& o) const {
    check_spec(o);
    RingElem r(spec_);
    switch (spec_.kind()) {
      case RingSpec::Kind::integers: r.z_ = z_ * o.z_; break;
      case RingSpec::Kind::rationals: r.q_ = q_ * o.q_; break;
      case RingSpec::Kind::zmod: r.z_ = mod_reduce(z_ * o.z_, spec_.modulus()); break;
      case RingSpec::Kind::dual:
        // (a + b eps)(c + d eps) = ac + (ad + bc) eps
        r.parts_[0] = parts_[0] * o.parts_[0];
        r.parts_[1] = parts_[0] * o.parts_[1] + parts_[1] * o.parts_[0];
        break;
    }
    return r;
  }

  RingElem pow(unsigned n) const {
    RingElem r = one(spec_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Nilpotence with exact index (smallest n >= 1 with x^n = 0). The structural
  // criterion decides, direct powering pins the index and re-checks it.
  std::optional<unsigned> nilpotency_index() const {
    bool nil = false;
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::rationals: nil = is_zero(); break;
      case RingSpec::Kind::zmod: {
        nil = true;
        for (const Int& p : RingSpec::prime_factors(spec_.modulus()))
          if (z_ % p != 0) {
            nil = false;
            break;
          }
        break;
      }
      case RingSpec::Kind::dual: nil = parts_[0].nilpotency_index().has_value(); break;
    }
    if (!nil) return std::nullopt;
    RingElem p = *this;
    for (unsigned n = 1; n <= 512; ++n) {
      if (p.is_zero()) return n;
      p = p * *this;
    }
    throw invariant_error("nilpotency_index: criterion true but no zero power found");
  }

  bool is_nilpotent() const { return nilpotency_index().has_value(); }

  bool is_unit() const {
    switch (spec_.kind()) {
      case RingSpec::Kind::integers: return z_ == 1 || z_ == -1;
      case RingSpec::Kind::rationals: return q_ != 0;
      case RingSpec::Kind::zmod: return gcd(z_, spec_.modulus()) == 1;
      case RingSpec::Kind::dual: return parts_[0].is_unit();
    }
    return false;
  }

  RingElem inverse() const {
    if (!is_unit()) throw input_error("inverse: not a unit");
    RingElem r(spec_);
    switch (spec_.kind()) {
      case RingSpec::Kind::integers: r.z_ = z_; break;
      case RingSpec::Kind::rationals: r.q_ = Rat(1) / q_; break;
      case RingSpec::Kind::zmod: r.z_ = mod_inverse(z_, spec_.modulus()); break;
      case RingSpec::Kind::dual: {
        // (a + b eps)^-1 = a^-1 - a^-2 b eps
        RingElem ai = parts_[0].inverse();
        r.parts_[0] = ai;
        r.parts_[1] = -(ai * ai * parts_[1]);
        break;
      }
    }
    if (!(r * *this).is_one()) throw invariant_error("inverse: round trip failed");
    return r;
  }

  std::string to_string() const {
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: return z_.str();
      case RingSpec::Kind::rationals:
        return denominator(q_) == 1 ? Int(numerator(q_)).str()
                                    : Int(numerator(q_)).str() + "/" + Int(denominator(q_)).str();
      case RingSpec::Kind::dual: {
        std::string a = parts_[0].to_string();
        std::string b = parts_[1].to_string();
        auto wrap = [](const std::string& s) {
          return s.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
        };
        if (parts_[1].is_zero()) return a;
        std::string eps_part = b == "1" ? "eps" : (b == "-1" ? "-eps" : wrap(b) + "*eps");
        if (parts_[0].is_zero()) return eps_part;
        if (!eps_part.empty() && eps_part[0] == '-') return wrap(a) + eps_part;
        return wrap(a) + "+" + eps_part;
      }
    }
    return "?";
  }

  static RingElem parse(const RingSpec& spec, const std::string& input) {
    std::string s;
    for (char c : input)
      if (!isspace(static_cast<unsigned char>(c))) s += c;
    return parse_clean(spec, s);
  }

  // Flatten to additive coordinates (rationals; integral for integral specs).
  QVec coords() const {
    switch (spec_.kind()) {
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: return {Rat(z_)};
      case RingSpec::Kind::rationals: return {q_};
      case RingSpec::Kind::dual: {
        QVec a = parts_[0].coords();
        QVec b = parts_[1].coords();
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
    }
    return {};
  }

  static RingElem from_coords(const RingSpec& spec, const QVec& v) {
    size_t pos = 0;
    return from_coords_rec(spec, v, pos);
  }

 private:
  RingSpec spec_;
  Int z_;
  Rat q_;
  std::vector<RingElem> parts_;

  void init_zero() {
    z_ = 0;
    q_ = 0;
    if (spec_.kind() == RingSpec::Kind::dual) {
      parts_.reserve(2);
      parts_.push_back(zero(spec_.base()));
      parts_.push_back(zero(spec_.base()));
    }
  }

  void check_spec(const RingElem& o) const {
    if (spec_ != o.spec_) throw input_error("RingElem: spec mismatch");
  }

  static Int mod_reduce(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
  }

  static Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    if (old_r != 1 && old_r != -1) throw input_error("mod_inverse: not invertible");
    if (old_r == -1) old_s = -old_s;
    return mod_reduce(old_s, m);
  }

  static RingElem from_coords_rec(const RingSpec& spec, const QVec& v, size_t& pos) {
    switch (spec.kind()) {
      case RingSpec::Kind::rationals: {
        RingElem e(spec);
        e.q_ = v.at(pos++);
        return e;
      }
      case RingSpec::Kind::integers:
      case RingSpec::Kind::zmod: {
        const Rat& r = v.at(pos++);
        if (denominator(r) != 1) throw input_error("from_coords: non-integral coordinate");
        return from_int(spec, Int(numerator(r)));
      }
      case RingSpec::Kind::dual: {
        RingElem a = from_coords_rec(spec.base(), v, pos);
        RingElem b = from_coords_rec(spec.base(), v, pos);
        return dual_of(a, b);
      }
    }
    throw input_error("from_coords: bad spec");
  }

  static RingElem parse_clean(const RingSpec& spec, const std::string& s) {
    if (s.empty()) throw input_error("RingElem: empty literal");
    if (spec.kind() == RingSpec::Kind::dual) {
      size_t ep = s.rfind("eps");
      if (ep == std::string::npos) return dual_of(parse_clean(spec.base(), s), zero(spec.base()));
      // forms: [A+|A-][B*]eps with A, B plain or parenthesized
      std::string before = s.substr(0, ep);
      if (ep + 3 != s.size()) throw input_error("RingElem: trailing text after eps in '" + s + "'");
      std::string bstr = "1";
      if (!before.empty() && before.back() == '*') {
        before.pop_back();
        size_t cut = split_point(before);
        bstr = before.substr(cut);
        before = before.substr(0, cut);
      }
      std::string astr = "0";
      if (!before.empty()) {
        char sign = before.back();
        if (sign == '+' || sign == '-') {
          before.pop_back();
          if (sign == '-') bstr = "-" + strip_parens(bstr);
          astr = before.empty() ? "0" : before;
        } else {
          // the whole prefix is a sign or coefficient like "-" in "-eps"
          if (before == "-") {
            bstr = "-" + strip_parens(bstr);
          } else if (before == "+") {
            // keep bstr
          } else {
            throw input_error("RingElem: cannot parse dual literal '" + s + "'");
          }
        }
      }
      return dual_of(parse_clean(spec.base(), strip_parens(astr)),
                     parse_clean(spec.base(), strip_parens(bstr)));
    }
    if (spec.kind() == RingSpec::Kind::rationals) {
      size_t slash = s.find('/');
      if (slash == std::string::npos) return from_int(spec, Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw input_error("RingElem: zero denominator");
      RingElem e(spec);
      e.q_ = Rat(num, den);
      return e;
    }
    return from_int(spec, Int(s));
  }

  // Last top-level boundary before a parenthesized or plain coefficient.
  static size_t split_point(const std::string& s) {
    if (!s.empty() && s.back() == ')') {
      int depth = 0;
      for (size_t i = s.size(); i-- > 0;) {
        if (s[i] == ')') ++depth;
        if (s[i] == '(') {
          --depth;
          if (depth == 0) return i;
        }
      }
      throw input_error("RingElem: unbalanced parentheses");
    }
    size_t i = s.size();
    while (i > 0 && (isdigit(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '/')) --i;
    if (i > 0 && (s[i - 1] == '-') && (i == 1 || s[i - 2] == '+' || s[i - 2] == '-')) --i;
    return i;
  }

  static std::string strip_parens(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
  }
};

// An embedding of coefficient rings: either equal specs or an iterated dual
// construction over the sub-spec (constants inside R[eps]/(eps^2)).
class CoeffExtension {
 public:
  CoeffExtension(RingSpec sub, RingSpec super) : sub_(std::move(sub)), super_(std::move(super)) {
    RingSpec t = super_;
    while (t != sub_) {
      if (t.kind() != RingSpec::Kind::dual)
        throw input_error("CoeffExtension: " + sub_.to_string() + " does not embed into " + super_.to_string());
      t = t.base();
    }
  }

  static CoeffExtension trivial(const RingSpec& spec) { return CoeffExtension(spec, spec); }

  const RingSpec& sub() const { return sub_; }
  const RingSpec& super() const { return super_; }
  bool is_identity() const { return sub_ == super_; }

  RingElem embed(const RingElem& x) const {
    if (x.spec() != sub_) throw input_error("CoeffExtension: element not over the sub-spec");
    return embed_into(x, super_);
  }

  bool contains(const RingElem& y) const { return preimage(y).has_value(); }

  std::optional<RingElem> preimage(const RingElem& y) const {
    if (y.spec() != super_) throw input_error("CoeffExtension: element not over the super-spec");
    RingElem t = y;
    RingSpec s = super_;
    while (s != sub_) {
      if (!t.dual_b().is_zero()) return std::nullopt;
      t = t.dual_a();
      s = s.base();
    }
    return t;
  }

 private:
  RingSpec sub_, super_;

  static RingElem embed_into(const RingElem& x, const RingSpec& target) {
    if (x.spec() == target) return x;
    RingElem base = embed_into(x, target.base());
    return RingElem::dual_of(base, RingElem::zero(target.base()));
  }
};

inline std::vector<RingElem> enumerate_ring(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::zmod: {
      std::vector<RingElem> out;
      for (Int v = 0; v < spec.modulus(); ++v) out.push_back(RingElem::from_int(spec, v));
      return out;
    }
    case RingSpec::Kind::dual: {
      auto base = enumerate_ring(spec.base());
      std::vector<RingElem> out;
      for (const RingElem& a : base)
        for (const RingElem& b : base) out.push_back(RingElem::dual_of(a, b));
      return out;
    }
    default: throw capability_error("enumerate_ring: spec is not finite");
  }
}

// Generators of Nil(R): Z, Q have none; Z/m is generated by the radical of m
// (zero when m is squarefree); Dual(R) adds eps to the lifted base generators.
inline std::vector<RingElem> nil_generators(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::integers:
    case RingSpec::Kind::rationals: return {};
    case RingSpec::Kind::zmod: {
      Int r = RingSpec::radical_of(spec.modulus());
      return {RingElem::from_int(spec, r)};
    }
    case RingSpec::Kind::dual: {
      std::vector<RingElem> out;
      out.push_back(RingElem::dual_of(RingElem::zero(spec.base()), RingElem::one(spec.base())));
      for (const RingElem& g : nil_generators(spec.base()))
        out.push_back(RingElem::dual_of(g, RingElem::zero(spec.base())));
      return out;
    }
  }
  return {};
}

// R / Nil(R) as a spec, with the coefficient transport map.
inline RingSpec spec_mod_nil(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::integers:
    case RingSpec::Kind::rationals: return spec;
    case RingSpec::Kind::zmod: return RingSpec::zmod(RingSpec::radical_of(spec.modulus()));
    case RingSpec::Kind::dual: return spec_mod_nil(spec.base());
  }
  return spec;
}

inline RingElem reduce_mod_nil(const RingElem& x) {
  const RingSpec& spec = x.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::integers:
    case RingSpec::Kind::rationals: return x;
    case RingSpec::Kind::zmod:
      return RingElem::from_int(spec_mod_nil(spec), x.int_value());
    case RingSpec::Kind::dual: return reduce_mod_nil(x.dual_a());
  }
  return x;
}

}  // namespace monalg

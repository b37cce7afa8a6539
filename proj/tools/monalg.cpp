// monalg: command-line front end. Parses JSON inputs (inline or @file),
// dispatches the library computations, and emits deterministic text or JSON
// reports. Exit codes: 0 success, 1 mathematical failure (a theorem-level
// check failed), 2 input error, 3 inconclusive within the configured bounds.
#include "monalg/jsonio.hpp"
#include "monalg/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace monalg;

namespace {

struct Bounds {
  Int degree = 12;
  unsigned j_max = 64;
  unsigned p_max = 4;
  unsigned k_max = 16;
  unsigned n_max = 32;
  uint64_t seed = 20240817;
};

unsigned env_override(const char* name, unsigned fallback) {
  const char* v = std::getenv(name);
  return v ? static_cast<unsigned>(std::strtoul(v, nullptr, 10)) : fallback;
}

Bounds default_bounds() {
  Bounds b;
  if (const char* v = std::getenv("MONALG_DEGREE")) b.degree = Int(v);
  b.j_max = env_override("MONALG_JMAX", b.j_max);
  b.p_max = env_override("MONALG_PMAX", b.p_max);
  b.k_max = env_override("MONALG_KMAX", b.k_max);
  b.n_max = env_override("MONALG_NMAX", b.n_max);
  return b;
}

Json bounds_to_json(const Bounds& b) {
  Json j;
  j["degree"] = b.degree.str();
  j["j_max"] = b.j_max;
  j["p_max"] = b.p_max;
  j["k_max"] = b.k_max;
  j["n_max"] = b.n_max;
  return j;
}

// Inline JSON, or @path to read a file.
Json parse_input(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw input_error("cannot open input file " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

struct Output {
  bool json = false;
  Json report;
  std::string text;

  void emit() const {
    if (json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text;
  }
};

int exit_code_of(const std::exception& e) {
  if (dynamic_cast<const input_error*>(&e)) return 2;
  if (dynamic_cast<const capability_error*>(&e)) return 2;
  if (dynamic_cast<const bound_error*>(&e)) return 3;
  if (dynamic_cast<const invariant_error*>(&e)) return 1;
  return 2;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown_within_bound";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for affine monoids, monomial quotients and subintegral closures"};
  app.require_subcommand(1);
  app.fallthrough();
  Bounds bounds = default_bounds();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports instead of text");
  std::string deg_str;
  app.add_option("--degree", deg_str, "degree bound D (default 12)");
  app.add_option("--jmax", bounds.j_max, "power profile bound (default 64)");
  app.add_option("--pmax", bounds.p_max, "weak witness length bound (default 4)");
  app.add_option("--kmax", bounds.k_max, "nilpotence powering bound (default 16)");
  app.add_option("--nmax", bounds.n_max, "radical powering bound (default 32)");
  app.add_option("--seed", bounds.seed, "seed for randomized suites");

  // ---- det ----
  auto* det = app.add_subcommand("det", "determinant utilities")->fallthrough();
  auto* det_binom = det->add_subcommand("binom", "binomial-matrix determinant of a strictly increasing tuple")->fallthrough();
  std::vector<std::string> binom_args;
  det_binom->add_option("values", binom_args, "strictly increasing positive integers")->required();

  // ---- monoid ----
  auto* monoid_cmd = app.add_subcommand("monoid", "affine monoid computations")->fallthrough();
  std::string monoid_arg, sub_arg, super_arg;
  auto* m_info = monoid_cmd->add_subcommand("info", "membership data, positivity, faces")->fallthrough();
  m_info->add_option("--monoid", monoid_arg, "monoid JSON")->required();
  auto* m_sub = monoid_cmd->add_subcommand("subintegral", "is the extension subintegral?")->fallthrough();
  m_sub->add_option("--sub", sub_arg, "sub-monoid JSON")->required();
  m_sub->add_option("--super", super_arg, "super-monoid JSON")->required();
  auto* m_clo = monoid_cmd->add_subcommand("closure", "degree-bounded subintegral closure")->fallthrough();
  m_clo->add_option("--sub", sub_arg, "sub-monoid JSON")->required();
  m_clo->add_option("--super", super_arg, "super-monoid JSON")->required();

  // ---- ideal ----
  auto* ideal_cmd = app.add_subcommand("ideal", "monomial ideal computations")->fallthrough();
  std::string ideal_arg;
  auto* i_rad = ideal_cmd->add_subcommand("radical", "radical with dual certificates")->fallthrough();
  i_rad->add_option("--ideal", ideal_arg, "ideal JSON")->required();
  auto* i_primes = ideal_cmd->add_subcommand("primes", "prime ideals of a monoid")->fallthrough();
  i_primes->add_option("--monoid", monoid_arg, "monoid JSON")->required();
  auto* i_dec = ideal_cmd->add_subcommand("decompose", "prime decomposition of a radical ideal")->fallthrough();
  i_dec->add_option("--ideal", ideal_arg, "ideal JSON")->required();

  // ---- algebra ----
  auto* alg_cmd = app.add_subcommand("algebra", "quotient algebra computations")->fallthrough();
  std::string elem_arg, square_arg;
  auto* a_nil = alg_cmd->add_subcommand("nil", "nilpotence via dual criteria")->fallthrough();
  a_nil->add_option("--element", elem_arg, "element JSON")->required();
  auto* a_unit = alg_cmd->add_subcommand("unit", "unit test and inverse")->fallthrough();
  a_unit->add_option("--element", elem_arg, "element JSON")->required();
  auto* a_patch = alg_cmd->add_subcommand("patch", "patch along a split ideal intersection")->fallthrough();
  a_patch->add_option("--square", square_arg,
                      "JSON {ring, monoid, ideal_target, ideal_j, ideal_p, f1, f2}")
      ->required();

  // ---- check ----
  auto* check_cmd = app.add_subcommand("check", "subintegrality checks over subrings")->fallthrough();
  std::string subring_arg, terms_arg, ring_arg;
  auto* c_elem = check_cmd->add_subcommand("elementary", "b^2, b^3 in A?")->fallthrough();
  c_elem->add_option("--subring", subring_arg, "subring JSON")->required();
  c_elem->add_option("--element", terms_arg, "element terms JSON (array)")->required();
  auto* c_weak = check_cmd->add_subcommand("weak", "weak subintegrality witness search")->fallthrough();
  c_weak->add_option("--subring", subring_arg, "subring JSON")->required();
  c_weak->add_option("--element", terms_arg, "element terms JSON (array)")->required();
  auto* c_thm = check_cmd->add_subcommand("thm35", "monoid verdict vs weak witnesses over a coefficient ring")->fallthrough();
  c_thm->add_option("--ring", ring_arg, "coefficient ring spec")->required();
  c_thm->add_option("--sub", sub_arg, "sub-monoid JSON")->required();
  c_thm->add_option("--super", super_arg, "super-monoid JSON")->required();

  // ---- class ----
  auto* class_cmd = app.add_subcommand("class", "invertible-module computations")->fallthrough();
  std::string ring_sub_arg, ring_super_arg, preset_arg, config_arg;
  auto* cl_brute = class_cmd->add_subcommand("brute", "enumerate I(A,B)->fallthrough() for a finite extension");
  cl_brute->add_option("--ring-sub", ring_sub_arg, "coefficient sub-spec")->required();
  cl_brute->add_option("--ring-super", ring_super_arg, "coefficient super-spec")->required();
  cl_brute->add_option("--super-monoid", super_arg, "monoid JSON (default trivial)");
  cl_brute->add_option("--sub-monoid", sub_arg, "sub-monoid JSON (default = super)");
  cl_brute->add_option("--ideal", ideal_arg, "cofinite ideal JSON generators in the super monoid");
  auto* cl_six = class_cmd->add_subcommand("sixterm", "six-term exactness on a finite extension")->fallthrough();
  cl_six->add_option("--ring-sub", ring_sub_arg, "coefficient sub-spec")->required();
  cl_six->add_option("--ring-super", ring_super_arg, "coefficient super-spec")->required();
  cl_six->add_option("--super-monoid", super_arg, "monoid JSON (default trivial)");
  cl_six->add_option("--sub-monoid", sub_arg, "sub-monoid JSON (default = super)");
  cl_six->add_option("--ideal", ideal_arg, "cofinite ideal JSON generators");
  auto* cl_46 = class_cmd->add_subcommand("lemma46", "three-term sequence on a split truncation square")->fallthrough();
  cl_46->add_option("--preset", preset_arg, "f2-diag | z4-diag | f2-dual");
  cl_46->add_option("--square", square_arg,
                    "JSON {ring_sub, ring_super, sub_monoid, super_monoid, prime, rest, truncate}");
  auto* cl_ker = class_cmd->add_subcommand("kermain", "kernel triviality with witness")->fallthrough();
  cl_ker->add_option("--ring", ring_arg, "coefficient ring spec")->required();
  cl_ker->add_option("--sub", sub_arg, "sub-monoid JSON")->required();
  cl_ker->add_option("--super", super_arg, "super-monoid JSON")->required();
  cl_ker->add_option("--ideal", ideal_arg, "ideal JSON generators in the super monoid")->required();
  auto* cl_smoke = class_cmd->add_subcommand("main-smoke", "property checks of the closedness theorem")->fallthrough();
  cl_smoke->add_option("--config", config_arg,
                       "JSON {ring_sub, ring_super, sub_monoid, super_monoid, ideal, degree}");
  cl_smoke->add_option("--preset", preset_arg, "f2-m2 | f2-dual-n2 | trivial");
  auto* cl_diag = class_cmd->add_subcommand("diagram", "exp correspondence over Q")->fallthrough();
  cl_diag->add_option("--config", config_arg, "JSON {ring_sub, ring_super, monoid, ideal, degree, samples}");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "verification suites")->fallthrough();
  auto* verify_all = verify_cmd->add_subcommand("all", "run every acceptance suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (!deg_str.empty()) bounds.degree = Int(deg_str);

  Output out;
  out.json = as_json;
  out.report["bounds"] = bounds_to_json(bounds);
  int code = 0;

  try {
    if (det_binom->parsed()) {
      std::vector<Int> a;
      for (const std::string& s : binom_args) a.push_back(Int(s));
      Int d = binom_det(a);
      out.report["det"] = d.str();
      out.text = d.str() + "\n";
    } else if (m_info->parsed()) {
      AffineMonoid m = monoid_from_json(parse_input(monoid_arg));
      const PositivityCert& pc = m.positivity();
      out.report["monoid"] = monoid_to_json(m);
      out.report["positive"] = pc.positive;
      std::ostringstream os;
      os << "dim " << m.dim() << ", " << m.generators().size() << " generators\n";
      if (pc.positive) {
        out.report["grading"] = vec_to_json(pc.lambda);
        os << "positive, grading " << vec_to_string(pc.lambda) << "\n";
      } else {
        out.report["unit_witness"] = vec_to_json(pc.unit_witness);
        os << "not positive, unit witness " << vec_to_string(pc.unit_witness) << "\n";
      }
      try {
        size_t nf = m.faces().size();
        size_t np = prime_ideals(m).size();
        out.report["faces"] = nf;
        out.report["primes"] = np;
        os << nf << " faces, " << np << " prime ideals\n";
      } catch (const capability_error& e) {
        out.report["faces"] = nullptr;
        os << "faces: " << e.what() << "\n";
      }
      out.text = os.str();
    } else if (m_sub->parsed()) {
      AffineMonoid sub = monoid_from_json(parse_input(sub_arg));
      AffineMonoid sup = monoid_from_json(parse_input(super_arg));
      auto v = is_subintegral_extension(sub, sup, bounds.j_max);
      out.report["verdict"] = verdict_to_json(v);
      std::ostringstream os;
      if (v.status == SubintStatus::yes) {
        os << "Yes";
        for (const auto& w : v.witnesses)
          os << " (z=" << vec_to_string(w.z) << ": j1=" << w.j1 << ", j2=" << w.j2
             << ", threshold " << w.threshold << ")";
        os << "\n";
      } else if (v.status == SubintStatus::no) {
        os << "No (witness z=";
        for (size_t i = 0; i < v.no_generator.size(); ++i) os << (i ? "," : "") << v.no_generator[i];
        os << ", gcd " << v.no_gcd << ")\n";
      } else {
        os << "Unknown within bound (jmax=" << bounds.j_max << ")\n";
        code = 3;
      }
      out.text = os.str();
    } else if (m_clo->parsed()) {
      AffineMonoid sub = monoid_from_json(parse_input(sub_arg));
      AffineMonoid sup = monoid_from_json(parse_input(super_arg));
      auto clo = subintegral_closure(sub, sup, bounds.degree, bounds.j_max);
      out.report["closure"] = monoid_to_json(clo.closure);
      out.report["element_count"] = clo.elements.size();
      std::ostringstream os;
      os << "closure generators (degree <= " << bounds.degree << "):";
      for (const Vec& g : clo.generators) os << " " << vec_to_string(g);
      os << "\n" << clo.elements.size() << " closure elements within the bound\n";
      out.text = os.str();
    } else if (i_rad->parsed()) {
      MonomialIdeal ideal = ideal_from_json(parse_input(ideal_arg));
      auto r = radical(ideal, bounds.n_max, bounds.degree);
      out.report["radical"] = ideal_to_json(r.radical);
      Json ws = Json::array();
      for (const auto& [g, n] : r.power_witnesses) {
        Json w;
        w["generator"] = vec_to_json(g);
        w["power"] = n;
        ws.push_back(w);
      }
      out.report["power_witnesses"] = ws;
      std::ostringstream os;
      os << "radical generators:";
      for (const Vec& g : r.radical.generators()) os << " " << vec_to_string(g);
      os << "\n";
      out.text = os.str();
    } else if (i_primes->parsed()) {
      AffineMonoid m = monoid_from_json(parse_input(monoid_arg));
      auto primes = prime_ideals(m);
      Json ps = Json::array();
      std::ostringstream os;
      os << primes.size() << " prime ideals\n";
      for (const auto& p : primes) {
        ps.push_back(ideal_to_json(p));
        os << " generators:";
        for (const Vec& g : p.generators()) os << " " << vec_to_string(g);
        os << "\n";
      }
      out.report["primes"] = ps;
      out.text = os.str();
    } else if (i_dec->parsed()) {
      MonomialIdeal ideal = ideal_from_json(parse_input(ideal_arg));
      auto primes = prime_decomposition(ideal, bounds.n_max, bounds.degree);
      Json ps = Json::array();
      std::ostringstream os;
      os << primes.size() << " primes intersect to the ideal\n";
      for (const auto& p : primes) {
        ps.push_back(ideal_to_json(p));
        os << " generators:";
        for (const Vec& g : p.generators()) os << " " << vec_to_string(g);
        os << "\n";
      }
      out.report["decomposition"] = ps;
      out.text = os.str();
    } else if (a_nil->parsed()) {
      AlgebraElement f = element_from_json(parse_input(elem_arg));
      auto v = is_nilpotent_elem(f, bounds.k_max);
      out.report["nilpotent"] = v.nilpotent;
      if (v.index) out.report["index"] = *v.index;
      out.report["oracle_confirmed"] = v.oracle_confirmed;
      out.report["coeff_criterion"] = v.coeff_criterion;
      out.report["widen_kmax"] = v.widen_kmax;
      std::ostringstream os;
      os << (v.nilpotent ? "nilpotent" : "not nilpotent");
      if (v.index) os << " (index " << *v.index << ")";
      if (v.widen_kmax) os << " [oracle bound too small, criterion decided]";
      os << "\n";
      out.text = os.str();
    } else if (a_unit->parsed()) {
      AlgebraElement f = element_from_json(parse_input(elem_arg));
      bool unit = is_unit_elem(f, bounds.k_max);
      out.report["unit"] = unit;
      std::ostringstream os;
      if (unit) {
        AlgebraElement inv = inverse_elem(f, bounds.k_max);
        out.report["inverse_terms"] = element_terms_to_json(inv);
        os << "unit, inverse " << inv.to_string() << "\n";
      } else {
        os << "not a unit\n";
      }
      out.text = os.str();
    } else if (a_patch->parsed()) {
      Json j = parse_input(square_arg);
      RingSpec spec = RingSpec::parse(j.at("ring").get<std::string>());
      AffineMonoid m = monoid_from_json(j.at("monoid"));
      auto to_ideal = [&](const char* key) {
        std::vector<Vec> gens;
        for (const Json& g : j.at(key)) gens.push_back(vec_from_json(g));
        return MonomialIdeal(m, gens);
      };
      HodgeAlgebra target(spec, m, to_ideal("ideal_target"));
      HodgeAlgebra aj(spec, m, to_ideal("ideal_j"));
      HodgeAlgebra ap(spec, m, to_ideal("ideal_p"));
      AlgebraElement f1 = element_terms_from_json(aj, j.at("f1"));
      AlgebraElement f2 = element_terms_from_json(ap, j.at("f2"));
      AlgebraElement f = milnor_patch(target, f1, f2);
      out.report["patched_terms"] = element_terms_to_json(f);
      out.text = f.to_string() + "\n";
    } else if (c_elem->parsed()) {
      MonomialSubring a = subring_from_json(parse_input(subring_arg), bounds.degree);
      AlgebraElement b = element_terms_from_json(a.ambient(), parse_input(terms_arg));
      Tri t = is_elementary_subintegral_element(a, b);
      out.report["elementary"] = tri_name(t);
      out.text = std::string(tri_name(t)) + "\n";
      if (t == Tri::unknown) code = 3;
    } else if (c_weak->parsed()) {
      MonomialSubring a = subring_from_json(parse_input(subring_arg), bounds.degree);
      AlgebraElement b = element_terms_from_json(a.ambient(), parse_input(terms_arg));
      auto r = is_weakly_subintegral_element(a, b, bounds.p_max, bounds.degree);
      out.report["witness_found"] = r.witness.has_value();
      out.report["bound_limited"] = r.bound_limited;
      std::ostringstream os;
      if (r.witness) {
        out.report["p"] = r.witness->p;
        Json cs = Json::array();
        for (const auto& c : r.witness->cs) cs.push_back(element_terms_to_json(c));
        out.report["cs"] = cs;
        os << "weakly subintegral: witness p=" << r.witness->p;
        for (const auto& c : r.witness->cs) os << ", c=" << c.to_string();
        os << "\n";
      } else if (r.bound_limited) {
        os << "no witness within bounds (p <= " << bounds.p_max << ", degree <= " << bounds.degree << ")\n";
        code = 3;
      } else {
        os << "no witness with p <= " << bounds.p_max << "\n";
      }
      out.text = os.str();
    } else if (c_thm->parsed()) {
      RingSpec spec = RingSpec::parse(ring_arg);
      AffineMonoid sub = monoid_from_json(parse_input(sub_arg));
      AffineMonoid sup = monoid_from_json(parse_input(super_arg));
      auto rep = check_thm35(spec, sub, sup, bounds.j_max, bounds.p_max, bounds.degree);
      out.report["monoid_verdict"] = verdict_to_json(rep.monoid_verdict);
      out.report["all_weak"] = rep.all_weak;
      out.report["characteristic"] = rep.characteristic.str();
      out.report["char_p_divergence"] = rep.char_p_divergence;
      out.report["bound_limited"] = rep.any_bound_limited;
      std::ostringstream os;
      os << "monoid extension: "
         << (rep.monoid_verdict.status == SubintStatus::yes
                 ? "subintegral"
                 : rep.monoid_verdict.status == SubintStatus::no ? "not subintegral" : "unknown")
         << "; generators all weakly subintegral: " << (rep.all_weak ? "yes" : "no") << "\n";
      if (rep.char_p_divergence)
        os << "characteristic-" << rep.characteristic << " divergence: weak holds, monoid extension fails\n";
      out.text = os.str();
      if (rep.monoid_verdict.status == SubintStatus::unknown_within_bound || rep.any_bound_limited) code = 3;
    } else if (cl_brute->parsed() || cl_six->parsed()) {
      RingSpec rs = RingSpec::parse(ring_sub_arg);
      RingSpec rb = RingSpec::parse(ring_super_arg);
      AffineMonoid sup = super_arg.empty() ? AffineMonoid::trivial(1) : monoid_from_json(parse_input(super_arg));
      AffineMonoid sub = sub_arg.empty() ? sup : monoid_from_json(parse_input(sub_arg));
      std::vector<Vec> igens;
      if (!ideal_arg.empty())
        for (const Json& g : parse_input(ideal_arg)) igens.push_back(vec_from_json(g));
      auto ring = std::make_shared<const FiniteRing>(HodgeAlgebra(rb, sup, MonomialIdeal(sup, igens)));
      FiniteExt ext = FiniteExt::from_spec(ring, CoeffExtension(rs, rb), sub);
      if (cl_brute->parsed()) {
        FiniteIGroup g = brute_force_I(ext);
        out.report["order"] = g.order();
        out.report["ring_size"] = ext.ring().size();
        out.report["units_super"] = ext.ring().units().size();
        out.report["units_sub"] = ext.sub_units().size();
        std::ostringstream os;
        os << "|I(A,B)| = " << g.order() << " (|B| = " << ext.ring().size() << ", |U(B)| = "
           << ext.ring().units().size() << ", |U(A)| = " << ext.sub_units().size() << ")\n";
        out.text = os.str();
      } else {
        auto rep = verify_six_term(ext);
        out.report["pass"] = rep.pass;
        out.report["u_a"] = rep.u_a;
        out.report["u_b"] = rep.u_b;
        out.report["i_group"] = rep.i_group;
        out.report["exact_at_ub"] = rep.exact_at_ub;
        out.report["exact_at_i"] = rep.exact_at_i;
        std::ostringstream os;
        os << (rep.pass ? "exact" : "NOT exact") << ": 1 -> U(A)[" << rep.u_a << "] -> U(B)[" << rep.u_b
           << "] -> I(A,B)[" << rep.i_group << "] -> Pic(A)=1\n";
        out.text = os.str();
        if (!rep.pass) code = 1;
      }
    } else if (cl_46->parsed()) {
      std::optional<MilnorSquareExt> sq;
      if (!preset_arg.empty()) {
        AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
        AffineMonoid diag(2, {Vec{1, 1}});
        MonomialIdeal px(quad, {Vec{1, 0}}), py(quad, {Vec{0, 1}});
        if (preset_arg == "f2-diag")
          sq = make_milnor_square(CoeffExtension::trivial(RingSpec::zmod(2)), diag, quad, px, py, 2);
        else if (preset_arg == "z4-diag")
          sq = make_milnor_square(CoeffExtension::trivial(RingSpec::zmod(4)), diag, quad, px, py, 2);
        else if (preset_arg == "f2-dual")
          sq = make_milnor_square(CoeffExtension(RingSpec::zmod(2), RingSpec::dual(RingSpec::zmod(2))),
                                  quad, quad, px, py, 2);
        else
          throw input_error("unknown preset '" + preset_arg + "'");
      } else if (!square_arg.empty()) {
        Json j = parse_input(square_arg);
        RingSpec rs = RingSpec::parse(j.at("ring_sub").get<std::string>());
        RingSpec rb = RingSpec::parse(j.at("ring_super").get<std::string>());
        AffineMonoid sup = monoid_from_json(j.at("super_monoid"));
        AffineMonoid sub = monoid_from_json(j.at("sub_monoid"));
        std::vector<Vec> pg, rg;
        for (const Json& g : j.at("prime")) pg.push_back(vec_from_json(g));
        for (const Json& g : j.at("rest")) rg.push_back(vec_from_json(g));
        Int t = Int(j.at("truncate").get<long long>());
        sq = make_milnor_square(CoeffExtension(rs, rb), sub, sup, MonomialIdeal(sup, pg),
                                MonomialIdeal(sup, rg), t);
      } else {
        throw input_error("lemma46 needs --preset or --square");
      }
      auto rep = verify_lemma46(*sq);
      out.report["pass"] = rep.pass;
      out.report["orders"] = {rep.order_i, rep.order_j, rep.order_p, rep.order_jp};
      out.report["phi_injective"] = rep.phi_injective;
      out.report["image_equals_kernel"] = rep.image_equals_kernel;
      out.report["psi_surjective"] = rep.psi_surjective;
      std::ostringstream os;
      os << (rep.pass ? "exact" : "NOT exact") << ": 1 -> I[" << rep.order_i << "] -> I[" << rep.order_j
         << "] + I[" << rep.order_p << "] -> I[" << rep.order_jp << "] -> 1\n";
      out.text = os.str();
      if (!rep.pass) code = 1;
    } else if (cl_ker->parsed()) {
      RingSpec spec = RingSpec::parse(ring_arg);
      AffineMonoid sub = monoid_from_json(parse_input(sub_arg));
      AffineMonoid sup = monoid_from_json(parse_input(super_arg));
      std::vector<Vec> igens;
      for (const Json& g : parse_input(ideal_arg)) igens.push_back(vec_from_json(g));
      auto rep = ker_main_trivial(spec, sub, sup, MonomialIdeal(sup, igens), bounds.degree);
      out.report["trivial"] = rep.trivial;
      out.report["reduced"] = rep.reduced;
      out.report["m_equals_n"] = rep.m_equals_n;
      out.report["supports_equal"] = rep.supports_equal;
      std::ostringstream os;
      if (rep.trivial) {
        os << "trivial (" << (rep.reduced ? "coefficients reduced" : "supports equal") << ")\n";
      } else {
        out.report["witness_terms"] = element_terms_to_json(*rep.witness);
        os << "nontrivial, witness " << rep.witness->to_string() << "\n";
      }
      out.text = os.str();
    } else if (cl_smoke->parsed()) {
      std::optional<SmokeConfig> cfg;
      if (!config_arg.empty()) {
        Json j = parse_input(config_arg);
        RingSpec rs = RingSpec::parse(j.at("ring_sub").get<std::string>());
        RingSpec rb = RingSpec::parse(j.at("ring_super").get<std::string>());
        AffineMonoid sub = monoid_from_json(j.at("sub_monoid"));
        AffineMonoid sup = monoid_from_json(j.at("super_monoid"));
        std::vector<Vec> igens;
        for (const Json& g : j.at("ideal")) igens.push_back(vec_from_json(g));
        Int d = j.contains("degree") ? Int(j.at("degree").get<long long>()) : bounds.degree;
        cfg = SmokeConfig{CoeffExtension(rs, rb), sub, sup, MonomialIdeal(sup, igens), d};
      } else {
        AffineMonoid quad(2, {Vec{1, 0}, Vec{0, 1}});
        RingSpec f2 = RingSpec::zmod(2);
        if (preset_arg == "f2-m2" || preset_arg.empty()) {
          AffineMonoid m2(1, {Vec{2}}), full(1, {Vec{1}});
          cfg = SmokeConfig{CoeffExtension::trivial(f2), m2, full, MonomialIdeal::empty(full), Int(8)};
        } else if (preset_arg == "f2-dual-n2") {
          cfg = SmokeConfig{CoeffExtension(f2, RingSpec::dual(f2)), quad, quad,
                            MonomialIdeal(quad, {Vec{1, 1}}), Int(6)};
        } else if (preset_arg == "trivial") {
          cfg = SmokeConfig{CoeffExtension::trivial(f2), quad, quad, MonomialIdeal(quad, {Vec{1, 1}}), Int(6)};
        } else {
          throw input_error("unknown preset '" + preset_arg + "'");
        }
      }
      auto rep = main_theorem_smoke(*cfg);
      out.report["retraction"] = to_string(rep.retraction);
      out.report["witness_certificates"] = to_string(rep.witness_certificates);
      out.report["quotient_closed"] = rep.quotient_closed;
      out.report["closedness_transfer"] = to_string(rep.closedness_transfer);
      out.report["transfer_note"] = rep.transfer_note;
      out.report["nil_support"] = to_string(rep.nil_support);
      out.report["sampled_b"] = rep.sampled_b;
      out.report["pass"] = rep.pass();
      std::ostringstream os;
      os << "retraction: " << to_string(rep.retraction) << "\n"
         << "witness certificates (" << rep.sampled_b << " sampled): " << to_string(rep.witness_certificates)
         << "\n"
         << "quotient closed: " << (rep.quotient_closed ? "yes" : "no") << "\n"
         << "closedness transfer: " << to_string(rep.closedness_transfer)
         << (rep.transfer_note.empty() ? "" : " (" + rep.transfer_note + ")") << "\n"
         << "nil support: " << to_string(rep.nil_support) << "\n";
      out.text = os.str();
      if (!rep.pass()) code = 1;
    } else if (cl_diag->parsed()) {
      std::optional<DiagramConfig> cfg;
      if (!config_arg.empty()) {
        Json j = parse_input(config_arg);
        RingSpec rs = RingSpec::parse(j.at("ring_sub").get<std::string>());
        RingSpec rb = RingSpec::parse(j.at("ring_super").get<std::string>());
        AffineMonoid m = monoid_from_json(j.at("monoid"));
        std::vector<Vec> igens;
        for (const Json& g : j.at("ideal")) igens.push_back(vec_from_json(g));
        DiagramConfig c{CoeffExtension(rs, rb), m, MonomialIdeal(m, igens),
                        j.contains("degree") ? Int(j.at("degree").get<long long>()) : Int(6),
                        j.contains("samples") ? j.at("samples").get<unsigned>() : 8, bounds.seed};
        cfg = c;
      } else {
        RingSpec q = RingSpec::rationals();
        AffineMonoid line(1, {Vec{1}});
        cfg = DiagramConfig{CoeffExtension(q, RingSpec::dual(q)), line, MonomialIdeal(line, {Vec{1}}),
                            Int(4), 8, bounds.seed};
      }
      auto rep = diagram_thm_check(*cfg);
      out.report["plus_a_is_super"] = rep.plus_a_is_super;
      out.report["hom_law"] = to_string(rep.hom_law);
      out.report["injectivity"] = to_string(rep.injectivity);
      out.report["surjectivity_on_samples"] = to_string(rep.surjectivity_on_samples);
      out.report["square_commutes"] = to_string(rep.square_commutes);
      out.report["sampled"] = rep.sampled;
      out.report["pass"] = rep.pass();
      std::ostringstream os;
      os << "closure reaches the super ring: " << (rep.plus_a_is_super ? "yes" : "no") << "\n"
         << "hom law: " << to_string(rep.hom_law) << "\n"
         << "injectivity: " << to_string(rep.injectivity) << "\n"
         << "surjectivity on samples: " << to_string(rep.surjectivity_on_samples) << "\n"
         << "square commutes: " << to_string(rep.square_commutes) << "\n";
      out.text = os.str();
      if (!rep.pass()) code = 1;
    } else if (verify_all->parsed()) {
      auto results = monalg::verify::run_all(bounds.seed);
      Json cases = Json::array();
      std::ostringstream os;
      int failures = 0;
      for (const auto& r : results) {
        Json c;
        c["case"] = r.id;
        c["title"] = r.title;
        c["status"] = r.pass ? "pass" : "fail";
        c["detail"] = r.detail;
        cases.push_back(c);
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %2d %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str());
        os << line;
        if (!r.pass) ++failures;
      }
      out.report["cases"] = cases;
      out.report["failures"] = failures;
      os << (results.size() - failures) << "/" << results.size() << " criteria passed\n";
      out.text = os.str();
      if (failures > 0) code = 1;
    } else {
      throw input_error("no subcommand selected");
    }
  } catch (const std::exception& e) {
    int ec = exit_code_of(e);
    if (as_json) {
      Json err;
      err["error"] = e.what();
      err["exit_code"] = ec;
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return ec;
  }

  out.emit();
  return code;
}

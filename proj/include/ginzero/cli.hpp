#pragma once

// Command layer: job files in, deterministic JSON reports out.
//
// A job file is a JSON object naming the ring (variables, characteristic,
// monomial order) and the generators as polynomial strings, with optional
// per-job settings (seed, trials, min_field_size, window, target, i).
// Command-line flags override file settings. Every command prints a
// single JSON report with "schema": 1, an echo of the parsed input, and
// the effective seed; sampling commands embed their certificates.
//
// Exit codes: 0 success (audits: pass), 2 audit fail, 1 error.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ginzero/cohomology.hpp"
#include "ginzero/criteria.hpp"
#include "ginzero/gin.hpp"
#include "ginzero/groebner.hpp"
#include "ginzero/hilbert.hpp"
#include "ginzero/monideal.hpp"
#include "ginzero/parse.hpp"
#include "ginzero/polynomial.hpp"

namespace ginzero {

using ojson = nlohmann::ordered_json;

struct JobSpec {
  std::vector<std::string> vars;
  long characteristic = 0;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<std::string> gens;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::uint64_t> min_field_size;
  std::optional<std::pair<int, int>> window;
  std::optional<std::string> target;        // crystallize: "gin0" | "gin"
  std::optional<int> restrict_index;        // restrict-reg: file key "i"
};

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::uint64_t> min_field_size;
  std::optional<std::pair<int, int>> window;
  std::optional<std::string> target;
  std::optional<int> restrict_index;
};

struct RunResult {
  ojson report;
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "gb",         "initial",   "hilbert",     "classify",  "gin",
      "gin0",       "cohomology", "invariants", "cwl",       "seqcm",
      "crystallize", "restrict-reg", "bound-audit"};
  return names;
}

namespace detail {

inline MonomialOrder order_from_string(const std::string& s) {
  if (s == "lex") return MonomialOrder::Lex;
  if (s == "deglex") return MonomialOrder::DegLex;
  if (s == "degrevlex") return MonomialOrder::DegRevLex;
  throw std::runtime_error("order must be one of \"lex\", \"deglex\", \"degrevlex\", got \"" + s +
                           "\"");
}

inline bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

// Parse and validate a job file. Errors carry the offending key or the
// generator index plus character position.
inline JobSpec parse_job(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("input must be a JSON object");

  static const std::vector<std::string> known = {"vars",   "char",   "order",          "gens",
                                                 "seed",   "trials", "min_field_size", "window",
                                                 "target", "i"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known) ok = ok || k == key;
    if (!ok) throw std::runtime_error("unknown key \"" + key + "\" in input");
  }

  JobSpec spec;
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    throw std::runtime_error("\"vars\" must be a non-empty array of variable names");
  for (const auto& v : j["vars"]) {
    if (!v.is_string() || !detail::valid_var_name(v.get<std::string>()))
      throw std::runtime_error("\"vars\" entries must be identifiers, got " + v.dump());
    spec.vars.push_back(v.get<std::string>());
  }
  for (std::size_t a = 0; a < spec.vars.size(); ++a)
    for (std::size_t b = a + 1; b < spec.vars.size(); ++b)
      if (spec.vars[a] == spec.vars[b])
        throw std::runtime_error("duplicate variable name \"" + spec.vars[a] + "\"");

  if (!j.contains("char") || !j["char"].is_number_integer())
    throw std::runtime_error("\"char\" must be an integer (0 or a prime)");
  spec.characteristic = j["char"].get<long>();
  if (spec.characteristic < 0 ||
      (spec.characteristic > 0 &&
       !detail::is_prime_u64(static_cast<std::uint64_t>(spec.characteristic))))
    throw std::runtime_error("\"char\" must be 0 or a prime, got " +
                             std::to_string(spec.characteristic));

  if (j.contains("order")) {
    if (!j["order"].is_string()) throw std::runtime_error("\"order\" must be a string");
    spec.order = detail::order_from_string(j["order"].get<std::string>());
  }

  if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
    throw std::runtime_error("\"gens\" must be a non-empty array of polynomial strings");
  for (const auto& g : j["gens"]) {
    if (!g.is_string())
      throw std::runtime_error("\"gens\" entries must be strings, got " + g.dump());
    spec.gens.push_back(g.get<std::string>());
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw std::runtime_error("\"seed\" must be a non-negative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("trials")) {
    if (!j["trials"].is_number_integer()) throw std::runtime_error("\"trials\" must be an integer");
    spec.trials = j["trials"].get<int>();
  }
  if (j.contains("min_field_size")) {
    if (!j["min_field_size"].is_number_integer() && !j["min_field_size"].is_number_unsigned())
      throw std::runtime_error("\"min_field_size\" must be an integer");
    spec.min_field_size = j["min_field_size"].get<std::uint64_t>();
  }
  if (j.contains("window")) {
    const auto& w = j["window"];
    if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
      throw std::runtime_error("\"window\" must be an array [lo, hi] of two integers");
    spec.window = std::make_pair(w[0].get<int>(), w[1].get<int>());
    if (spec.window->first > spec.window->second)
      throw std::runtime_error("\"window\" must satisfy lo <= hi");
  }
  if (j.contains("target")) {
    if (!j["target"].is_string() ||
        (j["target"] != "gin0" && j["target"] != "gin"))
      throw std::runtime_error("\"target\" must be \"gin0\" or \"gin\"");
    spec.target = j["target"].get<std::string>();
  }
  if (j.contains("i")) {
    if (!j["i"].is_number_integer()) throw std::runtime_error("\"i\" must be an integer");
    spec.restrict_index = j["i"].get<int>();
  }
  return spec;
}

inline JobSpec parse_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

namespace detail {

struct Effective {
  std::uint64_t seed = 0;
  GinOptions opt;
  std::optional<std::pair<int, int>> window;
  std::string target = "gin0";
  std::optional<int> restrict_index;
};

inline Effective resolve(const JobSpec& spec, const CliOverrides& ov) {
  Effective eff;
  eff.seed = ov.seed ? *ov.seed : spec.seed.value_or(0);
  eff.opt.trials = ov.trials ? *ov.trials : spec.trials.value_or(2);
  eff.opt.min_field_size =
      ov.min_field_size ? *ov.min_field_size : spec.min_field_size.value_or(65536);
  eff.window = ov.window ? ov.window : spec.window;
  eff.target = ov.target ? *ov.target : spec.target.value_or("gin0");
  if (eff.target != "gin0" && eff.target != "gin")
    throw std::runtime_error("target must be \"gin0\" or \"gin\"");
  eff.restrict_index = ov.restrict_index ? ov.restrict_index : spec.restrict_index;
  return eff;
}

inline ojson field_json(const FieldDesc& fd) {
  ojson j;
  j["characteristic"] = fd.characteristic;
  j["ext_degree"] = fd.ext_degree;
  j["cardinality"] = fd.cardinality;
  if (fd.characteristic == 0) j["entry_bound"] = fd.entry_bound;
  return j;
}

inline ojson cert_json(const GinCertificate& c) {
  ojson j;
  j["seeds"] = c.seeds;
  j["trials"] = c.trials;
  j["field"] = field_json(c.field);
  j["agreement"] = c.agreement;
  j["borel_fixed"] = c.borel_fixed;
  j["hilbert_match"] = c.hilbert_match;
  j["retries"] = c.retries;
  j["certified"] = c.certified();
  return j;
}

inline ojson ideal_json(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  ojson arr = ojson::array();
  for (const auto& m : I.gens) arr.push_back(to_string(m, vars));
  return arr;
}

inline ojson audit_json(const AuditReport& rep) {
  ojson j;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["witnesses"] = rep.witnesses;
  ojson certs = ojson::array();
  for (const auto& c : rep.certificates) certs.push_back(cert_json(c));
  j["certificates"] = certs;
  if (!rep.extras.empty()) {
    ojson art;
    for (const auto& [k, v] : rep.extras) art[k] = v;
    j["artifacts"] = art;
  }
  return j;
}

inline ojson witness_json(const StabilityWitness& w, const std::vector<std::string>& vars) {
  ojson j;
  j["generator"] = to_string(w.gen, vars);
  j["from_var"] = vars[static_cast<std::size_t>(w.from_var - 1)];
  j["to_var"] = vars[static_cast<std::size_t>(w.to_var - 1)];
  j["moved"] = to_string(w.moved, vars);
  return j;
}

template <class F>
std::optional<MonomialIdeal> as_monomial_ideal(const Ring<F>& R,
                                               const std::vector<Polynomial<F>>& polys) {
  std::vector<Monomial> ms;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.terms.size() != 1) return std::nullopt;
    ms.push_back(p.terms.front().mono);
  }
  return make_ideal(R.nvars, R.field.characteristic(), std::move(ms));
}

template <class F>
MonomialIdeal require_monomial(const Ring<F>& R, const std::vector<Polynomial<F>>& polys,
                               const char* cmd) {
  auto mi = as_monomial_ideal(R, polys);
  if (!mi)
    throw std::runtime_error(std::string(cmd) +
                             ": input must be a monomial ideal (one term per generator)");
  return *mi;
}

template <class F>
RunResult run_typed(const std::string& cmd, const Ring<F>& R,
                    const std::vector<Polynomial<F>>& polys, const JobSpec& spec,
                    const Effective& eff) {
  ojson rep;
  rep["schema"] = 1;
  rep["command"] = cmd;
  {
    ojson in;
    in["vars"] = spec.vars;
    in["char"] = spec.characteristic;
    in["order"] = order_name(R.order);
    ojson gens = ojson::array();
    for (const auto& p : polys) gens.push_back(to_string(R, p));
    in["gens"] = gens;
    rep["input"] = in;
  }
  rep["seed"] = eff.seed;

  if (cmd == "gb") {
    const GroebnerBasis<F> G = buchberger(R, polys);
    ojson arr = ojson::array();
    for (const auto& g : G.elems) arr.push_back(to_string(R, g));
    rep["groebner_basis"] = arr;
    return {rep, 0};
  }

  if (cmd == "initial") {
    const MonomialIdeal in = initial_ideal(R, polys);
    rep["initial_ideal"] = ideal_json(in, R.vars);
    return {rep, 0};
  }

  if (cmd == "hilbert") {
    const MonomialIdeal in = initial_ideal(R, polys);
    const HilbertSeries hs = hilbert_series(in);
    rep["numerator"] = hs.num;
    const auto red = hs.reduced();
    rep["reduced_numerator"] = red.num;
    rep["dimension"] = red.dim;
    const int lo = eff.window ? eff.window->first : 0;
    const int hi = eff.window ? eff.window->second : gen_stats(in).max_degree;
    ojson vals = ojson::array();
    for (int d = lo; d <= hi; ++d) vals.push_back(hs.value(d));
    rep["window"] = {lo, hi};
    rep["values"] = vals;
    return {rep, 0};
  }

  if (cmd == "classify") {
    const MonomialIdeal I = require_monomial(R, polys, "classify");
    const Classification c = classify(I);
    ojson cj;
    cj["weakly_stable"] = c.weakly_stable;
    cj["stable"] = c.stable;
    cj["strongly_stable"] = c.strongly_stable;
    if (c.p_borel)
      cj["p_borel"] = *c.p_borel;
    else
      cj["p_borel"] = nullptr;
    cj["borel_fixed"] = c.borel_fixed;
    rep["classification"] = cj;
    ojson wj;
    if (c.weak_witness) wj["weakly_stable"] = witness_json(*c.weak_witness, R.vars);
    if (c.stable_witness) wj["stable"] = witness_json(*c.stable_witness, R.vars);
    if (c.strong_witness) wj["strongly_stable"] = witness_json(*c.strong_witness, R.vars);
    if (c.p_borel_witness) wj["p_borel"] = witness_json(*c.p_borel_witness, R.vars);
    rep["witnesses"] = wj;
    return {rep, 0};
  }

  if (cmd == "gin") {
    rep["trials"] = eff.opt.trials;
    const GinResult g = gin(R, polys, R.order, eff.seed, eff.opt);
    rep["gin"] = ideal_json(g.ideal, R.vars);
    rep["certificate"] = cert_json(g.cert);
    return {rep, 0};
  }

  if (cmd == "gin0") {
    rep["trials"] = eff.opt.trials;
    const Gin0Result g = gin0(R, polys, R.order, eff.seed, eff.opt);
    rep["gin0"] = ideal_json(g.ideal, R.vars);
    rep["certificates"] = {cert_json(g.stage1), cert_json(g.stage2)};
    return {rep, 0};
  }

  if (cmd == "cohomology") {
    const MonomialIdeal I = require_monomial(R, polys, "cohomology");
    const auto prof = local_cohomology_profile(I);
    ojson arr = ojson::array();
    for (const auto& h : prof) {
      ojson e;
      e["index"] = h.index;
      e["coefficients"] = h.p;
      const auto end = h.end();
      if (end)
        e["end"] = *end;
      else
        e["end"] = nullptr;
      if (eff.window) {
        ojson vals = ojson::array();
        for (int d = eff.window->first; d <= eff.window->second; ++d) vals.push_back(h.value(d));
        e["values"] = vals;
      }
      arr.push_back(e);
    }
    rep["profile"] = arr;
    const QuotientInvariants qi = regularity_depth_pd(I);
    rep["reg_quotient"] = qi.reg_quotient;
    rep["reg_ideal"] = qi.reg_ideal;
    rep["depth"] = qi.depth;
    rep["pd"] = qi.pd;
    return {rep, 0};
  }

  if (cmd == "invariants") {
    rep["trials"] = eff.opt.trials;
    const InvariantsReport inv = invariants_via_gin0(R, polys, eff.seed, eff.opt);
    rep["gin0"] = ideal_json(inv.gin0_ideal, R.vars);
    rep["reg_ideal"] = inv.reg_ideal;
    rep["reg_quotient"] = inv.reg_quotient;
    rep["depth"] = inv.depth;
    rep["pd"] = inv.pd;
    ojson corners = ojson::array();
    for (const auto& c : inv.corners) {
      ojson e;
      e["index"] = c.index;
      e["diagonal"] = c.diagonal;
      e["value"] = c.value;
      corners.push_back(e);
    }
    rep["extremal_betti"] = corners;
    rep["certificates"] = {cert_json(inv.stage1), cert_json(inv.stage2)};
    return {rep, 0};
  }

  if (cmd == "cwl") {
    rep["trials"] = eff.opt.trials;
    const AuditReport a = componentwise_linear(R, polys, eff.seed, eff.opt);
    rep.update(audit_json(a));
    return {rep, a.pass ? 0 : 2};
  }

  if (cmd == "seqcm") {
    rep["trials"] = eff.opt.trials;
    const MonomialIdeal I = require_monomial(R, polys, "seqcm");
    const AuditReport a = seqcm_squarefree(I, eff.seed, eff.opt);
    rep.update(audit_json(a));
    return {rep, a.pass ? 0 : 2};
  }

  if (cmd == "crystallize") {
    rep["trials"] = eff.opt.trials;
    rep["target_kind"] = eff.target;
    const GinTarget t = eff.target == "gin0" ? GinTarget::Gin0 : GinTarget::Gin;
    const AuditReport a = crystallization_audit(R, polys, R.order, eff.seed, t, eff.opt);
    rep.update(audit_json(a));
    return {rep, a.pass ? 0 : 2};
  }

  if (cmd == "restrict-reg") {
    rep["trials"] = eff.opt.trials;
    if (!eff.restrict_index)
      throw std::runtime_error("restrict-reg needs \"i\" in the input file or --i");
    rep["i"] = *eff.restrict_index;
    const AuditReport a = restriction_regularity(R, polys, *eff.restrict_index, eff.seed, eff.opt);
    rep.update(audit_json(a));
    return {rep, a.pass ? 0 : 2};
  }

  if (cmd == "bound-audit") {
    rep["trials"] = eff.opt.trials;
    const AuditReport a = regularity_bound_audit(R, polys, eff.seed, eff.opt);
    rep.update(audit_json(a));
    return {rep, a.pass ? 0 : 2};
  }

  throw std::runtime_error("unknown command \"" + cmd + "\"");
}

template <class F>
RunResult run_in_field(const std::string& cmd, F field, const JobSpec& spec,
                       const Effective& eff) {
  const Ring<F> R(static_cast<int>(spec.vars.size()), spec.order, std::move(field), spec.vars);
  std::vector<Polynomial<F>> polys;
  polys.reserve(spec.gens.size());
  for (std::size_t i = 0; i < spec.gens.size(); ++i) {
    Polynomial<F> p;
    try {
      p = parse_polynomial(R, spec.gens[i]);
    } catch (const ParseError& e) {
      throw std::runtime_error("gens[" + std::to_string(i) + "] at position " +
                               std::to_string(e.position) + ": " + e.what());
    }
    if (!p.homogeneous())
      throw std::runtime_error("gens[" + std::to_string(i) + "] is not homogeneous: \"" +
                               spec.gens[i] + "\"");
    polys.push_back(std::move(p));
  }
  return run_typed(cmd, R, polys, spec, eff);
}

}  // namespace detail

// Execute one command against a parsed job; never throws. Library errors
// become an error report with exit code 1; certification failures embed
// the failing certificate and all trial results.
inline RunResult run_command(const std::string& cmd, const JobSpec& spec,
                             const CliOverrides& ov = {}) {
  ojson err;
  err["schema"] = 1;
  err["command"] = cmd;
  try {
    const detail::Effective eff = detail::resolve(spec, ov);
    if (spec.characteristic == 0)
      return detail::run_in_field(cmd, Rationals(eff.opt.entry_bound), spec, eff);
    return detail::run_in_field(
        cmd, GaloisField(static_cast<std::uint64_t>(spec.characteristic), 1), spec, eff);
  } catch (const CertificationError& e) {
    err["error"] = e.what();
    err["certificate"] = detail::cert_json(e.cert());
    ojson trials = ojson::array();
    for (const auto& J : e.trial_results()) trials.push_back(detail::ideal_json(J, spec.vars));
    err["trial_results"] = trials;
    return {err, 1};
  } catch (const std::exception& e) {
    err["error"] = e.what();
    return {err, 1};
  }
}

}  // namespace ginzero

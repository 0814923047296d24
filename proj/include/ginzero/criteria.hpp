#pragma once

// Audited criteria driven by the zero-generic pipeline: componentwise
// linearity, sequential Cohen-Macaulayness of squarefree ideals,
// crystallization of generator degrees, restriction monotonicity of
// regularity, and the double-exponential regularity bound. Every audit
// returns a verdict with the compared quantities, human-readable
// witnesses, and the sampling certificates that back the computation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ginzero/cohomology.hpp"
#include "ginzero/gin.hpp"
#include "ginzero/groebner.hpp"
#include "ginzero/hilbert.hpp"
#include "ginzero/monideal.hpp"

namespace ginzero {

struct AuditReport {
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> witnesses;
  std::vector<GinCertificate> certificates;
  std::vector<std::pair<std::string, std::string>> extras;  // labelled artifacts
};

namespace detail {

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

inline std::string ideal_string(const MonomialIdeal& I, const std::vector<std::string>& names) {
  return to_string(I, names.empty() ? default_names(I.nvars) : names);
}

inline std::string degrees_string(const std::map<int, long long>& by_degree) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, c] : by_degree) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ":" + std::to_string(c);
  }
  return s + "}";
}

}  // namespace detail

// Degrees of a minimal generating system, computed as graded Betti
// numbers in homological degree zero: the dimension of I_d minus the
// dimension of (m*I)_d, both read off from Hilbert series of initial
// ideals. Works over any coefficient field.
template <class F>
std::map<int, long long> minimal_generator_degrees(const Ring<F>& R,
                                                   const std::vector<Polynomial<F>>& gens) {
  detail::require_homogeneous_proper(gens, "minimal_generator_degrees");
  const GroebnerBasis<F> G = buchberger(R, gens);
  const MonomialIdeal inI = initial_ideal(R, G);
  if (inI.is_unit())
    throw std::invalid_argument("minimal_generator_degrees: ideal is not proper");
  const HilbertSeries hI = hilbert_series(inI);
  std::vector<Polynomial<F>> mg;
  mg.reserve(G.elems.size() * static_cast<std::size_t>(R.nvars));
  for (const auto& g : G.elems)
    for (int v = 1; v <= R.nvars; ++v) {
      Monomial xv(R.nvars);
      xv.e[static_cast<std::size_t>(v - 1)] = 1;
      mg.push_back(mul(R, from_monomial(R, xv), g));
    }
  const HilbertSeries hM = hilbert_series(initial_ideal(R, mg));
  int dmax = 0;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() > dmax) dmax = g.degree();
  std::map<int, long long> out;
  for (int d = 1; d <= dmax; ++d) {
    const long long cnt = hM.value(d) - hI.value(d);
    if (cnt < 0)
      throw std::logic_error("minimal_generator_degrees: negative Betti count");
    if (cnt > 0) out[d] = cnt;
  }
  return out;
}

inline std::map<int, long long> minimal_generator_degrees(const MonomialIdeal& I) {
  if (I.is_unit())
    throw std::invalid_argument("minimal_generator_degrees: ideal is not proper");
  std::map<int, long long> out;
  for (const auto& m : I.gens) out[m.degree()] += 1;
  return out;
}

inline long long mu_of(const std::map<int, long long>& by_degree) {
  long long s = 0;
  for (const auto& [d, c] : by_degree) s += c;
  return s;
}

inline int max_degree_of(const std::map<int, long long>& by_degree) {
  return by_degree.empty() ? 0 : by_degree.rbegin()->first;
}

// ---------------------------------------------------------------------------
// Invariants through the zero-generic initial ideal
// ---------------------------------------------------------------------------

struct InvariantsReport {
  MonomialIdeal gin0_ideal;
  long reg_ideal = 0;
  long reg_quotient = 0;
  long depth = 0;
  long pd = 0;
  std::vector<Corner> corners;
  GinCertificate stage1;
  GinCertificate stage2;
};

namespace detail {

inline InvariantsReport invariants_from(const Gin0Result& g0) {
  InvariantsReport rep;
  rep.gin0_ideal = g0.ideal;
  rep.stage1 = g0.stage1;
  rep.stage2 = g0.stage2;
  const QuotientInvariants qi = regularity_depth_pd(g0.ideal);
  rep.reg_ideal = qi.reg_ideal;
  rep.reg_quotient = qi.reg_quotient;
  rep.depth = qi.depth;
  rep.pd = qi.pd;
  if (rep.reg_ideal != gen_stats(g0.ideal).max_degree)
    throw std::logic_error("invariants: regularity disagrees with top generator degree");
  rep.corners = extremal_betti(g0.ideal);
  int pd_corner = 0;
  for (const auto& c : rep.corners) pd_corner = std::max(pd_corner, c.index);
  if (pd_corner != rep.pd)
    throw std::logic_error("invariants: projective dimension disagrees with corner positions");
  return rep;
}

}  // namespace detail

template <class F>
InvariantsReport invariants_via_gin0(const Ring<F>& R, const std::vector<Polynomial<F>>& gens,
                                     std::uint64_t seed, const GinOptions& opt = {}) {
  return detail::invariants_from(gin0(R, gens, MonomialOrder::DegRevLex, seed, opt));
}

inline InvariantsReport invariants_via_gin0(const MonomialIdeal& I, std::uint64_t seed,
                                            const GinOptions& opt = {}) {
  return detail::invariants_from(gin0(I, MonomialOrder::DegRevLex, seed, opt));
}

// ---------------------------------------------------------------------------
// Componentwise linearity
// ---------------------------------------------------------------------------

namespace detail {

inline AuditReport cwl_report(const std::map<int, long long>& beta_in, const Gin0Result& g0,
                              const std::vector<std::string>& names) {
  AuditReport rep;
  const std::map<int, long long> beta_gin = minimal_generator_degrees(g0.ideal);
  const long long mu_in = mu_of(beta_in);
  const long long mu_gin = mu_of(beta_gin);
  rep.pass = mu_in == mu_gin;
  rep.lhs = std::to_string(mu_in);
  rep.rhs = std::to_string(mu_gin);
  rep.witnesses.push_back("minimal generators of the input by degree: " + degrees_string(beta_in));
  rep.witnesses.push_back("minimal generators of the zero-generic initial ideal by degree: " +
                          degrees_string(beta_gin));
  if (!rep.pass)
    rep.witnesses.push_back("generator counts differ: " + std::to_string(mu_in) + " vs " +
                            std::to_string(mu_gin));
  rep.certificates = {g0.stage1, g0.stage2};
  rep.extras.emplace_back("gin0", ideal_string(g0.ideal, names));
  return rep;
}

}  // namespace detail

// The ideal is componentwise linear iff it has as many minimal generators
// as its zero-generic initial ideal.
template <class F>
AuditReport componentwise_linear(const Ring<F>& R, const std::vector<Polynomial<F>>& gens,
                                 std::uint64_t seed, const GinOptions& opt = {}) {
  const std::map<int, long long> beta_in = minimal_generator_degrees(R, gens);
  return detail::cwl_report(beta_in, gin0(R, gens, MonomialOrder::DegRevLex, seed, opt), R.vars);
}

inline AuditReport componentwise_linear(const MonomialIdeal& I, std::uint64_t seed,
                                        const GinOptions& opt = {}) {
  const std::map<int, long long> beta_in = minimal_generator_degrees(I);
  return detail::cwl_report(beta_in, gin0(I, MonomialOrder::DegRevLex, seed, opt), {});
}

// ---------------------------------------------------------------------------
// Sequential Cohen-Macaulayness of squarefree monomial ideals
// ---------------------------------------------------------------------------

// A squarefree monomial ideal is sequentially Cohen-Macaulay iff its
// Alexander dual is componentwise linear. Weakly stable inputs pass
// outright, with no sampling.
inline AuditReport seqcm_squarefree(const MonomialIdeal& I, std::uint64_t seed,
                                    const GinOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("seqcm_squarefree: ideal is not proper");
  for (const auto& m : I.gens)
    for (int v = 1; v <= I.nvars; ++v)
      if (m.exp(v) > 1)
        throw std::invalid_argument("seqcm_squarefree: ideal is not squarefree");
  if (classify(I).weakly_stable) {
    AuditReport rep;
    rep.pass = true;
    rep.witnesses.push_back(
        "input is weakly stable, hence sequentially Cohen-Macaulay; no sampling needed");
    return rep;
  }
  const MonomialIdeal dual = alexander_dual(I);
  AuditReport rep = componentwise_linear(dual, seed, opt);
  rep.witnesses.insert(rep.witnesses.begin(),
                       "criterion applied to the Alexander dual: " + detail::ideal_string(dual, {}));
  rep.extras.emplace_back("alexander_dual", detail::ideal_string(dual, {}));
  return rep;
}

// ---------------------------------------------------------------------------
// Crystallization of generator degrees
// ---------------------------------------------------------------------------

enum class GinTarget { Gin0, Gin };

namespace detail {

inline AuditReport crystallization_report(int d_input, const MonomialIdeal& target_ideal,
                                          std::vector<GinCertificate> certs, GinTarget target,
                                          const std::vector<std::string>& names) {
  AuditReport rep;
  rep.certificates = std::move(certs);
  const std::map<int, long long> beta = minimal_generator_degrees(target_ideal);
  const int reg_target = regularity_depth_pd(target_ideal).reg_ideal;
  const int lo = d_input + 1;
  const int hi = reg_target + 1;
  int first_gap = -1;
  for (int d = lo; d <= hi; ++d)
    if (beta.find(d) == beta.end()) {
      first_gap = d;
      break;
    }
  if (first_gap < 0)
    throw std::logic_error("crystallization: no generator-free degree up to regularity + 1");
  const int max_gen = max_degree_of(beta);
  rep.pass = max_gen < first_gap;
  rep.lhs = std::to_string(first_gap);
  rep.rhs = std::to_string(max_gen);
  rep.witnesses.push_back("input generator degrees reach " + std::to_string(d_input));
  rep.witnesses.push_back("target generator degrees: " + degrees_string(beta));
  rep.witnesses.push_back("first generator-free degree past the input's top degree: " +
                          std::to_string(first_gap));
  if (!rep.pass)
    rep.witnesses.push_back("generators reappear in degree " + std::to_string(max_gen) +
                            " after the gap at " + std::to_string(first_gap));
  rep.extras.emplace_back("target", ideal_string(target_ideal, names));
  rep.extras.emplace_back("theorem_violation",
                          (!rep.pass && target == GinTarget::Gin0) ? "true" : "false");
  return rep;
}

}  // namespace detail

// Once the target's generator degrees leave a gap above the input's top
// generator degree, they must never resume. For the zero-generic target a
// failure would contradict a theorem; for the plain generic target in
// positive characteristic a failure is a genuine phenomenon.
template <class F>
AuditReport crystallization_audit(const Ring<F>& R, const std::vector<Polynomial<F>>& gens,
                                  MonomialOrder ord, std::uint64_t seed, GinTarget target,
                                  const GinOptions& opt = {}) {
  const int d_input = max_degree_of(minimal_generator_degrees(R, gens));
  if (target == GinTarget::Gin0) {
    const Gin0Result g0 = gin0(R, gens, ord, seed, opt);
    return detail::crystallization_report(d_input, g0.ideal, {g0.stage1, g0.stage2}, target,
                                          R.vars);
  }
  const GinResult g = gin(R, gens, ord, seed, opt);
  return detail::crystallization_report(d_input, g.ideal, {g.cert}, target, R.vars);
}

inline AuditReport crystallization_audit(const MonomialIdeal& I, MonomialOrder ord,
                                         std::uint64_t seed, GinTarget target,
                                         const GinOptions& opt = {}) {
  const int d_input = max_degree_of(minimal_generator_degrees(I));
  if (target == GinTarget::Gin0) {
    const Gin0Result g0 = gin0(I, ord, seed, opt);
    return detail::crystallization_report(d_input, g0.ideal, {g0.stage1, g0.stage2}, target, {});
  }
  const GinResult g = gin(I, ord, seed, opt);
  return detail::crystallization_report(d_input, g.ideal, {g.cert}, target, {});
}

// ---------------------------------------------------------------------------
// Restriction monotonicity of regularity
// ---------------------------------------------------------------------------

namespace detail {

inline AuditReport restriction_report(const GinResult& s1, const Gin0Result& g0, int i,
                                      const std::vector<std::string>& names) {
  const MonomialIdeal left_ideal = restrict_to(s1.ideal, i);
  const MonomialIdeal right_ideal = restrict_to(g0.ideal, i);
  const long left = regularity_depth_pd(left_ideal).reg_quotient;
  const long right = regularity_depth_pd(right_ideal).reg_quotient;
  AuditReport rep;
  rep.pass = left >= right;
  rep.lhs = std::to_string(left);
  rep.rhs = std::to_string(right);
  rep.witnesses.push_back("generic initial ideal restricted to " + std::to_string(i) +
                          " variables: " + ideal_string(left_ideal, names));
  rep.witnesses.push_back("zero-generic initial ideal restricted to " + std::to_string(i) +
                          " variables: " + ideal_string(right_ideal, names));
  if (!rep.pass)
    rep.witnesses.push_back("restricted quotient regularity increased from " +
                            std::to_string(left) + " to " + std::to_string(right));
  rep.certificates = {s1.cert, g0.stage2};
  rep.extras.emplace_back("gin", ideal_string(s1.ideal, names));
  rep.extras.emplace_back("gin0", ideal_string(g0.ideal, names));
  return rep;
}

}  // namespace detail

// Compare quotient regularity after restricting the generic and the
// zero-generic initial ideals (reverse-lexicographic in both stages) to
// the first i variables; the generic side can only be larger or equal.
template <class F>
AuditReport restriction_regularity(const Ring<F>& R, const std::vector<Polynomial<F>>& gens,
                                   int i, std::uint64_t seed, const GinOptions& opt = {}) {
  if (i < 0 || i > R.nvars)
    throw std::invalid_argument("restriction_regularity: i out of range");
  GinResult s1;
  try {
    s1 = gin(R, gens, MonomialOrder::DegRevLex, derive_seed(seed, 0xA11CEULL), opt);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("restriction stage 1: ") + e.what(), e.cert(),
                             e.trial_results());
  }
  const Gin0Result g0 =
      detail::gin0_second_stage(s1, R.field.characteristic(), MonomialOrder::DegRevLex, seed, opt);
  return detail::restriction_report(s1, g0, i, R.vars);
}

inline AuditReport restriction_regularity(const MonomialIdeal& I, int i, std::uint64_t seed,
                                          const GinOptions& opt = {}) {
  if (i < 0 || i > I.nvars)
    throw std::invalid_argument("restriction_regularity: i out of range");
  GinResult s1;
  try {
    s1 = gin(I, MonomialOrder::DegRevLex, derive_seed(seed, 0xA11CEULL), opt);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("restriction stage 1: ") + e.what(), e.cert(),
                             e.trial_results());
  }
  const Gin0Result g0 =
      detail::gin0_second_stage(s1, I.ch, MonomialOrder::DegRevLex, seed, opt);
  return detail::restriction_report(s1, g0, i, {});
}

// ---------------------------------------------------------------------------
// Double-exponential regularity bound
// ---------------------------------------------------------------------------

namespace detail {

inline AuditReport regularity_bound_report(int n, int d_input, const Gin0Result& g0,
                                           const std::vector<std::string>& names) {
  const QuotientInvariants qi = regularity_depth_pd(g0.ideal);
  const long reg = qi.reg_ideal;
  mpz_class base = 2 * d_input;
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), 1UL << (n - 2));
  const bool pass_reg = mpz_class(reg) <= bound;

  const long long mu = mu_of(minimal_generator_degrees(g0.ideal));
  mpz_class prod = 1;
  std::string factors;
  for (int i = 1; i <= n - 1; ++i) {
    const int di = gen_stats(restrict_to(g0.ideal, i)).max_degree;
    prod *= di + 1;
    if (!factors.empty()) factors += " * ";
    factors += std::to_string(di + 1);
  }
  const bool pass_mu = mpz_class(static_cast<long>(mu)) <= prod;

  AuditReport rep;
  rep.pass = pass_reg && pass_mu;
  rep.lhs = std::to_string(reg);
  rep.rhs = bound.get_str();
  rep.witnesses.push_back("regularity " + std::to_string(reg) + " <= (2*" +
                          std::to_string(d_input) + ")^(2^" + std::to_string(n - 2) +
                          ") = " + bound.get_str() + (pass_reg ? ": ok" : ": violated"));
  rep.witnesses.push_back("generator count " + std::to_string(mu) +
                          " <= " + factors + " = " + prod.get_str() +
                          (pass_mu ? ": ok" : ": violated"));
  rep.certificates = {g0.stage1, g0.stage2};
  rep.extras.emplace_back("gin0", ideal_string(g0.ideal, names));
  return rep;
}

}  // namespace detail

// Audit the double-exponential bound on regularity in terms of the top
// input generator degree, together with the product bound on the number
// of generators of the zero-generic initial ideal by the degrees of its
// restrictions. Needs at least two variables.
template <class F>
AuditReport regularity_bound_audit(const Ring<F>& R, const std::vector<Polynomial<F>>& gens,
                                   std::uint64_t seed, const GinOptions& opt = {}) {
  if (R.nvars < 2)
    throw std::invalid_argument("regularity_bound_audit: needs at least two variables");
  const int d_input = max_degree_of(minimal_generator_degrees(R, gens));
  return detail::regularity_bound_report(
      R.nvars, d_input, gin0(R, gens, MonomialOrder::DegRevLex, seed, opt), R.vars);
}

inline AuditReport regularity_bound_audit(const MonomialIdeal& I, std::uint64_t seed,
                                          const GinOptions& opt = {}) {
  if (I.nvars < 2)
    throw std::invalid_argument("regularity_bound_audit: needs at least two variables");
  const int d_input = max_degree_of(minimal_generator_degrees(I));
  return detail::regularity_bound_report(I.nvars, d_input,
                                         gin0(I, MonomialOrder::DegRevLex, seed, opt), {});
}

}  // namespace ginzero

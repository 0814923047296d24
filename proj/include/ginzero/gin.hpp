#pragma once

// Generic initial ideals by certified Monte Carlo sampling, and the
// two-stage zero-generic pipeline built on them.
//
// A gin call runs `trials` independent random coordinate changes over a
// sampling field (an extension GF(p^k) with at least min_field_size
// elements, or the rationals with bounded integer entries) and accepts the
// common initial ideal only with a three-part certificate: all trials
// agree, the result is Borel-fixed for the ambient characteristic, and its
// Hilbert function matches the input's on [0, D+2]. Failed certification
// enlarges the field (squaring its size) and reruns, a bounded number of
// times.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginzero/groebner.hpp"
#include "ginzero/hilbert.hpp"
#include "ginzero/monideal.hpp"
#include "ginzero/polynomial.hpp"

namespace ginzero {

struct GinOptions {
  int trials = 2;
  int max_retries = 3;
  std::uint64_t min_field_size = 65536;
  long entry_bound = 1000000;  // rational sampling entries drawn from [-b, b]
};

struct GinCertificate {
  std::vector<std::uint64_t> seeds;  // per-trial seeds of the accepted attempt
  int trials = 0;
  FieldDesc field;
  bool agreement = false;
  bool borel_fixed = false;
  bool hilbert_match = false;
  int retries = 0;

  bool certified() const {
    return agreement && borel_fixed && hilbert_match && trials >= 2;
  }
};

struct GinResult {
  MonomialIdeal ideal;
  GinCertificate cert;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& msg, GinCertificate cert,
                     std::vector<MonomialIdeal> trial_results)
      : std::runtime_error(msg), cert_(std::move(cert)), trial_results_(std::move(trial_results)) {}

  const GinCertificate& cert() const { return cert_; }
  const std::vector<MonomialIdeal>& trial_results() const { return trial_results_; }

 private:
  GinCertificate cert_;
  std::vector<MonomialIdeal> trial_results_;
};

// Exchange the characteristic tag; the generator exponents are what they
// are in any characteristic.
inline MonomialIdeal transport(MonomialIdeal I, long new_ch) {
  if (new_ch != 0 && !detail::is_prime_u64(static_cast<std::uint64_t>(new_ch)))
    throw std::invalid_argument("transport: characteristic must be 0 or prime");
  I.ch = new_ch;
  return I;
}

namespace detail {

template <class F>
void require_homogeneous_proper(const std::vector<Polynomial<F>>& gens, const char* who) {
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    any = true;
    if (!g.homogeneous())
      throw std::invalid_argument(std::string(who) + ": generators must be homogeneous");
    if (g.degree() == 0)
      throw std::invalid_argument(std::string(who) + ": ideal is not proper");
  }
  if (!any) throw std::invalid_argument(std::string(who) + ": zero ideal");
}

// rebuild a term list in a possibly different ring (new order, compatible field)
template <class F>
std::vector<Polynomial<F>> reorder_all(const Ring<F>& Rnew, const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Term<F>> ts = g.terms;
    out.push_back(normalize(Rnew, std::move(ts)));
  }
  return out;
}

struct AttemptOutcome {
  MonomialIdeal ideal;
  GinCertificate cert;
  std::vector<MonomialIdeal> trial_results;
};

template <class F>
AttemptOutcome gin_attempt(const Ring<F>& Rs, const std::vector<Polynomial<F>>& gens,
                           std::uint64_t seed, int trials, int retry_index) {
  AttemptOutcome out;
  out.cert.trials = trials;
  out.cert.field = Rs.field.desc();
  out.cert.retries = retry_index;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s =
        derive_seed(seed, static_cast<std::uint64_t>(retry_index) * 1000003ULL +
                              static_cast<std::uint64_t>(t));
    out.cert.seeds.push_back(s);
    const LinearChange<F> g = random_change(Rs, s);
    std::vector<Polynomial<F>> moved;
    moved.reserve(gens.size());
    for (const auto& f : gens) moved.push_back(apply_change(Rs, g, f));
    out.trial_results.push_back(initial_ideal(Rs, moved));
  }
  out.cert.agreement = true;
  for (std::size_t t = 1; t < out.trial_results.size(); ++t)
    if (out.trial_results[t] != out.trial_results.front()) out.cert.agreement = false;
  out.ideal = out.trial_results.front();
  out.cert.borel_fixed = classify(out.ideal).borel_fixed;
  // Hilbert reference: the initial ideal in the original coordinates has
  // the input's Hilbert function
  const MonomialIdeal in0 = initial_ideal(Rs, gens);
  const HilbertSeries ref = hilbert_series(in0);
  const HilbertSeries got = hilbert_series(out.ideal);
  out.cert.hilbert_match = true;
  const int upto = gen_stats(out.ideal).max_degree + 2;
  for (int d = 0; d <= upto; ++d)
    if (ref.value(d) != got.value(d)) out.cert.hilbert_match = false;
  return out;
}

inline unsigned min_ext_degree(std::uint64_t p, std::uint64_t min_size) {
  unsigned k = 1;
  std::uint64_t q = p;
  while (q < min_size) {
    if (q > (1ULL << 62) / p) break;  // clamp at the largest representable field
    q *= p;
    ++k;
  }
  return k;
}

}  // namespace detail

// Generic initial ideal of the ideal generated by `gens` with respect to
// `ord`. The input ring's order is irrelevant; its field fixes the
// characteristic. A GF(p) input is lifted into the sampling extension; an
// input already over a large extension is sampled in its own field (no
// enlargement possible there).
template <class FBase>
GinResult gin(const Ring<FBase>& R, const std::vector<Polynomial<FBase>>& gens,
              MonomialOrder ord, std::uint64_t seed, const GinOptions& opt = {}) {
  if (opt.trials < 2) throw std::invalid_argument("gin: trials must be at least 2");
  detail::require_homogeneous_proper(gens, "gin");

  detail::AttemptOutcome last;
  bool have_last = false;
  for (int retry = 0; retry <= opt.max_retries; ++retry) {
    if constexpr (std::is_same_v<FBase, Rationals>) {
      long bound = R.field.entry_bound();
      for (int r = 0; r < retry; ++r)
        bound = bound <= 2000000000L ? bound * bound : bound;
      const Ring<Rationals> Rs(R.nvars, ord, Rationals(bound), R.vars);
      last = detail::gin_attempt(Rs, detail::reorder_all(Rs, gens), seed, opt.trials, retry);
      have_last = true;
    } else {
      const std::uint64_t p = static_cast<std::uint64_t>(R.field.characteristic());
      if (R.field.ext_degree() > 1) {
        // a genuine extension input is sampled in its own field: the packed
        // representation has no identity embedding into a larger extension
        if (retry > 0) break;
        const Ring<FBase> Rs(R.nvars, ord, R.field, R.vars);
        last = detail::gin_attempt(Rs, detail::reorder_all(Rs, gens), seed, opt.trials, retry);
        have_last = true;
      } else {
        // prime-field residues embed into every GF(p^k) as packed constants,
        // so the ladder can always enlarge on retry
        const unsigned k0 = detail::min_ext_degree(p, opt.min_field_size);
        const unsigned k = k0 << retry;
        const unsigned kmax = detail::min_ext_degree(p, 1ULL << 62);
        if (k > kmax) break;
        const GaloisField ext(p, k);
        const Ring<GaloisField> Rs(R.nvars, ord, ext, R.vars);
        // base-field residues are valid packed elements of every extension
        std::vector<Polynomial<GaloisField>> lifted;
        lifted.reserve(gens.size());
        for (const auto& g : gens) {
          std::vector<Term<GaloisField>> ts;
          ts.reserve(g.terms.size());
          for (const auto& t : g.terms) ts.push_back({t.mono, t.coef});
          lifted.push_back(normalize(Rs, std::move(ts)));
        }
        last = detail::gin_attempt(Rs, lifted, seed, opt.trials, retry);
        have_last = true;
      }
    }
    if (last.cert.certified()) return {last.ideal, last.cert};
  }
  if (!have_last) throw std::logic_error("gin: no attempt was possible");
  std::string msg = "gin: certification failed after retries (";
  msg += last.cert.agreement ? "" : "trial disagreement; ";
  msg += last.cert.borel_fixed ? "" : "result not Borel-fixed; ";
  msg += last.cert.hilbert_match ? "" : "Hilbert mismatch; ";
  msg += "trial results:";
  for (const auto& J : last.trial_results) {
    std::vector<std::string> names;
    for (int i = 1; i <= J.nvars; ++i) names.push_back("x" + std::to_string(i));
    msg += " " + to_string(J, names);
  }
  msg += ")";
  throw CertificationError(msg, last.cert, last.trial_results);
}

// gin of a monomial ideal: generators become one-term polynomials over a
// base field of the tagged characteristic.
inline GinResult gin(const MonomialIdeal& I, MonomialOrder ord, std::uint64_t seed,
                     const GinOptions& opt = {}) {
  if (I.is_unit()) throw std::invalid_argument("gin: ideal is not proper");
  if (I.is_zero()) throw std::invalid_argument("gin: zero ideal");
  if (I.ch == 0) {
    const Ring<Rationals> R(I.nvars, ord, Rationals(opt.entry_bound));
    std::vector<Polynomial<Rationals>> gens;
    for (const auto& m : I.gens) gens.push_back(from_monomial(R, m));
    return gin(R, gens, ord, seed, opt);
  }
  const Ring<GaloisField> R(I.nvars, ord, GaloisField(static_cast<std::uint64_t>(I.ch), 1));
  std::vector<Polynomial<GaloisField>> gens;
  for (const auto& m : I.gens) gens.push_back(from_monomial(R, m));
  return gin(R, gens, ord, seed, opt);
}

struct Gin0Result {
  MonomialIdeal ideal;
  GinCertificate stage1;  // gin over the input's own field
  GinCertificate stage2;  // gin of the transported ideal over the rationals
};

namespace detail {

inline Gin0Result gin0_second_stage(const GinResult& s1, long base_ch, MonomialOrder ord,
                                    std::uint64_t seed, const GinOptions& opt) {
  const MonomialIdeal Jq = transport(s1.ideal, 0);
  GinResult s2;
  try {
    s2 = gin(Jq, ord, derive_seed(seed, 0xB0BULL), opt);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("gin0 stage 2: ") + e.what(), e.cert(),
                             e.trial_results());
  }
  return {transport(s2.ideal, base_ch), s1.cert, s2.cert};
}

}  // namespace detail

// Zero-generic initial ideal: gin over the input's field, transported to
// the rationals, gin again, transported back.
template <class FBase>
Gin0Result gin0(const Ring<FBase>& R, const std::vector<Polynomial<FBase>>& gens,
                MonomialOrder ord, std::uint64_t seed, const GinOptions& opt = {}) {
  GinResult s1;
  try {
    s1 = gin(R, gens, ord, derive_seed(seed, 0xA11CEULL), opt);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("gin0 stage 1: ") + e.what(), e.cert(),
                             e.trial_results());
  }
  return detail::gin0_second_stage(s1, R.field.characteristic(), ord, seed, opt);
}

inline Gin0Result gin0(const MonomialIdeal& I, MonomialOrder ord, std::uint64_t seed,
                       const GinOptions& opt = {}) {
  GinResult s1;
  try {
    s1 = gin(I, ord, derive_seed(seed, 0xA11CEULL), opt);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("gin0 stage 1: ") + e.what(), e.cert(),
                             e.trial_results());
  }
  return detail::gin0_second_stage(s1, I.ch, ord, seed, opt);
}

// An ideal carried together with the ring it lives in; what
// general_restriction hands back.
template <class F>
struct CarriedIdeal {
  Ring<F> ring;
  std::vector<Polynomial<F>> gens;
};

namespace detail {

template <class F>
CarriedIdeal<F> restrict_carried(const Ring<F>& Rn, std::vector<Polynomial<F>> lifted, int i,
                                 std::uint64_t seed) {
  const int n = Rn.nvars;
  if (i == n) return {Rn, std::move(lifted)};
  const LinearChange<F> g = random_change(Rn, derive_seed(seed, 0x6E57ULL));
  std::vector<std::string> names(Rn.vars.begin(), Rn.vars.begin() + i);
  const Ring<F> Ri(i, Rn.order, Rn.field, std::move(names));
  std::vector<Polynomial<F>> out;
  out.reserve(lifted.size());
  for (const auto& f : lifted) {
    const Polynomial<F> moved = apply_change(Rn, g, f);
    // substitute 0 for X_{i+1}..X_n
    std::vector<Term<F>> ts;
    for (const auto& t : moved.terms) {
      if (t.mono.max_var() > i) continue;
      Monomial m(i);
      for (int v = 1; v <= i; ++v) m.e[static_cast<std::size_t>(v - 1)] = t.mono.exp(v);
      ts.push_back({std::move(m), t.coef});
    }
    out.push_back(normalize(Ri, std::move(ts)));
  }
  return {Ri, std::move(out)};
}

}  // namespace detail

// General restriction to the first i variables: a seeded random change of
// coordinates followed by setting the trailing variables to zero. The
// result lives over the sampling field (the input's own field when it is
// already large enough).
template <class FBase>
auto general_restriction(const Ring<FBase>& R, const std::vector<Polynomial<FBase>>& gens,
                         int i, std::uint64_t seed, const GinOptions& opt = {}) {
  if (i < 0 || i > R.nvars) throw std::invalid_argument("general_restriction: i out of range");
  detail::require_homogeneous_proper(gens, "general_restriction");
  if constexpr (std::is_same_v<FBase, Rationals>) {
    const Ring<Rationals> Rn(R.nvars, R.order, R.field, R.vars);
    return detail::restrict_carried(Rn, detail::reorder_all(Rn, gens), i, seed);
  } else {
    const std::uint64_t p = static_cast<std::uint64_t>(R.field.characteristic());
    // prime-field coefficients embed into any extension as packed constants;
    // a genuine extension input has no such embedding and samples in place
    const GaloisField ext =
        (R.field.ext_degree() > 1 || R.field.cardinality() >= opt.min_field_size)
            ? R.field
            : GaloisField(p, detail::min_ext_degree(p, opt.min_field_size));
    const Ring<GaloisField> Rn(R.nvars, R.order, ext, R.vars);
    std::vector<Polynomial<GaloisField>> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens) {
      std::vector<Term<GaloisField>> ts;
      ts.reserve(g.terms.size());
      for (const auto& t : g.terms) ts.push_back({t.mono, t.coef});
      lifted.push_back(normalize(Rn, std::move(ts)));
    }
    return detail::restrict_carried(Rn, std::move(lifted), i, seed);
  }
}

inline CarriedIdeal<GaloisField> general_restriction(const MonomialIdeal& I, int i,
                                                     std::uint64_t seed,
                                                     const GinOptions& opt = {}) {
  if (I.ch == 0) throw std::invalid_argument("general_restriction: use the rational overload for char 0");
  const Ring<GaloisField> R(I.nvars, MonomialOrder::DegRevLex,
                            GaloisField(static_cast<std::uint64_t>(I.ch), 1));
  std::vector<Polynomial<GaloisField>> gens;
  for (const auto& m : I.gens) gens.push_back(from_monomial(R, m));
  return general_restriction(R, gens, i, seed, opt);
}

}  // namespace ginzero

#pragma once

// Hilbert functions of local cohomology of A/I for weakly stable monomial
// ideals I, and the invariants read off them: End degrees, regularity,
// depth, projective dimension, and the corner values of the Betti diagram.
//
// H^0 is the saturation quotient, whose series is an exact polynomial.
// Higher indices reduce to an H^0 in fewer variables: restrict to
// n-i+1 variables, saturate by the last one, restrict once more, and
// multiply by the degree-shift tail (sum_{j<0} t^j)^i.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ginzero/hilbert.hpp"
#include "ginzero/monideal.hpp"

namespace ginzero {

// Hilb(H^i) = P(t) * (sum_{j<0} t^j)^i stored by its polynomial part.
struct CohomHilbert {
  int index = 0;               // cohomological index i
  std::vector<long long> p;    // P coefficients, entry d = coefficient of t^d

  bool is_zero() const {
    for (long long c : p)
      if (c != 0) return false;
    return true;
  }

  // per-degree value: P_d for i = 0, else sum_{k>=i} C(k-1, i-1) P_{d+k}
  long long value(int d) const {
    if (index == 0)
      return (d >= 0 && static_cast<std::size_t>(d) < p.size()) ? p[static_cast<std::size_t>(d)] : 0;
    long long acc = 0;
    for (std::size_t e = 0; e < p.size(); ++e) {
      const long long k = static_cast<long long>(e) - d;
      if (k < index || p[e] == 0) continue;
      acc += p[e] * detail::binom_ll(k - 1, index - 1);
    }
    return acc;
  }

  // largest degree with a nonzero value; disengaged for the zero module
  std::optional<int> end() const {
    int top = -1;
    for (std::size_t e = 0; e < p.size(); ++e)
      if (p[e] != 0) top = static_cast<int>(e);
    if (top < 0) return std::nullopt;
    return top - index;
  }
};

namespace detail {

// exact division by (1 - t); throws if the remainder is nonzero
inline ZPoly divide_one_minus_t(const ZPoly& f) {
  if (f.empty()) return {};
  if (f.size() == 1) {
    if (f[0] != 0) throw std::logic_error("cohomology: series difference not a polynomial");
    return {};
  }
  const std::size_t d = f.size() - 1;
  ZPoly q(d, 0);
  // from f = (1-t) q + r: q_{d-1} = -f_d, then q_{i-1} = q_i - f_i
  q[d - 1] = -f[d];
  for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = q[i] - f[i];
  if (f[0] - q[0] != 0)
    throw std::logic_error("cohomology: series difference not a polynomial");
  ztrim(q);
  return q;
}

inline void require_weakly_stable(const MonomialIdeal& I, const char* who) {
  if (!classify(I).weakly_stable)
    throw std::domain_error(std::string(who) + ": ideal is not weakly stable");
}

}  // namespace detail

// Hilb(H^0(A/I)) = Hilb((I : X_n^inf)/I) as an exact finite polynomial.
inline std::vector<long long> h0_hilbert(const MonomialIdeal& I) {
  detail::require_weakly_stable(I, "h0_hilbert");
  if (I.nvars == 0) return detail::numerator(I.gens, 0);  // K or 0
  const MonomialIdeal sat = saturate_by_var(I, I.nvars);
  detail::ZPoly diff = detail::numerator(I.gens, I.nvars);
  const detail::ZPoly ns = detail::numerator(sat.gens, I.nvars);
  if (diff.size() < ns.size()) diff.resize(ns.size(), 0);
  for (std::size_t i = 0; i < ns.size(); ++i) diff[i] -= ns[i];
  detail::ztrim(diff);
  for (int v = 0; v < I.nvars; ++v) diff = detail::divide_one_minus_t(diff);
  for (long long c : diff)
    if (c < 0) throw std::logic_error("h0_hilbert: negative coefficient");
  return diff;
}

// All of H^0 .. H^n for a weakly stable ideal.
inline std::vector<CohomHilbert> local_cohomology_profile(const MonomialIdeal& I) {
  detail::require_weakly_stable(I, "local_cohomology_profile");
  const int n = I.nvars;
  std::vector<CohomHilbert> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    CohomHilbert c;
    c.index = i;
    if (i == 0) {
      c.p = h0_hilbert(I);
    } else {
      MonomialIdeal J = restrict_to(I, n - i + 1);
      J = saturate_by_var(J, n - i + 1);
      J = restrict_to(J, n - i);
      c.p = h0_hilbert(J);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Audit route through an intermediate cohomological index h: the same
// polynomial part must arise from H^h of the restriction to n-i+h
// variables. Returns that alternative P.
inline std::vector<long long> cohom_p_via_intermediate(const MonomialIdeal& I, int i, int h) {
  if (h < 1 || h > i || i > I.nvars)
    throw std::invalid_argument("cohom_p_via_intermediate: need 0 < h <= i <= n");
  const MonomialIdeal J = restrict_to(I, I.nvars - i + h);
  return local_cohomology_profile(J)[static_cast<std::size_t>(h)].p;
}

struct QuotientInvariants {
  int reg_quotient = 0;  // reg(A/I)
  int reg_ideal = 0;     // reg(I) = reg(A/I) + 1
  int depth = 0;         // depth(A/I)
  int pd = 0;            // projdim(A/I) = n - depth
};

inline QuotientInvariants regularity_depth_pd(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("regularity_depth_pd: unit ideal");
  const auto prof = local_cohomology_profile(I);
  QuotientInvariants r;
  bool any = false;
  int depth = 0;
  int reg = 0;
  for (const auto& c : prof) {
    const auto e = c.end();
    if (!e) continue;
    if (!any) depth = c.index;  // profile is ascending in i
    reg = any ? std::max(reg, *e + c.index) : *e + c.index;
    any = true;
  }
  if (!any) throw std::logic_error("regularity_depth_pd: all cohomology vanished");
  r.reg_quotient = reg;
  r.reg_ideal = reg + 1;
  r.depth = depth;
  r.pd = I.nvars - depth;
  return r;
}

// One extremal Betti number of A/I: beta_{a, a+d} sits at homological index
// a and diagonal d, with value Hilb(H^{n-a})_{a+d-n}.
struct Corner {
  int index = 0;     // homological index a
  int diagonal = 0;  // d = j - a
  long long value = 0;

  bool operator==(const Corner& o) const {
    return index == o.index && diagonal == o.diagonal && value == o.value;
  }
};

inline std::vector<Corner> extremal_betti(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("extremal_betti: zero ideal");
  if (I.is_unit()) throw std::invalid_argument("extremal_betti: unit ideal");
  const auto prof = local_cohomology_profile(I);
  const int n = I.nvars;
  struct Cand {
    int a, d, i;
  };
  std::vector<Cand> cands;
  for (const auto& c : prof) {
    const auto e = c.end();
    if (!e) continue;
    cands.push_back({n - c.index, *e + c.index, c.index});
  }
  std::vector<Corner> out;
  for (const auto& c : cands) {
    bool dominated = false;
    for (const auto& o : cands) {
      if (o.a >= c.a && o.d >= c.d && o.a + o.d > c.a + c.d) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    Corner corner;
    corner.index = c.a;
    corner.diagonal = c.d;
    corner.value = prof[static_cast<std::size_t>(c.i)].value(c.a + c.d - n);
    if (corner.value <= 0) throw std::logic_error("extremal_betti: corner value not positive");
    out.push_back(corner);
  }
  // descending homological index = ascending cohomological index
  std::sort(out.begin(), out.end(), [](const Corner& x, const Corner& y) {
    return x.index > y.index;
  });
  return out;
}

// Audit route for the projective dimension: largest homological index among
// the corners.
inline int pd_via_corners(const MonomialIdeal& I) {
  const auto corners = extremal_betti(I);
  int pd = 0;
  for (const auto& c : corners) pd = std::max(pd, c.index);
  return pd;
}

// Difference between the two sides of the sheaf-cohomology Euler relation
// dim(A/I)_d - HilbPol(d) = sum_i (-1)^i dim H^i_d, maximized over the
// window; exact arithmetic, so anything nonzero is a real failure.
inline long long serre_audit(const MonomialIdeal& I, int lo, int hi) {
  detail::require_weakly_stable(I, "serre_audit");
  if (I.is_unit()) throw std::invalid_argument("serre_audit: unit ideal");
  const HilbertSeries hs = hilbert_series(I);
  const auto prof = local_cohomology_profile(I);
  long long worst = 0;
  for (int d = lo; d <= hi; ++d) {
    const long long lhs = hs.value(d) - hs.hilbert_poly_value(d);
    long long rhs = 0;
    for (const auto& c : prof) {
      const long long v = c.value(d);
      rhs += (c.index % 2 == 0) ? v : -v;
    }
    const long long diff = lhs - rhs;
    worst = std::max(worst, diff < 0 ? -diff : diff);
  }
  return worst;
}

}  // namespace ginzero

#pragma once

// Hilbert series of quotients by monomial ideals, kept as an exact integer
// numerator over the fixed denominator (1-t)^nvars. The numerator comes from
// the colon recursion N(I) = N(I') - t^deg(u) N(I':u) with the lex-largest
// generator as pivot, support-connected components split multiplicatively,
// and pairwise-coprime components closed in one step.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "ginzero/monideal.hpp"

namespace ginzero {
namespace detail {

inline long long checked_ll(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of range");
  return z.get_si();
}

// C(a, b) for a >= 0, 0 when b < 0 or b > a.
inline mpz_class binom_mpz(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline long long binom_ll(long long a, long long b) {
  return checked_ll(binom_mpz(a, b), "binomial");
}

using ZPoly = std::vector<long long>;  // coefficient of t^i at index i

inline void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// a - t^shift * b
inline ZPoly zsub_shifted(ZPoly a, const ZPoly& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift))
    a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + static_cast<std::size_t>(shift)] -= b[j];
  ztrim(a);
  return a;
}

// gens must be a minimal antichain sorted lex descending.
inline ZPoly numerator(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens.front().is_one()) return {};  // unit ideal, zero series
  // split by support-connected components
  std::vector<int> comp(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) comp[i] = static_cast<int>(i);
  const auto root = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) comp[static_cast<std::size_t>(root(static_cast<int>(j)))] = root(static_cast<int>(i));
  bool split = false;
  const int r0 = root(0);
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (root(static_cast<int>(i)) != r0) split = true;
  if (split) {
    std::map<int, std::vector<Monomial>> parts;
    for (std::size_t i = 0; i < gens.size(); ++i)
      parts[root(static_cast<int>(i))].push_back(gens[i]);
    ZPoly out{1};
    for (auto& [k, part] : parts) out = zmul(out, numerator(part, nvars));
    return out;
  }
  if (gens.size() == 1) {
    ZPoly f(static_cast<std::size_t>(gens.front().degree()) + 1, 0);
    f[0] = 1;
    f.back() -= 1;  // 1 - t^d (degree >= 1 since the unit case was handled)
    return f;
  }
  // pivot on the lex-largest generator
  const Monomial& u = gens.front();
  std::vector<Monomial> rest(gens.begin() + 1, gens.end());
  const MonomialIdeal quot = colon(MonomialIdeal{nvars, 0, rest}, u);
  const ZPoly a = numerator(rest, nvars);
  const ZPoly b = numerator(quot.gens, nvars);
  return zsub_shifted(a, b, u.degree());
}

}  // namespace detail

struct HilbertSeries {
  int nvars = 0;
  std::vector<long long> num;  // numerator over (1-t)^nvars; empty means the zero series

  bool zero_series() const { return num.empty(); }

  // coefficient of t^d in num / (1-t)^nvars
  long long value(int d) const {
    if (d < 0) return 0;
    if (nvars == 0)
      return static_cast<std::size_t>(d) < num.size() ? num[static_cast<std::size_t>(d)] : 0;
    mpz_class acc = 0;
    for (std::size_t j = 0; j < num.size(); ++j) {
      const long long dj = d - static_cast<long long>(j);
      if (dj < 0) break;
      acc += mpz_class(static_cast<long>(num[j])) * detail::binom_mpz(dj + nvars - 1, nvars - 1);
    }
    return detail::checked_ll(acc, "HilbertSeries::value");
  }

  // numerator with all factors (1-t) cancelled, and the Krull dimension of
  // the quotient (-1 for the zero ring)
  struct ReducedForm {
    std::vector<long long> num;
    int dim = 0;
  };

  ReducedForm reduced() const {
    ReducedForm r;
    r.num = num;
    detail::ztrim(r.num);
    r.dim = nvars;
    if (r.num.empty()) {
      r.dim = -1;
      return r;
    }
    while (r.dim > 0) {
      long long sum = 0;
      for (long long c : r.num) sum += c;
      if (sum != 0) break;
      // synthetic division by (1 - t): prefix sums, drop the top
      std::vector<long long> q(r.num.size() - 1, 0);
      long long run = 0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        run += r.num[i];
        q[i] = run;
      }
      r.num = std::move(q);
      detail::ztrim(r.num);
      --r.dim;
      if (r.num.empty()) throw std::logic_error("HilbertSeries: numerator vanished");
    }
    return r;
  }

  // exact value of the Hilbert polynomial at any integer d
  mpz_class hilbert_poly_value_z(long long d) const {
    const ReducedForm r = reduced();
    if (r.dim <= 0) return 0;
    mpz_class acc = 0;
    for (std::size_t j = 0; j < r.num.size(); ++j) {
      // C(d - j + dim - 1, dim - 1) as a polynomial in d: falling factorial
      mpz_class prod = 1;
      const long long top = d - static_cast<long long>(j) + r.dim - 1;
      for (int i = 0; i < r.dim - 1; ++i) prod *= mpz_class(static_cast<long>(top - i));
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r.dim - 1));
      prod /= fact;  // exact: product of dim-1 consecutive integers
      acc += mpz_class(static_cast<long>(r.num[j])) * prod;
    }
    return acc;
  }

  long long hilbert_poly_value(long long d) const {
    return detail::checked_ll(hilbert_poly_value_z(d), "hilbert_poly_value");
  }

  bool operator==(const HilbertSeries& o) const {
    std::vector<long long> a = num, b = o.num;
    detail::ztrim(a);
    detail::ztrim(b);
    return nvars == o.nvars && a == b;
  }
};

namespace detail {

// Hilb(A/I), tolerating the unit ideal (zero series).
inline HilbertSeries quotient_series(const MonomialIdeal& I) {
  HilbertSeries h;
  h.nvars = I.nvars;
  h.num = numerator(I.gens, I.nvars);
  return h;
}

}  // namespace detail

// Hilbert series of A/I. The unit ideal is rejected: the zero ring is not a
// meaningful quotient for callers of this interface.
inline HilbertSeries hilbert_series(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("hilbert_series: unit ideal");
  return detail::quotient_series(I);
}

namespace detail {

// monomials of degree d in n variables, lex descending
inline void enum_degree_lex(int n, int d, std::vector<Monomial>& out) {
  Monomial m(n);
  // positions chosen greedily from the left
  const std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.e[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
    m.e[static_cast<std::size_t>(var)] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return;
  }
  rec(0, d);
}

}  // namespace detail

// The lex ideal with the same Hilbert function, built degree by degree: at
// each degree the segment is topped up with the next monomials in lex order
// until its dimension matches, and construction stops once the partial ideal
// already has the right Hilbert series.
inline MonomialIdeal lex_segment(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return I;
  const HilbertSeries target = hilbert_series(I);
  std::vector<Monomial> lex_gens;
  for (int d = 1;; ++d) {
    if (d > 100000) throw std::runtime_error("lex_segment: degree bound exceeded");
    // dim I_d = dim A_d - dim (A/I)_d
    const long long full = detail::binom_ll(d + I.nvars - 1, I.nvars - 1);
    const long long want = full - target.value(d);
    if (want > 0) {
      std::vector<Monomial> all;
      detail::enum_degree_lex(I.nvars, d, all);
      long long have = 0;
      std::size_t idx = 0;
      bool fresh = false;
      for (; have < want; ++idx) {
        if (idx >= all.size()) throw std::logic_error("lex_segment: degree exhausted");
        bool inside = false;
        for (const auto& g : lex_gens)
          if (g.divides(all[idx])) {
            inside = true;
            break;
          }
        if (!inside) {
          lex_gens.push_back(all[idx]);
          fresh = true;
        } else if (fresh) {
          // the span of a lex ideal is a lex segment, so covered monomials
          // cannot reappear after the first fresh one
          throw std::logic_error("lex_segment: segment not contiguous");
        }
        ++have;
      }
    }
    HilbertSeries now;
    now.nvars = I.nvars;
    const MonomialIdeal cur = minimalize(I.nvars, I.ch, lex_gens);
    now.num = detail::numerator(cur.gens, I.nvars);
    if (now == target) return cur;
  }
}

}  // namespace ginzero

#pragma once

// Buchberger's algorithm with the coprime and chain criteria, normal pair
// selection, and full interreduction. The reduced basis is unique for a
// given ideal and order, which is what makes downstream results canonical.

#include <set>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ginzero/monideal.hpp"
#include "ginzero/polynomial.hpp"

namespace ginzero {

template <class F>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial<F>> elems;  // ascending leading monomials, monic
};

// Full normal form: every term of the result is reducible by no element of
// G. Reducers are tried in the order given, which the callers keep fixed.
template <class F>
Polynomial<F> normal_form(const Ring<F>& R, Polynomial<F> f,
                          std::span<const Polynomial<F>> G) {
  Polynomial<F> out;
  while (!f.is_zero()) {
    bool reduced = false;
    const Term<F>& lt = f.lead();
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (!g.lead().mono.divides(lt.mono)) continue;
      const auto c = R.field.mul(lt.coef, R.field.inv(g.lead().coef));
      f = axpy_term(R, f, c, lt.mono / g.lead().mono, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.terms.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  return out;
}

template <class F>
Polynomial<F> normal_form(const Ring<F>& R, const Polynomial<F>& f,
                          const GroebnerBasis<F>& G) {
  return normal_form(R, f, std::span<const Polynomial<F>>(G.elems));
}

namespace detail {

// Working-form normalization applied to every basis element. Over a finite
// field: monic. Over the rationals: clear denominators and divide out the
// integer content, keeping the leading coefficient positive; this keeps
// coefficient growth in check during the algorithm.
template <class F>
Polynomial<F> working_form(const Ring<F>& R, Polynomial<F> f) {
  if (f.is_zero()) return f;
  if constexpr (std::is_same_v<F, Rationals>) {
    mpz_class den = 1;
    for (const auto& t : f.terms) {
      mpz_class d = t.coef.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class content = 0;
    std::vector<mpz_class> nums;
    nums.reserve(f.terms.size());
    for (const auto& t : f.terms) {
      mpz_class v = t.coef.get_num() * (den / t.coef.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      nums.push_back(std::move(v));
    }
    if (sgn(nums.front()) < 0) content = -content;
    for (std::size_t i = 0; i < nums.size(); ++i) f.terms[i].coef = mpq_class(nums[i] / content);
    return f;
  } else {
    return monic(R, f);
  }
}

// Normal form up to a positive scalar. Over the rationals the intermediate
// polynomial is cross-multiplied instead of divided, so everything stays in
// integers, with the content stripped every few steps.
template <class F>
Polynomial<F> reduce_scaled(const Ring<F>& R, Polynomial<F> f,
                            std::span<const Polynomial<F>> G) {
  if constexpr (!std::is_same_v<F, Rationals>) {
    return normal_form(R, std::move(f), G);
  } else {
    Polynomial<F> out;
    int steps = 0;
    f = working_form(R, std::move(f));
    while (!f.is_zero()) {
      bool reduced = false;
      const Term<F>& lt = f.lead();
      for (const auto& g : G) {
        if (g.is_zero()) continue;
        if (!g.lead().mono.divides(lt.mono)) continue;
        // f <- lc(g) f - lc(f) m g, and scale the finished part to match
        const auto cg = g.lead().coef;
        const auto cf = lt.coef;
        Polynomial<F> shifted;
        shifted.terms.reserve(g.terms.size());
        const Monomial m = lt.mono / g.lead().mono;
        for (const auto& t : g.terms)
          shifted.terms.push_back({t.mono * m, R.field.mul(cf, t.coef)});
        f = sub(R, scale(R, cg, f), shifted);
        if (!out.terms.empty()) out = scale(R, cg, out);
        reduced = true;
        break;
      }
      if (!reduced) {
        out.terms.push_back(f.terms.front());
        f.terms.erase(f.terms.begin());
      } else if (++steps % 8 == 0 && !f.is_zero()) {
        // joint content strip keeps out+f consistent up to one scalar
        Polynomial<F> both;
        both.terms = out.terms;
        both.terms.insert(both.terms.end(), f.terms.begin(), f.terms.end());
        both = working_form(R, std::move(both));
        out.terms.assign(both.terms.begin(), both.terms.begin() + static_cast<std::ptrdiff_t>(out.terms.size()));
        f.terms.assign(both.terms.begin() + static_cast<std::ptrdiff_t>(out.terms.size()), both.terms.end());
      }
    }
    return out;
  }
}

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const Ring<F>& R, const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(detail::working_form(R, g));
  if (G.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  // pending s-pairs keyed by (lcm degree, i, j): normal selection pops the
  // smallest degree first
  std::set<std::tuple<int, int, int>> pending;
  std::set<std::pair<int, int>> treated;
  const auto push_pairs = [&](int t) {
    for (int s = 0; s < t; ++s) {
      const int d = lcm(G[static_cast<std::size_t>(s)].lead().mono,
                        G[static_cast<std::size_t>(t)].lead().mono)
                        .degree();
      pending.insert({d, s, t});
    }
  };
  for (int t = 1; t < static_cast<int>(G.size()); ++t) push_pairs(t);

  while (!pending.empty()) {
    const auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    treated.insert({i, j});
    (void)deg;

    const Polynomial<F>& gi = G[static_cast<std::size_t>(i)];
    const Polynomial<F>& gj = G[static_cast<std::size_t>(j)];
    const Monomial l = lcm(gi.lead().mono, gj.lead().mono);
    if (coprime(gi.lead().mono, gj.lead().mono)) continue;
    // chain criterion: a third leading monomial divides the lcm and both
    // mixed pairs are already treated
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!G[static_cast<std::size_t>(k)].lead().mono.divides(l)) continue;
      const auto p1 = std::minmax(i, k);
      const auto p2 = std::minmax(j, k);
      if (treated.count(p1) && treated.count(p2)) skip = true;
    }
    if (skip) continue;

    // s-polynomial, cross-scaled so the leads cancel without division
    Polynomial<F> si, sj;
    si.terms.reserve(gi.terms.size());
    sj.terms.reserve(gj.terms.size());
    const Monomial mi = l / gi.lead().mono;
    const Monomial mj = l / gj.lead().mono;
    for (const auto& t : gi.terms) si.terms.push_back({t.mono * mi, R.field.mul(gj.lead().coef, t.coef)});
    for (const auto& t : gj.terms) sj.terms.push_back({t.mono * mj, R.field.mul(gi.lead().coef, t.coef)});
    Polynomial<F> h = detail::reduce_scaled(R, sub(R, si, sj), std::span<const Polynomial<F>>(G));
    if (h.is_zero()) continue;
    G.push_back(detail::working_form(R, std::move(h)));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // minimal basis: drop elements whose lead is divisible by another lead
  std::vector<char> dropped(G.size(), 0);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || dropped[j]) continue;
      if (G[j].lead().mono.divides(G[i].lead().mono)) {
        dropped[i] = 1;
        break;
      }
    }
  }
  std::vector<Polynomial<F>> kept;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!dropped[i]) kept.push_back(std::move(G[i]));
  // interreduce tails; the leading monomials are already a fixed antichain
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = detail::reduce_scaled(R, kept[i], std::span<const Polynomial<F>>(others));
  }
  for (auto& g : kept) g = monic(R, g);
  std::sort(kept.begin(), kept.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return monomial_compare(a.lead().mono, b.lead().mono, R.order) < 0;
  });
  return GroebnerBasis<F>{R.order, std::move(kept)};
}

template <class F>
MonomialIdeal initial_ideal(const Ring<F>& R, const GroebnerBasis<F>& G) {
  std::vector<Monomial> lms;
  lms.reserve(G.elems.size());
  for (const auto& g : G.elems) lms.push_back(g.lead().mono);
  return minimalize(R.nvars, R.field.characteristic(), std::move(lms));
}

template <class F>
MonomialIdeal initial_ideal(const Ring<F>& R, const std::vector<Polynomial<F>>& gens) {
  return initial_ideal(R, buchberger(R, gens));
}

}  // namespace ginzero

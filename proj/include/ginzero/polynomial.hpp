#pragma once

// Polynomials over a coefficient field F, stored as term lists sorted
// strictly decreasing in the ring's monomial order. All operations are free
// functions taking the Ring context; polynomials do not carry their ring.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginzero/fields.hpp"
#include "ginzero/monomial.hpp"

namespace ginzero {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coef;
};

template <class F>
struct Ring {
  int nvars;
  MonomialOrder order;
  F field;
  std::vector<std::string> vars;  // display names, size nvars

  Ring(int n, MonomialOrder o, F f) : nvars(n), order(o), field(std::move(f)) {
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  }
  Ring(int n, MonomialOrder o, F f, std::vector<std::string> names)
      : nvars(n), order(o), field(std::move(f)), vars(std::move(names)) {
    if (static_cast<int>(vars.size()) != n)
      throw std::invalid_argument("Ring: variable name count mismatch");
  }
};

template <class F>
struct Polynomial {
  std::vector<Term<F>> terms;  // sorted strictly decreasing, no zero coefs

  bool is_zero() const { return terms.empty(); }

  const Term<F>& lead() const {
    if (terms.empty()) throw std::domain_error("Polynomial: lead of zero");
    return terms.front();
  }

  int degree() const {
    if (terms.empty()) return -1;
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.mono.degree());
    return d;
  }

  bool homogeneous() const {
    if (terms.empty()) return true;
    const int d = terms.front().mono.degree();
    for (const auto& t : terms)
      if (t.mono.degree() != d) return false;
    return true;
  }
};

template <class F>
Polynomial<F> poly_zero(const Ring<F>&) {
  return {};
}

// Sort terms, merge duplicates, drop zeros; the canonical form every
// operation below preserves.
template <class F>
Polynomial<F> normalize(const Ring<F>& R, std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
    return monomial_compare(a.mono, b.mono, R.order) > 0;
  });
  Polynomial<F> out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coef = R.field.add(out.terms.back().coef, t.coef);
    } else {
      out.terms.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms, [&](const Term<F>& t) { return R.field.is_zero(t.coef); });
  return out;
}

template <class F>
bool poly_eq(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].mono != b.terms[i].mono) return false;
    if (!R.field.eq(a.terms[i].coef, b.terms[i].coef)) return false;
  }
  return true;
}

// Merge-add; both inputs canonical.
template <class F>
Polynomial<F> add(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    const int c = monomial_compare(a.terms[i].mono, b.terms[j].mono, R.order);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      auto s = R.field.add(a.terms[i].coef, b.terms[j].coef);
      if (!R.field.is_zero(s)) out.terms.push_back({a.terms[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

template <class F>
Polynomial<F> scale(const Ring<F>& R, const typename F::Elem& c, const Polynomial<F>& a) {
  if (R.field.is_zero(c)) return {};
  Polynomial<F> out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mono, R.field.mul(c, t.coef)});
  return out;
}

template <class F>
Polynomial<F> sub(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  return add(R, a, scale(R, R.field.neg(R.field.one()), b));
}

// a - (c * m) * b, the Gaussian step of polynomial reduction.
template <class F>
Polynomial<F> axpy_term(const Ring<F>& R, const Polynomial<F>& a, const typename F::Elem& c,
                        const Monomial& m, const Polynomial<F>& b) {
  Polynomial<F> shifted;
  shifted.terms.reserve(b.terms.size());
  for (const auto& t : b.terms)
    shifted.terms.push_back({t.mono * m, R.field.mul(c, t.coef)});
  return sub(R, a, shifted);
}

template <class F>
Polynomial<F> mul(const Ring<F>& R, const Polynomial<F>& a, const Polynomial<F>& b) {
  std::vector<Term<F>> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms)
      acc.push_back({s.mono * t.mono, R.field.mul(s.coef, t.coef)});
  return normalize(R, std::move(acc));
}

template <class F>
Polynomial<F> monic(const Ring<F>& R, const Polynomial<F>& a) {
  if (a.is_zero()) return a;
  if (R.field.is_one(a.lead().coef)) return a;
  return scale(R, R.field.inv(a.lead().coef), a);
}

template <class F>
Polynomial<F> from_monomial(const Ring<F>& R, const Monomial& m) {
  Polynomial<F> p;
  p.terms.push_back({m, R.field.one()});
  return p;
}

template <class F>
std::string to_string(const Ring<F>& R, const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms) {
    std::string cs = R.field.to_string(t.coef);
    const bool neg = !cs.empty() && cs.front() == '-';
    if (neg) cs.erase(cs.begin());  // sign moves into the joiner
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += to_string(t.mono, R.vars);
    } else {
      s += cs + "*" + to_string(t.mono, R.vars);
    }
  }
  return s;
}

// Invertible linear change of coordinates. Row i gives the image of X_{i+1}:
// X_{i+1} -> sum_j a[i][j] X_{j+1}.
template <class F>
struct LinearChange {
  int n = 0;
  std::vector<typename F::Elem> a;  // n*n row-major

  const typename F::Elem& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
  typename F::Elem& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
};

template <class F>
LinearChange<F> identity_change(const Ring<F>& R) {
  LinearChange<F> g;
  g.n = R.nvars;
  g.a.assign(static_cast<std::size_t>(R.nvars) * static_cast<std::size_t>(R.nvars), R.field.zero());
  for (int i = 0; i < R.nvars; ++i) g.at(i, i) = R.field.one();
  return g;
}

// Gaussian elimination with partial (first nonzero) pivoting. Returns
// nullopt for singular input.
template <class F>
std::optional<LinearChange<F>> inverse(const Ring<F>& R, LinearChange<F> g) {
  const int n = g.n;
  LinearChange<F> inv = identity_change(R);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!R.field.is_zero(g.at(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(g.at(piv, j), g.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const auto s = R.field.inv(g.at(col, col));
    for (int j = 0; j < n; ++j) {
      g.at(col, j) = R.field.mul(s, g.at(col, j));
      inv.at(col, j) = R.field.mul(s, inv.at(col, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || R.field.is_zero(g.at(r, col))) continue;
      const auto c = g.at(r, col);
      for (int j = 0; j < n; ++j) {
        g.at(r, j) = R.field.sub(g.at(r, j), R.field.mul(c, g.at(col, j)));
        inv.at(r, j) = R.field.sub(inv.at(r, j), R.field.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

template <class F>
bool is_invertible(const Ring<F>& R, const LinearChange<F>& g) {
  return inverse(R, g).has_value();
}

// Dense random matrix, resampled until invertible. Over the sampling fields
// used here a singular draw is rare, so the retry loop terminates fast.
template <class F>
LinearChange<F> random_change(const Ring<F>& R, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearChange<F> g;
    g.n = R.nvars;
    g.a.reserve(static_cast<std::size_t>(R.nvars) * static_cast<std::size_t>(R.nvars));
    for (int i = 0; i < R.nvars * R.nvars; ++i) g.a.push_back(R.field.random(rng));
    if (is_invertible(R, g)) return g;
  }
  throw std::runtime_error("random_change: could not draw an invertible matrix");
}

// Substitute X_i -> sum_j g[i][j] X_j into f. Powers of the variable images
// are built once per input term column to keep the cost near the size of the
// expanded result.
template <class F>
Polynomial<F> apply_change(const Ring<F>& R, const LinearChange<F>& g, const Polynomial<F>& f) {
  const int n = R.nvars;
  if (g.n != n) throw std::invalid_argument("apply_change: size mismatch");
  // images of the variables as linear polynomials
  std::vector<Polynomial<F>> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Term<F>> ts;
    for (int j = 0; j < n; ++j) {
      if (R.field.is_zero(g.at(i, j))) continue;
      Monomial m(n);
      m.e[static_cast<std::size_t>(j)] = 1;
      ts.push_back({std::move(m), g.at(i, j)});
    }
    image[static_cast<std::size_t>(i)] = normalize(R, std::move(ts));
  }
  // cache image powers per variable, grown on demand
  std::vector<std::vector<Polynomial<F>>> pow(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pow[static_cast<std::size_t>(i)].push_back(from_monomial(R, Monomial(n)));
  auto power = [&](int var, int e) -> const Polynomial<F>& {
    auto& cache = pow[static_cast<std::size_t>(var)];
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul(R, cache.back(), image[static_cast<std::size_t>(var)]));
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial<F> out;
  for (const auto& t : f.terms) {
    Polynomial<F> term = from_monomial(R, Monomial(n));
    term.terms[0].coef = t.coef;
    for (int i = 0; i < n; ++i) {
      const int e = t.mono.exp(i + 1);
      if (e > 0) term = mul(R, term, power(i, e));
    }
    out = add(R, out, term);
  }
  return out;
}

}  // namespace ginzero

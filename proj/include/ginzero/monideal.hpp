#pragma once

// Monomial ideals with a characteristic tag, kept as minimal generator
// antichains sorted lexicographically descending. The tag records which
// coefficient characteristic the ideal came from; it matters only to the
// stability classifiers, so ideal equality ignores it.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginzero/monomial.hpp"

namespace ginzero {

struct MonomialIdeal {
  int nvars = 0;
  long ch = 0;                  // coefficient characteristic tag
  std::vector<Monomial> gens;   // minimal, lex descending; {1} encodes the unit ideal

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens.front().is_one(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const {
    return nvars == o.nvars && gens == o.gens;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
};

// Canonical form: dedupe, drop generators divisible by another, sort.
inline MonomialIdeal minimalize(int nvars, long ch, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != nvars)
      throw std::invalid_argument("minimalize: generator in wrong ring");
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) dominated = true;
    }
    if (!dominated) keep.push_back(gens[i]);
  }
  std::sort(keep.begin(), keep.end(), lex_greater);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  MonomialIdeal I;
  I.nvars = nvars;
  I.ch = ch;
  I.gens = std::move(keep);
  return I;
}

inline MonomialIdeal make_ideal(int nvars, long ch, std::vector<Monomial> gens) {
  return minimalize(nvars, ch, std::move(gens));
}

inline MonomialIdeal zero_ideal(int nvars, long ch) { return MonomialIdeal{nvars, ch, {}}; }

inline MonomialIdeal unit_ideal(int nvars, long ch) {
  return MonomialIdeal{nvars, ch, {Monomial(nvars)}};
}

// Number of minimal generators, max generator degree, degree histogram.
struct GenStats {
  long long mu = 0;
  int max_degree = 0;
  std::map<int, long long> by_degree;
};

inline GenStats gen_stats(const MonomialIdeal& I) {
  GenStats s;
  s.mu = static_cast<long long>(I.gens.size());
  for (const auto& g : I.gens) {
    const int d = g.degree();
    s.max_degree = std::max(s.max_degree, d);
    ++s.by_degree[d];
  }
  return s;
}

// (I : u) for a monomial u.
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  if (u.nvars() != I.nvars) throw std::invalid_argument("colon: wrong ring");
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(g / gcd(g, u));
  return minimalize(I.nvars, I.ch, std::move(gens));
}

// (I : X_i^inf): strip the X_i exponent from every generator.
inline MonomialIdeal saturate_by_var(const MonomialIdeal& I, int i) {
  if (i < 1 || i > I.nvars) throw std::invalid_argument("saturate_by_var: bad variable");
  std::vector<Monomial> gens = I.gens;
  for (auto& g : gens) g.e[static_cast<std::size_t>(i - 1)] = 0;
  return minimalize(I.nvars, I.ch, std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars != J.nvars) throw std::invalid_argument("intersect: different rings");
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) gens.push_back(lcm(a, b));
  return minimalize(I.nvars, I.ch, std::move(gens));
}

// (I : m^inf) for the irrelevant maximal ideal m = (X_1, ..., X_n).
inline MonomialIdeal saturate(const MonomialIdeal& I) {
  if (I.nvars == 0) return I;
  MonomialIdeal out = saturate_by_var(I, 1);
  for (int i = 2; i <= I.nvars; ++i) out = intersect(out, saturate_by_var(I, i));
  return out;
}

// Generators supported on X_1..X_j, truncated to a j-variable ring. For a
// monomial ideal this presents the intersection with the subring.
inline MonomialIdeal restrict_to(const MonomialIdeal& I, int j) {
  if (j < 0 || j > I.nvars) throw std::invalid_argument("restrict_to: bad variable count");
  std::vector<Monomial> gens;
  for (const auto& g : I.gens) {
    if (g.max_var() <= j) {
      Monomial m(j);
      for (int i = 1; i <= j; ++i) m.e[static_cast<std::size_t>(i - 1)] = g.exp(i);
      gens.push_back(std::move(m));
    }
  }
  return minimalize(j, I.ch, std::move(gens));
}

// Exponent-wise power: each generator g becomes g^q.
inline MonomialIdeal frobenius_power(const MonomialIdeal& I, int q) {
  if (q < 1) throw std::invalid_argument("frobenius_power: exponent must be positive");
  std::vector<Monomial> gens = I.gens;
  for (auto& g : gens)
    for (auto& e : g.e) e *= q;
  return minimalize(I.nvars, I.ch, std::move(gens));
}

// A stability failure: moving gen from from_var to to_var (an exchange of
// exponent) produced a monomial outside the ideal.
struct StabilityWitness {
  Monomial gen;
  int from_var = 0;
  int to_var = 0;
  Monomial moved;
};

struct Classification {
  bool weakly_stable = false;
  bool stable = false;
  bool strongly_stable = false;
  std::optional<bool> p_borel;  // engaged iff ch > 0
  bool borel_fixed = false;     // strongly stable (ch 0) or p-Borel (ch p)
  std::optional<StabilityWitness> weak_witness;
  std::optional<StabilityWitness> stable_witness;
  std::optional<StabilityWitness> strong_witness;
  std::optional<StabilityWitness> p_borel_witness;
};

namespace detail {

// digit dominance base p: k <=_p l iff every base-p digit of k is <= the
// matching digit of l
inline bool digit_le(long long k, long long l, long long p) {
  while (k > 0 || l > 0) {
    if (k % p > l % p) return false;
    k /= p;
    l /= p;
  }
  return true;
}

}  // namespace detail

// Checking minimal generators suffices for all four stability notions.
inline Classification classify(const MonomialIdeal& I) {
  Classification c;
  if (I.is_zero() || I.is_unit()) {
    c.weakly_stable = c.stable = c.strongly_stable = true;
    if (I.ch > 0) c.p_borel = true;
    c.borel_fixed = true;
    return c;
  }
  // exponent bounds per variable, for the weak stability membership bound
  std::vector<int> bound(static_cast<std::size_t>(I.nvars), 0);
  for (const auto& g : I.gens)
    for (int i = 1; i <= I.nvars; ++i)
      bound[static_cast<std::size_t>(i - 1)] = std::max(bound[static_cast<std::size_t>(i - 1)], g.exp(i));

  c.weakly_stable = true;
  c.stable = true;
  c.strongly_stable = true;
  bool pb = true;
  for (const auto& u : I.gens) {
    const int m = u.max_var();
    const int l_last = u.exp(m);
    for (int j = 1; j < m; ++j) {
      // weak: X_j^k * u / X_m^l for the bounding k
      if (c.weakly_stable) {
        Monomial w = u;
        w.e[static_cast<std::size_t>(m - 1)] = 0;
        w.e[static_cast<std::size_t>(j - 1)] += bound[static_cast<std::size_t>(j - 1)];
        if (!I.contains(w)) {
          c.weakly_stable = false;
          c.weak_witness = StabilityWitness{u, m, j, w};
        }
      }
      // stable: X_j * u / X_m
      if (c.stable) {
        Monomial w = u;
        w.e[static_cast<std::size_t>(m - 1)] -= 1;
        w.e[static_cast<std::size_t>(j - 1)] += 1;
        if (!I.contains(w)) {
          c.stable = false;
          c.stable_witness = StabilityWitness{u, m, j, w};
        }
      }
    }
    for (int i = 2; i <= I.nvars; ++i) {
      const int l = u.exp(i);
      if (l == 0) continue;
      for (int j = 1; j < i; ++j) {
        // strong: X_j * u / X_i
        if (c.strongly_stable) {
          Monomial w = u;
          w.e[static_cast<std::size_t>(i - 1)] -= 1;
          w.e[static_cast<std::size_t>(j - 1)] += 1;
          if (!I.contains(w)) {
            c.strongly_stable = false;
            c.strong_witness = StabilityWitness{u, i, j, w};
          }
        }
        // p-Borel: X_j^k * u / X_i^k for every k digit-dominated by l
        if (I.ch > 0 && pb) {
          for (int k = 1; k <= l && pb; ++k) {
            if (!detail::digit_le(k, l, I.ch)) continue;
            Monomial w = u;
            w.e[static_cast<std::size_t>(i - 1)] -= k;
            w.e[static_cast<std::size_t>(j - 1)] += k;
            if (!I.contains(w)) {
              pb = false;
              c.p_borel_witness = StabilityWitness{u, i, j, w};
            }
          }
        }
      }
    }
    (void)l_last;
  }
  if (I.ch > 0) {
    c.p_borel = pb;
    c.borel_fixed = pb;
  } else {
    c.borel_fixed = c.strongly_stable;
  }
  return c;
}

// Smallest strongly stable ideal containing the given monomials.
inline MonomialIdeal strongly_stable_closure(int nvars, long ch, std::vector<Monomial> seed) {
  MonomialIdeal I = minimalize(nvars, ch, std::move(seed));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Monomial> extra;
    for (const auto& u : I.gens) {
      for (int i = 2; i <= nvars; ++i) {
        if (u.exp(i) == 0) continue;
        for (int j = 1; j < i; ++j) {
          Monomial w = u;
          w.e[static_cast<std::size_t>(i - 1)] -= 1;
          w.e[static_cast<std::size_t>(j - 1)] += 1;
          if (!I.contains(w)) extra.push_back(std::move(w));
        }
      }
    }
    if (!extra.empty()) {
      changed = true;
      for (auto& g : I.gens) extra.push_back(std::move(g));
      I = minimalize(nvars, ch, std::move(extra));
    }
  }
  return I;
}

// Alexander dual of a squarefree monomial ideal: intersect the variable
// primes spanned by each generator's support.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  for (const auto& g : I.gens)
    for (int e : g.e)
      if (e > 1) throw std::domain_error("alexander_dual: input not squarefree");
  if (I.is_zero()) return unit_ideal(I.nvars, I.ch);
  if (I.is_unit()) return zero_ideal(I.nvars, I.ch);
  MonomialIdeal out = unit_ideal(I.nvars, I.ch);
  for (const auto& g : I.gens) {
    std::vector<Monomial> prime;
    for (int i = 1; i <= I.nvars; ++i) {
      if (g.exp(i) == 0) continue;
      Monomial v(I.nvars);
      v.e[static_cast<std::size_t>(i - 1)] = 1;
      prime.push_back(std::move(v));
    }
    out = intersect(out, minimalize(I.nvars, I.ch, std::move(prime)));
  }
  return out;
}

// Minimal free resolution degrees of a stable ideal, from the generator
// combinatorics: each generator u of degree d contributes C(max_var(u)-1, i)
// to the Betti number in homological degree i and internal degree i+d.
// Keys are (i, i+d), values the Betti numbers.
inline std::map<std::pair<int, int>, long long> stable_betti(const MonomialIdeal& I) {
  const Classification c = classify(I);
  if (!c.stable) throw std::domain_error("stable_betti: ideal is not stable");
  std::map<std::pair<int, int>, long long> beta;
  for (const auto& u : I.gens) {
    const int m = u.max_var();
    const int d = u.degree();
    long long binom = 1;
    for (int i = 0; i <= m - 1; ++i) {
      beta[{i, i + d}] += binom;
      binom = binom * (m - 1 - i) / (i + 1);
    }
  }
  return beta;
}

inline std::string to_string(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  if (I.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(I.gens[i], vars);
  }
  s += ")";
  return s;
}

}  // namespace ginzero

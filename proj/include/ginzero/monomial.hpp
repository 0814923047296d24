#pragma once

// Monomials in a fixed number of variables and the three supported term
// orders. Variables are indexed 1..n with X_1 largest in every order.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginzero {

struct Monomial {
  std::vector<int> e;  // exponent of X_i at e[i-1]

  Monomial() = default;
  explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  // Largest index of a variable actually dividing the monomial; 0 for 1.
  int max_var() const {
    for (int i = nvars(); i >= 1; --i)
      if (e[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
  }

  int min_var() const {
    for (int i = 1; i <= nvars(); ++i)
      if (e[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
  }

  int exp(int i) const { return e[static_cast<std::size_t>(i - 1)]; }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) {
      r.e[i] -= m.e[i];
      if (r.e[i] < 0) throw std::domain_error("Monomial: quotient not a monomial");
    }
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

enum class MonomialOrder { Lex, DegLex, DegRevLex };

inline std::string order_name(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegLex: return "deglex";
    case MonomialOrder::DegRevLex: return "degrevlex";
  }
  throw std::logic_error("order_name: bad enum");
}

// Returns -1, 0, or 1 as a <, =, > b in the given order.
inline int monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder o) {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("monomial_compare: different variable counts");
  switch (o) {
    case MonomialOrder::Lex: {
      for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::DegLex: {
      const int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::DegRevLex: {
      const int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      }
      return 0;
    }
  }
  throw std::logic_error("monomial_compare: bad enum");
}

// Strict lexicographic descending; used for canonical generator lists.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  return monomial_compare(a, b, MonomialOrder::Lex) > 0;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 1; i <= m.nvars(); ++i) {
    const int x = m.exp(i);
    if (x == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[static_cast<std::size_t>(i - 1)];
    if (x > 1) s += "^" + std::to_string(x);
  }
  return s;
}

}  // namespace ginzero

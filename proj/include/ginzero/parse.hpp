#pragma once

// Text form of polynomials: terms joined by + or -, each term an optional
// integer coefficient and variable powers joined by *, e.g. "3*x^2*y - z^3".
// Variable names come from the ring and are matched longest-first so names
// like "x1" and "x10" coexist.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginzero/polynomial.hpp"

namespace ginzero {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

template <class F>
Polynomial<F> parse_polynomial(const Ring<F>& R, const std::string& s) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  const auto at_digit = [&] {
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  };
  const auto read_int = [&]() -> long long {
    const std::size_t start = i;
    while (at_digit()) ++i;
    if (i == start) throw ParseError("expected an integer", i);
    try {
      return std::stoll(s.substr(start, i - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer literal out of range", start);
    }
  };
  // longest variable name matching at i; returns 1-based index or 0
  const auto match_var = [&](std::size_t* len) -> int {
    int best = 0;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < R.vars.size(); ++v) {
      const std::string& name = R.vars[v];
      if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
        best = static_cast<int>(v) + 1;
        best_len = name.size();
      }
    }
    *len = best_len;
    return best;
  };

  std::vector<Term<F>> terms;
  skip_ws();
  if (i >= s.size()) throw ParseError("empty polynomial", i);
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", i);
    }
    first = false;
    // one term: optional integer coefficient, then variable powers
    long long coef = 1;
    bool saw_coef = false;
    bool saw_factor = false;
    Monomial mono(R.nvars);
    if (at_digit()) {
      coef = read_int();
      saw_coef = true;
    }
    while (true) {
      skip_ws();
      std::size_t save = i;
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      } else if (saw_coef || saw_factor) {
        // factors must be '*'-joined; stop the term here
        break;
      }
      std::size_t len = 0;
      const int v = match_var(&len);
      if (v == 0) {
        if (save != i) throw ParseError("expected a variable after '*'", i);
        break;
      }
      i += len;
      long long e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        e = read_int();
        if (e < 0) throw ParseError("negative exponent", i);
      }
      if (e > 1000000) throw ParseError("exponent too large", i);
      mono.e[static_cast<std::size_t>(v - 1)] += static_cast<int>(e);
      saw_factor = true;
    }
    if (!saw_coef && !saw_factor)
      throw ParseError("expected a term", i);
    typename F::Elem c = R.field.from_int(sign * coef);
    terms.push_back({std::move(mono), std::move(c)});
  }
  return normalize(R, std::move(terms));
}

}  // namespace ginzero

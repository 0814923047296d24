// Fixed-seed ideal corpus shared by the property tests and the acceptance
// run. Every entry is reproducible from this file alone: the generators are
// either written out literally or produced by the deterministic builders
// below from a seed recorded in the entry. Nothing here depends on wall
// clock, locale, or platform word size.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ginzero/cohomology.hpp"
#include "ginzero/fields.hpp"
#include "ginzero/gin.hpp"
#include "ginzero/monideal.hpp"
#include "ginzero/parse.hpp"
#include "ginzero/polynomial.hpp"

namespace corpus {

using namespace ginzero;

struct Entry {
  std::string name;               // stable identifier, used in failure messages
  int nvars = 0;
  long ch = 0;                    // 0, 2, 3, or 5
  std::vector<std::string> gens;  // parseable in variables x1..xn
  std::uint64_t seed = 0;         // fixed seed for every randomized stage
  bool monomial = false;          // every generator is a single monomial
  bool frobenius = false;         // built as a Frobenius power in char p
};

inline constexpr std::uint64_t kSeedBase = 0x5EEDC0DEULL;

inline std::uint64_t entry_seed(std::size_t index) {
  return derive_seed(kSeedBase, static_cast<std::uint64_t>(index));
}

// ---------------------------------------------------------------------------
// String helpers
// ---------------------------------------------------------------------------

inline std::string mono_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 1; i <= m.nvars(); ++i) {
    const int e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::vector<std::string> mono_strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.gens.size());
  for (const auto& g : I.gens) out.push_back(mono_string(g));
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic monomial-ideal builders
// ---------------------------------------------------------------------------

inline Monomial random_monomial(Rng& rng, int nvars, int degree) {
  Monomial m(nvars);
  for (int d = 0; d < degree; ++d) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars)));
    m.e[static_cast<std::size_t>(i)] += 1;
  }
  return m;
}

// Closure under u -> x_j * u / x_{m(u)} for j < m(u) only. The result is
// stable, and with mixed top variables usually not strongly stable.
inline MonomialIdeal stable_closure(int nvars, long ch, std::vector<Monomial> start) {
  std::set<std::vector<int>> seen;
  std::vector<Monomial> queue = std::move(start);
  std::vector<Monomial> all;
  while (!queue.empty()) {
    Monomial u = std::move(queue.back());
    queue.pop_back();
    if (!seen.insert(u.e).second) continue;
    all.push_back(u);
    const int m = u.max_var();
    for (int j = 1; j < m; ++j) {
      Monomial v = u;
      v.e[static_cast<std::size_t>(m - 1)] -= 1;
      v.e[static_cast<std::size_t>(j - 1)] += 1;
      queue.push_back(std::move(v));
    }
  }
  return make_ideal(nvars, ch, std::move(all));
}

inline MonomialIdeal random_strongly_stable(Rng& rng, int nvars, long ch, int count,
                                            int max_degree) {
  std::vector<Monomial> start;
  for (int i = 0; i < count; ++i) {
    const int d = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree - 1)));
    start.push_back(random_monomial(rng, nvars, d));
  }
  return ginzero::strongly_stable_closure(nvars, ch, std::move(start));
}

inline MonomialIdeal random_stable(Rng& rng, int nvars, long ch, int count, int max_degree) {
  std::vector<Monomial> start;
  for (int i = 0; i < count; ++i) {
    const int d = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree - 1)));
    start.push_back(random_monomial(rng, nvars, d));
  }
  return stable_closure(nvars, ch, std::move(start));
}

// Irreducible-component construction: an intersection of ideals of the form
// (x_1^{a_1}, ..., x_j^{a_j}) has all associated primes among the prefix
// primes (x_1, ..., x_j), which is exactly weak stability. Randomizing the
// exponents and the prefix lengths gives weakly stable ideals that are far
// from stable.
inline MonomialIdeal random_weakly_stable(Rng& rng, int nvars, long ch, int components,
                                          int max_exp) {
  MonomialIdeal out = unit_ideal(nvars, ch);
  for (int c = 0; c < components; ++c) {
    const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars)));
    std::vector<Monomial> gens;
    for (int i = 1; i <= j; ++i) {
      Monomial m(nvars);
      m.e[static_cast<std::size_t>(i - 1)] =
          1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_exp)));
      gens.push_back(std::move(m));
    }
    out = intersect(out, make_ideal(nvars, ch, std::move(gens)));
  }
  if (out.is_unit() || out.is_zero()) {
    // intersections of proper prefix ideals are proper; guard anyway
    std::vector<Monomial> m1{Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0))};
    m1.front().e[0] = 2;
    out = make_ideal(nvars, ch, std::move(m1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic polynomial generators (non-monomial corpus members)
// ---------------------------------------------------------------------------

// A readable random homogeneous form of the given degree: a signed integer
// combination of a handful of degree-d monomials. Written as a string so the
// same entry parses over any field; the coefficients are coprime to 30, so
// no term vanishes in any corpus characteristic.
inline std::string random_form(Rng& rng, int nvars, int degree) {
  static constexpr long kCoefs[] = {1, 7, 11, 13, 17, 19, 23, 29};
  const int terms = 2 + static_cast<int>(rng.below(3));  // 2..4 terms
  std::string s;
  std::set<std::vector<int>> used;
  for (int t = 0; t < terms; ++t) {
    Monomial m = random_monomial(rng, nvars, degree);
    if (!used.insert(m.e).second) continue;  // drop duplicate monomials
    const long c = kCoefs[rng.below(8)];
    const bool neg = rng.below(2) == 1;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += mono_string(m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// The corpus
// ---------------------------------------------------------------------------

inline const std::vector<long>& characteristics() {
  static const std::vector<long> cs{0, 2, 3, 5};
  return cs;
}

inline std::vector<Entry> build_main_corpus() {
  std::vector<Entry> out;
  const auto push = [&out](std::string name, int nvars, long ch, std::vector<std::string> gens,
                           bool monomial, bool frobenius = false) {
    Entry e;
    e.name = std::move(name);
    e.nvars = nvars;
    e.ch = ch;
    e.gens = std::move(gens);
    e.seed = entry_seed(out.size());
    e.monomial = monomial;
    e.frobenius = frobenius;
    out.push_back(std::move(e));
  };

  for (long ch : characteristics()) {
    const std::string tag = "c" + std::to_string(ch) + "-";

    // power complete intersections in two variables, degrees 1..4
    for (int a = 1; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        push(tag + "ci-x" + std::to_string(a) + "y" + std::to_string(b), 2, ch,
             {"x1^" + std::to_string(a), "x2^" + std::to_string(b)}, true);

    // squares of the variables in three and four variables
    push(tag + "squares3", 3, ch, {"x1^2", "x2^2", "x3^2"}, true);
    push(tag + "squares4", 4, ch, {"x1^2", "x2^2", "x3^2", "x4^2"}, true);

    // squarefree members: graphs and small complexes
    push(tag + "triangle", 3, ch, {"x1*x2", "x1*x3", "x2*x3"}, true);
    push(tag + "path4", 4, ch, {"x1*x2", "x2*x3", "x3*x4"}, true);
    push(tag + "cycle4", 4, ch, {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}, true);
    push(tag + "star4", 4, ch, {"x1*x2", "x1*x3", "x1*x4"}, true);
    push(tag + "k4", 4, ch,
         {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"}, true);
    push(tag + "two-triples", 4, ch, {"x1*x2*x3", "x2*x3*x4"}, true);
    push(tag + "tetra-boundary", 4, ch,
         {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"}, true);

    // mixed monomial members that are not stable under any exchange rule
    push(tag + "mixed1", 3, ch, {"x1*x3^2", "x2^3"}, true);
    push(tag + "mixed2", 3, ch, {"x3^4", "x1^2*x2^2"}, true);
    push(tag + "mixed3", 4, ch, {"x2*x4", "x1^3", "x3^3"}, true);
  }

  // random non-monomial members; the builder draws from the entry seed, so
  // the generator strings are fixed by this file
  for (long ch : characteristics()) {
    const std::string tag = "c" + std::to_string(ch) + "-rand-";
    int counter = 0;
    const auto rand_entry = [&](int nvars, std::vector<int> degrees) {
      Rng rng(derive_seed(kSeedBase, 0x9000 + static_cast<std::uint64_t>(ch) * 131 +
                                        static_cast<std::uint64_t>(counter)));
      std::vector<std::string> gens;
      for (int d : degrees) gens.push_back(random_form(rng, nvars, d));
      push(tag + std::to_string(counter), nvars, ch, std::move(gens), false);
      ++counter;
    };
    for (int rep = 0; rep < 3; ++rep) {
      rand_entry(2, {2, 2});
      rand_entry(2, {2, 3});
      rand_entry(2, {3, 4});
      rand_entry(3, {2, 2});
      rand_entry(3, {2, 2, 3});
      rand_entry(3, {3, 3});
      rand_entry(4, {2, 2});
      rand_entry(4, {2, 2, 2});
      rand_entry(4, {2, 3});
    }
  }

  // random closure-built monomial members
  for (long ch : characteristics()) {
    const std::string tag = "c" + std::to_string(ch) + "-";
    for (int k = 0; k < 6; ++k) {
      Rng rng(derive_seed(kSeedBase, 0xA000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      const int nvars = 2 + k % 3;
      const MonomialIdeal I = random_strongly_stable(rng, nvars, ch, 2, 4);
      push(tag + "sstable" + std::to_string(k), nvars, ch, mono_strings(I), true);
    }
    for (int k = 0; k < 4; ++k) {
      Rng rng(derive_seed(kSeedBase, 0xB000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      const int nvars = 3 + k % 2;
      const MonomialIdeal I = random_stable(rng, nvars, ch, 2, 4);
      push(tag + "stable" + std::to_string(k), nvars, ch, mono_strings(I), true);
    }
    for (int k = 0; k < 4; ++k) {
      Rng rng(derive_seed(kSeedBase, 0xC000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      const int nvars = 2 + k % 3;
      // two components with exponents at most 2 keep the lcm degrees at 4
      const MonomialIdeal I = random_weakly_stable(rng, nvars, ch, 2, 2);
      push(tag + "wstable" + std::to_string(k), nvars, ch, mono_strings(I), true);
    }
  }

  // Frobenius powers in characteristic 2: exponent doubling keeps the
  // generator degrees within the corpus cap only for quadrics. The first
  // member is the square of (x^2, x*y + y^2) and is the designated
  // crystallization failure witness for the plain generic initial ideal.
  push("c2-frob-mixed", 2, 2, {"x1^4", "x1^2*x2^2 + x2^4"}, false, true);
  push("c2-frob-xy", 2, 2, {"x1^4", "x1^2*x2^2"}, true, true);
  push("c2-frob-full2", 2, 2, {"x1^4", "x1^2*x2^2", "x2^4"}, true, true);
  push("c2-frob-3v", 3, 2, {"x1^4", "x1^2*x2^2", "x2^4", "x1^2*x3^2"}, true, true);

  return out;
}

inline const std::vector<Entry>& main_corpus() {
  static const std::vector<Entry> c = build_main_corpus();
  return c;
}

// Weakly stable monomial ideals for the cohomology-specific suites. Mixes
// closure-built stable ideals, prefix-prime intersections, and Frobenius
// powers of strongly stable ideals (which are weakly stable but usually not
// stable).
struct MonomialEntry {
  std::string name;
  MonomialIdeal ideal;
  std::uint64_t seed = 0;
};

inline std::vector<MonomialEntry> build_weakly_stable_corpus() {
  std::vector<MonomialEntry> out;
  const auto push = [&out](std::string name, MonomialIdeal I) {
    MonomialEntry e;
    e.name = std::move(name);
    e.ideal = std::move(I);
    e.seed = entry_seed(0x700 + out.size());
    out.push_back(std::move(e));
  };

  for (long ch : characteristics()) {
    const std::string tag = "ws-c" + std::to_string(ch) + "-";
    for (int k = 0; k < 5; ++k) {
      Rng rng(derive_seed(kSeedBase, 0xD000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      push(tag + "prod" + std::to_string(k), random_weakly_stable(rng, 2 + k % 3, ch, 2, 4));
    }
    for (int k = 0; k < 3; ++k) {
      Rng rng(derive_seed(kSeedBase, 0xE000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      push(tag + "closure" + std::to_string(k), random_strongly_stable(rng, 2 + k, ch, 2, 4));
    }
  }
  // Frobenius powers of strongly stable ideals, in their own characteristic
  for (long p : {2L, 3L}) {
    Rng rng(derive_seed(kSeedBase, 0xF000 + static_cast<std::uint64_t>(p)));
    for (int k = 0; k < 3; ++k) {
      const MonomialIdeal base = random_strongly_stable(rng, 2 + k, p, 2, 3);
      push("ws-frob-p" + std::to_string(p) + "-" + std::to_string(k),
           frobenius_power(base, static_cast<int>(p)));
    }
  }
  return out;
}

inline const std::vector<MonomialEntry>& weakly_stable_corpus() {
  static const std::vector<MonomialEntry> c = build_weakly_stable_corpus();
  return c;
}

inline std::vector<MonomialEntry> build_stable_corpus() {
  std::vector<MonomialEntry> out;
  const auto push = [&out](std::string name, MonomialIdeal I) {
    MonomialEntry e;
    e.name = std::move(name);
    e.ideal = std::move(I);
    e.seed = entry_seed(0x900 + out.size());
    out.push_back(std::move(e));
  };
  for (long ch : characteristics()) {
    const std::string tag = "st-c" + std::to_string(ch) + "-";
    for (int k = 0; k < 6; ++k) {
      Rng rng(derive_seed(kSeedBase, 0x1D000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      const int nvars = 2 + k % 3;
      push(tag + std::to_string(k), random_stable(rng, nvars, ch, 2, 4));
    }
    for (int k = 0; k < 3; ++k) {
      Rng rng(derive_seed(kSeedBase, 0x1E000 + static_cast<std::uint64_t>(ch) * 131 +
                                         static_cast<std::uint64_t>(k)));
      push(tag + "strong" + std::to_string(k), random_strongly_stable(rng, 2 + k, ch, 3, 4));
    }
  }
  return out;
}

inline const std::vector<MonomialEntry>& stable_corpus() {
  static const std::vector<MonomialEntry> c = build_stable_corpus();
  return c;
}

// ---------------------------------------------------------------------------
// Parsing an entry into a concrete ring
// ---------------------------------------------------------------------------

template <class F>
std::vector<Polynomial<F>> parse_gens(const Ring<F>& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size());
  for (const auto& s : gens) out.push_back(parse_polynomial(R, s));
  return out;
}

inline Ring<GaloisField> prime_ring(const Entry& e) {
  return Ring<GaloisField>(e.nvars, MonomialOrder::DegRevLex,
                           GaloisField(static_cast<std::uint64_t>(e.ch), 1));
}

inline Ring<Rationals> rational_ring(const Entry& e, long entry_bound = 1000) {
  return Ring<Rationals>(e.nvars, MonomialOrder::DegRevLex, Rationals(entry_bound));
}

// Monomial entries can skip the parser entirely.
inline MonomialIdeal monomial_ideal_of(const Entry& e) {
  if (!e.monomial) throw std::logic_error("corpus: entry is not monomial");
  Ring<Rationals> R(e.nvars, MonomialOrder::DegRevLex, Rationals(1000));
  std::vector<Monomial> ms;
  for (const auto& s : e.gens) {
    const auto f = parse_polynomial(R, s);
    if (f.terms.size() != 1) throw std::logic_error("corpus: generator is not a monomial");
    ms.push_back(f.terms.front().mono);
  }
  return make_ideal(e.nvars, e.ch, std::move(ms));
}

// Options used throughout the corpus runs: default certification settings,
// smaller rational sampling entries to keep coefficient growth modest.
inline GinOptions corpus_options() {
  GinOptions opt;
  opt.entry_bound = 1000;
  return opt;
}

}  // namespace corpus

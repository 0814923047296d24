#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ginzero/monomial.hpp"

using namespace ginzero;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// all monomials of degree <= d in n variables
std::vector<Monomial> up_to_degree(int n, int d) {
  std::vector<Monomial> out{Monomial(n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Monomial m = out[i];
    if (m.degree() == d) continue;
    // extend by any variable at or after the last touched one to avoid dups
    int start = 1;
    for (int v = n; v >= 1; --v)
      if (m.exp(v) > 0) {
        start = v;
        break;
      }
    for (int v = start; v <= n; ++v) {
      Monomial w = m;
      w.e[static_cast<std::size_t>(v - 1)] += 1;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basic monomial accessors") {
  const Monomial m = mono({2, 0, 3});
  REQUIRE(m.nvars() == 3);
  REQUIRE(m.degree() == 5);
  REQUIRE(m.exp(1) == 2);
  REQUIRE(m.exp(2) == 0);
  REQUIRE(m.min_var() == 1);
  REQUIRE(m.max_var() == 3);
  REQUIRE_FALSE(m.is_one());
  const Monomial one(3);
  REQUIRE(one.is_one());
  REQUIRE(one.degree() == 0);
  REQUIRE(one.max_var() == 0);
  REQUIRE(one.min_var() == 0);
}

TEST_CASE("products quotients divisibility") {
  const Monomial a = mono({2, 1, 0});
  const Monomial b = mono({0, 1, 3});
  REQUIRE(a * b == mono({2, 2, 3}));
  REQUIRE(lcm(a, b) == mono({2, 1, 3}));
  REQUIRE(gcd(a, b) == mono({0, 1, 0}));
  REQUIRE_FALSE(coprime(a, b));
  REQUIRE(coprime(mono({2, 0, 0}), mono({0, 0, 3})));
  REQUIRE(a.divides(a * b));
  REQUIRE_FALSE(b.divides(a));
  REQUIRE((a * b) / b == a);
  REQUIRE_THROWS_AS(a / b, std::domain_error);
  // lcm * gcd == product, coordinatewise max+min identity
  REQUIRE(lcm(a, b) * gcd(a, b) == a * b);
}

TEST_CASE("lex compares leftmost difference, ignoring degree") {
  const Monomial x3 = mono({3, 0});
  const Monomial y4 = mono({0, 4});
  REQUIRE(monomial_compare(x3, y4, MonomialOrder::Lex) > 0);
  REQUIRE(monomial_compare(y4, x3, MonomialOrder::Lex) < 0);
  REQUIRE(monomial_compare(x3, x3, MonomialOrder::Lex) == 0);
}

TEST_CASE("deglex breaks degree ties leftmost, degrevlex rightmost") {
  // the canonical separating pair in three variables
  const Monomial xz = mono({1, 0, 1});
  const Monomial y2 = mono({0, 2, 0});
  REQUIRE(monomial_compare(xz, y2, MonomialOrder::DegLex) > 0);
  REQUIRE(monomial_compare(xz, y2, MonomialOrder::DegRevLex) < 0);
  REQUIRE(monomial_compare(xz, y2, MonomialOrder::Lex) > 0);
  // degree dominates in both graded orders
  const Monomial x3 = mono({3, 0, 0});
  const Monomial y4 = mono({0, 4, 0});
  REQUIRE(monomial_compare(x3, y4, MonomialOrder::DegLex) < 0);
  REQUIRE(monomial_compare(x3, y4, MonomialOrder::DegRevLex) < 0);
}

TEST_CASE("two-variable graded orders coincide") {
  const auto all = up_to_degree(2, 4);
  for (const auto& a : all)
    for (const auto& b : all) {
      const int dl = monomial_compare(a, b, MonomialOrder::DegLex);
      const int dr = monomial_compare(a, b, MonomialOrder::DegRevLex);
      REQUIRE((dl > 0) == (dr > 0));
      REQUIRE((dl == 0) == (dr == 0));
    }
}

TEST_CASE("orders are total and multiplicative") {
  const auto all = up_to_degree(3, 3);
  for (const auto o :
       {MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex}) {
    for (const auto& a : all)
      for (const auto& b : all) {
        const int c = monomial_compare(a, b, o);
        REQUIRE(monomial_compare(b, a, o) == -c);
        REQUIRE((c == 0) == (a == b));
        // multiplicativity: scaling both sides never flips the comparison
        const Monomial t = mono({1, 1, 0});
        REQUIRE(monomial_compare(a * t, b * t, o) == c);
      }
    // transitivity via sort consistency: sorting twice yields the same list
    auto s1 = all, s2 = all;
    auto cmp = [o](const Monomial& a, const Monomial& b) {
      return monomial_compare(a, b, o) > 0;
    };
    std::sort(s1.begin(), s1.end(), cmp);
    std::stable_sort(s2.begin(), s2.end(), cmp);
    REQUIRE(s1 == s2);
    // one is the minimum of every graded order and of lex
    REQUIRE(s1.back().is_one());
  }
}

TEST_CASE("degrevlex sorts a degree component correctly") {
  // degree 2 in x > y > z, descending
  std::vector<Monomial> got = {mono({0, 0, 2}), mono({1, 0, 1}), mono({2, 0, 0}),
                               mono({0, 1, 1}), mono({0, 2, 0}), mono({1, 1, 0})};
  std::sort(got.begin(), got.end(), [](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, MonomialOrder::DegRevLex) > 0;
  });
  const std::vector<Monomial> want = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                      mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  REQUIRE(got == want);
}

TEST_CASE("printing uses the declared names") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  REQUIRE(to_string(mono({2, 0, 3}), xyz) == "x^2*z^3");
  REQUIRE(to_string(mono({0, 1, 0}), xyz) == "y");
  REQUIRE(to_string(mono({0, 0, 0}), xyz) == "1");
  REQUIRE(to_string(mono({1, 1, 1}), xyz) == "x*y*z");
}

TEST_CASE("order names round-trip") {
  REQUIRE(order_name(MonomialOrder::Lex) == "lex");
  REQUIRE(order_name(MonomialOrder::DegLex) == "deglex");
  REQUIRE(order_name(MonomialOrder::DegRevLex) == "degrevlex");
}

TEST_CASE("lex_greater is a strict total order usable for sorting") {
  auto all = up_to_degree(3, 2);
  std::sort(all.begin(), all.end(), lex_greater);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    REQUIRE(lex_greater(all[i], all[i + 1]));
    REQUIRE_FALSE(lex_greater(all[i + 1], all[i]));
  }
}

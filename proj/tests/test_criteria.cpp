#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "ginzero/criteria.hpp"
#include "ginzero/parse.hpp"

using namespace ginzero;

namespace {

MonomialIdeal ideal(int n, long ch, std::vector<std::vector<int>> es) {
  std::vector<Monomial> ms;
  for (auto& e : es) ms.push_back(Monomial(std::move(e)));
  return make_ideal(n, ch, std::move(ms));
}

Ring<Rationals> qring(std::vector<std::string> names) {
  const int n = static_cast<int>(names.size());
  return Ring<Rationals>(n, MonomialOrder::DegRevLex, Rationals{}, std::move(names));
}

template <class F>
std::vector<Polynomial<F>> parse_all(const Ring<F>& R, const std::vector<std::string>& ss) {
  std::vector<Polynomial<F>> out;
  for (const auto& s : ss) out.push_back(parse_polynomial(R, s));
  return out;
}

bool has_witness(const AuditReport& r, const std::string& needle) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const std::string& w) {
    return w.find(needle) != std::string::npos;
  });
}

std::string extra(const AuditReport& r, const std::string& key) {
  for (const auto& [k, v] : r.extras)
    if (k == key) return v;
  return "<missing>";
}

}  // namespace

TEST_CASE("minimal generator degrees ignore redundant generators") {
  const auto R = qring({"x", "y"});
  const auto two = minimal_generator_degrees(R, parse_all(R, {"x^2", "y^2"}));
  REQUIRE(two == std::map<int, long long>{{2, 2}});
  // a dependent third generator changes nothing
  const auto still_two =
      minimal_generator_degrees(R, parse_all(R, {"x^2", "y^2", "x^2 + y^2"}));
  REQUIRE(still_two == std::map<int, long long>{{2, 2}});
  // higher Groebner elements are not minimal generators
  const auto mixed = minimal_generator_degrees(R, parse_all(R, {"x^2 - y^2", "x*y"}));
  REQUIRE(mixed == std::map<int, long long>{{2, 2}});
  // monomial route counts the stored minimal generators
  const auto m = minimal_generator_degrees(ideal(2, 0, {{2, 0}, {1, 1}, {0, 3}}));
  REQUIRE(m == std::map<int, long long>{{2, 2}, {3, 1}});
  REQUIRE(mu_of(m) == 3);
  REQUIRE(max_degree_of(m) == 3);
  REQUIRE(mu_of({}) == 0);
  REQUIRE(max_degree_of({}) == 0);
  REQUIRE_THROWS_AS(minimal_generator_degrees(unit_ideal(2, 0)), std::invalid_argument);
}

TEST_CASE("invariants of rational squares through the zero-generic ideal") {
  const auto R = qring({"x", "y"});
  const InvariantsReport inv = invariants_via_gin0(R, parse_all(R, {"x^2", "y^2"}), 5);
  REQUIRE(inv.gin0_ideal == ideal(2, 0, {{2, 0}, {1, 1}, {0, 3}}));
  REQUIRE(inv.reg_ideal == 3);
  REQUIRE(inv.reg_quotient == 2);
  REQUIRE(inv.depth == 0);
  REQUIRE(inv.pd == 2);
  REQUIRE(inv.corners == std::vector<Corner>{Corner{2, 2, 1}});
  REQUIRE(inv.stage1.certified());
  REQUIRE(inv.stage2.certified());
}

TEST_CASE("invariants of the sextic pair in characteristic three") {
  const InvariantsReport inv = invariants_via_gin0(ideal(2, 3, {{6, 0}, {0, 6}}), 5);
  REQUIRE(inv.gin0_ideal ==
          ideal(2, 3, {{6, 0}, {5, 1}, {4, 3}, {3, 5}, {2, 7}, {1, 9}, {0, 11}}));
  REQUIRE(inv.reg_ideal == 11);
  REQUIRE(inv.reg_quotient == 10);
  REQUIRE(inv.depth == 0);
  REQUIRE(inv.pd == 2);
  REQUIRE(inv.corners == std::vector<Corner>{Corner{2, 10, 1}});
}

TEST_CASE("componentwise linearity fails for the squares pair") {
  const AuditReport mono = componentwise_linear(ideal(2, 3, {{2, 0}, {0, 2}}), 5);
  REQUIRE_FALSE(mono.pass);
  REQUIRE(mono.lhs == "2");
  REQUIRE(mono.rhs == "3");
  REQUIRE(has_witness(mono, "minimal generators of the input by degree: {2:2}"));
  REQUIRE(has_witness(mono,
                      "minimal generators of the zero-generic initial ideal by degree: "
                      "{2:2, 3:1}"));
  REQUIRE(has_witness(mono, "generator counts differ: 2 vs 3"));
  REQUIRE(extra(mono, "gin0") == "(x1^2, x1*x2, x2^3)");
  REQUIRE(mono.certificates.size() == 2);

  const auto R = qring({"x", "y"});
  const AuditReport poly = componentwise_linear(R, parse_all(R, {"x^2", "y^2"}), 5);
  REQUIRE_FALSE(poly.pass);
  REQUIRE(poly.lhs == mono.lhs);
  REQUIRE(poly.rhs == mono.rhs);
  REQUIRE(extra(poly, "gin0") == "(x^2, x*y, y^3)");
}

TEST_CASE("componentwise linearity holds for a stable ideal") {
  const auto R = qring({"x", "y"});
  const AuditReport r = componentwise_linear(R, parse_all(R, {"x^2", "x*y"}), 5);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "2");
  REQUIRE(r.rhs == "2");
  REQUIRE(extra(r, "gin0") == "(x^2, x*y)");
}

TEST_CASE("report strings use the declared variable names") {
  const auto R = qring({"a", "b"});
  const AuditReport r = componentwise_linear(R, parse_all(R, {"a^2", "b^2"}), 5);
  REQUIRE(extra(r, "gin0") == "(a^2, a*b, b^3)");
}

TEST_CASE("the triangle is sequentially Cohen-Macaulay") {
  const AuditReport r =
      seqcm_squarefree(ideal(3, 0, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 5);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "3");
  REQUIRE(r.rhs == "3");
  // the triangle is its own Alexander dual
  REQUIRE(extra(r, "alexander_dual") == "(x1*x2, x1*x3, x2*x3)");
  REQUIRE(has_witness(r, "criterion applied to the Alexander dual"));
  REQUIRE(r.certificates.size() == 2);
}

TEST_CASE("the four-cycle is not sequentially Cohen-Macaulay") {
  const AuditReport r = seqcm_squarefree(
      ideal(4, 0, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}), 5);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.lhs == "2");
  REQUIRE(r.rhs == "3");
  // the dual is the diagonal complete intersection, which is not
  // componentwise linear
  REQUIRE(extra(r, "alexander_dual") == "(x1*x3, x2*x4)");
  REQUIRE(has_witness(r, "generator counts differ: 2 vs 3"));
}

TEST_CASE("weakly stable squarefree ideals pass without sampling") {
  const AuditReport r = seqcm_squarefree(ideal(3, 0, {{1, 0, 0}, {0, 1, 0}}), 5);
  REQUIRE(r.pass);
  REQUIRE(r.certificates.empty());
  REQUIRE(has_witness(r, "weakly stable"));
}

TEST_CASE("sequential Cohen-Macaulayness rejects improper input") {
  REQUIRE_THROWS_AS(seqcm_squarefree(ideal(2, 0, {{2, 0}}), 5), std::invalid_argument);
  REQUIRE_THROWS_AS(seqcm_squarefree(unit_ideal(2, 0), 5), std::invalid_argument);
}

TEST_CASE("crystallization fails for the plain generic target of the sextics") {
  const AuditReport r = crystallization_audit(ideal(2, 3, {{6, 0}, {0, 6}}),
                                              MonomialOrder::DegRevLex, 5, GinTarget::Gin);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.lhs == "7");
  REQUIRE(r.rhs == "9");
  REQUIRE(has_witness(r, "input generator degrees reach 6"));
  REQUIRE(has_witness(r, "target generator degrees: {6:2, 9:1}"));
  REQUIRE(has_witness(r, "generators reappear in degree 9 after the gap at 7"));
  REQUIRE(extra(r, "target") == "(x1^6, x1^3*x2^3, x2^9)");
  REQUIRE(extra(r, "theorem_violation") == "false");
  REQUIRE(r.certificates.size() == 1);
}

TEST_CASE("crystallization holds for the zero-generic target of the sextics") {
  const AuditReport r = crystallization_audit(ideal(2, 3, {{6, 0}, {0, 6}}),
                                              MonomialOrder::DegRevLex, 5, GinTarget::Gin0);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "12");
  REQUIRE(r.rhs == "11");
  REQUIRE(has_witness(r, "target generator degrees: {6:2, 7:1, 8:1, 9:1, 10:1, 11:1}"));
  REQUIRE(extra(r, "theorem_violation") == "false");
  REQUIRE(r.certificates.size() == 2);
}

TEST_CASE("crystallization separates the targets on a Frobenius power") {
  Ring<GaloisField> R(2, MonomialOrder::DegRevLex, GaloisField(2, 1), {"x1", "x2"});
  const auto gens = parse_all(R, {"x1^4", "x1^2*x2^2 + x2^4"});
  const AuditReport g = crystallization_audit(R, gens, MonomialOrder::DegRevLex, 5,
                                              GinTarget::Gin);
  REQUIRE_FALSE(g.pass);
  REQUIRE(g.lhs == "5");
  REQUIRE(g.rhs == "6");
  REQUIRE(extra(g, "target") == "(x1^4, x1^2*x2^2, x2^6)");
  const AuditReport z = crystallization_audit(R, gens, MonomialOrder::DegRevLex, 5,
                                              GinTarget::Gin0);
  REQUIRE(z.pass);
  REQUIRE(z.lhs == "8");
  REQUIRE(z.rhs == "7");
  REQUIRE(extra(z, "target") == "(x1^4, x1^3*x2, x1^2*x2^3, x1*x2^5, x2^7)");
}

TEST_CASE("restricted regularity of the squares triple") {
  const AuditReport r =
      restriction_regularity(ideal(3, 2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 2, 0);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "2");
  REQUIRE(r.rhs == "1");
  REQUIRE(has_witness(r, "generic initial ideal restricted to 2 variables: (x1^2, x2^2)"));
  REQUIRE(has_witness(
      r, "zero-generic initial ideal restricted to 2 variables: (x1^2, x1*x2, x2^2)"));
  REQUIRE(extra(r, "gin") == "(x1^2, x2^2, x3^2)");
  REQUIRE(extra(r, "gin0") == "(x1^2, x1*x2, x1*x3^2, x2^2, x2*x3^2, x3^4)");
  REQUIRE(r.certificates.size() == 2);

  // the ring route agrees
  Ring<GaloisField> R(3, MonomialOrder::DegRevLex, GaloisField(2, 1), {"x1", "x2", "x3"});
  const AuditReport s =
      restriction_regularity(R, parse_all(R, {"x1^2", "x2^2", "x3^2"}), 2, 0);
  REQUIRE(s.pass);
  REQUIRE(s.lhs == "2");
  REQUIRE(s.rhs == "1");

  REQUIRE_THROWS_AS(
      restriction_regularity(ideal(3, 2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 4, 0),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      restriction_regularity(ideal(3, 2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), -1, 0),
      std::invalid_argument);
}

TEST_CASE("regularity bound audit on the squares pair is tight") {
  const AuditReport r = regularity_bound_audit(ideal(2, 0, {{2, 0}, {0, 2}}), 5);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "3");
  REQUIRE(r.rhs == "4");
  REQUIRE(has_witness(r, "regularity 3 <= (2*2)^(2^0) = 4: ok"));
  REQUIRE(has_witness(r, "generator count 3 <= 3 = 3: ok"));
}

TEST_CASE("regularity bound audit on the squares triple") {
  const AuditReport r =
      regularity_bound_audit(ideal(3, 0, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 5);
  REQUIRE(r.pass);
  REQUIRE(r.lhs == "4");
  REQUIRE(r.rhs == "16");
  REQUIRE(has_witness(r, "generator count 6 <= 3 * 3 = 9: ok"));
}

TEST_CASE("regularity bound audit needs two variables") {
  REQUIRE_THROWS_AS(regularity_bound_audit(ideal(1, 0, {{4}}), 5), std::invalid_argument);
  const auto R = qring({"x"});
  REQUIRE_THROWS_AS(regularity_bound_audit(R, parse_all(R, {"x^4"}), 5),
                    std::invalid_argument);
}

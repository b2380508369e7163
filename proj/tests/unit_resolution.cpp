#include <doctest.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/quotient_ring.hpp"
#include "koszul/resolution.hpp"
#include "koszul/ring_checks.hpp"
#include "koszul/textio.hpp"

using namespace koszul;

namespace {

std::shared_ptr<QuotientRing> ring_of(const std::string& text, int cap,
                                      MonomialOrder ord = {}) {
  ParsedInput in = parse_input(text);
  if (ord.priority.empty()) ord = MonomialOrder::standard(static_cast<int>(in.vars.size()));
  return std::make_shared<QuotientRing>(in.vars, in.ideal_gens, ord, Field{0}, cap);
}

std::vector<MultiPolynomial> gens_of(const std::string& text) {
  return parse_input(text).ideal_gens;
}

}  // namespace

TEST_CASE("resolving k over a polynomial ring gives the exterior-algebra table") {
  auto S = ring_of("ring x, y;", 6);
  auto M = GradedModulePresentation::residue_field(S);
  auto [res, table] = minimal_resolution(M, 4, 6);
  verify_resolution(res);
  CHECK_FALSE(table.aborted);
  CHECK(table.beta(0, 0) == 1);
  CHECK(table.beta(1, 1) == 2);
  CHECK(table.beta(2, 2) == 1);
  // the resolution stops there: no cells in rows 3 and 4
  CHECK(table.cells.size() == 3);
  REQUIRE(res.module_hf.size() >= 2);
  CHECK(res.module_hf[0] == 1);
  CHECK(res.module_hf[1] == 0);
}

TEST_CASE("two coprime squares resolve as a complete intersection") {
  auto S = ring_of("ring x, y;", 8);
  auto M = GradedModulePresentation::cyclic(S, gens_of("ring x, y; ideal x^2, y^2;"));
  auto [res, table] = minimal_resolution(M, 3, 8);
  verify_resolution(res);
  CHECK_FALSE(table.aborted);
  CHECK(table.beta(0, 0) == 1);
  CHECK(table.beta(1, 2) == 2);
  CHECK(table.beta(2, 4) == 1);
  CHECK(table.cells.size() == 3);
  CHECK(res.module_hf[0] == 1);
  CHECK(res.module_hf[1] == 2);
  CHECK(res.module_hf[2] == 1);
  CHECK(res.module_hf[3] == 0);

  auto top1 = table.row_max(1);
  REQUIRE(top1.has_value());
  CHECK(*top1 == 2);
  CHECK_FALSE(table.row_max(3).has_value());
  CHECK(table.str().find("betti") != std::string::npos);
}

TEST_CASE("k over the dual numbers has one basis element per step") {
  auto R = ring_of("ring x; ideal x^2;", 9);
  auto M = GradedModulePresentation::residue_field(R);
  auto [res, table] = minimal_resolution(M, 5, 9);
  verify_resolution(res);
  for (int i = 0; i <= 5; ++i) CHECK(table.beta(i, i) == 1);
  CHECK(table.cells.size() == 6);
}

TEST_CASE("a presentation with two generators in different degrees resolves") {
  auto S = ring_of("ring x, y;", 8);
  ParsedInput in =
      parse_input("ring x, y; module gens 0, 1; rel x^2, x; rel y^2, y;");
  auto M = GradedModulePresentation::make(S, in.module_gen_degrees, in.module_relations);
  auto [res, table] = minimal_resolution(M, 3, 8);
  verify_resolution(res);
  CHECK(table.beta(0, 0) == 1);
  CHECK(table.beta(0, 1) == 1);
  CHECK_FALSE(table.aborted);
}

TEST_CASE("betti numbers do not depend on the monomial order") {
  struct Inst {
    const char* ring_text;
    const char* module_text;  // empty = residue field
    int h, D;
  };
  const Inst insts[] = {
      {"ring x, y; ideal x^2, x*y;", "", 4, 6},
      {"ring x, y, z; ideal x^2, x*y, x*z, y^2, y*z, z^2;", "", 3, 5},
      {"ring a, b, c, d; ideal a*c, b*d;",
       "ring a, b, c, d; ideal a^2, b^2, a*d;", 3, 7},
  };
  for (const auto& t : insts) {
    CAPTURE(t.ring_text);
    ParsedInput in = parse_input(t.ring_text);
    MonomialOrder rev;
    rev.priority.resize(in.vars.size());
    for (std::size_t i = 0; i < in.vars.size(); ++i)
      rev.priority[i] = static_cast<int>(in.vars.size() - 1 - i);

    auto run = [&](MonomialOrder ord) {
      auto R = ring_of(t.ring_text, t.D + 2, ord);
      auto M = *t.module_text == '\0'
                   ? GradedModulePresentation::residue_field(R)
                   : GradedModulePresentation::cyclic(R, gens_of(t.module_text));
      auto out = minimal_resolution(M, t.h, t.D);
      verify_resolution(out.first);
      return out.second;
    };
    BettiTable a = run(MonomialOrder::standard(static_cast<int>(in.vars.size())));
    BettiTable b = run(rev);
    CHECK(a.cells == b.cells);
  }
}

TEST_CASE("the verifier rejects a corrupted differential") {
  auto S = ring_of("ring x, y;", 8);
  auto M = GradedModulePresentation::cyclic(S, gens_of("ring x, y; ideal x^2, y^2;"));
  auto res = minimal_resolution(M, 3, 8).first;
  REQUIRE(res.complex.diffs.size() > 2);
  REQUIRE(!res.complex.diffs[2].empty());
  REQUIRE(!res.complex.diffs[2][0].empty());
  // replace a degree-2 entry of d_2 with another degree-2 form; the composite
  // d_1 d_2 is no longer zero and the cross-check must notice
  res.complex.diffs[2][0][0] = gens_of("ring x, y; ideal x*y;")[0];
  CHECK_THROWS_AS(verify_resolution(res), Error);
}

TEST_CASE("a cell observer can abandon the sweep early") {
  auto R = ring_of("ring x, y; ideal x^2, x*y, y^2;", 8);
  auto M = GradedModulePresentation::residue_field(R);
  int seen = 0;
  auto out = minimal_resolution(M, 5, 8, [&](int, int, const Int&) {
    ++seen;
    return seen < 3;
  });
  CHECK(out.second.aborted);
  CHECK(out.first.aborted);
  CHECK(seen == 3);
}

TEST_CASE("default internal bound leaves room past the stated window") {
  auto S = ring_of("ring x, y;", 12);
  auto M = GradedModulePresentation::cyclic(S, gens_of("ring x, y; ideal x^2, y^2;"));
  CHECK(default_internal_bound(M, 4) >= 6);
  auto k = GradedModulePresentation::residue_field(S);
  CHECK(default_internal_bound(k, 4) > 4);
}

TEST_CASE("koszul check accepts a quadric hypersurface and reports a cubic") {
  auto R1 = ring_of("ring x, y; ideal x^2;", 10);
  KoszulReport ok = koszul_check(R1, 5, 8);
  CHECK(ok.passed);
  CHECK_FALSE(ok.has_cell);

  auto R2 = ring_of("ring x, y; ideal x^3;", 10);
  KoszulReport bad = koszul_check(R2, 3, 6);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.has_cell);
  CHECK(bad.cell_i == 2);
  CHECK(bad.cell_j == 3);
}

TEST_CASE("the quotient by one square is Golod over the polynomial ring") {
  auto Q = ring_of("ring x;", 10);
  GolodReport g = golod_map_check(Q, gens_of("ring x; ideal x^2;"), 3, 6);
  CHECK(g.base.passed);
  CHECK(g.passed);
  CHECK_FALSE(g.has_cell);
  CHECK(g.extra_gens.size() == 1);
}

TEST_CASE("serre comparison reports equality for a Golod map") {
  auto Q = ring_of("ring x;", 10);
  auto R = ring_of("ring x; ideal x^2;", 10);
  auto kQ = minimal_resolution(GradedModulePresentation::residue_field(Q), 4, 6).second;
  auto RQ = minimal_resolution(
                GradedModulePresentation::cyclic(Q, gens_of("ring x; ideal x^2;")), 4, 6)
                .second;
  auto kR = minimal_resolution(GradedModulePresentation::residue_field(R), 4, 6).second;
  SerreReport s = serre_check(kQ, RQ, kR, 5);
  CHECK(s.inequality);
  CHECK(s.equality);
  CHECK_FALSE(s.has_eq_cell);
  CHECK_FALSE(s.has_ineq_cell);
}

TEST_CASE("linearity defect distinguishes a linear from a quadratic presentation") {
  auto S = ring_of("ring x, y;", 12);
  auto linear = GradedModulePresentation::cyclic(S, gens_of("ring x, y; ideal x;"));
  LinearityReport l0 = linearity_defect(linear, 4, 9);
  CHECK(l0.lind_lower_bound == 0);
  CHECK(l0.stable);

  auto quad = GradedModulePresentation::cyclic(S, gens_of("ring x, y; ideal x^2;"));
  LinearityReport l1 = linearity_defect(quad, 4, 9);
  CHECK(l1.lind_lower_bound == 1);
  CHECK(l1.stable);
  REQUIRE(l1.has_witness);
  CHECK(l1.witness_i == 1);
}

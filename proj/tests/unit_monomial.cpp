#include <doctest.h>

#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/linres.hpp"
#include "koszul/monomial.hpp"
#include "koszul/textio.hpp"
#include "koszul/uk.hpp"

using namespace koszul;

namespace {

MonomialIdeal mi(const std::string& text) {
  ParsedInput in = parse_input(text);
  std::vector<Monomial> gens;
  for (const auto& g : in.ideal_gens) gens.push_back(g.terms.front().first);
  return MonomialIdeal::make(in.vars, gens);
}

Monomial mono(const std::vector<int>& e) {
  Monomial m;
  m.exp = e;
  return m;
}

}  // namespace

TEST_CASE("monomial divisibility, gcd, lcm") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 1, 1});
  CHECK(a.degree() == 3);
  CHECK_FALSE(a.divides(b));
  CHECK(Monomial::gcd(a, b) == mono({1, 1, 0}));
  CHECK(Monomial::lcm(a, b) == mono({2, 1, 1}));
  CHECK(a.times(b) == mono({3, 2, 1}));
  CHECK(a.times(b).divide(b) == a);
  CHECK(mono({1, 0, 0}).coprime(mono({0, 0, 2})));
  CHECK_FALSE(a.coprime(b));
  CHECK(mono({0, 0, 0}).is_one());
}

TEST_CASE("minimal generators drop divisible entries, keep order") {
  auto mins = minimal_generators({mono({2, 0}), mono({2, 1}), mono({0, 1})});
  REQUIRE(mins.size() == 2);
  CHECK(mins[0] == mono({2, 0}));
  CHECK(mins[1] == mono({0, 1}));
}

TEST_CASE("monomial colon against hand computations") {
  std::vector<Monomial> gens = {mono({2, 1}), mono({0, 3})};
  auto by_y = monomial_colon(gens, mono({0, 1}));
  CHECK(MonomialIdeal::make({"x", "y"}, by_y)
            .same_ideal_as(mi("ring x, y; ideal x^2, y^2;")));
  auto by_x = monomial_colon(gens, mono({1, 0}));
  CHECK(MonomialIdeal::make({"x", "y"}, by_x)
            .same_ideal_as(mi("ring x, y; ideal x*y, y^3;")));
  // dividing by an element of the ideal gives the unit ideal
  auto unit = monomial_colon(gens, mono({2, 1}));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_one());
}

TEST_CASE("regular sequences are the pairwise coprime sets") {
  CHECK(is_monomial_regular_sequence({mono({2, 0, 0}), mono({0, 3, 0})}));
  CHECK(is_monomial_regular_sequence({}));
  CHECK_FALSE(
      is_monomial_regular_sequence({mono({1, 1, 0}), mono({0, 1, 1})}));
  CHECK_FALSE(
      is_monomial_regular_sequence({mono({2, 0, 0}), mono({1, 1, 0})}));
}

TEST_CASE("polarization is squarefree and quadratic") {
  MonomialIdeal p = polarize(mi("ring x, y; ideal x^2, x*y;"));
  CHECK(p.is_squarefree());
  CHECK(p.is_quadratic());
  CHECK(p.gens.size() == 2);
  CHECK(p.vars.size() >= 3);
}

TEST_CASE("fibre product joins ideals and all cross products") {
  MonomialIdeal f =
      fibre_product(mi("ring x; ideal x^2;"), mi("ring y; ideal y^2;"));
  CHECK(f.same_ideal_as(mi("ring x, y; ideal x^2, y^2, x*y;")));
}

TEST_CASE("paths and complete graphs are chordal, cycles are not") {
  VarGraph p4({"a", "b", "c", "d"});
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  auto rp = is_chordal(p4);
  CHECK(rp.chordal);
  CHECK(rp.elimination_order.size() == 4);

  VarGraph c4({"a", "b", "c", "d"});
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  auto rc = is_chordal(c4);
  CHECK_FALSE(rc.chordal);
  CHECK(rc.witness_cycle.size() == 4);

  VarGraph k4({"a", "b", "c", "d"});
  for (size_t u = 0; u < 4; ++u)
    for (size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(is_chordal(k4).chordal);

  VarGraph c5({"a", "b", "c", "d", "e"});
  for (size_t v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  auto r5 = is_chordal(c5);
  CHECK_FALSE(r5.chordal);
  CHECK(r5.witness_cycle.size() == 5);

  CHECK(is_chordal(VarGraph()).chordal);
}

TEST_CASE("two-linear test through the non-edge graph") {
  CHECK(has_two_linear_resolution(mi("ring x, y, z; ideal x*y, y*z;")).passed);
  TwoLinearResult matching =
      has_two_linear_resolution(mi("ring x, y, u, v; ideal x*u, y*v;"));
  CHECK_FALSE(matching.passed);
  CHECK(matching.cycle_names.size() >= 4);
  // the polarization keeps the squared maximal ideal linear
  CHECK(has_two_linear_resolution(mi("ring x, y; ideal x^2, x*y, y^2;"))
            .passed);
}

TEST_CASE("linear quotients orders exist exactly when the test passes") {
  CHECK(linear_quotients_order(mi("ring x, y, z; ideal x*y, y*z;"))
            .has_value());
  CHECK_FALSE(linear_quotients_order(mi("ring x, y, u, v; ideal x*u, y*v;"))
                  .has_value());
}

TEST_CASE("split certificate with an empty regular part") {
  MonomialIdeal sq = mi("ring x, y; ideal x^2, x*y, y^2;");
  auto cert = ci_plus_two_linear(sq);
  REQUIRE(cert.has_value());
  CHECK(cert->ci_part.gens.empty());
  CHECK(cert->linear_part.same_ideal_as(sq));
  CHECK(validate_certificate(sq, *cert));
}

TEST_CASE("pure complete intersections commit every generator to U") {
  MonomialIdeal ci = mi("ring x, y; ideal x^2, y^2;");
  auto cert = ci_plus_two_linear(ci);
  REQUIRE(cert.has_value());
  CHECK(cert->ci_part.gens.size() == 2);
  CHECK(cert->linear_part.gens.empty());
  CHECK(validate_certificate(ci, *cert));
}

TEST_CASE("no split certificate for the five-cycle edge ideal") {
  MonomialIdeal c5 =
      mi("ring x1, x2, x3, x4, x5; "
         "ideal x1*x2, x2*x3, x3*x4, x4*x5, x5*x1;");
  CHECK_FALSE(ci_plus_two_linear(c5).has_value());
}

TEST_CASE("uk recognition of base rings, extensions and fibre products") {
  auto b1 = uk_recognize(mi("ring x; ideal x^2;"));
  REQUIRE(b1.has_value());
  CHECK(b1->kind == UKNode::Kind::BaseH);
  CHECK(b1->base_m == 1);

  // two coprime squares are exactly the two-variable base pattern
  auto b2 = uk_recognize(mi("ring x, y; ideal x^2, y^2;"));
  REQUIRE(b2.has_value());
  CHECK(b2->kind == UKNode::Kind::BaseH);
  CHECK(b2->base_m == 2);

  auto pe = uk_recognize(mi("ring x, y; ideal x^2;"));
  REQUIRE(pe.has_value());
  CHECK(pe->kind == UKNode::Kind::PolyExt);
  CHECK(pe->variable == "y");

  auto sz = uk_recognize(mi("ring x, y, w; ideal x*y, w^2;"));
  REQUIRE(sz.has_value());
  CHECK(sz->kind == UKNode::Kind::SquareZeroExt);
  CHECK(sz->variable == "w");
  REQUIRE(sz->children.size() == 1);
  CHECK(sz->children[0].kind == UKNode::Kind::FibreProduct);

  CHECK_FALSE(uk_recognize(mi("ring x1, x2, x3, x4, x5; "
                              "ideal x1*x2, x2*x3, x3*x4, x4*x5, x5*x1;"))
                  .has_value());
}

TEST_CASE("replaying a hand-built derivation") {
  UKNode leaf;
  leaf.kind = UKNode::Kind::BaseH;
  leaf.vars = {"a"};
  leaf.variable = "a";
  leaf.base_m = 1;
  UKNode ext;
  ext.kind = UKNode::Kind::SquareZeroExt;
  ext.vars = {"a", "b"};
  ext.variable = "b";
  ext.children.push_back(leaf);
  CHECK(replay_derivation(ext).same_ideal_as(mi("ring a, b; ideal a^2, b^2;")));
}

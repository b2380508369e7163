#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "koszul/groebner.hpp"
#include "koszul/multipoly.hpp"
#include "koszul/quotient_ring.hpp"
#include "koszul/textio.hpp"
#include "koszul/veronese_gb.hpp"

using namespace koszul;

namespace {

std::vector<MultiPolynomial> gens_of(const std::string& text) {
  return parse_input(text).ideal_gens;
}

MultiPolynomial poly_of(const std::string& vars, const std::string& expr) {
  return parse_input("ring " + vars + "; ideal " + expr + ";").ideal_gens[0];
}

}  // namespace

TEST_CASE("degrevlex comparisons: first declared variable is smallest") {
  MonomialOrder ord = MonomialOrder::standard(3);
  Monomial x2, yz, xz, y2;
  x2.exp = {2, 0, 0};
  yz.exp = {0, 1, 1};
  xz.exp = {1, 0, 1};
  y2.exp = {0, 2, 0};
  CHECK(ord.less(x2, yz));       // more of the smallest variable loses
  CHECK(ord.less(xz, y2));
  Monomial z3;
  z3.exp = {0, 0, 3};
  CHECK(ord.less(y2, z3));       // degree decides first
  CHECK(ord.compare(x2, x2) == 0);
}

TEST_CASE("polynomial arithmetic over the rationals and a prime field") {
  Field q;
  MultiPolynomial f = poly_of("x, y", "x^2 - 2*x*y");
  MultiPolynomial g = poly_of("x, y", "2*x*y + y^2");
  MultiPolynomial s = f.plus(g, q);
  CHECK(s.equals(poly_of("x, y", "x^2 + y^2")));
  CHECK(f.minus(f, q).is_zero());
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);
  MultiPolynomial prod = poly_of("x, y", "x + y").times(poly_of("x, y", "x - y"), q);
  CHECK(prod.equals(poly_of("x, y", "x^2 - y^2")));

  Field f3{3};
  MultiPolynomial t = poly_of("x, y", "x^2 + x*y").plus(
      poly_of("x, y", "2*x^2 + 2*x*y"), f3);
  CHECK(t.is_zero());
}

TEST_CASE("leading terms and monic scaling") {
  MonomialOrder ord = MonomialOrder::standard(3);
  Field q;
  MultiPolynomial f = poly_of("x, y, z", "x^2 - y*z");
  CHECK(f.leading_term(ord).first.exp == std::vector<int>{0, 1, 1});
  MultiPolynomial m = f.monic(ord, q);
  CHECK(m.leading_term(ord).second == 1);
  CHECK(m.equals(poly_of("x, y, z", "y*z - x^2")));
}

TEST_CASE("normal form eliminates every divisible term") {
  MonomialOrder ord = MonomialOrder::standard(2);
  Field q;
  std::vector<MultiPolynomial> div = {poly_of("x, y", "y^2 - x*y")};
  // leading term of the divisor is y^2 under the standard order
  MultiPolynomial r = normal_form(poly_of("x, y", "y^3"), div, ord, q);
  CHECK(r.equals(poly_of("x, y", "x^2*y")));
  CHECK(normal_form(poly_of("x, y", "y^2 - x*y"), div, ord, q).is_zero());
  CHECK(normal_form(MultiPolynomial::zero(), div, ord, q).is_zero());
}

TEST_CASE("coprime leading squares are already a basis") {
  // leading terms y^2 and z^2: every S-pair reduces to zero
  auto gens = gens_of("ring x, y, z; ideal y^2 - x*z, z^2 - x*y;");
  GroebnerCheck chk =
      is_groebner(gens, MonomialOrder::standard(3), Field{0}, 8);
  CHECK(chk.passed);
}

TEST_CASE("rolled ideal of the degree-three rational curve") {
  // three minors: a basis; any two of them: not a basis, completion adds one
  auto minors = gens_of(
      "ring x, y, z, w; ideal y^2 - x*z, y*z - x*w, z^2 - y*w;");
  MonomialOrder ord = MonomialOrder::standard(4);
  Field q;
  CHECK(is_groebner(minors, ord, q, 8).passed);

  std::vector<MultiPolynomial> two = {minors[0], minors[1]};
  GroebnerCheck chk = is_groebner(two, ord, q, 8);
  CHECK_FALSE(chk.passed);
  CHECK_FALSE(chk.remainder.is_zero());

  GroebnerBasis basis = buchberger({"x", "y", "z", "w"}, two, ord, q, 8);
  CHECK(basis.complete);
  CHECK(basis.elements.size() == 3);
  CHECK(is_groebner(basis.elements, ord, q, 8).passed);
  // the third minor is not in the smaller ideal
  CHECK_FALSE(normal_form(minors[2], basis.elements, ord, q).is_zero());
}

TEST_CASE("standard monomials of the squared maximal ideal") {
  auto gens = gens_of("ring x, y; ideal x^2, x*y, y^2;");
  GroebnerBasis basis =
      buchberger({"x", "y"}, gens, MonomialOrder::standard(2), Field{0}, 6);
  CHECK(basis.complete);
  CHECK(standard_monomials(basis, 0).size() == 1);
  CHECK(standard_monomials(basis, 1).size() == 2);
  CHECK(standard_monomials(basis, 2).empty());
}

TEST_CASE("veronese-2 toric data for two and three variables") {
  CHECK(veronese2_vars(2).size() == 3);
  CHECK(veronese2_vars(3).size() == 6);

  auto g2 = veronese2_kernel_gens(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].terms.size() == 2);
  CHECK(g2[0].is_homogeneous());

  auto g3 = veronese2_kernel_gens(3);
  CHECK(g3.size() == 6);
  for (const auto& g : g3) {
    CHECK(g.terms.size() == 2);
    CHECK(g.degree() == 2);
  }
}

TEST_CASE("multidegrees are preserved inside each kernel binomial") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : veronese2_kernel_gens(n)) {
      REQUIRE(g.terms.size() == 2);
      CHECK(veronese2_multidegree(n, g.terms[0].first) ==
            veronese2_multidegree(n, g.terms[1].first));
    }
  }
}

TEST_CASE("all equal-multidegree differences cover larger fibres") {
  CHECK(veronese2_all_differences(3).size() == 6);
  // one fibre of size three appears for four variables
  CHECK(veronese2_all_differences(4).size() == 21);
  CHECK(veronese2_kernel_gens(4).size() == 20);
}

TEST_CASE("the full difference set is a basis under random orders") {
  std::mt19937 rng(2024);
  auto gens = veronese2_all_differences(4);
  size_t nv = veronese2_vars(4).size();
  for (int trial = 0; trial < 3; ++trial) {
    MonomialOrder ord = MonomialOrder::standard(nv);
    std::shuffle(ord.priority.begin(), ord.priority.end(), rng);
    CHECK(is_groebner(gens, ord, Field{0}, 6).passed);
  }
}

TEST_CASE("quotient ring slices, reduction and variable maps") {
  auto R = std::make_shared<QuotientRing>(
      std::vector<std::string>{"x", "y"},
      gens_of("ring x, y; ideal x^2, x*y;"), MonomialOrder::standard(2),
      Field{0}, 8);
  CHECK(R->nvars() == 2);
  CHECK(R->dim(0) == 1);
  CHECK(R->dim(1) == 2);
  CHECK(R->dim(2) == 1);  // only y^2 survives
  CHECK(R->dim(3) == 1);
  CHECK(R->reduce(poly_of("x, y", "x^2 + x*y")).is_zero());

  MultiPolynomial y2 = poly_of("x, y", "y^2");
  Vec coords = R->coordinates(y2, 2);
  REQUIRE(coords.size() == 1);
  CHECK(R->from_coordinates(coords, 2).equals(R->reduce(y2)));

  // multiplication by x kills the whole degree-1 slice except x itself
  const Matrix& mx = R->variable_map(0, 1);
  CHECK(mx.rows == R->dim(2));
  CHECK(mx.cols == R->dim(1));
}

TEST_CASE("polynomial ring helper certifies every degree") {
  auto S = polynomial_ring({"x", "y", "z"}, Field{0}, 6);
  CHECK(S->dim(0) == 1);
  CHECK(S->dim(1) == 3);
  CHECK(S->dim(4) == 15);
  CHECK(S->basis().complete);
}

TEST_CASE("prime field coefficients stay reduced") {
  auto R = std::make_shared<QuotientRing>(
      std::vector<std::string>{"x", "y"},
      gens_of("ring x, y; ideal x^2 + y^2;"), MonomialOrder::standard(2),
      Field{5}, 6);
  CHECK(R->dim(2) == 2);
  MultiPolynomial r = R->reduce(poly_of("x, y", "3*y^2 + 3*x^2"));
  CHECK(r.is_zero());
}

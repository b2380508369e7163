#include <doctest.h>

#include "koszul/hilbert.hpp"
#include "koszul/intpoly.hpp"
#include "koszul/numbers.hpp"
#include "koszul/obstruction.hpp"

using namespace koszul;

TEST_CASE("integer polynomial arithmetic and normalization") {
  IntPolynomial p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p.at(0) == 1);
  CHECK(p.at(5) == 0);
  IntPolynomial q({0, 1});
  CHECK((p * q) == IntPolynomial({0, 1, 2}));
  CHECK((p - p).is_zero());
  CHECK((p + q) == IntPolynomial({1, 3}));
  CHECK(IntPolynomial({1, -2, 3}).negate_variable() ==
        IntPolynomial({1, 2, 3}));
  CHECK(eval_int(IntPolynomial({1, 21, 35, 7}), Int(-1)) == 8);
  CHECK(eval_int(IntPolynomial::zero(), Int(5)) == 0);
}

TEST_CASE("binomials and powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(6, -1) == 0);
  CHECK(pow10(3) == 1000);
  CHECK(int_pow(Int(2), 10) == 1024);
  CHECK(int_pow(Int(7), 0) == 1);
}

TEST_CASE("rational series expansion") {
  TruncatedSeries s = expand_rational_series(IntPolynomial::one(), 1, 6);
  for (int i = 0; i <= 6; ++i) CHECK(s.at(i) == 1);
  TruncatedSeries t = expand_rational_series(IntPolynomial::one(), 2, 6);
  for (int i = 0; i <= 6; ++i) CHECK(t.at(i) == i + 1);
  TruncatedSeries u = expand_rational_series(IntPolynomial({1, 1}), 2, 5);
  for (int i = 0; i <= 5; ++i) CHECK(u.at(i) == 2 * i + 1);
  TruncatedSeries v = expand_rational_series(IntPolynomial({3}), 0, 4);
  CHECK(v.at(0) == 3);
  CHECK(v.at(4) == 0);
}

TEST_CASE("factoring out the root at minus one") {
  // (1+z)^2 (1+2z) = 1 + 4z + 5z^2 + 2z^3
  NegOneFactorization f = factor_out_neg_one(IntPolynomial({1, 4, 5, 2}));
  CHECK(f.order == 2);
  CHECK(f.cofactor == IntPolynomial({1, 2}));
  NegOneFactorization g = factor_out_neg_one(IntPolynomial({1, 3}));
  CHECK(g.order == 0);
  CHECK(eval_int(g.cofactor, Int(-1)) == -2);
}

TEST_CASE("small veronese and segre fingerprints") {
  AlgebraNumerics a = veronese_numerics(2, 2);
  CHECK(a.h_poly == IntPolynomial({1, 1}));
  CHECK(a.dim == 2);
  CHECK(a.embdim == 3);
  CHECK(a.codim == 1);
  CHECK(a.multiplicity == 2);

  AlgebraNumerics b = veronese_numerics(2, 3);
  CHECK(b.h_poly == IntPolynomial({1, 2}));
  CHECK(b.embdim == 4);

  AlgebraNumerics s = segre_numerics(2, 2);
  CHECK(s.h_poly == IntPolynomial({1, 1}));
  CHECK(s.dim == 3);
  CHECK(s.embdim == 4);

  AlgebraNumerics v1 = veronese_numerics(5, 1);
  CHECK(v1.h_poly == IntPolynomial::one());
  CHECK(v1.codim == 0);
  REQUIRE(v1.is_complete_intersection.has_value());
  CHECK(*v1.is_complete_intersection);
}

TEST_CASE("hilbert function values match direct dimension counts") {
  AlgebraNumerics a = veronese_numerics(3, 2);
  for (int i = 0; i <= 5; ++i)
    CHECK(hilbert_function_value(a, i) == binomial(2 * i + 2, 2));
  AlgebraNumerics s = segre_numerics(2, 3);
  for (int i = 0; i <= 5; ++i)
    CHECK(hilbert_function_value(s, i) == Int(i + 1) * binomial(i + 2, 2));
}

TEST_CASE("tensor combination multiplies h-polynomials") {
  AlgebraNumerics a = veronese_numerics(2, 2);
  AlgebraNumerics t = tensor_numerics(a, a);
  CHECK(t.h_poly == IntPolynomial({1, 2, 1}));
  CHECK(t.dim == 4);
  CHECK(t.embdim == 6);
  CHECK(eval_int(t.h_poly, Int(-1)) == 0);
}

TEST_CASE("multiplicity bound against a complete intersection") {
  CHECK(ci_multiplicity_check(veronese_numerics(2, 2)));
  // e = 4 > 2^1 with the flag unknown: bound violated
  AlgebraNumerics fat =
      make_algebra(IntPolynomial({1, 3}), 1, 2, std::nullopt, "fat");
  CHECK_FALSE(ci_multiplicity_check(fat));
  // e = 2 < 2^2 forces the flag off and satisfies the strict bound
  AlgebraNumerics thin =
      make_algebra(IntPolynomial({1, 1}), 0, 2, std::nullopt, "thin");
  REQUIRE(thin.is_complete_intersection.has_value());
  CHECK_FALSE(*thin.is_complete_intersection);
  CHECK(ci_multiplicity_check(thin));
}

TEST_CASE("obstruction passes for the quadratic veronese of the plane") {
  ObstructionReport r = br_obstruction(veronese_numerics(3, 2), 200);
  CHECK(r.passed);
  CHECK(r.fail_index == -1);
}

TEST_CASE("obstruction failures for the two segre walls") {
  AlgebraNumerics a = segre_numerics(3, 6);
  CHECK(a.h_poly == IntPolynomial({1, 10, 10}));
  CHECK(eval_int(a.h_poly, Int(-1)) == 1);
  CHECK_FALSE(br_obstruction(a, 200).passed);

  AlgebraNumerics b = segre_numerics(4, 5);
  CHECK(b.h_poly == IntPolynomial({1, 12, 18, 4}));
  CHECK(eval_int(b.h_poly, Int(-1)) == 3);
  CHECK_FALSE(br_obstruction(b, 200).passed);
}

TEST_CASE("failure index is stable when the scan order grows") {
  AlgebraNumerics a = veronese_numerics(5, 3);
  ObstructionReport r1 = br_obstruction(a, 100);
  ObstructionReport r2 = br_obstruction(a, 400);
  CHECK_FALSE(r1.passed);
  CHECK(r1.fail_index == 65);
  CHECK(r2.fail_index == r1.fail_index);
  CHECK(r2.fail_coefficient == r1.fail_coefficient);
}

TEST_CASE("family scan emits one row per tuple in grid order") {
  FamilyScan spec;
  spec.kind = FamilyScan::Kind::Veronese;
  spec.first_lo = 2;
  spec.first_hi = 3;
  spec.second_lo = 2;
  spec.second_hi = 3;
  auto rows = family_scan(spec, 50);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.passed);
}

TEST_CASE("segre scan skips transposed duplicates") {
  FamilyScan spec;
  spec.kind = FamilyScan::Kind::Segre;
  spec.first_lo = 2;
  spec.first_hi = 3;
  spec.second_lo = 2;
  spec.second_hi = 3;
  auto rows = family_scan(spec, 50);
  CHECK(rows.size() == 3);  // (2,2), (2,3), (3,3)
}

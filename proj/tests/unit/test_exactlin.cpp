#include "doctest.h"
#include "torsionlab/error.hpp"
#include "torsionlab/exactlin/subspace.hpp"

using namespace torsionlab;

TEST_CASE("GF(p) arithmetic") {
  Field f = Field::gf(5);
  Scalar a(f, 3), b(f, 4);
  CHECK((a + b) == Scalar(f, 2));
  CHECK((a * b) == Scalar(f, 2));
  CHECK((a / b) * b == a);
  CHECK(a.inverse() == Scalar(f, 2));
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), Error);
  CHECK_THROWS_AS(Scalar(Field::gf(3), 1) + a, FieldMismatch);
  CHECK_THROWS(Field::gf(4));
  CHECK_THROWS(Field::gf(101));
}

TEST_CASE("Q arithmetic is exact") {
  Field q = Field::rationals();
  Scalar third = parse_scalar(q, "1/3");
  CHECK(third + third + third == Scalar::one(q));
  CHECK(parse_scalar(q, "-2/4") == Scalar(q, Rational(-1, 2)));
}

TEST_CASE("rref and kernel over GF(2)") {
  Field f = Field::gf(2);
  Matrix m = Matrix::from_rows(f, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m.apply(k[0])));
  CHECK(k[0] == make_vector(f, {1, 1, 1}));
}

TEST_CASE("sum and intersection of two lines in GF(2)^2") {
  Field f = Field::gf(2);
  Subspace u = Subspace::span(f, 2, {make_vector(f, {1, 0})});
  Subspace v = Subspace::span(f, 2, {make_vector(f, {0, 1})});
  CHECK(subspace_sum(u, v).is_full());
  CHECK(subspace_intersect(u, v).is_zero());
  CHECK(subspace_member(make_vector(f, {1, 0}), u));
  CHECK_FALSE(subspace_member(make_vector(f, {1, 1}), u));
}

TEST_CASE("kernel_image of a rank-one map") {
  Field f = Field::gf(3);
  Matrix m = Matrix::from_rows(f, 2, {{1, 2}, {2, 1}});
  auto [ker, im] = kernel_image(m);
  CHECK(ker.dim() == 1);
  CHECK(im.dim() == 1);
  CHECK(ker.contains(make_vector(f, {1, 1})));
}

TEST_CASE("subspace counts match Gaussian binomials") {
  // GF(2)^3: 1 + 7 + 7 + 1.
  CHECK(all_subspaces(Field::gf(2), 3).size() == 16);
  CHECK(subspace_count(Field::gf(2), 3) == doctest::Approx(16));
  // GF(3)^2: 1 + 4 + 1.
  CHECK(all_subspaces(Field::gf(3), 2).size() == 6);
}

TEST_CASE("property: dim(U+V) + dim(U∩V) = dim U + dim V") {
  Field f = Field::gf(2);
  auto subs = all_subspaces(f, 3);
  for (auto const& u : subs) {
    for (auto const& v : subs) {
      auto s = subspace_sum(u, v);
      auto i = subspace_intersect(u, v);
      CHECK(s.dim() + i.dim() == u.dim() + v.dim());
      CHECK(s.contains(u));
      CHECK(u.contains(i));
      CHECK(v.contains(i));
    }
  }
}

TEST_CASE("preimage and inverse") {
  Field f = Field::rationals();
  Matrix a = Matrix::from_rows(f, 2, {{1, 1}, {0, 1}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  Subspace line = Subspace::span(f, 2, {make_vector(f, {1, 0})});
  Subspace pre = line.preimage(a);
  CHECK(pre.dim() == 1);
  for (auto const& v : pre.basis_vectors()) {
    CHECK(line.contains(a.apply(v)));
  }
}

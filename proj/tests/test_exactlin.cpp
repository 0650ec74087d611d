#include <random>

#include "doctest.h"
#include "tauscope/matrix.hpp"
#include "tauscope/polynomial.hpp"

using namespace tauscope::exactlin;

namespace {

Matrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-3, 3), sparsity(0, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sparsity(rng) == 0) m(i, j) = Scalar(entry(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays reduced") {
  Scalar a(2, 4);
  CHECK(a == Scalar(1, 2));
  CHECK((a + Scalar(1, 3)).str() == "5/6");
  CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("rref") {
  auto id = rref(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix::zero(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  auto e = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(e.rank == 1);
  CHECK(e.reduced == Matrix{{1, 2}, {0, 0}});
}

TEST_CASE("kernel basis") {
  CHECK(kernelBasis(Matrix::identity(3)).cols() == 0);
  CHECK(kernelBasis(Matrix::zero(3, 3)) == Matrix::identity(3));
  Matrix m{{1, 2}, {2, 4}};
  Matrix k = kernelBasis(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.col(0) == Vector{Scalar(-2), Scalar(1)});
  CHECK((m * k).isZero());
}

TEST_CASE("solve") {
  Vector b{Scalar(3), Scalar(-1)};
  CHECK(solve(Matrix::identity(2), b) == b);
  CHECK_FALSE(solve(Matrix::zero(2, 2), Vector{Scalar(1), Scalar(0)}).has_value());
  Matrix m{{1, 2}, {2, 4}};
  auto x = solve(m, Vector{Scalar(1), Scalar(2)});
  REQUIRE(x);
  CHECK((*x)[0] + Scalar(2) * (*x)[1] == Scalar(1));
}

TEST_CASE("coprime split") {
  SUBCASE("diag(0,1)") {
    auto pieces = coprimeSplit(Matrix{{0, 0}, {0, 1}});
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].factor == Polynomial::linear(Scalar(0)));
    CHECK(pieces[1].factor == Polynomial::linear(Scalar(1)));
    CHECK(pieces[0].basis.cols() == 1);
    CHECK(pieces[1].basis.cols() == 1);
  }
  SUBCASE("nilpotent Jordan block") {
    auto pieces = coprimeSplit(Matrix{{0, 1}, {0, 0}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].factor == Polynomial::monomial(2));
    CHECK(pieces[0].basis.cols() == 2);
  }
  SUBCASE("diag(1,1,2)") {
    auto pieces = coprimeSplit(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].factor == Polynomial::linear(Scalar(1)));
    CHECK(pieces[0].basis.cols() == 2);
    CHECK(pieces[1].factor == Polynomial::linear(Scalar(2)));
    CHECK(pieces[1].basis.cols() == 1);
  }
  SUBCASE("irreducible quadratic stays whole") {
    auto pieces = coprimeSplit(Matrix{{0, -1}, {1, 0}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].factor.degree() == 2);
  }
}

TEST_CASE("squarefree decomposition and roots") {
  // (x-1)^2 (x+2)
  Polynomial p = power(Polynomial::linear(Scalar(1)), 2) * Polynomial::linear(Scalar(-2));
  auto layers = squarefreeDecomposition(p);
  REQUIRE(layers.size() == 2);
  CHECK(layers[0] == Polynomial::linear(Scalar(-2)));
  CHECK(layers[1] == Polynomial::linear(Scalar(1)));
  auto roots = rationalRoots(Polynomial({Scalar(-1), Scalar(0), Scalar(4)}));  // 4x^2 - 1
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Scalar(-1, 2));
  CHECK(roots[1] == Scalar(1, 2));
}

TEST_CASE("invariants on random matrices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(0, 6);
    const std::size_t r = size(rng), c = size(rng);
    Matrix m = randomMatrix(rng, r, c);
    auto e = rref(m);
    CHECK(rref(e.reduced).reduced == e.reduced);
    for (std::size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i - 1] < e.pivots[i]);
    Matrix k = kernelBasis(m);
    CHECK(e.rank + k.cols() == c);
    CHECK((m * k).isZero());
    CHECK(rank(k) == k.cols());

    SparseSystem sparse(c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseSystem::Row row;
      for (std::size_t j = 0; j < c; ++j)
        if (!m(i, j).isZero()) row.emplace_back(j, m(i, j));
      sparse.addEquation(row);
    }
    CHECK(sparse.rank() == e.rank);
    CHECK(sparse.kernelBasis() == k);

    if (r == c && r > 0) {
      auto pieces = coprimeSplit(m);
      std::size_t total = 0;
      Matrix all(r, 0);
      for (const auto& p : pieces) {
        total += p.basis.cols();
        all = hstack(all, p.basis);
        // invariant: m * basis stays in span(basis)
        CHECK(solve(p.basis, m * p.basis).has_value());
      }
      CHECK(total == r);
      CHECK(rank(all) == r);
    }
  }
}

TEST_CASE("quotient map") {
  Matrix u = Matrix::column(Vector{Scalar(1), Scalar(1), Scalar(0)});
  auto q = quotientBy(u, 3);
  CHECK(q.dimension() == 2);
  CHECK((q.project * u).isZero());
  CHECK(q.project * q.section == Matrix::identity(2));
}

TEST_CASE("prime field mode") {
  FieldMode::usePrime(7);
  CHECK(Scalar(10) == Scalar(3));
  CHECK(Scalar(1, 3) * Scalar(3) == Scalar(1));
  CHECK(Scalar(-1) == Scalar(6));
  CHECK(rank(Matrix{{1, 2}, {3, 6}}) == 1);
  CHECK(rank(Matrix{{1, 0}, {0, 7}}) == 1);
  FieldMode::useRationals();
  CHECK_THROWS(FieldMode::usePrime(8));
  CHECK_FALSE(FieldMode::isPrime());
}

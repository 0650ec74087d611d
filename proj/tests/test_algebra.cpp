#include "doctest.h"
#include "fixtures.hpp"
#include "tauscope/errors.hpp"

using namespace tauscope;
using namespace tauscope::algebra;
using exactlin::rank;

TEST_CASE("path algebra normal form") {
  auto a = fixtures::algA();
  CHECK(a->dimension() == 5);
  CHECK(a->labels() == std::vector<std::string>{"e1", "e2", "e3", "alpha", "beta"});
  CHECK(Algebra::fromPresentation(fixtures::a2Presentation())->dimension() == 3);
  auto dual = fixtures::dualNumbers();
  CHECK(dual->dimension() == 2);
  CHECK(dual->labels() == std::vector<std::string>{"e1", "x"});
}

TEST_CASE("longer relations reduce against the ideal span") {
  // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with d*a = c*b
  AlgebraPresentation p;
  p.name = "square";
  p.quiver.vertices = {"1", "2", "3", "4"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}};
  p.relations = {{{{Scalar(1), {0, 2}}, {Scalar(-1), {1, 3}}}}};
  auto a = Algebra::fromPresentation(p);
  CHECK(a->dimension() == 9);
  auto ca = a->pathElement({0, 2}, 0);
  auto db = a->pathElement({1, 3}, 0);
  CHECK(ca == db);
  CHECK_FALSE(exactlin::isZero(ca));
}

TEST_CASE("multiplication") {
  auto a = fixtures::algA();
  auto alpha = a->basisVector(*a->arrowBasisIndex("alpha"));
  auto beta = a->basisVector(*a->arrowBasisIndex("beta"));
  CHECK(exactlin::isZero(a->multiply(beta, alpha)));
  CHECK(a->multiply(alpha, a->idempotent(0)) == alpha);
  CHECK(a->multiply(a->idempotent(1), alpha) == alpha);
  CHECK(exactlin::isZero(a->multiply(a->idempotent(0), alpha)));
  for (std::size_t i = 0; i < a->dimension(); ++i) CHECK(a->multiply(a->unit(), a->basisVector(i)) == a->basisVector(i));
  CHECK(a->isAssociative());
}

TEST_CASE("relation errors") {
  AlgebraPresentation p = fixtures::algAPresentation();
  p.relations = {{{{Scalar(1), {0, 1}}, {Scalar(1), {0}}}}};
  CHECK_THROWS_AS(Algebra::fromPresentation(p), MalformedRelation);
  p.relations = {{{{Scalar(1), {1, 0}}}}};
  CHECK_THROWS_AS(Algebra::fromPresentation(p), MalformedRelation);

  AlgebraPresentation loop;
  loop.quiver.vertices = {"1"};
  loop.quiver.arrows = {{"x", 0, 0}};
  CHECK_THROWS_AS(Algebra::fromPresentation(loop, 10), NotFiniteDimensional);
  loop.relations = {{{{Scalar(1), {0, 0, 0, 0, 0}}}}};
  CHECK(Algebra::fromPresentation(loop, 10)->dimension() == 5);
  CHECK_THROWS_AS(Algebra::fromPresentation(loop, 3), NotFiniteDimensional);
}

TEST_CASE("opposite algebra") {
  auto a = fixtures::algA();
  auto op = a->opposite();
  CHECK(op->dimension() == 5);
  CHECK(op->opposite().get() == a.get());
  CHECK(op->isAssociative());
  const auto* pres = op->presentation();
  REQUIRE(pres);
  CHECK(pres->quiver.arrows[0].source == 1);
  CHECK(pres->quiver.arrows[0].target == 0);
  // in A^op, alpha * beta (as opposite product) equals beta*alpha in A = 0
  auto alpha = op->basisVector(3), beta = op->basisVector(4);
  CHECK(exactlin::isZero(op->multiply(alpha, beta)));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(op->multiply(op->basisVector(i), op->basisVector(j)) == a->multiply(a->basisVector(j), a->basisVector(i)));
  auto k3 = semisimpleCommutative(3);
  CHECK(k3->opposite()->leftMultiplication(1) == k3->leftMultiplication(1));
}

TEST_CASE("quotients") {
  auto a = fixtures::algA();
  auto beta = a->basisVector(4);
  auto q = quotientByIdeal(a, {beta});
  CHECK(q.idealBasis.cols() == 1);
  CHECK(q.algebra->dimension() == 4);
  CHECK(q.algebra->isAssociative());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(q.projection.apply(a->multiply(a->basisVector(i), a->basisVector(j))) ==
            q.algebra->multiply(q.projection.apply(a->basisVector(i)), q.projection.apply(a->basisVector(j))));
  CHECK(quotientByIdeal(a, {a->zero()}).algebra->dimension() == 5);
  CHECK(quotientByIdeal(a, {a->unit()}).algebra->dimension() == 0);
}

TEST_CASE("jacobson radical") {
  auto a = fixtures::algA();
  auto j = jacobsonRadical(*a);
  CHECK(j.cols() == 2);
  CHECK(exactlin::hstack(j, Matrix::fromColumns({a->basisVector(3), a->basisVector(4)}, 5)).cols() == 4);
  CHECK(rank(exactlin::hstack(j, Matrix::fromColumns({a->basisVector(3), a->basisVector(4)}, 5))) == 2);
  CHECK(jacobsonRadical(*semisimpleCommutative(3)).cols() == 0);
  auto dual = fixtures::dualNumbers();
  auto jd = jacobsonRadical(*dual);
  REQUIRE(jd.cols() == 1);
  CHECK(jd.col(0)[0].isZero());
  CHECK(a->radicalGenerators().size() == 2);
  exactlin::FieldMode::usePrime(5);
  CHECK_THROWS_AS(jacobsonRadical(*dual), UnsupportedCharacteristic);
  exactlin::FieldMode::useRationals();
}

TEST_CASE("abstract algebra Peirce data") {
  auto m = fixtures::matrixTimesField();
  CHECK(m->dimension() == 5);
  CHECK(m->vertexCount() == 3);
  CHECK(m->peirceBasis().size() == 5);
  CHECK(m->peirceIndices(0, 1).size() == 1);
  CHECK(m->peirceIndices(2, 0).empty());
  CHECK(m->radicalGenerators().empty());
  CHECK(m->generators().size() == 2);
  for (const auto& pe : m->peirceBasis())
    CHECK(m->peirceComponent(pe.element, pe.target, pe.source) == pe.element);
  CHECK_THROWS_AS(Algebra::fromStructureConstants({"a"}, {Matrix{{1}}}, {Vector{Scalar(2)}}), InvalidAlgebra);
}

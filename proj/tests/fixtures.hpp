#pragma once

#include "tauscope/algebra.hpp"

namespace fixtures {

using tauscope::algebra::Algebra;
using tauscope::algebra::AlgebraPresentation;
using tauscope::algebra::AlgebraPtr;
using tauscope::exactlin::Matrix;
using tauscope::exactlin::Scalar;
using tauscope::exactlin::Vector;

// 1 -alpha-> 2 -beta-> 3, beta*alpha = 0
inline AlgebraPresentation algAPresentation() {
  AlgebraPresentation p;
  p.name = "ALG-A";
  p.quiver.vertices = {"1", "2", "3"};
  p.quiver.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}};
  p.relations = {{{{Scalar(1), {0, 1}}}}};
  return p;
}

inline AlgebraPtr algA() { return Algebra::fromPresentation(algAPresentation()); }

inline AlgebraPresentation a2Presentation() {
  AlgebraPresentation p;
  p.name = "A2";
  p.quiver.vertices = {"1", "2"};
  p.quiver.arrows = {{"alpha", 0, 1}};
  return p;
}

inline AlgebraPtr a2() { return Algebra::fromPresentation(a2Presentation()); }

// K[x]/x^2
inline AlgebraPtr dualNumbers() {
  AlgebraPresentation p;
  p.name = "dual";
  p.quiver.vertices = {"1"};
  p.quiver.arrows = {{"x", 0, 0}};
  p.relations = {{{{Scalar(1), {0, 0}}}}};
  return Algebra::fromPresentation(p);
}

// 1 -a-> 2, 1 -b-> 2
inline AlgebraPtr kronecker() {
  AlgebraPresentation p;
  p.name = "Kronecker";
  p.quiver.vertices = {"1", "2"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  return Algebra::fromPresentation(p);
}

// 1 =alpha,beta=> 2 -gamma-> 3, gamma*alpha = 0
inline AlgebraPtr asai() {
  AlgebraPresentation p;
  p.name = "Asai";
  p.quiver.vertices = {"1", "2", "3"};
  p.quiver.arrows = {{"alpha", 0, 1}, {"beta", 0, 1}, {"gamma", 1, 2}};
  p.relations = {{{{Scalar(1), {0, 2}}}}};
  return Algebra::fromPresentation(p);
}

// M_2(K) x K on the basis e11, e12, e21, e22, f.
inline AlgebraPtr matrixTimesField() {
  const std::size_t n = 5;
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  std::vector<Matrix> left(n, Matrix(n, n));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) left[idx(i, j)](idx(i, l), idx(j, l)) = Scalar(1);
  left[4](4, 4) = Scalar(1);
  auto unit = [](std::size_t k) { return tauscope::exactlin::unitVector(5, k); };
  return Algebra::fromStructureConstants({"e11", "e12", "e21", "e22", "f"}, left, {unit(0), unit(3), unit(4)},
                                         {"1", "2", "3"});
}

}  // namespace fixtures

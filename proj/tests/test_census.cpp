#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tauscope/census.hpp"

using namespace tauscope;
using namespace tauscope::census;
using namespace tauscope::repmod;

namespace {

std::set<std::string> names(const Census& c) {
  std::set<std::string> out;
  for (const auto& it : c.items()) out.insert(it.name);
  return out;
}

// Every summand of P / <m> for m a basis vector of a radical layer of P.
void checkCompleteness(const Census& c) {
  const auto& a = c.algebra();
  for (std::size_t v = 0; v < a->vertexCount(); ++v) {
    Representation layer = projectiveModule(a, v);
    SubModule rad = radical(layer);
    ModuleMap toP = rad.inclusion;
    while (!rad.module.isZero()) {
      const auto& r = rad.module;
      for (std::size_t w = 0; w < a->vertexCount(); ++w)
        for (std::size_t j = 0; j < r.dim(w); ++j) {
          const Vector elt = toP.block(w).apply(exactlin::unitVector(r.dim(w), j));
          auto gen = mapFromProjectives({w}, {elt}, projectiveModule(a, v));
          auto q = cokernel(gen).module;
          CHECK_NOTHROW(c.decomposeIntoIds(q));
        }
      auto next = radical(rad.module);
      toP = toP.after(next.inclusion);
      rad = next;
    }
  }
}

}  // namespace

TEST_CASE("almost split sequences") {
  auto a = fixtures::algA();
  auto s = simpleModules(a);
  auto ar2 = almostSplitSequence(s[1]);
  CHECK(ar2.sequence.validate());
  CHECK(isIsomorphic(ar2.left, s[2]));
  CHECK(isIsomorphic(ar2.middle, projectiveModule(a, 1)));
  auto ar1 = almostSplitSequence(s[0]);
  CHECK(isIsomorphic(ar1.left, s[1]));
  CHECK(isIsomorphic(ar1.middle, projectiveModule(a, 0)));
  CHECK_THROWS_AS(almostSplitSequence(projectiveModule(a, 0)), IsProjective);
}

TEST_CASE("census of ALG-A") {
  auto a = fixtures::algA();
  auto c = enumerateIndecomposables(a);
  CHECK(c.size() == 5);
  CHECK(names(c) == std::set<std::string>{"S1", "S2", "P1", "P2", "P3"});
  std::size_t proj = 0, inj = 0;
  for (const auto& it : c.items()) {
    proj += it.projective;
    inj += it.injective;
  }
  CHECK(proj == 3);
  CHECK(inj == 3);
  CHECK(c.identify(projectiveModule(a, 0)) == *c.findByName("P1"));
  auto g = homBasis(projectiveModule(a, 1), projectiveModule(a, 0)).at(0);
  CHECK(c.identify(cokernel(g).module) == *c.findByName("S1"));
  auto other = fixtures::a2();
  CHECK_THROWS(c.identify(simpleModule(other, 0)));
  checkCompleteness(c);

  auto again = enumerateIndecomposables(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(again.item(i).name == c.item(i).name);
    CHECK(again.item(i).dims == c.item(i).dims);
  }
}

TEST_CASE("AR sequences of census items") {
  auto c = enumerateIndecomposables(fixtures::algA());
  for (const auto& it : c.items()) {
    if (it.projective) continue;
    auto ar = almostSplitSequence(it.module);
    CHECK(ar.sequence.validate());
    CHECK_FALSE(isIsomorphic(ar.middle, directSumModule({ar.left, ar.right})));
    for (const auto& s : ar.middleSummands) CHECK_NOTHROW(c.identify(s.module));
  }
}

TEST_CASE("small censuses") {
  auto c = enumerateIndecomposables(fixtures::a2());
  CHECK(names(c) == std::set<std::string>{"S1", "P1", "P2"});
  checkCompleteness(c);
  auto k3 = enumerateIndecomposables(algebra::semisimpleCommutative(3));
  CHECK(k3.size() == 3);
  auto dual = enumerateIndecomposables(fixtures::dualNumbers());
  CHECK(dual.size() == 2);
}

TEST_CASE("representation-infinite algebras stop at the cap") {
  try {
    enumerateIndecomposables(fixtures::kronecker());
    FAIL("Kronecker census terminated");
  } catch (const RepInfiniteAtCap& e) {
    CHECK(e.partial().size() >= 4);
    for (const auto& it : e.partial()) CHECK(it.module.dimension() <= 60);
  }
  CHECK_THROWS_AS(enumerateIndecomposables(fixtures::kronecker(), {60, 5}), RepInfiniteAtCap);
}

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tauscope/silting.hpp"

using namespace tauscope;
using namespace tauscope::silting;
using namespace tauscope::repmod;

namespace {

std::size_t id(const Census& c, const std::string& name) { return *c.findByName(name); }

IdSet named(const Census& c, std::initializer_list<const char*> names) {
  IdSet out;
  for (auto n : names) out.insert(id(c, n));
  return out;
}

TwoTermComplex identityOn(const AlgebraPtr& a, std::size_t v) {
  Vector e(a->peirceIndices(v, v).size());
  for (std::size_t l = 0; l < e.size(); ++l) e[l] = a->peirceIndices(v, v)[l] == a->idempotentPeirceIndex(v) ? 1 : 0;
  return TwoTermComplex(ProjectiveMap{a, {v}, {v}, {{e}}});
}

}  // namespace

TEST_CASE("two-term complexes") {
  auto a = fixtures::algA();
  auto id0 = identityOn(a, 0);
  CHECK(id0.cokernel().isZero());
  CHECK(id0.reduced().p0().empty());
  CHECK(id0.reduced().p1().empty());
  for (const auto& m : simpleModules(a)) CHECK(dSigmaMembership(id0, m));
  CHECK(dSigmaMembership(id0, Representation::zero(a)));

  auto triv = TwoTermComplex::trivial(a, {1});
  CHECK(triv.cokernel().isZero());
  CHECK(dSigmaMembership(triv, simpleModule(a, 0)));
  CHECK_FALSE(dSigmaMembership(triv, simpleModule(a, 1)));

  // minimal presentation of S1 plus an identity summand reduces back
  auto pres = TwoTermComplex(minimalProjectivePresentation(simpleModule(a, 0)).sigma);
  auto sum = (pres + identityOn(a, 1)).reduced();
  CHECK(sum.p0().size() == pres.p0().size());
  CHECK(sum.p1().size() == pres.p1().size());
  CHECK(isIsomorphic(sum.cokernel(), simpleModule(a, 0)));
}

TEST_CASE("silting data of the main example") {
  auto a = fixtures::algA();
  auto c = census::enumerateIndecomposables(a);
  auto t = torsion::torsionClosure(c, named(c, {"S1", "P1", "P3"}));
  auto d = siltingFromTorsionClass(c, t);
  CHECK(d.basicModule == named(c, {"S1", "P1", "P3"}));
  CHECK(d.supportVertices.empty());
  CHECK(dSigmaMembership(d.sigmaPrime, c.item(id(c, "S1")).module));
  CHECK_FALSE(dSigmaMembership(d.sigmaPrime, c.item(id(c, "S2")).module));
  CHECK(dSigmaMembership(d.sigmaPrime, Representation::zero(a)));
  CHECK(isTauRigid(d.module));
  CHECK(isSupportTauTilting(d));
  CHECK_FALSE(isTilting(d.module));
  CHECK(isIsomorphic(d.sigma1.cokernel(), c.item(id(c, "S1")).module));
  for (std::size_t x = 0; x < c.size(); ++x) CHECK(dSigmaMembership(d.sigma1, c.item(x).module) == (t.count(x) > 0));
}

TEST_CASE("trivial torsion classes") {
  auto a = fixtures::algA();
  auto c = census::enumerateIndecomposables(a);
  IdSet full;
  for (std::size_t i = 0; i < c.size(); ++i) full.insert(i);
  auto top = siltingFromTorsionClass(c, full);
  CHECK(top.basicModule == named(c, {"P1", "P2", "P3"}));
  CHECK(top.supportVertices.empty());
  CHECK(top.sigma1.cokernel().isZero());
  CHECK(isTilting(top.module));

  auto bottom = siltingFromTorsionClass(c, {});
  CHECK(bottom.basicModule.empty());
  CHECK(bottom.supportVertices == std::vector<std::size_t>{0, 1, 2});
  for (const auto& it : c.items()) {
    CHECK_FALSE(dSigmaMembership(bottom.sigma1, it.module));
    CHECK_FALSE(dSigmaMembership(bottom.sigmaPrime, it.module));
  }
  CHECK(isSupportTauTilting(bottom));
}

TEST_CASE("tau-rigidity and tilting") {
  auto a = fixtures::algA();
  for (const auto& p : projectiveModules(a)) CHECK(isTauRigid(p));
  CHECK(isTilting(regularModule(a)));
  auto dn = fixtures::dualNumbers();
  CHECK_FALSE(isTauRigid(simpleModule(dn, 0)));
  auto a2 = fixtures::a2();
  CHECK(isTilting(directSumModule({projectiveModule(a2, 0), simpleModule(a2, 0)})));
  CHECK_FALSE(isTilting(simpleModule(a2, 0)));
}

TEST_CASE("silting data for every torsion class") {
  for (const auto& alg : {fixtures::algA(), fixtures::a2(), algebra::semisimpleCommutative(3)}) {
    auto c = census::enumerateIndecomposables(alg);
    std::set<IdSet> seen;
    for (const auto& t : torsion::enumerateTorsionClasses(c)) {
      SiltingData d;
      REQUIRE_NOTHROW(d = siltingFromTorsionClass(c, t));
      CHECK(seen.insert(d.basicModule).second);
      CHECK(isTauRigid(d.module));
      CHECK(isSupportTauTilting(d));
      for (std::size_t x = 0; x < c.size(); ++x) {
        CHECK(torsion::genMembership(c, x, d.basicModule) == (t.count(x) > 0));
        CHECK(dSigmaMembership(d.sigma1, c.item(x).module) == (t.count(x) > 0));
      }
    }
  }
}

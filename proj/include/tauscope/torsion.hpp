#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "tauscope/census.hpp"

namespace tauscope::torsion {

using census::Census;
using census::IdMultiset;
using IdSet = std::set<std::size_t>;

// X in gen(S): the trace of S in X is all of X.
bool genMembership(const Census& c, std::size_t x, const IdSet& s);

struct ClosureTest {
  bool member = false;
  std::size_t iterations = 0;  // trace layers peeled off
};
// X_0 = X, X_{k+1} = X_k / tr_W(X_k); member iff some X_n = 0.
ClosureTest closureTest(const Census& c, const repmod::Representation& x, const IdSet& w);
bool torsionClosureMembership(const Census& c, std::size_t x, const IdSet& w);
IdSet torsionClosure(const Census& c, const IdSet& s);

// All torsion classes in lectic order (next-closure).
std::vector<IdSet> enumerateTorsionClasses(const Census& c);

struct Approximation {
  repmod::ModuleMap phi;  // A -> T0
  repmod::Representation t0;
  repmod::Representation t1;  // coker phi
  IdMultiset t0Ids;
  IdMultiset t1Ids;
};
// Minimal left T-approximation of the regular module and its cokernel.
Approximation minimalLeftApproximationSequence(const Census& c, const IdSet& t);

IdSet splitProjectives(const Approximation& ap);
IdSet extProjectives(const Approximation& ap);

// {X in T : Hom(T1, X) = 0}
IdSet alpha(const Census& c, const IdSet& t, const Approximation& ap);
IdSet alpha(const Census& c, const IdSet& t);

// closure(W); throws RoundtripFailure unless alpha(closure(W)) = W.
IdSet wideToTorsion(const Census& c, const IdSet& w);
std::vector<IdSet> enumerateWideSubcategories(const Census& c);

// Least n with X in gen(W)^{*n}; nullopt when X is not in filt(gen(W)).
std::optional<std::size_t> filtrationLength(const Census& c, std::size_t x, const IdSet& w);

}  // namespace tauscope::torsion

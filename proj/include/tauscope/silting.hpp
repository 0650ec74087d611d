#pragma once

#include <cstddef>
#include <vector>

#include "tauscope/torsion.hpp"

namespace tauscope::silting {

using census::Census;
using repmod::ProjectiveMap;
using repmod::Representation;
using torsion::IdSet;

// Coordinates in the Peirce block e_row A e_col and back.
exactlin::Vector blockToElement(const algebra::Algebra& a, std::size_t row, std::size_t col,
                                const exactlin::Vector& coords);
exactlin::Vector elementToBlock(const algebra::Algebra& a, std::size_t row, std::size_t col,
                                const exactlin::Vector& elt);

// P1 -> P0 between sums of vertex projectives, with its cokernel.
class TwoTermComplex {
 public:
  TwoTermComplex() = default;
  explicit TwoTermComplex(ProjectiveMap d);
  // (P_v -> 0) summed over the given vertices.
  static TwoTermComplex trivial(const repmod::AlgebraPtr& a, const std::vector<std::size_t>& vertices);

  const ProjectiveMap& differential() const { return d_; }
  const std::vector<std::size_t>& p1() const { return d_.sources; }
  const std::vector<std::size_t>& p0() const { return d_.targets; }
  const Representation& cokernel() const { return coker_; }

  TwoTermComplex operator+(const TwoTermComplex& o) const;
  // Removes summands P -> P with invertible component.
  TwoTermComplex reduced() const;

 private:
  ProjectiveMap d_;
  Representation coker_;
};

// Hom(P0, X) -> Hom(P1, X), columns indexed by generator images in P0.
exactlin::Matrix homMatrix(const TwoTermComplex& s, const Representation& x);
bool dSigmaMembership(const TwoTermComplex& s, const Representation& x);
bool xSigmaMembership(const TwoTermComplex& s, const Representation& x);

struct SiltingData {
  IdSet torsionClass;
  IdSet basicModule;  // summands of T0 + T1
  Representation module;
  std::vector<std::size_t> supportVertices;  // e = sum of e_i with T_i = 0
  TwoTermComplex sigmaPrime;
  TwoTermComplex sigma1;
};

// Throws SiltingCheckFailure or ConeCheckFailure when D_sigma differs from T.
SiltingData siltingFromTorsionClass(const Census& c, const IdSet& t);
SiltingData siltingFromTorsionClass(const Census& c, const IdSet& t, const torsion::Approximation& ap);

std::vector<std::size_t> supportVertices(const Census& c, const IdSet& t);

bool isTauRigid(const Representation& m);
bool isSupportTauTilting(const SiltingData& d);
bool isTilting(const Representation& m);

// Cone of (sigma'_0, psi_0) for A -> T0, reduced, plus (Ae -> 0).
// Throws ConeCheckFailure unless coker = T1 and D_sigma1 = T.
TwoTermComplex sigma1FromApproximation(const Census& c, const IdSet& t, const torsion::Approximation& ap,
                                       const std::vector<std::size_t>& support);

}  // namespace tauscope::silting

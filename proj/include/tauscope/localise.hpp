#pragma once

#include <cstddef>
#include <vector>

#include "tauscope/silting.hpp"

namespace tauscope::localise {

using census::Census;
using exactlin::Matrix;
using exactlin::Vector;
using repmod::AlgebraPtr;
using repmod::ModuleMap;
using repmod::Representation;
using silting::TwoTermComplex;
using torsion::IdSet;

// End^op of (+) parts modulo the maps factoring through add(kill), with one
// vertex per part.  The basis runs over blocks Hom(part a, part b) in
// lexicographic (a, b) order.
class BlockAlgebra {
 public:
  BlockAlgebra(const std::vector<Representation>& parts, const std::vector<Representation>& kill,
               const std::vector<std::string>& names);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t partCount() const { return parts_.size(); }
  // Coordinates of a map part a -> part b.
  Vector coordinates(std::size_t a, std::size_t b, const ModuleMap& h) const;

 private:
  struct Block {
    std::size_t offset = 0;
    std::vector<ModuleMap> reps;
    Matrix solver;  // columns: flattened reps, then the ideal
  };
  const Block& block(std::size_t a, std::size_t b) const { return blocks_[a * parts_.size() + b]; }

  std::vector<Representation> parts_;
  std::vector<Block> blocks_;
  AlgebraPtr algebra_;
};

struct Reflection {
  Representation module;  // G = T0 / tr_{T1}(T0)
  ModuleMap eta;          // A -> G
};
Reflection reflectionOfRegular(const Census& c, const torsion::Approximation& ap);

struct RingEpimorphismData {
  AlgebraPtr source;
  AlgebraPtr lambda;        // End^op(G); null when G = 0
  AlgebraPtr lambdaQuotient;  // End^op(T0 + T1)/<e_T1>; null when T0 = 0
  Matrix ringMap;           // dim lambda x dim A
  std::vector<Vector> kernelBasis;
  TwoTermComplex sigmaB;
  Representation reflection;
  ModuleMap eta;

  std::size_t lambdaDimension() const { return lambda ? lambda->dimension() : 0; }
};

// Throws CrossCheckFailure when the two constructions of the ring disagree
// and ReflectionNotUnique when a factorisation through eta is not unique.
RingEpimorphismData localisation(const Census& c, const IdSet& t);
RingEpimorphismData localisation(const Census& c, const torsion::Approximation& ap,
                                 const silting::SiltingData& sd);

AlgebraPtr localisedRing(const Census& c, const IdSet& t);

// Hom(P1, P0) is spanned by null-homotopic maps.
bool selfOrthogonality(const TwoTermComplex& s);

// Hom(eta, X): Hom(G, X) -> Hom(A, X) is bijective.
bool inEssentialImage(const RingEpimorphismData& d, const Representation& x);

// dim Tor_1^A(Lambda, Lambda) through f.
std::size_t tor1(const AlgebraPtr& a, const AlgebraPtr& lambda, const Matrix& f);
std::size_t tor1(const RingEpimorphismData& d);

// Lambda as a left A-module through f.
Representation restrictLeft(const AlgebraPtr& a, const AlgebraPtr& lambda, const Matrix& f);

struct ClassRecord {
  IdSet torsionClass;
  IdSet wide;
  silting::SiltingData silting;
  RingEpimorphismData ring;
  std::size_t simpleCount = 0;
  std::size_t kernelDimension = 0;
  std::size_t tor1 = 0;
  IdSet essentialImage;  // census members in the image of restriction
  IdSet xSigma;          // census members with Hom(sigma_B, X) bijective
};

struct LocalisationReport {
  std::vector<ClassRecord> records;
  std::size_t torsionClasses = 0;
  std::size_t wideSubcategories = 0;
  std::size_t siltingModules = 0;
  std::size_t ringEpimorphisms = 0;
  std::size_t universalLocalisations = 0;
  bool countsAgree() const;
};

ClassRecord classify(const Census& c, const IdSet& t);
// Throws InvariantFailure naming the class when a count or check disagrees.
LocalisationReport classifyAll(const Census& c);

}  // namespace tauscope::localise

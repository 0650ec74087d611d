#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tauscope/algebra.hpp"

namespace tauscope::repmod {

using algebra::Algebra;
using algebra::AlgebraPtr;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;

using DimVector = std::vector<std::size_t>;

// A finite-dimensional left module, stored as one vector space per vertex
// and one matrix per Peirce basis element x in e_t A e_s (a map M_s -> M_t).
// Cheap to copy; the data is shared and immutable.
class Representation {
 public:
  Representation() = default;

  // Presentation algebras only: one matrix per arrow, dims[target] x
  // dims[source].  Relations are checked; throws InvalidModule.
  static Representation fromArrowMatrices(AlgebraPtr a, DimVector dims, const std::vector<Matrix>& arrows);
  // One matrix per Peirce element.  With validate, checks the action
  // respects products and the idempotents (throws InvalidModule).
  static Representation fromAction(AlgebraPtr a, DimVector dims, std::vector<Matrix> action, bool validate = true);
  static Representation zero(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  const DimVector& dims() const { return d_->dims; }
  std::size_t dim(std::size_t v) const { return d_->dims[v]; }
  std::size_t dimension() const { return d_->total; }
  std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
  bool isZero() const { return d_->total == 0; }
  const Matrix& action(std::size_t peirceIndex) const { return d_->action[peirceIndex]; }
  // Arrow matrix, presentation algebras only.
  const Matrix& arrow(const std::string& name) const;
  // Action of an arbitrary algebra element on the whole space.
  Matrix act(const Vector& element) const;

 private:
  struct Data {
    AlgebraPtr algebra;
    DimVector dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> action;
  };
  std::shared_ptr<const Data> d_;
};

std::string dimVectorString(const DimVector& d);

// Per-vertex linear maps commuting with the action.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(Representation source, Representation target, std::vector<Matrix> blocks);
  static ModuleMap zero(const Representation& m, const Representation& n);
  static ModuleMap identity(const Representation& m);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  Matrix total() const;
  // Concatenated block entries, for linear algebra on Hom spaces.
  Vector flatten() const;

  bool isZero() const;
  bool isInjective() const;
  bool isSurjective() const;
  bool isIsomorphism() const;
  bool commutes() const;

  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  friend ModuleMap operator*(const Scalar& c, const ModuleMap& f);
  // this after g
  ModuleMap after(const ModuleMap& g) const;

 private:
  Representation source_, target_;
  std::vector<Matrix> blocks_;
};

ModuleMap linearCombination(const std::vector<ModuleMap>& maps, const Vector& coeffs, const Representation& m,
                            const Representation& n);

std::vector<ModuleMap> homBasis(const Representation& m, const Representation& n);

// Hom basis with cheap coordinates: basis element i is 1 at flattened
// position freePositions[i] and 0 at the other free positions.
struct HomSpace {
  std::vector<ModuleMap> basis;
  std::vector<std::size_t> freePositions;
  Vector coordinates(const ModuleMap& f) const;
};
HomSpace homSpace(const Representation& m, const Representation& n);
std::size_t homDimension(const Representation& m, const Representation& n);

struct SubModule {
  Representation module;
  ModuleMap inclusion;
};
struct QuotientModule {
  Representation module;
  ModuleMap projection;
  ModuleMap section;  // vertexwise linear, not a module map in general
};

// Submodule spanned by per-vertex column bases (must be invariant; throws
// InvalidModule otherwise).  Bases are reduced to independent columns.
SubModule subRepresentation(const Representation& m, const std::vector<Matrix>& bases);
QuotientModule quotientRepresentation(const Representation& m, const std::vector<Matrix>& bases);

SubModule kernel(const ModuleMap& f);
SubModule image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
// f = inclusion(image) after corestriction
ModuleMap corestrictToImage(const ModuleMap& f, const SubModule& im);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};
DirectSum directSum(const std::vector<Representation>& parts);
Representation directSumModule(const std::vector<Representation>& parts);

DimVector dimensionVector(const Representation& m);

// P_v = A e_v; basis of (P_v)_t is the Peirce basis of e_t A e_v.
Representation projectiveModule(const AlgebraPtr& a, std::size_t v);
std::vector<Representation> projectiveModules(const AlgebraPtr& a);
// Top of P_v.
Representation simpleModule(const AlgebraPtr& a, std::size_t v);
std::vector<Representation> simpleModules(const AlgebraPtr& a);
// D(A^op e_v)
Representation injectiveModule(const AlgebraPtr& a, std::size_t v);
std::vector<Representation> injectiveModules(const AlgebraPtr& a);
Representation regularModule(const AlgebraPtr& a);

// Transposed action, a module over the opposite algebra.
Representation dual(const Representation& m);
ModuleMap dual(const ModuleMap& f);

SubModule radical(const Representation& m);
SubModule socle(const Representation& m);
QuotientModule top(const Representation& m);

SubModule traceSubmodule(const std::vector<Representation>& w, const Representation& x);

struct Piece {
  Representation module;
  ModuleMap inclusion;
  ModuleMap projection;
};
// Indecomposable summands with split inclusions and projections.
std::vector<Piece> decomposeWithMaps(const Representation& m);
struct Summand {
  Representation module;
  std::size_t multiplicity = 0;
};
std::vector<Summand> decompose(const Representation& m);
bool isIndecomposable(const Representation& m);
// Basis of rad End(M) via the trace form; characteristic zero only.
std::vector<ModuleMap> endomorphismRadical(const Representation& m);

std::optional<ModuleMap> findIsomorphism(const Representation& m, const Representation& n);
bool isIsomorphic(const Representation& m, const Representation& n);

bool isProjective(const Representation& m);
bool isInjective(const Representation& m);

// Map between sums of indecomposable projectives.  The generator e_{sources[i]}
// of summand i goes to sum_j entries[i][j], where entries[i][j] holds
// coordinates in the Peirce basis of e_{sources[i]} A e_{targets[j]}.
struct ProjectiveMap {
  AlgebraPtr algebra;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> targets;
  std::vector<std::vector<Vector>> entries;

  Representation sourceModule() const;
  Representation targetModule() const;
  ModuleMap toModuleMap() const;
  // Same entries read over the opposite algebra: Hom(-, A) of this map.
  ProjectiveMap transpose() const;
};

Representation projectiveSum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
// Module map from (+)_i P_{vertices[i]} sending generator i to images[i] in
// M_{vertices[i]}.
ModuleMap mapFromProjectives(const std::vector<std::size_t>& vertices, const std::vector<Vector>& images,
                             const Representation& m);

struct ProjectiveCover {
  std::vector<std::size_t> vertices;
  std::vector<Vector> images;  // image of each generator
  ModuleMap cover;             // surjection onto the module
};
ProjectiveCover projectiveCover(const Representation& m);

struct Presentation {
  ProjectiveMap sigma;  // P1 -> P0
  ModuleMap cover;      // P0 -> M
  std::vector<Vector> coverImages;  // image of each generator of P0
  SubModule syzygy;     // kernel of cover inside P0
};
Presentation minimalProjectivePresentation(const Representation& m);

// Tr M over the opposite algebra.
Representation transpose(const Representation& m);
Representation tau(const Representation& m);
Representation tauMinus(const Representation& m);

struct ShortExactSequence {
  ModuleMap iota;
  ModuleMap pi;
  bool validate() const;
};

struct Ext1 {
  std::size_t dimension = 0;
  Presentation presentation;
  std::vector<ModuleMap> cocycles;   // maps syzygy -> N, a basis of Ext^1
  HomSpace homOmega;                 // Hom(syzygy, N)
  Matrix classOf;                    // Hom(syzygy,N)-coordinates -> Ext coordinates
  // Ext coordinates of a map syzygy -> N.
  Vector coordinates(const ModuleMap& c) const;
};
Ext1 ext1(const Representation& m, const Representation& n);
std::size_t ext1Dimension(const Representation& m, const Representation& n);
// 0 -> N -> E -> M -> 0 for a cocycle syzygy(M) -> N.
ShortExactSequence extensionMiddleTerm(const Ext1& e, const ModuleMap& cocycle);

// Number of isomorphism classes of indecomposable summands of A.
std::size_t countSimpleModules(const AlgebraPtr& a);

}  // namespace tauscope::repmod

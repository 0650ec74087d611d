#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tauscope/matrix.hpp"

namespace tauscope::algebra {

using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> vertexIndex(const std::string& id) const;
  std::optional<std::size_t> arrowIndex(const std::string& name) const;
  // Throws InvalidAlgebra on duplicate or dangling identifiers.
  void validate() const;
};

// A path, arrows listed in traversal order (first arrow first).  A trivial
// path has no arrows and source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct PathTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;  // traversal order
};

struct Relation {
  std::vector<PathTerm> terms;
};

struct AlgebraPresentation {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
};

// Label of a path in composition order, e.g. "b*a" for a then b, "e1" for
// the trivial path at vertex 1.
std::string pathLabel(const Quiver& q, const Path& p);

// An element of A lying in e_target A e_source.  It acts on a module as a
// linear map M_source -> M_target.
struct PeirceElement {
  Vector element;
  std::size_t source = 0;
  std::size_t target = 0;
  bool isIdempotent = false;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional algebra given by structure constants on a basis, with a
// complete set of orthogonal idempotents ("vertices").  Immutable.
class Algebra {
 public:
  enum class Origin { Presentation, Abstract };

  static AlgebraPtr fromPresentation(const AlgebraPresentation& p, std::size_t lengthCap = 64);
  // leftMultiplication[i] is the matrix of x -> b_i x, so column j holds the
  // coordinates of b_i b_j.  Idempotents must be orthogonal, idempotent and
  // sum to the unit.
  static AlgebraPtr fromStructureConstants(std::vector<std::string> labels,
                                           std::vector<Matrix> leftMultiplication,
                                           std::vector<Vector> idempotents,
                                           std::vector<std::string> vertexNames = {});

  Origin origin() const { return origin_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix& leftMultiplication(std::size_t i) const { return left_[i]; }
  Matrix leftMultiplication(const Vector& a) const;
  Matrix rightMultiplication(const Vector& a) const;
  Scalar structureConstant(std::size_t i, std::size_t j, std::size_t k) const {
    return left_[i](k, j);
  }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basisVector(std::size_t i) const { return exactlin::unitVector(dimension(), i); }
  Vector unit() const;
  Vector zero() const { return exactlin::zeroVector(dimension()); }

  std::size_t vertexCount() const { return idempotents_.size(); }
  const Vector& idempotent(std::size_t v) const { return idempotents_[v]; }
  const std::vector<std::string>& vertexNames() const { return vertexNames_; }

  // Basis of A adapted to A = (+) e_t A e_s.  Inside e_s A e_s the idempotent
  // e_s comes first.  For presentation algebras this is the path basis.
  const std::vector<PeirceElement>& peirceBasis() const { return peirce_; }
  // Indices of Peirce elements in e_target A e_source.
  const std::vector<std::size_t>& peirceIndices(std::size_t target, std::size_t source) const {
    return peirceBlocks_[target * vertexCount() + source];
  }
  std::size_t idempotentPeirceIndex(std::size_t v) const { return peirceIdempotent_[v]; }
  Vector peirceCoordinates(const Vector& a) const;
  // Left multiplication by Peirce element i in Peirce coordinates.
  const Matrix& peirceLeft(std::size_t i) const { return peirceLeft_[i]; }
  Vector fromPeirceCoordinates(const Vector& c) const;
  // e_target a e_source
  Vector peirceComponent(const Vector& a, std::size_t target, std::size_t source) const;

  // Peirce indices of elements that, with the idempotents, generate A: the
  // arrows for presentation algebras, all non-idempotent Peirce elements
  // otherwise.
  const std::vector<std::size_t>& generators() const { return generators_; }
  // Peirce-homogeneous elements spanning J(A) as a two-sided ideal.
  const std::vector<PeirceElement>& radicalGenerators() const;

  // Presentation data (presentation algebras only).
  const AlgebraPresentation* presentation() const { return presentation_ ? &*presentation_ : nullptr; }
  const std::vector<Path>& paths() const { return paths_; }
  std::optional<std::size_t> arrowBasisIndex(const std::string& arrow) const;
  std::optional<std::size_t> vertexIndex(const std::string& name) const;
  // Coordinates of the path given in traversal order.
  Vector pathElement(const std::vector<std::size_t>& arrows, std::size_t source) const;

  AlgebraPtr opposite() const;
  bool isOppositeOf(const Algebra& other) const { return opposite().get() == &other; }

  // (b_i b_j) b_k == b_i (b_j b_k) for all basis triples.
  bool isAssociative() const;

 private:
  Algebra() = default;
  static AlgebraPtr finalise(std::shared_ptr<Algebra> a, bool checkAssociativity);
  void buildPeirce();
  void buildRadical();

  Origin origin_ = Origin::Abstract;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_;
  std::vector<Vector> idempotents_;
  std::vector<std::string> vertexNames_;
  std::vector<PeirceElement> peirce_;
  std::vector<std::vector<std::size_t>> peirceBlocks_;
  std::vector<std::size_t> peirceIdempotent_;
  Matrix toPeirce_;    // standard coordinates -> Peirce coordinates
  Matrix fromPeirce_;  // columns are the Peirce elements
  std::vector<Matrix> peirceLeft_;
  std::vector<std::size_t> generators_;
  std::optional<std::vector<PeirceElement>> radical_;
  std::optional<AlgebraPresentation> presentation_;
  std::vector<Path> paths_;

  AlgebraPtr oppositeStrong_;
  std::weak_ptr<const Algebra> oppositeWeak_;
};

AlgebraPtr oppositeAlgebra(const AlgebraPtr& a);

struct Quotient {
  AlgebraPtr algebra;
  Matrix projection;  // dim(quotient) x dim(A), an algebra map
  Matrix idealBasis;  // columns span the two-sided ideal
};
// A / <gens>.  The quotient basis is the set of original basis elements at
// the non-pivot positions of the ideal's echelon form.
Quotient quotientByIdeal(const AlgebraPtr& a, const std::vector<Vector>& gens);

// Two-sided ideal generated by gens: span{ b_i g b_j }.
Matrix twoSidedIdeal(const Algebra& a, const std::vector<Vector>& gens);

// J(A) as {x : tr(L_x L_y) = 0 for all y}; characteristic zero only.
Matrix jacobsonRadical(const Algebra& a);

// Algebra from a direct product of matrix/field blocks is handy in tests;
// this builds K^n with the coordinate idempotents.
AlgebraPtr semisimpleCommutative(std::size_t n);

}  // namespace tauscope::algebra

#include "tauscope/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tauscope/errors.hpp"

namespace tauscope::algebra {

using exactlin::rref;

std::optional<std::size_t> Quiver::vertexIndex(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> Quiver::arrowIndex(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

void Quiver::validate() const {
  if (vertices.empty()) throw InvalidAlgebra("quiver has no vertices");
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw InvalidAlgebra("duplicate vertex identifier");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw InvalidAlgebra("duplicate arrow '" + a.name + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      throw InvalidAlgebra("arrow '" + a.name + "' references an undeclared vertex");
  }
}

std::string pathLabel(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertices[p.source];
  std::string out;
  for (std::size_t i = p.arrows.size(); i-- > 0;) {
    out += q.arrows[p.arrows[i]].name;
    if (i) out += "*";
  }
  return out;
}

namespace {

// Paths of the quiver up to some length, in the global order: by length,
// then lexicographically on the traversal sequence; trivial paths by vertex.
class PathIndex {
 public:
  explicit PathIndex(const Quiver& q) : q_(q) {
    std::vector<Path> trivial;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) trivial.push_back({v, v, {}});
    levels_.push_back(trivial);
    rebuild();
  }

  void extendTo(std::size_t length) {
    while (levels_.size() <= length) {
      std::vector<Path> next;
      for (const auto& p : levels_.back())
        for (std::size_t a = 0; a < q_.arrows.size(); ++a)
          if (q_.arrows[a].source == p.target) {
            Path e = p;
            e.arrows.push_back(a);
            e.target = q_.arrows[a].target;
            next.push_back(std::move(e));
          }
      std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
      levels_.push_back(std::move(next));
    }
    rebuild();
  }

  const std::vector<Path>& level(std::size_t l) const { return levels_[l]; }
  std::size_t countUpTo(std::size_t length) const { return offsets_[length + 1]; }
  const Path& path(std::size_t idx) const { return all_[idx]; }

  // Index of the path with these arrows (source only matters when trivial).
  std::size_t indexOf(std::size_t source, const std::vector<std::size_t>& arrows) const {
    return index_.at({arrows.empty() ? source : q_.arrows[arrows.front()].source, arrows});
  }

  // Paths ending at `target` (resp. starting at `source`) with length <= l.
  std::vector<const Path*> endingAt(std::size_t target, std::size_t maxLen) const {
    std::vector<const Path*> out;
    for (std::size_t l = 0; l <= maxLen && l < levels_.size(); ++l)
      for (const auto& p : levels_[l])
        if (p.target == target) out.push_back(&p);
    return out;
  }
  std::vector<const Path*> startingAt(std::size_t source, std::size_t maxLen) const {
    std::vector<const Path*> out;
    for (std::size_t l = 0; l <= maxLen && l < levels_.size(); ++l)
      for (const auto& p : levels_[l])
        if (p.source == source) out.push_back(&p);
    return out;
  }

 private:
  void rebuild() {
    all_.clear();
    index_.clear();
    offsets_.assign(1, 0);
    for (const auto& lvl : levels_) {
      for (const auto& p : lvl) {
        index_[{p.source, p.arrows}] = all_.size();
        all_.push_back(p);
      }
      offsets_.push_back(all_.size());
    }
  }

  const Quiver& q_;
  std::vector<std::vector<Path>> levels_;
  std::vector<Path> all_;
  std::vector<std::size_t> offsets_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
};

struct RelationInfo {
  std::size_t source, target, minLength;
  const Relation* rel;
};

std::vector<RelationInfo> checkRelations(const AlgebraPresentation& p) {
  std::vector<RelationInfo> out;
  const auto& q = p.quiver;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& rel = p.relations[r];
    if (rel.terms.empty()) throw MalformedRelation("relation " + std::to_string(r + 1) + " is empty");
    RelationInfo info{0, 0, static_cast<std::size_t>(-1), &rel};
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      const auto& term = rel.terms[t];
      if (term.arrows.size() < 2)
        throw MalformedRelation("relation " + std::to_string(r + 1) + " has a term of length < 2");
      for (auto a : term.arrows)
        if (a >= q.arrows.size()) throw MalformedRelation("relation references an unknown arrow");
      for (std::size_t i = 1; i < term.arrows.size(); ++i)
        if (q.arrows[term.arrows[i - 1]].target != q.arrows[term.arrows[i]].source)
          throw MalformedRelation("relation " + std::to_string(r + 1) + " contains a non-composable path");
      const std::size_t s = q.arrows[term.arrows.front()].source;
      const std::size_t e = q.arrows[term.arrows.back()].target;
      if (t == 0) {
        info.source = s;
        info.target = e;
      } else if (s != info.source || e != info.target) {
        throw MalformedRelation("relation " + std::to_string(r + 1) + " mixes sources or targets");
      }
      info.minLength = std::min(info.minLength, term.arrows.size());
    }
    out.push_back(info);
  }
  return out;
}

// Rows spanning the ideal generated by the relations, truncated to paths of
// length <= maxLen, in the column order given by `column`.
Matrix idealRows(const PathIndex& idx, const std::vector<RelationInfo>& rels, std::size_t maxLen,
                 const std::vector<std::size_t>& column) {
  const std::size_t ncols = idx.countUpTo(maxLen);
  std::vector<Vector> rows;
  for (const auto& info : rels) {
    if (info.minLength > maxLen) continue;
    const std::size_t slack = maxLen - info.minLength;
    for (const Path* before : idx.endingAt(info.source, slack))
      for (const Path* after : idx.startingAt(info.target, slack - before->length())) {
        Vector row = exactlin::zeroVector(ncols);
        bool any = false;
        for (const auto& term : info.rel->terms) {
          std::vector<std::size_t> arrows = before->arrows;
          arrows.insert(arrows.end(), term.arrows.begin(), term.arrows.end());
          arrows.insert(arrows.end(), after->arrows.begin(), after->arrows.end());
          if (arrows.size() > maxLen) continue;
          row[column[idx.indexOf(0, arrows)]] += term.coefficient;
          any = true;
        }
        if (any && !exactlin::isZero(row)) rows.push_back(std::move(row));
      }
  }
  Matrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
  return m;
}

// Column order putting longer (and lex-later) paths first, so pivots land on
// leading monomials and the normal-form basis prefers short paths.
std::vector<std::size_t> descendingColumns(std::size_t n) {
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = n - 1 - i;
  return col;
}

}  // namespace

AlgebraPtr Algebra::fromPresentation(const AlgebraPresentation& p, std::size_t lengthCap) {
  if (lengthCap < 1) throw std::invalid_argument("lengthCap must be at least 1");
  p.quiver.validate();
  const auto rels = checkRelations(p);
  const Quiver& q = p.quiver;

  PathIndex idx(q);
  std::size_t truncation = 0;  // R^truncation is contained in the ideal
  for (std::size_t m = 1; m <= lengthCap + 1; ++m) {
    idx.extendTo(m);
    if (idx.level(m).empty()) {
      truncation = m;
      break;
    }
    const std::size_t n = idx.countUpTo(m);
    const auto column = descendingColumns(n);
    Matrix ideal = idealRows(idx, rels, m, column);
    const std::size_t base = exactlin::rank(ideal);
    Matrix withTop(ideal.rows() + idx.level(m).size(), n);
    withTop.setBlock(0, 0, ideal);
    std::size_t r = ideal.rows();
    for (const auto& path : idx.level(m)) withTop(r++, column[idx.indexOf(path.source, path.arrows)]) = Scalar(1);
    if (exactlin::rank(withTop) == base) {
      truncation = m;
      break;
    }
  }
  if (truncation == 0)
    throw NotFiniteDimensional("paths of length " + std::to_string(lengthCap) + " survive the relations");

  const std::size_t maxLen = truncation - 1;
  const std::size_t n = idx.countUpTo(maxLen);
  const auto column = descendingColumns(n);
  const auto echelon = rref(idealRows(idx, rels, maxLen, column));
  std::vector<bool> isPivot(n, false);
  for (auto c : echelon.pivots) isPivot[c] = true;

  // Normal-form basis: non-pivot paths in ascending global order.
  std::vector<std::size_t> basisPaths;
  std::vector<std::size_t> basisOfColumn(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i)
    if (!isPivot[column[i]]) basisPaths.push_back(i);
  for (std::size_t b = 0; b < basisPaths.size(); ++b) basisOfColumn[column[basisPaths[b]]] = b;
  const std::size_t dim = basisPaths.size();

  auto reduce = [&](const std::vector<std::size_t>& arrows, std::size_t source) {
    Vector out = exactlin::zeroVector(dim);
    if (arrows.size() > maxLen) return out;
    Vector v = exactlin::zeroVector(n);
    v[column[idx.indexOf(source, arrows)]] = Scalar(1);
    for (std::size_t i = 0; i < echelon.rank; ++i) {
      const Scalar f = v[echelon.pivots[i]];
      if (f.isZero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!echelon.reduced(i, c).isZero()) v[c] -= f * echelon.reduced(i, c);
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].isZero()) out[basisOfColumn[c]] = v[c];
    return out;
  };

  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->origin_ = Origin::Presentation;
  a->presentation_ = p;
  a->vertexNames_ = q.vertices;
  for (auto i : basisPaths) {
    a->paths_.push_back(idx.path(i));
    a->labels_.push_back(pathLabel(q, idx.path(i)));
  }
  a->left_.assign(dim, Matrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& x = a->paths_[i];
      const Path& y = a->paths_[j];
      if (y.target != x.source) continue;
      std::vector<std::size_t> arrows = y.arrows;
      arrows.insert(arrows.end(), x.arrows.begin(), x.arrows.end());
      const Vector prod = reduce(arrows, y.source);
      for (std::size_t k = 0; k < dim; ++k) a->left_[i](k, j) = prod[k];
    }
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Vector e = exactlin::zeroVector(dim);
    e[v] = Scalar(1);  // trivial paths come first
    a->idempotents_.push_back(std::move(e));
  }
  return finalise(std::move(a), true);
}

AlgebraPtr Algebra::fromStructureConstants(std::vector<std::string> labels, std::vector<Matrix> left,
                                           std::vector<Vector> idempotents,
                                           std::vector<std::string> vertexNames) {
  const std::size_t n = labels.size();
  if (left.size() != n) throw InvalidAlgebra("one multiplication matrix per basis element required");
  for (const auto& m : left)
    if (m.rows() != n || m.cols() != n) throw InvalidAlgebra("multiplication matrix has wrong shape");
  for (const auto& e : idempotents)
    if (e.size() != n) throw InvalidAlgebra("idempotent has wrong length");
  if (vertexNames.empty())
    for (std::size_t v = 0; v < idempotents.size(); ++v) vertexNames.push_back(std::to_string(v + 1));
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->origin_ = Origin::Abstract;
  a->labels_ = std::move(labels);
  a->left_ = std::move(left);
  a->idempotents_ = std::move(idempotents);
  a->vertexNames_ = std::move(vertexNames);
  return finalise(std::move(a), true);
}

AlgebraPtr Algebra::finalise(std::shared_ptr<Algebra> a, bool checkAssociativity) {
  const std::size_t n = a->dimension();
  if (checkAssociativity && !a->isAssociative()) throw InvalidAlgebra("structure constants are not associative");
  // Complete set of orthogonal idempotents summing to the unit.
  Vector sum = a->zero();
  for (std::size_t v = 0; v < a->vertexCount(); ++v) {
    for (std::size_t w = 0; w < a->vertexCount(); ++w) {
      const Vector prod = a->multiply(a->idempotents_[v], a->idempotents_[w]);
      if (prod != (v == w ? a->idempotents_[v] : a->zero()))
        throw InvalidAlgebra("idempotents are not orthogonal idempotents");
    }
    if (exactlin::isZero(a->idempotents_[v])) throw InvalidAlgebra("zero idempotent");
    sum = sum + a->idempotents_[v];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Vector b = a->basisVector(j);
    if (a->multiply(sum, b) != b || a->multiply(b, sum) != b)
      throw InvalidAlgebra("idempotents do not sum to the unit");
  }
  a->buildPeirce();
  a->buildRadical();
  for (const auto& pe : a->peirce_)
    a->peirceLeft_.push_back(a->toPeirce_ * a->leftMultiplication(pe.element) * a->fromPeirce_);

  auto op = std::shared_ptr<Algebra>(new Algebra());
  op->origin_ = a->origin_;
  op->labels_ = a->labels_;
  op->idempotents_ = a->idempotents_;
  op->vertexNames_ = a->vertexNames_;
  op->left_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) op->left_[i](k, j) = a->left_[j](k, i);
  op->peirce_ = a->peirce_;
  for (auto& pe : op->peirce_) std::swap(pe.source, pe.target);
  const std::size_t nv = a->vertexCount();
  op->peirceBlocks_.assign(nv * nv, {});
  for (std::size_t t = 0; t < nv; ++t)
    for (std::size_t s = 0; s < nv; ++s) op->peirceBlocks_[s * nv + t] = a->peirceBlocks_[t * nv + s];
  op->peirceIdempotent_ = a->peirceIdempotent_;
  op->toPeirce_ = a->toPeirce_;
  op->fromPeirce_ = a->fromPeirce_;
  for (const auto& pe : op->peirce_)
    op->peirceLeft_.push_back(op->toPeirce_ * op->leftMultiplication(pe.element) * op->fromPeirce_);
  op->generators_ = a->generators_;
  if (a->radical_) {
    op->radical_ = a->radical_;
    for (auto& pe : *op->radical_) std::swap(pe.source, pe.target);
  }
  if (a->presentation_) {
    AlgebraPresentation rev = *a->presentation_;
    for (auto& arr : rev.quiver.arrows) std::swap(arr.source, arr.target);
    for (auto& rel : rev.relations)
      for (auto& t : rel.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    rev.name += "^op";
    op->presentation_ = std::move(rev);
    op->paths_ = a->paths_;
    for (auto& pth : op->paths_) {
      std::swap(pth.source, pth.target);
      std::reverse(pth.arrows.begin(), pth.arrows.end());
    }
  }
  op->oppositeWeak_ = a;
  a->oppositeStrong_ = op;
  return a;
}

void Algebra::buildPeirce() {
  const std::size_t n = dimension(), nv = vertexCount();
  peirceBlocks_.assign(nv * nv, {});
  peirceIdempotent_.assign(nv, 0);
  peirce_.clear();
  if (origin_ == Origin::Presentation) {
    for (std::size_t i = 0; i < n; ++i) {
      const Path& p = paths_[i];
      peirce_.push_back({basisVector(i), p.source, p.target, p.arrows.empty()});
      peirceBlocks_[p.target * nv + p.source].push_back(i);
      if (p.arrows.empty()) peirceIdempotent_[p.source] = i;
      if (p.arrows.size() == 1) generators_.push_back(i);
    }
    toPeirce_ = Matrix::identity(n);
    fromPeirce_ = Matrix::identity(n);
    return;
  }
  for (std::size_t t = 0; t < nv; ++t)
    for (std::size_t s = 0; s < nv; ++s) {
      const Matrix proj = leftMultiplication(idempotents_[t]) * rightMultiplication(idempotents_[s]);
      Matrix spanning = proj;
      if (t == s) spanning = exactlin::hstack(Matrix::column(idempotents_[s]), proj);
      const Matrix basis = exactlin::columnSpaceBasis(spanning);
      for (std::size_t c = 0; c < basis.cols(); ++c) {
        const bool idem = (t == s && c == 0);
        if (idem) peirceIdempotent_[s] = peirce_.size();
        peirceBlocks_[t * nv + s].push_back(peirce_.size());
        if (!idem) generators_.push_back(peirce_.size());
        peirce_.push_back({basis.col(c), s, t, idem});
      }
    }
  if (peirce_.size() != n) throw InvalidAlgebra("Peirce decomposition does not span the algebra");
  std::vector<Vector> cols;
  for (const auto& pe : peirce_) cols.push_back(pe.element);
  fromPeirce_ = Matrix::fromColumns(cols, n);
  auto inv = exactlin::inverse(fromPeirce_);
  if (!inv) throw InvalidAlgebra("Peirce elements are linearly dependent");
  toPeirce_ = *inv;
}

void Algebra::buildRadical() {
  if (origin_ == Origin::Presentation) {
    std::vector<PeirceElement> gens;
    for (auto g : generators_) gens.push_back(peirce_[g]);
    radical_ = std::move(gens);
    return;
  }
  if (exactlin::FieldMode::isPrime()) return;
  const Matrix j = jacobsonRadical(*this);
  std::vector<PeirceElement> gens;
  const std::size_t nv = vertexCount();
  for (std::size_t t = 0; t < nv; ++t)
    for (std::size_t s = 0; s < nv; ++s) {
      std::vector<Vector> comps;
      for (std::size_t c = 0; c < j.cols(); ++c) comps.push_back(peirceComponent(j.col(c), t, s));
      if (comps.empty()) continue;
      const Matrix basis = exactlin::columnSpaceBasis(Matrix::fromColumns(comps, dimension()));
      for (std::size_t c = 0; c < basis.cols(); ++c) gens.push_back({basis.col(c), s, t, false});
    }
  radical_ = std::move(gens);
}

const std::vector<PeirceElement>& Algebra::radicalGenerators() const {
  if (!radical_) throw UnsupportedCharacteristic("radical of an abstract algebra needs characteristic zero");
  return *radical_;
}

Matrix Algebra::leftMultiplication(const Vector& a) const {
  Matrix m(dimension(), dimension());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].isZero()) m.addBlock(0, 0, left_[i], a[i]);
  return m;
}

Matrix Algebra::rightMultiplication(const Vector& a) const {
  const std::size_t n = dimension();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = left_[j].apply(a);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const { return leftMultiplication(a).apply(b); }

Vector Algebra::unit() const {
  Vector u = zero();
  for (const auto& e : idempotents_) u = u + e;
  return u;
}

Vector Algebra::peirceCoordinates(const Vector& a) const { return toPeirce_.apply(a); }

Vector Algebra::fromPeirceCoordinates(const Vector& c) const { return fromPeirce_.apply(c); }

Vector Algebra::peirceComponent(const Vector& a, std::size_t target, std::size_t source) const {
  const Vector c = peirceCoordinates(a);
  Vector out = zero();
  for (auto k : peirceIndices(target, source))
    if (!c[k].isZero()) out = out + c[k] * peirce_[k].element;
  return out;
}

std::optional<std::size_t> Algebra::arrowBasisIndex(const std::string& arrow) const {
  if (!presentation_) return std::nullopt;
  auto a = presentation_->quiver.arrowIndex(arrow);
  if (!a) return std::nullopt;
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (paths_[i].arrows.size() == 1 && paths_[i].arrows[0] == *a) return i;
  return std::nullopt;
}

std::optional<std::size_t> Algebra::vertexIndex(const std::string& name) const {
  auto it = std::find(vertexNames_.begin(), vertexNames_.end(), name);
  if (it == vertexNames_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertexNames_.begin());
}

Vector Algebra::pathElement(const std::vector<std::size_t>& arrows, std::size_t source) const {
  if (!presentation_) throw std::logic_error("pathElement needs a presentation algebra");
  if (arrows.empty()) return idempotents_.at(source);
  const auto& q = presentation_->quiver;
  Vector acc;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto idx = arrowBasisIndex(q.arrows.at(arrows[i]).name);
    if (!idx) return zero();
    const Vector a = basisVector(*idx);
    acc = i == 0 ? a : multiply(a, acc);
  }
  return acc;
}

AlgebraPtr Algebra::opposite() const {
  if (oppositeStrong_) return oppositeStrong_;
  auto op = oppositeWeak_.lock();
  if (!op) throw std::logic_error("opposite algebra no longer alive");
  return op;
}

bool Algebra::isAssociative() const {
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // L_{b_i b_j} == L_i L_j
      Vector bij(n);
      for (std::size_t k = 0; k < n; ++k) bij[k] = left_[i](k, j);
      if (leftMultiplication(bij) != left_[i] * left_[j]) return false;
    }
  return true;
}

AlgebraPtr oppositeAlgebra(const AlgebraPtr& a) { return a->opposite(); }

Matrix twoSidedIdeal(const Algebra& a, const std::vector<Vector>& gens) {
  const std::size_t n = a.dimension();
  std::vector<Vector> span;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector left = a.multiply(a.basisVector(i), g);
      for (std::size_t j = 0; j < n; ++j) span.push_back(a.multiply(left, a.basisVector(j)));
    }
  }
  if (span.empty()) return Matrix(n, 0);
  return exactlin::columnSpaceBasis(Matrix::fromColumns(span, n));
}

Quotient quotientByIdeal(const AlgebraPtr& a, const std::vector<Vector>& gens) {
  const std::size_t n = a->dimension();
  const Matrix ideal = twoSidedIdeal(*a, gens);
  const auto q = exactlin::quotientBy(ideal, n);
  const std::size_t m = q.dimension();
  // q.section columns are standard vectors: the surviving basis elements.
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!q.section(r, c).isZero()) labels.push_back(a->labels()[r]);
  std::vector<Matrix> left(m, Matrix(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector prod = a->multiply(q.section.col(i), q.section.col(j));
      const Vector img = q.project.apply(prod);
      for (std::size_t k = 0; k < m; ++k) left[i](k, j) = img[k];
    }
  std::vector<Vector> idem;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < a->vertexCount(); ++v) {
    Vector e = q.project.apply(a->idempotent(v));
    if (exactlin::isZero(e)) continue;
    idem.push_back(std::move(e));
    names.push_back(a->vertexNames()[v]);
  }
  auto alg = Algebra::fromStructureConstants(std::move(labels), std::move(left), std::move(idem), std::move(names));
  return {alg, q.project, ideal};
}

Matrix jacobsonRadical(const Algebra& a) {
  if (exactlin::FieldMode::isPrime())
    throw UnsupportedCharacteristic("the trace-form radical needs characteristic zero");
  const std::size_t n = a.dimension();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t;
      const Matrix& li = a.leftMultiplication(i);
      const Matrix& lj = a.leftMultiplication(j);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!li(r, c).isZero() && !lj(c, r).isZero()) t += li(r, c) * lj(c, r);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return exactlin::kernelBasis(gram);
}

AlgebraPtr semisimpleCommutative(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Matrix> left(n, Matrix(n, n));
  std::vector<Vector> idem;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    left[i](i, i) = Scalar(1);
    idem.push_back(exactlin::unitVector(n, i));
  }
  return Algebra::fromStructureConstants(std::move(labels), std::move(left), std::move(idem));
}

}  // namespace tauscope::algebra

#include "tauscope/representation.hpp"

#include <numeric>
#include <sstream>

#include "tauscope/errors.hpp"

namespace tauscope::repmod {

using exactlin::columnSpaceBasis;
using exactlin::kernelBasis;
using exactlin::rank;

namespace {

std::vector<std::size_t> offsetsOf(const DimVector& dims, std::size_t& total) {
  std::vector<std::size_t> off(dims.size());
  total = 0;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    off[v] = total;
    total += dims[v];
  }
  return off;
}

// Action of a Peirce-homogeneous element as a map M_s -> M_t.
Matrix homogeneousAction(const Representation& m, const algebra::PeirceElement& pe) {
  const auto& a = *m.algebra();
  const Vector c = a.peirceCoordinates(pe.element);
  Matrix out(m.dim(pe.target), m.dim(pe.source));
  for (auto k : a.peirceIndices(pe.target, pe.source))
    if (!c[k].isZero()) out.addBlock(0, 0, m.action(k), c[k]);
  return out;
}

}  // namespace

Representation Representation::fromAction(AlgebraPtr a, DimVector dims, std::vector<Matrix> action, bool validate) {
  const std::size_t nv = a->vertexCount();
  if (dims.size() != nv) throw InvalidModule("dimension vector has wrong length");
  const auto& peirce = a->peirceBasis();
  if (action.size() != peirce.size()) throw InvalidModule("one action matrix per Peirce element required");
  for (std::size_t k = 0; k < peirce.size(); ++k)
    if (action[k].rows() != dims[peirce[k].target] || action[k].cols() != dims[peirce[k].source])
      throw InvalidModule("action matrix " + std::to_string(k) + " has wrong shape");
  if (validate) {
    for (std::size_t v = 0; v < nv; ++v)
      if (action[a->idempotentPeirceIndex(v)] != Matrix::identity(dims[v]))
        throw InvalidModule("idempotent does not act as the identity");
    for (std::size_t i = 0; i < peirce.size(); ++i)
      for (std::size_t j = 0; j < peirce.size(); ++j) {
        if (peirce[i].source != peirce[j].target) continue;
        const std::size_t t = peirce[i].target, s = peirce[j].source;
        Matrix expect(dims[t], dims[s]);
        for (auto k : a->peirceIndices(t, s)) {
          const Scalar& c = a->peirceLeft(i)(k, j);
          if (!c.isZero()) expect.addBlock(0, 0, action[k], c);
        }
        if (action[i] * action[j] != expect) throw InvalidModule("action does not respect multiplication");
      }
  }
  auto d = std::make_shared<Data>();
  d->algebra = std::move(a);
  d->dims = std::move(dims);
  d->offsets = offsetsOf(d->dims, d->total);
  d->action = std::move(action);
  Representation r;
  r.d_ = std::move(d);
  return r;
}

Representation Representation::fromArrowMatrices(AlgebraPtr a, DimVector dims, const std::vector<Matrix>& arrows) {
  const auto* p = a->presentation();
  if (!p) throw InvalidModule("arrow matrices need a presentation algebra");
  const auto& q = p->quiver;
  if (dims.size() != q.vertices.size()) throw InvalidModule("dimension vector has wrong length");
  if (arrows.size() != q.arrows.size()) throw InvalidModule("one matrix per arrow required");
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].rows() != dims[q.arrows[i].target] || arrows[i].cols() != dims[q.arrows[i].source])
      throw InvalidModule("matrix for arrow '" + q.arrows[i].name + "' has wrong shape");
  auto pathMatrix = [&](std::size_t source, const std::vector<std::size_t>& path) {
    Matrix m = Matrix::identity(dims[source]);
    for (auto arr : path) m = arrows[arr] * m;
    return m;
  };
  for (std::size_t r = 0; r < p->relations.size(); ++r) {
    const auto& terms = p->relations[r].terms;
    const std::size_t s = q.arrows[terms[0].arrows.front()].source;
    const std::size_t t = q.arrows[terms[0].arrows.back()].target;
    Matrix sum(dims[t], dims[s]);
    for (const auto& term : terms) sum.addBlock(0, 0, pathMatrix(s, term.arrows), term.coefficient);
    if (!sum.isZero()) throw InvalidModule("relation " + std::to_string(r + 1) + " does not vanish");
  }
  std::vector<Matrix> action;
  for (const auto& path : a->paths()) action.push_back(pathMatrix(path.source, path.arrows));
  return fromAction(std::move(a), std::move(dims), std::move(action), false);
}

Representation Representation::zero(AlgebraPtr a) {
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) action.emplace_back(0, 0);
  DimVector dims(a->vertexCount(), 0);
  return fromAction(std::move(a), std::move(dims), std::move(action), false);
}

const Matrix& Representation::arrow(const std::string& name) const {
  auto idx = algebra()->arrowBasisIndex(name);
  if (!idx) throw std::invalid_argument("unknown arrow '" + name + "'");
  return action(*idx);
}

Matrix Representation::act(const Vector& element) const {
  const auto& a = *algebra();
  const Vector c = a.peirceCoordinates(element);
  Matrix out(dimension(), dimension());
  const auto& peirce = a.peirceBasis();
  for (std::size_t k = 0; k < peirce.size(); ++k)
    if (!c[k].isZero()) out.addBlock(offset(peirce[k].target), offset(peirce[k].source), action(k), c[k]);
  return out;
}

std::string dimVectorString(const DimVector& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (source_.algebra() != target_.algebra()) throw std::invalid_argument("module map between different algebras");
  if (blocks_.size() != source_.dims().size()) throw std::invalid_argument("module map needs one block per vertex");
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw std::invalid_argument("module map block has wrong shape");
}

ModuleMap ModuleMap::zero(const Representation& m, const Representation& n) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.dims().size(); ++v) blocks.emplace_back(n.dim(v), m.dim(v));
  return ModuleMap(m, n, std::move(blocks));
}

ModuleMap ModuleMap::identity(const Representation& m) {
  std::vector<Matrix> blocks;
  for (auto d : m.dims()) blocks.push_back(Matrix::identity(d));
  return ModuleMap(m, m, std::move(blocks));
}

Matrix ModuleMap::total() const { return exactlin::blockDiagonal(blocks_); }

Vector ModuleMap::flatten() const {
  Vector out;
  for (const auto& b : blocks_) {
    const Vector f = b.flatten();
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

bool ModuleMap::isZero() const {
  for (const auto& b : blocks_)
    if (!b.isZero()) return false;
  return true;
}

bool ModuleMap::isInjective() const {
  for (const auto& b : blocks_)
    if (rank(b) != b.cols()) return false;
  return true;
}

bool ModuleMap::isSurjective() const {
  for (const auto& b : blocks_)
    if (rank(b) != b.rows()) return false;
  return true;
}

bool ModuleMap::isIsomorphism() const {
  for (const auto& b : blocks_)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

bool ModuleMap::commutes() const {
  const auto& a = *source_.algebra();
  for (auto g : a.generators()) {
    const auto& pe = a.peirceBasis()[g];
    if (blocks_[pe.target] * source_.action(g) != target_.action(g) * blocks_[pe.source]) return false;
  }
  return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] + o.blocks_[v]);
  return ModuleMap(source_, target_, std::move(b));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] - o.blocks_[v]);
  return ModuleMap(source_, target_, std::move(b));
}

ModuleMap operator*(const Scalar& c, const ModuleMap& f) {
  std::vector<Matrix> b;
  for (const auto& blk : f.blocks_) b.push_back(c * blk);
  return ModuleMap(f.source_, f.target_, std::move(b));
}

ModuleMap ModuleMap::after(const ModuleMap& g) const {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] * g.blocks_[v]);
  return ModuleMap(g.source_, target_, std::move(b));
}

ModuleMap linearCombination(const std::vector<ModuleMap>& maps, const Vector& coeffs, const Representation& m,
                            const Representation& n) {
  ModuleMap out = ModuleMap::zero(m, n);
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!coeffs[i].isZero()) out = out + coeffs[i] * maps[i];
  return out;
}

namespace {

struct HomSystem {
  std::vector<std::size_t> offsets;
  exactlin::SparseSystem system;
};

HomSystem buildHomSystem(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("Hom between modules over different algebras");
  const auto& a = *m.algebra();
  const std::size_t nv = a.vertexCount();
  std::vector<std::size_t> off(nv);
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    off[v] = unknowns;
    unknowns += n.dim(v) * m.dim(v);
  }
  exactlin::SparseSystem sys(unknowns);
  // f_t M(g) - N(g) f_s = 0 for each generator g : s -> t
  for (auto g : a.generators()) {
    const auto& pe = a.peirceBasis()[g];
    const std::size_t s = pe.source, t = pe.target;
    const Matrix& mg = m.action(g);
    const Matrix& ng = n.action(g);
    if (mg.isZero() && ng.isZero()) continue;
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        exactlin::SparseSystem::Row row;
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!mg(k, j).isZero()) row.emplace_back(off[t] + i * m.dim(t) + k, mg(k, j));
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!ng(i, k).isZero()) row.emplace_back(off[s] + k * m.dim(s) + j, -ng(i, k));
        if (!row.empty()) sys.addEquation(std::move(row));
      }
  }
  return {std::move(off), std::move(sys)};
}

}  // namespace

std::vector<ModuleMap> homBasis(const Representation& m, const Representation& n) {
  return homSpace(m, n).basis;
}

Vector HomSpace::coordinates(const ModuleMap& f) const {
  const Vector flat = f.flatten();
  Vector out(freePositions.size());
  for (std::size_t i = 0; i < freePositions.size(); ++i) out[i] = flat[freePositions[i]];
  return out;
}

HomSpace homSpace(const Representation& m, const Representation& n) {
  auto hs = buildHomSystem(m, n);
  const Matrix k = hs.system.kernelBasis();
  const std::size_t nv = m.dims().size();
  std::vector<ModuleMap> out;
  out.reserve(k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) b(i, j) = k(hs.offsets[v] + i * m.dim(v) + j, c);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return {std::move(out), hs.system.freeColumns()};
}

std::size_t homDimension(const Representation& m, const Representation& n) {
  auto hs = buildHomSystem(m, n);
  return hs.system.unknowns() - hs.system.rank();
}

SubModule subRepresentation(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& a = m.algebra();
  const std::size_t nv = a->vertexCount();
  std::vector<Matrix> b(nv);
  DimVector dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    b[v] = bases[v].cols() ? columnSpaceBasis(bases[v]) : Matrix(m.dim(v), 0);
    dims[v] = b[v].cols();
  }
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) {
    const auto& pe = a->peirceBasis()[k];
    const std::size_t s = pe.source, t = pe.target;
    if (dims[s] == 0) {
      action.emplace_back(dims[t], 0);
      continue;
    }
    const Matrix img = m.action(k) * b[s];
    if (dims[t] == 0) {
      if (!img.isZero()) throw InvalidModule("subspace is not a submodule");
      action.emplace_back(0, dims[s]);
      continue;
    }
    auto x = exactlin::solve(b[t], img);
    if (!x) throw InvalidModule("subspace is not a submodule");
    action.push_back(std::move(*x));
  }
  auto sub = Representation::fromAction(a, dims, std::move(action), false);
  return {sub, ModuleMap(sub, m, std::move(b))};
}

QuotientModule quotientRepresentation(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& a = m.algebra();
  const std::size_t nv = a->vertexCount();
  std::vector<exactlin::QuotientMap> q;
  DimVector dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    q.push_back(exactlin::quotientBy(bases[v], m.dim(v)));
    dims[v] = q.back().dimension();
  }
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) {
    const auto& pe = a->peirceBasis()[k];
    action.push_back(q[pe.target].project * m.action(k) * q[pe.source].section);
  }
  auto quot = Representation::fromAction(a, dims, std::move(action), false);
  std::vector<Matrix> proj, sec;
  for (auto& qm : q) {
    proj.push_back(qm.project);
    sec.push_back(qm.section);
  }
  return {quot, ModuleMap(m, quot, std::move(proj)), ModuleMap(quot, m, std::move(sec))};
}

SubModule kernel(const ModuleMap& f) {
  std::vector<Matrix> bases;
  for (const auto& b : f.blocks()) bases.push_back(kernelBasis(b));
  return subRepresentation(f.source(), bases);
}

SubModule image(const ModuleMap& f) { return subRepresentation(f.target(), f.blocks()); }

QuotientModule cokernel(const ModuleMap& f) { return quotientRepresentation(f.target(), f.blocks()); }

ModuleMap corestrictToImage(const ModuleMap& f, const SubModule& im) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) {
    const Matrix& b = im.inclusion.block(v);
    if (b.cols() == 0) {
      blocks.emplace_back(0, f.source().dim(v));
      continue;
    }
    auto x = exactlin::solve(b, f.block(v));
    if (!x) throw std::invalid_argument("map does not factor through the given submodule");
    blocks.push_back(std::move(*x));
  }
  return ModuleMap(f.source(), im.module, std::move(blocks));
}

DirectSum directSum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("directSum of no modules");
  const auto& a = parts.front().algebra();
  const std::size_t nv = a->vertexCount();
  DimVector dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(k));
    action.push_back(exactlin::blockDiagonal(blocks));
  }
  auto sum = Representation::fromAction(a, dims, std::move(action), false);
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(dims[v], p.dim(v));
      for (std::size_t r = 0; r < p.dim(v); ++r) i(off[v] + r, r) = Scalar(1);
      proj.push_back(i.transpose());
      inc.push_back(std::move(i));
      off[v] += p.dim(v);
    }
    out.inclusions.emplace_back(p, sum, std::move(inc));
    out.projections.emplace_back(sum, p, std::move(proj));
  }
  return out;
}

Representation directSumModule(const std::vector<Representation>& parts) { return directSum(parts).module; }

DimVector dimensionVector(const Representation& m) { return m.dims(); }

Representation projectiveModule(const AlgebraPtr& a, std::size_t v) {
  const std::size_t nv = a->vertexCount();
  DimVector dims(nv);
  for (std::size_t t = 0; t < nv; ++t) dims[t] = a->peirceIndices(t, v).size();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) {
    const auto& pe = a->peirceBasis()[k];
    const auto& rows = a->peirceIndices(pe.target, v);
    const auto& cols = a->peirceIndices(pe.source, v);
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = a->peirceLeft(k)(rows[r], cols[c]);
    action.push_back(std::move(m));
  }
  return Representation::fromAction(a, dims, std::move(action), false);
}

std::vector<Representation> projectiveModules(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->vertexCount(); ++v) out.push_back(projectiveModule(a, v));
  return out;
}

Representation simpleModule(const AlgebraPtr& a, std::size_t v) { return top(projectiveModule(a, v)).module; }

std::vector<Representation> simpleModules(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->vertexCount(); ++v) out.push_back(simpleModule(a, v));
  return out;
}

Representation injectiveModule(const AlgebraPtr& a, std::size_t v) {
  return dual(projectiveModule(a->opposite(), v));
}

std::vector<Representation> injectiveModules(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->vertexCount(); ++v) out.push_back(injectiveModule(a, v));
  return out;
}

Representation projectiveSum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(a);
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(projectiveModule(a, v));
  return directSumModule(parts);
}

Representation regularModule(const AlgebraPtr& a) {
  std::vector<std::size_t> all(a->vertexCount());
  std::iota(all.begin(), all.end(), 0);
  return projectiveSum(a, all);
}

Representation dual(const Representation& m) {
  const auto& a = m.algebra();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) action.push_back(m.action(k).transpose());
  return Representation::fromAction(a->opposite(), m.dims(), std::move(action), false);
}

ModuleMap dual(const ModuleMap& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
  return ModuleMap(dual(f.target()), dual(f.source()), std::move(blocks));
}

SubModule radical(const Representation& m) {
  const auto& a = *m.algebra();
  const std::size_t nv = a.vertexCount();
  std::vector<Matrix> bases;
  for (std::size_t t = 0; t < nv; ++t) bases.emplace_back(m.dim(t), 0);
  for (const auto& r : a.radicalGenerators()) {
    if (m.dim(r.source) == 0 || m.dim(r.target) == 0) continue;
    bases[r.target] = exactlin::hstack(bases[r.target], homogeneousAction(m, r));
  }
  return subRepresentation(m, bases);
}

SubModule socle(const Representation& m) {
  const auto& a = *m.algebra();
  const std::size_t nv = a.vertexCount();
  std::vector<Matrix> stacked;
  for (std::size_t s = 0; s < nv; ++s) stacked.emplace_back(0, m.dim(s));
  for (const auto& r : a.radicalGenerators()) {
    if (m.dim(r.source) == 0 || m.dim(r.target) == 0) continue;
    stacked[r.source] = exactlin::vstack(stacked[r.source], homogeneousAction(m, r));
  }
  std::vector<Matrix> bases;
  for (std::size_t s = 0; s < nv; ++s) bases.push_back(kernelBasis(stacked[s]));
  return subRepresentation(m, bases);
}

QuotientModule top(const Representation& m) {
  return quotientRepresentation(m, radical(m).inclusion.blocks());
}

SubModule traceSubmodule(const std::vector<Representation>& w, const Representation& x) {
  const std::size_t nv = x.dims().size();
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < nv; ++v) bases.emplace_back(x.dim(v), 0);
  for (const auto& mod : w)
    for (const auto& f : homBasis(mod, x))
      for (std::size_t v = 0; v < nv; ++v)
        if (!f.block(v).isZero()) bases[v] = exactlin::hstack(bases[v], f.block(v));
  return subRepresentation(x, bases);
}

bool isProjective(const Representation& m) {
  const auto t = top(m).module;
  std::size_t coverDim = 0;
  for (std::size_t v = 0; v < t.dims().size(); ++v)
    coverDim += t.dim(v) * projectiveModule(m.algebra(), v).dimension();
  return coverDim == m.dimension();
}

bool isInjective(const Representation& m) { return isProjective(dual(m)); }

bool ShortExactSequence::validate() const {
  if (iota.target().dims() != pi.source().dims()) return false;
  if (!iota.commutes() || !pi.commutes()) return false;
  if (!iota.isInjective() || !pi.isSurjective()) return false;
  if (!pi.after(iota).isZero()) return false;
  return iota.source().dimension() + pi.target().dimension() == iota.target().dimension();
}

}  // namespace tauscope::repmod

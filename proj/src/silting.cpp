#include "tauscope/silting.hpp"

#include <numeric>

namespace tauscope::silting {

using namespace repmod;
using algebra::Algebra;

Vector blockToElement(const Algebra& a, std::size_t row, std::size_t col, const Vector& coords) {
  Vector pc = exactlin::zeroVector(a.dimension());
  const auto& idx = a.peirceIndices(row, col);
  for (std::size_t l = 0; l < idx.size(); ++l) pc[idx[l]] = coords[l];
  return a.fromPeirceCoordinates(pc);
}

Vector elementToBlock(const Algebra& a, std::size_t row, std::size_t col, const Vector& elt) {
  const Vector pc = a.peirceCoordinates(elt);
  const auto& idx = a.peirceIndices(row, col);
  Vector out;
  for (auto i : idx) out.push_back(pc[i]);
  return out;
}

namespace {

// Inverse of u in e_v A e_v, if any.
std::optional<Vector> localInverse(const Algebra& a, std::size_t v, const Vector& u) {
  const auto& idx = a.peirceIndices(v, v);
  std::vector<Vector> cols;
  for (std::size_t m = 0; m < idx.size(); ++m)
    cols.push_back(elementToBlock(a, v, v, a.multiply(u, blockToElement(a, v, v, exactlin::unitVector(idx.size(), m)))));
  auto w = exactlin::solve(Matrix::fromColumns(cols, idx.size()), elementToBlock(a, v, v, a.idempotent(v)));
  if (!w) return std::nullopt;
  return blockToElement(a, v, v, *w);
}

bool isZeroVector(const Vector& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

}  // namespace

TwoTermComplex::TwoTermComplex(ProjectiveMap d) : d_(std::move(d)) {
  coker_ = repmod::cokernel(d_.toModuleMap()).module;
}

TwoTermComplex TwoTermComplex::trivial(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  ProjectiveMap d{a, vertices, {}, std::vector<std::vector<Vector>>(vertices.size())};
  return TwoTermComplex(std::move(d));
}

TwoTermComplex TwoTermComplex::operator+(const TwoTermComplex& o) const {
  const auto& a = *d_.algebra;
  ProjectiveMap d{d_.algebra, d_.sources, d_.targets, {}};
  d.sources.insert(d.sources.end(), o.p1().begin(), o.p1().end());
  d.targets.insert(d.targets.end(), o.p0().begin(), o.p0().end());
  for (std::size_t i = 0; i < d.sources.size(); ++i) {
    std::vector<Vector> row;
    for (std::size_t j = 0; j < d.targets.size(); ++j) {
      const bool mine = i < p1().size(), mineT = j < p0().size();
      if (mine && mineT) {
        row.push_back(d_.entries[i][j]);
      } else if (!mine && !mineT) {
        row.push_back(o.d_.entries[i - p1().size()][j - p0().size()]);
      } else {
        row.push_back(exactlin::zeroVector(a.peirceIndices(d.sources[i], d.targets[j]).size()));
      }
    }
    d.entries.push_back(std::move(row));
  }
  return TwoTermComplex(std::move(d));
}

TwoTermComplex TwoTermComplex::reduced() const {
  const auto& a = *d_.algebra;
  ProjectiveMap d = d_;
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Vector inv;
    for (std::size_t i = 0; i < d.sources.size() && !pivot; ++i)
      for (std::size_t j = 0; j < d.targets.size() && !pivot; ++j) {
        if (d.sources[i] != d.targets[j] || isZeroVector(d.entries[i][j])) continue;
        const std::size_t v = d.sources[i];
        if (auto w = localInverse(a, v, blockToElement(a, v, v, d.entries[i][j]))) {
          pivot = {i, j};
          inv = *w;
        }
      }
    if (!pivot) break;
    const auto [pi, pj] = *pivot;
    ProjectiveMap next{d.algebra, {}, {}, {}};
    for (std::size_t j = 0; j < d.targets.size(); ++j)
      if (j != pj) next.targets.push_back(d.targets[j]);
    for (std::size_t k = 0; k < d.sources.size(); ++k) {
      if (k == pi) continue;
      next.sources.push_back(d.sources[k]);
      const Vector left = a.multiply(blockToElement(a, d.sources[k], d.targets[pj], d.entries[k][pj]), inv);
      std::vector<Vector> row;
      for (std::size_t l = 0; l < d.targets.size(); ++l) {
        if (l == pj) continue;
        const Vector corr = a.multiply(left, blockToElement(a, d.sources[pi], d.targets[l], d.entries[pi][l]));
        row.push_back(d.entries[k][l] - elementToBlock(a, d.sources[k], d.targets[l], corr));
      }
      next.entries.push_back(std::move(row));
    }
    d = std::move(next);
  }
  return TwoTermComplex(std::move(d));
}

Matrix homMatrix(const TwoTermComplex& s, const Representation& x) {
  const auto& d = s.differential();
  const auto& a = *d.algebra;
  std::size_t rows = 0, cols = 0;
  for (auto v : d.sources) rows += x.dim(v);
  for (auto v : d.targets) cols += x.dim(v);
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (std::size_t i = 0; i < d.sources.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < d.targets.size(); ++j) {
      const auto& idx = a.peirceIndices(d.sources[i], d.targets[j]);
      for (std::size_t l = 0; l < idx.size(); ++l)
        if (!d.entries[i][j][l].isZero()) out.addBlock(r, c, x.action(idx[l]), d.entries[i][j][l]);
      c += x.dim(d.targets[j]);
    }
    r += x.dim(d.sources[i]);
  }
  return out;
}

bool dSigmaMembership(const TwoTermComplex& s, const Representation& x) {
  const Matrix h = homMatrix(s, x);
  return exactlin::rank(h) == h.rows();
}

bool xSigmaMembership(const TwoTermComplex& s, const Representation& x) {
  const Matrix h = homMatrix(s, x);
  return h.rows() == h.cols() && exactlin::rank(h) == h.rows();
}

std::vector<std::size_t> supportVertices(const Census& c, const IdSet& t) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < c.algebra()->vertexCount(); ++v) {
    bool zero = true;
    for (auto x : t) zero = zero && c.item(x).dims[v] == 0;
    if (zero) out.push_back(v);
  }
  return out;
}

namespace {

void checkClass(const Census& c, const IdSet& t, const TwoTermComplex& s, bool cone) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (dSigmaMembership(s, c.item(x).module) == (t.count(x) > 0)) continue;
    const std::string msg = "D_sigma disagrees with the torsion class at " + c.item(x).name;
    if (cone) throw ConeCheckFailure(msg);
    throw SiltingCheckFailure(msg);
  }
}

TwoTermComplex minimalPresentation(const Representation& m) {
  if (m.isZero()) return TwoTermComplex(ProjectiveMap{m.algebra(), {}, {}, {}});
  return TwoTermComplex(minimalProjectivePresentation(m).sigma);
}

}  // namespace

TwoTermComplex sigma1FromApproximation(const Census& c, const IdSet& t, const torsion::Approximation& ap,
                                       const std::vector<std::size_t>& support) {
  const auto& aptr = c.algebra();
  const auto& a = *aptr;
  const std::size_t nv = a.vertexCount();
  ProjectiveMap cone{aptr, {}, {}, {}};
  Presentation pres;
  if (!ap.t0.isZero()) {
    pres = minimalProjectivePresentation(ap.t0);
    cone = pres.sigma;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < v; ++i) pos += a.peirceIndices(v, i).size();
    const auto& own = a.peirceIndices(v, v);
    for (std::size_t l = 0; l < own.size(); ++l)
      if (own[l] == a.idempotentPeirceIndex(v)) pos += l;
    std::vector<Vector> row;
    if (!ap.t0.isZero()) {
      const Vector y = ap.phi.block(v).apply(exactlin::unitVector(ap.phi.source().dim(v), pos));
      auto z = exactlin::solve(pres.cover.block(v), y);
      if (!z) throw ConeCheckFailure("approximation does not lift through the projective cover");
      std::size_t off = 0;
      for (auto q : cone.targets) {
        const std::size_t len = a.peirceIndices(v, q).size();
        row.emplace_back(z->begin() + static_cast<std::ptrdiff_t>(off),
                         z->begin() + static_cast<std::ptrdiff_t>(off + len));
        off += len;
      }
    }
    cone.sources.push_back(v);
    cone.entries.push_back(std::move(row));
  }
  TwoTermComplex s = TwoTermComplex(std::move(cone)).reduced();
  if (!support.empty()) s = s + TwoTermComplex::trivial(aptr, support);
  if (s.cokernel().dims() != ap.t1.dims() || !isIsomorphic(s.cokernel(), ap.t1))
    throw ConeCheckFailure("cokernel of the cone differs from T1");
  checkClass(c, t, s, true);
  return s;
}

SiltingData siltingFromTorsionClass(const Census& c, const IdSet& t, const torsion::Approximation& ap) {
  SiltingData d;
  d.torsionClass = t;
  d.basicModule = torsion::extProjectives(ap);
  std::vector<Representation> parts;
  for (auto x : d.basicModule) parts.push_back(c.item(x).module);
  d.module = parts.empty() ? Representation::zero(c.algebra()) : directSumModule(parts);
  d.supportVertices = supportVertices(c, t);
  d.sigmaPrime = minimalPresentation(d.module);
  if (!d.supportVertices.empty()) d.sigmaPrime = d.sigmaPrime + TwoTermComplex::trivial(c.algebra(), d.supportVertices);
  checkClass(c, t, d.sigmaPrime, false);
  d.sigma1 = sigma1FromApproximation(c, t, ap, d.supportVertices);
  return d;
}

SiltingData siltingFromTorsionClass(const Census& c, const IdSet& t) {
  return siltingFromTorsionClass(c, t, torsion::minimalLeftApproximationSequence(c, t));
}

bool isTauRigid(const Representation& m) {
  if (m.isZero()) return true;
  const Representation t = tau(m);
  return t.isZero() || homDimension(m, t) == 0;
}

bool isSupportTauTilting(const SiltingData& d) {
  if (!isTauRigid(d.module)) return false;
  for (auto v : d.supportVertices)
    if (d.module.dim(v) != 0) return false;
  return d.basicModule.size() + d.supportVertices.size() == d.module.algebra()->vertexCount();
}

bool isTilting(const Representation& m) {
  if (m.isZero()) return false;
  const auto summands = decompose(m);
  if (summands.size() != m.algebra()->vertexCount()) return false;
  for (const auto& s : summands) {
    if (isProjective(s.module)) continue;
    if (!minimalProjectivePresentation(s.module).sigma.toModuleMap().isInjective()) return false;
  }
  return ext1Dimension(m, m) == 0;
}

}  // namespace tauscope::silting

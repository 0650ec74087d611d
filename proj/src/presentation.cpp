#include "tauscope/errors.hpp"
#include "tauscope/representation.hpp"

namespace tauscope::repmod {

Representation ProjectiveMap::sourceModule() const { return projectiveSum(algebra, sources); }

Representation ProjectiveMap::targetModule() const { return projectiveSum(algebra, targets); }

ModuleMap ProjectiveMap::toModuleMap() const {
  const auto& a = *algebra;
  const auto src = sourceModule();
  const auto tgt = targetModule();
  const std::size_t nv = a.vertexCount();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < nv; ++t) {
    Matrix b(tgt.dim(t), src.dim(t));
    std::size_t col = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const auto& ys = a.peirceIndices(t, sources[i]);
      for (auto y : ys) {
        const Matrix& left = a.peirceLeft(y);
        std::size_t row = 0;
        for (std::size_t j = 0; j < targets.size(); ++j) {
          const auto& dIdx = a.peirceIndices(sources[i], targets[j]);
          const auto& outIdx = a.peirceIndices(t, targets[j]);
          const Vector& d = entries[i][j];
          for (std::size_t l = 0; l < dIdx.size(); ++l) {
            if (d[l].isZero()) continue;
            for (std::size_t r = 0; r < outIdx.size(); ++r) b(row + r, col) += d[l] * left(outIdx[r], dIdx[l]);
          }
          row += outIdx.size();
        }
        ++col;
      }
    }
    blocks.push_back(std::move(b));
  }
  return ModuleMap(src, tgt, std::move(blocks));
}

ProjectiveMap ProjectiveMap::transpose() const {
  ProjectiveMap t;
  t.algebra = algebra->opposite();
  t.sources = targets;
  t.targets = sources;
  t.entries.assign(targets.size(), std::vector<Vector>(sources.size()));
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j) t.entries[j][i] = entries[i][j];
  return t;
}

ModuleMap mapFromProjectives(const std::vector<std::size_t>& vertices, const std::vector<Vector>& images,
                             const Representation& m) {
  const auto& a = m.algebra();
  const auto p = projectiveSum(a, vertices);
  const std::size_t nv = a->vertexCount();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < nv; ++t) {
    Matrix b(m.dim(t), p.dim(t));
    std::size_t col = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (auto y : a->peirceIndices(t, vertices[i])) {
        const Vector img = m.action(y).apply(images[i]);
        for (std::size_t r = 0; r < img.size(); ++r) b(r, col) = img[r];
        ++col;
      }
    blocks.push_back(std::move(b));
  }
  return ModuleMap(p, m, std::move(blocks));
}

ProjectiveCover projectiveCover(const Representation& m) {
  const auto t = top(m);
  ProjectiveCover pc;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    for (std::size_t c = 0; c < t.module.dim(v); ++c) {
      pc.vertices.push_back(v);
      pc.images.push_back(t.section.block(v).col(c));
    }
  pc.cover = mapFromProjectives(pc.vertices, pc.images, m);
  return pc;
}

Presentation minimalProjectivePresentation(const Representation& m) {
  const auto& a = m.algebra();
  auto p0 = projectiveCover(m);
  auto k = kernel(p0.cover);
  auto p1 = projectiveCover(k.module);
  Presentation pres;
  pres.sigma.algebra = a;
  pres.sigma.sources = p1.vertices;
  pres.sigma.targets = p0.vertices;
  // generator i of P1 goes to the element of P0 it covers
  for (std::size_t i = 0; i < p1.vertices.size(); ++i) {
    const std::size_t u = p1.vertices[i];
    const Vector inP0 = k.inclusion.block(u).apply(p1.images[i]);
    std::vector<Vector> row;
    std::size_t off = 0;
    for (auto v : p0.vertices) {
      const std::size_t len = a->peirceIndices(u, v).size();
      row.emplace_back(inP0.begin() + static_cast<std::ptrdiff_t>(off),
                       inP0.begin() + static_cast<std::ptrdiff_t>(off + len));
      off += len;
    }
    pres.sigma.entries.push_back(std::move(row));
  }
  pres.cover = p0.cover;
  pres.coverImages = p0.images;
  pres.syzygy = k;
  return pres;
}

Representation transpose(const Representation& m) {
  const auto pres = minimalProjectivePresentation(m);
  return cokernel(pres.sigma.transpose().toModuleMap()).module;
}

Representation tau(const Representation& m) { return dual(transpose(m)); }

Representation tauMinus(const Representation& m) { return dual(tau(dual(m))); }

Vector Ext1::coordinates(const ModuleMap& c) const { return classOf.apply(homOmega.coordinates(c)); }

Ext1 ext1(const Representation& m, const Representation& n) {
  Ext1 e;
  e.presentation = minimalProjectivePresentation(m);
  const auto& omega = e.presentation.syzygy;
  e.homOmega = homSpace(omega.module, n);
  const std::size_t h = e.homOmega.basis.size();
  std::vector<Vector> restricted;
  if (h > 0)
    for (const auto& g : homBasis(e.presentation.cover.source(), n))
      restricted.push_back(e.homOmega.coordinates(g.after(omega.inclusion)));
  const Matrix r = restricted.empty() ? Matrix(h, 0) : Matrix::fromColumns(restricted, h);
  const auto q = exactlin::quotientBy(r, h);
  e.dimension = q.dimension();
  e.classOf = q.project;
  for (std::size_t c = 0; c < q.dimension(); ++c)
    e.cocycles.push_back(linearCombination(e.homOmega.basis, q.section.col(c), omega.module, n));
  return e;
}

std::size_t ext1Dimension(const Representation& m, const Representation& n) { return ext1(m, n).dimension; }

ShortExactSequence extensionMiddleTerm(const Ext1& e, const ModuleMap& cocycle) {
  const auto& omega = e.presentation.syzygy;
  const Representation& n = cocycle.target();
  const Representation p0 = e.presentation.cover.source();
  auto s = directSum({n, p0});
  const ModuleMap phi = s.inclusions[0].after(cocycle) - s.inclusions[1].after(omega.inclusion);
  auto q = cokernel(phi);
  ModuleMap iota = q.projection.after(s.inclusions[0]);
  ModuleMap pi = e.presentation.cover.after(s.projections[1]).after(q.section);
  return {iota, pi};
}

}  // namespace tauscope::repmod

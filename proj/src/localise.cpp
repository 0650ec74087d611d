#include "tauscope/localise.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tauscope::localise {

using namespace repmod;

namespace {

Matrix flattenColumns(const std::vector<ModuleMap>& maps, std::size_t rows) {
  std::vector<Vector> cols;
  for (const auto& m : maps) cols.push_back(m.flatten());
  return Matrix::fromColumns(cols, rows);
}

std::size_t flatSize(const Representation& m, const Representation& n) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < m.algebra()->vertexCount(); ++v) s += m.dim(v) * n.dim(v);
  return s;
}

}  // namespace

BlockAlgebra::BlockAlgebra(const std::vector<Representation>& parts, const std::vector<Representation>& kill,
                           const std::vector<std::string>& names)
    : parts_(parts) {
  const std::size_t n = parts.size();
  blocks_.resize(n * n);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Block& bl = blocks_[a * n + b];
      bl.offset = offset;
      const std::size_t rows = flatSize(parts[a], parts[b]);
      std::vector<ModuleMap> ideal;
      for (const auto& y : kill) {
        const auto into = homBasis(parts[a], y);
        if (into.empty()) continue;
        for (const auto& g : homBasis(y, parts[b]))
          for (const auto& f : into) ideal.push_back(g.after(f));
      }
      Matrix span = flattenColumns(ideal, rows);
      std::size_t r = exactlin::rank(span);
      for (const auto& h : homBasis(parts[a], parts[b])) {
        Matrix trial = exactlin::hstack(span, Matrix::fromColumns({h.flatten()}, rows));
        const std::size_t r2 = exactlin::rank(trial);
        if (r2 == r) continue;
        span = std::move(trial);
        r = r2;
        bl.reps.push_back(h);
      }
      bl.solver = exactlin::hstack(flattenColumns(bl.reps, rows), flattenColumns(ideal, rows));
      for (std::size_t k = 0; k < bl.reps.size(); ++k)
        labels.push_back(names[a] + "->" + names[b] + (bl.reps.size() > 1 ? ":" + std::to_string(k + 1) : ""));
      offset += bl.reps.size();
    }
  if (n == 0) return;

  const std::size_t dim = offset;
  std::vector<Matrix> left(dim, Matrix(dim, dim));
  std::vector<Vector> idempotents;
  for (std::size_t a = 0; a < n; ++a) {
    if (block(a, a).reps.empty()) throw InvariantFailure("an endomorphism ring part vanishes in the quotient");
    idempotents.push_back(coordinates(a, a, ModuleMap::identity(parts[a])));
  }
  // b_i . b_j = b_j o b_i in the opposite ring
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Block& bi = block(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const Block& bj = block(b, c);
        for (std::size_t i = 0; i < bi.reps.size(); ++i)
          for (std::size_t j = 0; j < bj.reps.size(); ++j) {
            const Vector prod = coordinates(a, c, bj.reps[j].after(bi.reps[i]));
            for (std::size_t k = 0; k < dim; ++k) left[bi.offset + i](k, bj.offset + j) = prod[k];
          }
      }
    }
  algebra_ = algebra::Algebra::fromStructureConstants(labels, std::move(left), std::move(idempotents), names);
}

Vector BlockAlgebra::coordinates(std::size_t a, std::size_t b, const ModuleMap& h) const {
  std::size_t dim = 0;
  for (const auto& bl : blocks_) dim += bl.reps.size();
  Vector out = exactlin::zeroVector(dim);
  const Block& bl = block(a, b);
  if (bl.solver.rows() == 0) return out;
  auto z = exactlin::solve(bl.solver, h.flatten());
  if (!z) throw InvariantFailure("map outside the expected Hom space");
  for (std::size_t k = 0; k < bl.reps.size(); ++k) out[bl.offset + k] = (*z)[k];
  return out;
}

Reflection reflectionOfRegular(const Census& c, const torsion::Approximation& ap) {
  const Representation a = ap.phi.source();
  if (ap.t0.isZero()) {
    const auto z = Representation::zero(c.algebra());
    return {z, ModuleMap::zero(a, z)};
  }
  std::vector<Representation> t1;
  for (const auto& [id, mult] : ap.t1Ids) t1.push_back(c.item(id).module);
  if (t1.empty()) return {ap.t0, ap.phi};
  const SubModule tr = traceSubmodule(t1, ap.t0);
  const QuotientModule q = quotientRepresentation(ap.t0, tr.inclusion.blocks());
  return {q.module, q.projection.after(ap.phi)};
}

namespace {

// x -> x b on the regular module
ModuleMap rightMultiplication(const Representation& reg, const Vector& b) {
  const auto& a = *reg.algebra();
  const std::size_t nv = a.vertexCount();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < nv; ++t) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < nv; ++i)
      for (auto p : a.peirceIndices(t, i)) {
        const Vector pc = a.peirceCoordinates(a.multiply(a.peirceBasis()[p].element, b));
        Vector col;
        for (std::size_t j = 0; j < nv; ++j)
          for (auto q : a.peirceIndices(t, j)) col.push_back(pc[q]);
        cols.push_back(std::move(col));
      }
    blocks.push_back(Matrix::fromColumns(cols, reg.dim(t)));
  }
  return ModuleMap(reg, reg, std::move(blocks));
}

std::vector<std::size_t> regularFingerprint(const AlgebraPtr& l) {
  std::vector<std::size_t> out;
  if (!l) return out;
  for (const auto& s : decompose(regularModule(l))) out.push_back(s.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

void crossCheck(const AlgebraPtr& viaG, const AlgebraPtr& viaQuotient) {
  if (!viaG || !viaQuotient) {
    if (viaG || viaQuotient) throw CrossCheckFailure("exactly one construction of the ring is zero");
    return;
  }
  if (viaG->dimension() != viaQuotient->dimension())
    throw CrossCheckFailure("ring dimensions differ: " + std::to_string(viaG->dimension()) + " and " +
                            std::to_string(viaQuotient->dimension()));
  if (countSimpleModules(viaG) != countSimpleModules(viaQuotient))
    throw CrossCheckFailure("simple module counts differ");
  if (regularFingerprint(viaG) != regularFingerprint(viaQuotient))
    throw CrossCheckFailure("regular module multiplicities differ");
}

std::vector<std::string> namesOf(const Census& c, const std::vector<Representation>& parts) {
  std::vector<std::string> out;
  std::map<std::string, std::size_t> seen;
  for (const auto& p : parts) {
    const std::string base = c.item(c.identify(p)).name;
    const std::size_t k = ++seen[base];
    out.push_back(k == 1 ? base : base + "'" + std::to_string(k));
  }
  return out;
}

}  // namespace

RingEpimorphismData localisation(const Census& c, const torsion::Approximation& ap,
                                 const silting::SiltingData& sd) {
  const auto& aptr = c.algebra();
  const auto& a = *aptr;
  RingEpimorphismData d;
  d.source = aptr;
  d.sigmaB = sd.sigma1;
  const Reflection refl = reflectionOfRegular(c, ap);
  d.reflection = refl.module;
  d.eta = refl.eta;

  if (!ap.t0.isZero()) {
    std::vector<Representation> parts, kill;
    for (const auto& [id, mult] : ap.t0Ids)
      for (std::size_t k = 0; k < mult; ++k) parts.push_back(c.item(id).module);
    for (const auto& [id, mult] : ap.t1Ids) kill.push_back(c.item(id).module);
    d.lambdaQuotient = BlockAlgebra(parts, kill, namesOf(c, parts)).algebra();
  }

  const Representation& g = refl.module;
  if (g.isZero()) {
    d.ringMap = Matrix(0, a.dimension());
    for (std::size_t k = 0; k < a.dimension(); ++k) d.kernelBasis.push_back(a.basisVector(k));
    crossCheck(d.lambda, d.lambdaQuotient);
    return d;
  }

  const auto pieces = decomposeWithMaps(g);
  std::vector<Representation> parts;
  for (const auto& p : pieces) parts.push_back(p.module);
  const BlockAlgebra lam(parts, {}, namesOf(c, parts));
  d.lambda = lam.algebra();
  crossCheck(d.lambda, d.lambdaQuotient);

  const auto hgg = homBasis(g, g);
  std::vector<Vector> hCoords;
  for (const auto& h : hgg) {
    Vector v = exactlin::zeroVector(d.lambda->dimension());
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = 0; j < pieces.size(); ++j)
        v = v + lam.coordinates(i, j, pieces[j].projection.after(h).after(pieces[i].inclusion));
    hCoords.push_back(std::move(v));
  }
  std::vector<ModuleMap> throughEta;
  for (const auto& h : hgg) throughEta.push_back(h.after(refl.eta));
  const std::size_t flat = flatSize(refl.eta.source(), g);
  const Matrix h = flattenColumns(throughEta, flat);
  if (exactlin::rank(h) != hgg.size()) throw ReflectionNotUnique("endomorphisms of G are not determined on eta");

  const Representation reg = refl.eta.source();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const ModuleMap target = refl.eta.after(rightMultiplication(reg, a.basisVector(k)));
    auto coeff = exactlin::solve(h, target.flatten());
    if (!coeff) throw InvariantFailure("right multiplication does not factor through the reflection");
    Vector v = exactlin::zeroVector(d.lambda->dimension());
    for (std::size_t m = 0; m < hgg.size(); ++m)
      if (!(*coeff)[m].isZero()) v = v + (*coeff)[m] * hCoords[m];
    cols.push_back(std::move(v));
  }
  d.ringMap = Matrix::fromColumns(cols, d.lambda->dimension());

  const auto& lambda = *d.lambda;
  if (d.ringMap.apply(a.unit()) != lambda.unit()) throw InvariantFailure("ring map is not unital");
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      if (d.ringMap.apply(a.multiply(a.basisVector(i), a.basisVector(j))) != lambda.multiply(cols[i], cols[j]))
        throw InvariantFailure("ring map is not multiplicative");

  const Matrix ker = exactlin::kernelBasis(d.ringMap);
  for (std::size_t k = 0; k < ker.cols(); ++k) d.kernelBasis.push_back(ker.col(k));
  if (!d.kernelBasis.empty() && exactlin::rank(algebra::twoSidedIdeal(a, d.kernelBasis)) != d.kernelBasis.size())
    throw InvariantFailure("kernel of the ring map is not an ideal");
  return d;
}

RingEpimorphismData localisation(const Census& c, const IdSet& t) {
  const auto ap = torsion::minimalLeftApproximationSequence(c, t);
  return localisation(c, ap, silting::siltingFromTorsionClass(c, t, ap));
}

AlgebraPtr localisedRing(const Census& c, const IdSet& t) { return localisation(c, t).lambdaQuotient; }

bool selfOrthogonality(const TwoTermComplex& s) {
  using silting::blockToElement;
  using silting::elementToBlock;
  const auto& d = s.differential();
  const auto& a = *d.algebra;
  const auto& p1 = d.sources;
  const auto& p0 = d.targets;
  // Hom(P1, P0) coordinates: blocks (i, j) in row-major order
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = 0; j < p0.size(); ++j) {
      off.push_back(total);
      total += a.peirceIndices(p1[i], p0[j]).size();
    }
  if (total == 0) return true;
  auto elementAt = [&](std::size_t i, std::size_t j) { return blockToElement(a, p1[i], p0[j], d.entries[i][j]); };
  std::vector<Vector> cols;
  // sigma after s: s has a single entry p in e_{p1[i]} A e_{p1[k]}
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t k = 0; k < p1.size(); ++k)
      for (auto p : a.peirceIndices(p1[i], p1[k])) {
        Vector v = exactlin::zeroVector(total);
        for (std::size_t j = 0; j < p0.size(); ++j) {
          const Vector e = elementToBlock(a, p1[i], p0[j], a.multiply(a.peirceBasis()[p].element, elementAt(k, j)));
          for (std::size_t l = 0; l < e.size(); ++l) v[off[i * p0.size() + j] + l] = e[l];
        }
        cols.push_back(std::move(v));
      }
  // u after sigma: u has a single entry q in e_{p0[j]} A e_{p0[l]}
  for (std::size_t j = 0; j < p0.size(); ++j)
    for (std::size_t l = 0; l < p0.size(); ++l)
      for (auto q : a.peirceIndices(p0[j], p0[l])) {
        Vector v = exactlin::zeroVector(total);
        for (std::size_t i = 0; i < p1.size(); ++i) {
          const Vector e = elementToBlock(a, p1[i], p0[l], a.multiply(elementAt(i, j), a.peirceBasis()[q].element));
          for (std::size_t m = 0; m < e.size(); ++m) v[off[i * p0.size() + l] + m] = e[m];
        }
        cols.push_back(std::move(v));
      }
  return exactlin::rank(Matrix::fromColumns(cols, total)) == total;
}

bool inEssentialImage(const RingEpimorphismData& d, const Representation& x) {
  if (d.reflection.isZero()) return x.isZero();
  const auto hb = homBasis(d.reflection, x);
  if (hb.size() != x.dimension()) return false;
  std::vector<ModuleMap> comp;
  for (const auto& h : hb) comp.push_back(h.after(d.eta));
  return exactlin::rank(flattenColumns(comp, flatSize(d.eta.source(), x))) == hb.size();
}

Representation restrictLeft(const AlgebraPtr& aptr, const AlgebraPtr& lptr, const Matrix& f) {
  const auto& a = *aptr;
  const auto& l = *lptr;
  const std::size_t nv = a.vertexCount();
  std::vector<Matrix> bases;
  DimVector dims;
  for (std::size_t v = 0; v < nv; ++v) {
    bases.push_back(exactlin::columnSpaceBasis(l.leftMultiplication(f.apply(a.idempotent(v)))));
    dims.push_back(bases.back().cols());
  }
  std::vector<Matrix> action;
  for (const auto& pe : a.peirceBasis()) {
    if (dims[pe.target] == 0 || dims[pe.source] == 0) {
      action.emplace_back(dims[pe.target], dims[pe.source]);
      continue;
    }
    auto z = exactlin::solve(bases[pe.target], l.leftMultiplication(f.apply(pe.element)) * bases[pe.source]);
    if (!z) throw InvariantFailure("ring map does not respect the vertex decomposition");
    action.push_back(std::move(*z));
  }
  return Representation::fromAction(aptr, dims, std::move(action), true);
}

namespace {

// Relations r.a (x) m - r (x) a.m spanning the kernel of Lambda (x)_K X -> Lambda (x)_A X.
Matrix tensorRelations(const algebra::Algebra& a, const algebra::Algebra& l, const Matrix& f, const Representation& x) {
  const Matrix idL = Matrix::identity(l.dimension());
  const Matrix idX = Matrix::identity(x.dimension());
  Matrix rel(l.dimension() * x.dimension(), 0);
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const Matrix r = l.rightMultiplication(f.apply(a.basisVector(k)));
    rel = exactlin::hstack(rel, exactlin::kron(r, idX) - exactlin::kron(idL, x.act(a.basisVector(k))));
  }
  return rel;
}

}  // namespace

std::size_t tor1(const AlgebraPtr& aptr, const AlgebraPtr& lptr, const Matrix& f) {
  if (!lptr) return 0;
  const Representation m = restrictLeft(aptr, lptr, f);
  if (m.isZero()) return 0;
  const Presentation pres = minimalProjectivePresentation(m);
  const Representation& omega = pres.syzygy.module;
  if (omega.isZero()) return 0;
  const Representation p0 = pres.cover.source();
  const Matrix r1 = tensorRelations(*aptr, *lptr, f, omega);
  const Matrix r0 = tensorRelations(*aptr, *lptr, f, p0);
  const Matrix f1 = exactlin::kron(Matrix::identity(lptr->dimension()), pres.syzygy.inclusion.total());
  const std::size_t rank0 = exactlin::rank(r0);
  const std::size_t preimage = r1.rows() - (exactlin::rank(exactlin::hstack(r0, f1)) - rank0);
  return preimage - exactlin::rank(r1);
}

std::size_t tor1(const RingEpimorphismData& d) { return tor1(d.source, d.lambda, d.ringMap); }

bool LocalisationReport::countsAgree() const {
  return wideSubcategories == torsionClasses && siltingModules == torsionClasses &&
         ringEpimorphisms == torsionClasses && universalLocalisations == torsionClasses;
}

ClassRecord classify(const Census& c, const IdSet& t) {
  ClassRecord r;
  r.torsionClass = t;
  const auto ap = torsion::minimalLeftApproximationSequence(c, t);
  r.wide = torsion::alpha(c, t, ap);
  r.silting = silting::siltingFromTorsionClass(c, t, ap);
  r.ring = localisation(c, ap, r.silting);
  r.simpleCount = r.ring.lambda ? countSimpleModules(r.ring.lambda) : 0;
  r.kernelDimension = r.ring.kernelBasis.size();
  r.tor1 = tor1(r.ring);
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (inEssentialImage(r.ring, c.item(x).module)) r.essentialImage.insert(x);
    if (silting::xSigmaMembership(r.ring.sigmaB, c.item(x).module)) r.xSigma.insert(x);
  }
  return r;
}

namespace {

std::string classLabel(const Census& c, const IdSet& t) {
  std::string out = "{";
  for (auto x : t) out += (out.size() > 1 ? "," : "") + c.item(x).name;
  return out + "}";
}

}  // namespace

LocalisationReport classifyAll(const Census& c) {
  LocalisationReport rep;
  std::set<IdSet> wides, siltings, images, xs;
  for (const auto& t : torsion::enumerateTorsionClasses(c)) {
    ClassRecord r;
    try {
      r = classify(c, t);
    } catch (const Error& e) {
      throw InvariantFailure("class " + classLabel(c, t) + ": " + e.what());
    }
    if (r.essentialImage != r.wide || r.xSigma != r.wide)
      throw InvariantFailure("class " + classLabel(c, t) + ": localisation does not recover alpha(T)");
    wides.insert(r.wide);
    siltings.insert(r.silting.basicModule);
    images.insert(r.essentialImage);
    xs.insert(r.xSigma);
    rep.records.push_back(std::move(r));
  }
  rep.torsionClasses = rep.records.size();
  rep.wideSubcategories = wides.size();
  rep.siltingModules = siltings.size();
  rep.ringEpimorphisms = images.size();
  rep.universalLocalisations = xs.size();
  if (!rep.countsAgree()) throw InvariantFailure("the five classification counts differ");
  return rep;
}

}  // namespace tauscope::localise

#include "tauscope/torsion.hpp"

#include <numeric>

namespace tauscope::torsion {

using namespace repmod;

namespace {

std::vector<Representation> modules(const Census& c, const IdSet& s) {
  std::vector<Representation> out;
  for (auto id : s) out.push_back(c.item(id).module);
  return out;
}

IdSet idsOf(const IdMultiset& m) {
  IdSet out;
  for (const auto& [id, mult] : m) out.insert(id);
  return out;
}

}  // namespace

bool genMembership(const Census& c, std::size_t x, const IdSet& s) {
  if (s.count(x)) return true;
  bool any = false;
  for (auto id : s) any = any || c.homDimension(id, x) > 0;
  if (!any) return false;
  return traceSubmodule(modules(c, s), c.item(x).module).module.dims() == c.item(x).dims;
}

ClosureTest closureTest(const Census& c, const Representation& x, const IdSet& w) {
  ClosureTest out;
  if (x.isZero()) {
    out.member = true;
    return out;
  }
  if (w.empty()) return out;
  const auto ws = modules(c, w);
  Representation cur = x;
  while (!cur.isZero()) {
    const SubModule tr = traceSubmodule(ws, cur);
    if (tr.module.isZero()) return out;
    ++out.iterations;
    if (tr.module.dims() == cur.dims()) break;
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < cur.algebra()->vertexCount(); ++v) bases.push_back(tr.inclusion.block(v));
    cur = quotientRepresentation(cur, bases).module;
  }
  out.member = true;
  return out;
}

bool torsionClosureMembership(const Census& c, std::size_t x, const IdSet& w) {
  if (w.count(x)) return true;
  bool any = false;
  for (auto id : w) any = any || c.homDimension(id, x) > 0;
  if (!any) return false;
  return closureTest(c, c.item(x).module, w).member;
}

IdSet torsionClosure(const Census& c, const IdSet& s) {
  IdSet out;
  for (std::size_t x = 0; x < c.size(); ++x)
    if (torsionClosureMembership(c, x, s)) out.insert(x);
  return out;
}

std::vector<IdSet> enumerateTorsionClasses(const Census& c) {
  const std::size_t n = c.size();
  std::vector<IdSet> out;
  IdSet a = torsionClosure(c, {});
  out.push_back(a);
  while (true) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.count(i)) continue;
      IdSet seed(a.begin(), a.lower_bound(i));
      seed.insert(i);
      IdSet b = torsionClosure(c, seed);
      if (IdSet(b.begin(), b.lower_bound(i)) == IdSet(a.begin(), a.lower_bound(i))) {
        a = std::move(b);
        out.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

namespace {

struct Piece {
  std::size_t id;
  Vector element;  // in X_v
};

bool approximates(const Census& c, const IdSet& t, std::size_t v, const std::vector<Piece>& pieces) {
  for (auto y : t) {
    const std::size_t d = c.item(y).dims[v];
    if (d == 0) continue;
    std::vector<Vector> cols;
    for (const auto& p : pieces)
      for (const auto& h : c.homBasis(p.id, y)) cols.push_back(h.block(v).apply(p.element));
    if (cols.size() < d || exactlin::rank(Matrix::fromColumns(cols, d)) < d) return false;
  }
  return true;
}

}  // namespace

Approximation minimalLeftApproximationSequence(const Census& c, const IdSet& t) {
  const auto& a = c.algebra();
  const std::size_t nv = a->vertexCount();
  std::vector<std::vector<Piece>> perVertex(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto& pieces = perVertex[v];
    for (auto x : t)
      for (std::size_t k = 0; k < c.item(x).dims[v]; ++k)
        pieces.push_back({x, exactlin::unitVector(c.item(x).dims[v], k)});
    for (std::size_t i = pieces.size(); i-- > 0;) {
      auto trial = pieces;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (approximates(c, t, v, trial)) pieces = std::move(trial);
    }
  }

  std::vector<Representation> parts;
  std::map<std::size_t, std::size_t> counts;
  for (const auto& pieces : perVertex)
    for (const auto& p : pieces) {
      parts.push_back(c.item(p.id).module);
      ++counts[p.id];
    }
  Approximation ap;
  ap.t0 = parts.empty() ? Representation::zero(a) : directSumModule(parts);
  ap.t0Ids.assign(counts.begin(), counts.end());

  std::vector<std::size_t> vertices(nv);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<Vector> images;
  std::vector<std::size_t> offset(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    Vector img = exactlin::zeroVector(ap.t0.dim(v));
    for (const auto& p : perVertex[v]) {
      for (std::size_t k = 0; k < p.element.size(); ++k) img[offset[v] + k] = p.element[k];
      for (std::size_t w = 0; w < nv; ++w) offset[w] += c.item(p.id).dims[w];
    }
    images.push_back(std::move(img));
  }
  ap.phi = mapFromProjectives(vertices, images, ap.t0);
  ap.t1 = cokernel(ap.phi).module;
  if (!ap.t1.isZero()) ap.t1Ids = c.decomposeIntoIds(ap.t1);
  return ap;
}

IdSet splitProjectives(const Approximation& ap) { return idsOf(ap.t0Ids); }

IdSet extProjectives(const Approximation& ap) {
  IdSet out = idsOf(ap.t0Ids);
  for (const auto& [id, mult] : ap.t1Ids) out.insert(id);
  return out;
}

IdSet alpha(const Census& c, const IdSet& t, const Approximation& ap) {
  IdSet out;
  for (auto x : t) {
    bool orth = true;
    for (const auto& [id, mult] : ap.t1Ids) orth = orth && c.homDimension(id, x) == 0;
    if (orth) out.insert(x);
  }
  return out;
}

IdSet alpha(const Census& c, const IdSet& t) { return alpha(c, t, minimalLeftApproximationSequence(c, t)); }

IdSet wideToTorsion(const Census& c, const IdSet& w) {
  IdSet t = torsionClosure(c, w);
  if (alpha(c, t) != w) throw RoundtripFailure("alpha(T(W)) differs from W");
  return t;
}

std::vector<IdSet> enumerateWideSubcategories(const Census& c) {
  std::vector<IdSet> out;
  for (const auto& t : enumerateTorsionClasses(c)) out.push_back(alpha(c, t));
  return out;
}

std::optional<std::size_t> filtrationLength(const Census& c, std::size_t x, const IdSet& w) {
  const auto r = closureTest(c, c.item(x).module, w);
  if (!r.member) return std::nullopt;
  return r.iterations;
}

}  // namespace tauscope::torsion

#include "tauscope/census.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tauscope::census {

using namespace repmod;

Census::Census(AlgebraPtr a, std::vector<Item> items, Caps caps)
    : algebra_(std::move(a)), items_(std::move(items)), caps_(caps) {}

std::optional<std::size_t> Census::findByName(const std::string& name) const {
  for (const auto& it : items_)
    if (it.name == name) return it.id;
  return std::nullopt;
}

std::size_t Census::identify(const Representation& m) const {
  if (m.algebra() != algebra_) throw std::invalid_argument("module over a different algebra");
  for (const auto& it : items_)
    if (it.dims == m.dims() && isIsomorphic(it.module, m)) return it.id;
  throw NotInCensus("no census item with dimension vector " + dimVectorString(m.dims()));
}

IdMultiset Census::decomposeIntoIds(const Representation& m) const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& s : decompose(m)) counts[identify(s.module)] += s.multiplicity;
  return {counts.begin(), counts.end()};
}

std::size_t Census::homDimension(std::size_t from, std::size_t to) const {
  auto key = std::make_pair(from, to);
  auto it = hom_.find(key);
  if (it != hom_.end()) return it->second;
  const std::size_t d = repmod::homDimension(items_.at(from).module, items_.at(to).module);
  hom_[key] = d;
  return d;
}

const std::vector<ModuleMap>& Census::homBasis(std::size_t from, std::size_t to) const {
  auto key = std::make_pair(from, to);
  auto it = homBases_.find(key);
  if (it != homBases_.end()) return it->second;
  auto basis = repmod::homBasis(items_.at(from).module, items_.at(to).module);
  hom_[key] = basis.size();
  return homBases_.emplace(key, std::move(basis)).first->second;
}

std::size_t Census::ext1Dimension(std::size_t from, std::size_t to) const {
  auto key = std::make_pair(from, to);
  auto it = ext_.find(key);
  if (it != ext_.end()) return it->second;
  const std::size_t d = repmod::ext1Dimension(items_.at(from).module, items_.at(to).module);
  ext_[key] = d;
  return d;
}

ARSequence almostSplitSequence(const Representation& x) {
  if (isProjective(x)) throw IsProjective("no almost split sequence ends in a projective module");
  const Representation t = tau(x);
  const Ext1 e = ext1(x, t);
  if (e.dimension == 0) throw InvariantFailure("Ext^1(X, tau X) vanishes for non-projective X");
  const auto& pres = e.presentation;
  const auto& syz = pres.syzygy;
  const Representation p0 = pres.cover.source();
  const auto& vertices = pres.sigma.targets;

  // xi . r = class(c o r') where r' is a lift of r restricted to the syzygy
  Matrix stacked(0, e.dimension);
  for (const auto& r : endomorphismRadical(x)) {
    std::vector<Vector> lifts;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::size_t v = vertices[i];
      auto lift = exactlin::solve(pres.cover.block(v), r.block(v).apply(pres.coverImages[i]));
      lifts.push_back(*lift);
    }
    const ModuleMap r0 = mapFromProjectives(vertices, lifts, p0);
    const ModuleMap restricted = corestrictToImage(r0.after(syz.inclusion), syz);
    std::vector<Vector> cols;
    for (const auto& c : e.cocycles) cols.push_back(e.coordinates(c.after(restricted)));
    stacked = exactlin::vstack(stacked, Matrix::fromColumns(cols, e.dimension));
  }
  const Matrix socle = exactlin::kernelBasis(stacked);
  if (socle.cols() == 0) throw InvariantFailure("Ext^1(X, tau X) has zero socle");
  const ModuleMap cocycle = linearCombination(e.cocycles, socle.col(0), syz.module, t);
  ARSequence ar;
  ar.left = t;
  ar.right = x;
  ar.sequence = extensionMiddleTerm(e, cocycle);
  ar.middle = ar.sequence.iota.target();
  ar.middleSummands = decompose(ar.middle);
  return ar;
}

namespace {

struct Found {
  Representation module;
  bool projective = false;
  bool injective = false;
};

class Knitter {
 public:
  Knitter(AlgebraPtr a, Caps caps) : a_(std::move(a)), caps_(caps) {}

  void run() {
    for (std::size_t v = 0; v < a_->vertexCount(); ++v) addSummands(projectiveModule(a_, v));
    for (std::size_t v = 0; v < a_->vertexCount(); ++v) addSummands(injectiveModule(a_, v));
    for (std::size_t i = 0; i < found_.size() && !capHit(); ++i) process(i);
  }

  bool capHit() const { return !capMessage_.empty(); }
  const std::string& capMessage() const { return capMessage_; }
  const std::vector<Found>& found() const { return found_; }

 private:
  void flag(const std::string& msg) {
    if (capMessage_.empty()) capMessage_ = msg;
  }

  void add(const Representation& m) {
    if (m.isZero()) return;
    if (m.dimension() > caps_.dimCap) {
      flag("dimCap " + std::to_string(caps_.dimCap) + " exceeded by a module of dimension vector " +
           dimVectorString(m.dims()));
      return;
    }
    for (const auto& f : found_)
      if (f.module.dims() == m.dims() && isIsomorphic(f.module, m)) return;
    if (found_.size() >= caps_.countCap) {
      flag("countCap " + std::to_string(caps_.countCap) + " reached");
      return;
    }
    found_.push_back({m, isProjective(m), isInjective(m)});
  }

  void addSummands(const Representation& m) {
    if (m.isZero()) return;
    for (const auto& s : decompose(m)) add(s.module);
  }

  void process(std::size_t i) {
    const Found f = found_[i];
    const Representation& x = f.module;
    if (f.projective) addSummands(radical(x).module);
    if (!f.injective) add(tauMinus(x));
    if (!f.projective) {
      add(tau(x));
      for (const auto& s : almostSplitSequence(x).middleSummands) add(s.module);
    }
    if (f.injective) addSummands(cokernel(socle(x).inclusion).module);
  }

  AlgebraPtr a_;
  Caps caps_;
  std::vector<Found> found_;
  std::string capMessage_;
};

std::string vertexName(const AlgebraPtr& a, const DimVector& d) {
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v]) return a->vertexNames()[v];
  return "?";
}

std::vector<Item> finaliseItems(const AlgebraPtr& a, const std::vector<Found>& found) {
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return found[x].module.dims() < found[y].module.dims(); });
  std::vector<Item> items;
  std::size_t other = 0;
  for (auto idx : order) {
    const auto& f = found[idx];
    Item it;
    it.id = items.size();
    it.module = f.module;
    it.dims = f.module.dims();
    it.projective = f.projective;
    it.injective = f.injective;
    if (f.projective) {
      it.name = "P" + vertexName(a, top(f.module).module.dims());
    } else if (radical(f.module).module.isZero()) {
      it.name = "S" + vertexName(a, it.dims);
    } else if (f.injective) {
      it.name = "I" + vertexName(a, socle(f.module).module.dims());
    } else {
      it.name = "M" + std::to_string(++other);
    }
    items.push_back(std::move(it));
  }
  return items;
}

}  // namespace

Census enumerateIndecomposables(const AlgebraPtr& a, Caps caps) {
  if (caps.dimCap < 1 || caps.countCap < 1) throw std::invalid_argument("census caps must be at least 1");
  Knitter k(a, caps);
  k.run();
  auto items = finaliseItems(a, k.found());
  if (k.capHit()) throw RepInfiniteAtCap(k.capMessage(), std::move(items));
  return Census(a, std::move(items), caps);
}

}  // namespace tauscope::census

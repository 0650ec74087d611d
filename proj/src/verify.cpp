#include "tauscope/verify.hpp"

#include <map>
#include <random>
#include <set>

namespace tauscope::verify {

using namespace repmod;
using census::Census;
using torsion::IdSet;

std::size_t Report::failureCount() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures.size();
  return n;
}

namespace {

class Suite {
 public:
  Suite(const Census& c, std::uint64_t seed) : c_(c), rng_(seed) {}

  void expect(const std::string& check, bool ok, const std::string& where) {
    auto& r = result(check);
    if (ok) {
      ++r.passed;
    } else {
      r.failures.push_back(where);
    }
  }

  void run() {
    std::vector<localise::ClassRecord> records;
    for (const auto& t : torsion::enumerateTorsionClasses(c_)) {
      const std::string where = label(t);
      localise::ClassRecord r;
      try {
        r = localise::classify(c_, t);
      } catch (const Error& e) {
        expect("pipeline", false, where + ": " + e.what());
        continue;
      }
      expect("pipeline", true, where);
      checkClass(r, where);
      records.push_back(std::move(r));
    }
    std::set<IdSet> silting, images;
    for (const auto& r : records) {
      expect("distinct silting modules", silting.insert(r.silting.basicModule).second, label(r.torsionClass));
      expect("distinct localisations", images.insert(r.xSigma).second, label(r.torsionClass));
    }
    for (const auto& it : c_.items()) {
      if (it.projective) continue;
      bool ok = false;
      try {
        ok = census::almostSplitSequence(it.module).sequence.validate();
      } catch (const Error&) {
      }
      expect("almost split sequences", ok, it.name);
    }
  }

  Report report() && {
    Report out;
    for (auto& name : order_) out.checks.push_back(std::move(results_[name]));
    return out;
  }

 private:
  CheckResult& result(const std::string& name) {
    auto it = results_.find(name);
    if (it == results_.end()) {
      order_.push_back(name);
      it = results_.emplace(name, CheckResult{name, 0, {}}).first;
    }
    return it->second;
  }

  std::string label(const IdSet& t) const {
    std::string out = "{";
    for (auto x : t) out += (out.size() > 1 ? "," : "") + c_.item(x).name;
    return out + "}";
  }

  bool inside(const Representation& m, const IdSet& s) {
    if (m.isZero()) return true;
    for (const auto& [id, mult] : c_.decomposeIntoIds(m))
      if (!s.count(id)) return false;
    return true;
  }

  ModuleMap randomMap(const std::vector<ModuleMap>& basis, const Representation& from, const Representation& to) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vector v;
    for (std::size_t k = 0; k < basis.size(); ++k) v.push_back(exactlin::Scalar(coeff(rng_)));
    return linearCombination(basis, v, from, to);
  }

  void checkClass(const localise::ClassRecord& r, const std::string& where) {
    const IdSet& t = r.torsionClass;
    const IdSet& w = r.wide;
    expect("torsionClosure(alpha(T)) = T", torsion::torsionClosure(c_, w) == t, where);
    expect("alpha(torsionClosure(W)) = W", torsion::alpha(c_, torsion::torsionClosure(c_, w)) == w, where);
    bool dPrime = true, d1 = true;
    for (std::size_t x = 0; x < c_.size(); ++x) {
      const bool member = t.count(x) > 0;
      dPrime = dPrime && silting::dSigmaMembership(r.silting.sigmaPrime, c_.item(x).module) == member;
      d1 = d1 && silting::dSigmaMembership(r.silting.sigma1, c_.item(x).module) == member;
    }
    expect("D_sigma' = T", dPrime, where);
    expect("D_sigma1 = T", d1, where);
    expect("support tau-tilting", silting::isSupportTauTilting(r.silting), where);
    expect("sigma_B self-orthogonal", localise::selfOrthogonality(r.ring.sigmaB), where);
    expect("X_sigma_B = alpha(T)", r.xSigma == w, where);
    expect("essential image = alpha(T)", r.essentialImage == w, where);
    const auto ap = torsion::minimalLeftApproximationSequence(c_, t);
    expect("simple count = split projectives", r.simpleCount == torsion::splitProjectives(ap).size(), where);
    expect("Tor_1 = 0", r.tor1 == 0, where);
    if (r.ring.lambda && r.ring.lambdaQuotient)
      expect("ring dimension = dim End(G)",
             r.ring.lambda->dimension() == homDimension(r.ring.reflection, r.ring.reflection), where);
    sampleClosure(t, w, where);
  }

  // Sampled quotient and extension closure of T, and kernel/cokernel closure of alpha(T).
  void sampleClosure(const IdSet& t, const IdSet& w, const std::string& where) {
    const std::vector<std::size_t> tv(t.begin(), t.end()), wv(w.begin(), w.end());
    if (tv.empty()) return;
    std::uniform_int_distribution<std::size_t> pickT(0, tv.size() - 1);
    for (int s = 0; s < 4; ++s) {
      const auto x = tv[pickT(rng_)], y = tv[pickT(rng_)];
      const auto& hb = c_.homBasis(x, y);
      if (!hb.empty()) {
        const auto h = randomMap(hb, c_.item(x).module, c_.item(y).module);
        expect("T closed under quotients", inside(cokernel(h).module, t) && inside(image(h).module, t), where);
      }
      if (c_.ext1Dimension(x, y) > 0) {
        const auto e = ext1(c_.item(x).module, c_.item(y).module);
        const auto cocycle = randomMap(e.cocycles, e.presentation.syzygy.module, c_.item(y).module);
        expect("T closed under extensions", inside(extensionMiddleTerm(e, cocycle).iota.target(), t), where);
      }
    }
    if (wv.empty()) return;
    std::uniform_int_distribution<std::size_t> pickW(0, wv.size() - 1);
    for (int s = 0; s < 4; ++s) {
      const auto x = wv[pickW(rng_)], y = wv[pickW(rng_)];
      const auto& hb = c_.homBasis(x, y);
      if (hb.empty()) continue;
      const auto h = randomMap(hb, c_.item(x).module, c_.item(y).module);
      expect("alpha(T) closed under kernels and cokernels",
             inside(kernel(h).module, w) && inside(cokernel(h).module, w), where);
    }
  }

  const Census& c_;
  std::mt19937_64 rng_;
  std::map<std::string, CheckResult> results_;
  std::vector<std::string> order_;
};

}  // namespace

Report runInvariantSuite(const Census& c, std::uint64_t seed) {
  Suite s(c, seed);
  s.run();
  return std::move(s).report();
}

}  // namespace tauscope::verify

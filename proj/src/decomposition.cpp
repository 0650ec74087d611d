#include <random>

#include "tauscope/errors.hpp"
#include "tauscope/polynomial.hpp"
#include "tauscope/representation.hpp"

namespace tauscope::repmod {

namespace {

constexpr std::uint32_t kSearchSeed = 0x5eed;
constexpr int kRandomAttempts = 24;

Matrix traceGram(const std::vector<ModuleMap>& e) {
  const std::size_t m = e.size();
  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Scalar t;
      for (std::size_t v = 0; v < e[i].blocks().size(); ++v) {
        const Matrix& a = e[i].block(v);
        const Matrix& b = e[j].block(v);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).isZero() && !b(c, r).isZero()) t += a(r, c) * b(c, r);
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return gram;
}

// Equals dim End/rad End in characteristic 0.
std::size_t semisimpleDimension(const std::vector<ModuleMap>& e) { return exactlin::rank(traceGram(e)); }

// Candidate endomorphisms in search order: basis, pairwise sums, then
// fixed-seed random combinations.
class CandidateSweep {
 public:
  explicit CandidateSweep(std::size_t n) : n_(n), rng_(kSearchSeed) {}

  std::optional<Vector> next() {
    Vector c = exactlin::zeroVector(n_);
    if (i_ < n_) {
      c[i_++] = Scalar(1);
      return c;
    }
    while (p_ < n_) {
      if (q_ >= n_) {
        ++p_;
        q_ = p_ + 1;
        continue;
      }
      c[p_] = Scalar(1);
      c[q_++] = Scalar(1);
      return c;
    }
    if (random_++ >= kRandomAttempts) return std::nullopt;
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (auto& x : c) x = Scalar(coeff(rng_));
    return c;
  }

 private:
  std::size_t n_, i_ = 0, p_ = 0, q_ = 1;
  int random_ = 0;
  std::mt19937 rng_;
};

exactlin::Polynomial blockMinimalPolynomial(const ModuleMap& f) {
  exactlin::Polynomial mu({Scalar(1)});
  for (const auto& b : f.blocks())
    if (b.rows() > 0) mu = exactlin::lcm(mu, exactlin::minimalPolynomial(b));
  return mu;
}

void split(const Representation& x, const ModuleMap& inc, const ModuleMap& proj, std::vector<Piece>& out) {
  const auto e = homBasis(x, x);
  if (e.size() == 1) {
    out.push_back({x, inc, proj});
    return;
  }
  const bool charZero = !exactlin::FieldMode::isPrime();
  if (charZero && semisimpleDimension(e) == 1) {
    out.push_back({x, inc, proj});
    return;
  }
  CandidateSweep sweep(e.size());
  while (auto c = sweep.next()) {
    const ModuleMap f = linearCombination(e, *c, x, x);
    const auto factors = exactlin::coprimeFactors(blockMinimalPolynomial(f));
    if (factors.size() < 2) continue;
    const std::size_t nv = x.dims().size();
    std::vector<std::vector<Matrix>> bases(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t v = 0; v < nv; ++v)
        bases[i].push_back(x.dim(v) ? exactlin::kernelBasis(factors[i].evaluate(f.block(v))) : Matrix(0, 0));
    // Projections from inverting the concatenated bases.
    std::vector<Matrix> inverses;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix all(x.dim(v), 0);
      for (std::size_t i = 0; i < factors.size(); ++i) all = exactlin::hstack(all, bases[i][v]);
      inverses.push_back(x.dim(v) ? *exactlin::inverse(all) : Matrix(0, 0));
    }
    std::vector<std::size_t> row(nv, 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto sub = subRepresentation(x, bases[i]);
      std::vector<Matrix> p;
      for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t d = sub.module.dim(v);
        p.push_back(inverses[v].block(row[v], 0, d, x.dim(v)));
        row[v] += d;
      }
      ModuleMap pi(x, sub.module, std::move(p));
      split(sub.module, inc.after(sub.inclusion), pi.after(proj), out);
    }
    return;
  }
  if (!charZero) {
    out.push_back({x, inc, proj});
    return;
  }
  throw NonSplitEndomorphism("no idempotent found for summand with dimension vector " +
                             dimVectorString(x.dims()));
}

}  // namespace

std::vector<Piece> decomposeWithMaps(const Representation& m) {
  std::vector<Piece> out;
  if (m.isZero()) return out;
  split(m, ModuleMap::identity(m), ModuleMap::identity(m), out);
  return out;
}

std::vector<Summand> decompose(const Representation& m) {
  std::vector<Summand> out;
  for (const auto& p : decomposeWithMaps(m)) {
    bool found = false;
    for (auto& s : out)
      if (isIsomorphic(s.module, p.module)) {
        ++s.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back({p.module, 1});
  }
  return out;
}

bool isIndecomposable(const Representation& m) {
  if (m.isZero()) return false;
  return decomposeWithMaps(m).size() == 1;
}

std::optional<ModuleMap> findIsomorphism(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra() || m.dims() != n.dims()) return std::nullopt;
  if (m.isZero()) return ModuleMap::zero(m, n);
  const auto h = homBasis(m, n);
  if (h.empty()) return std::nullopt;
  if (homDimension(n, m) != h.size() || homDimension(m, m) != h.size()) return std::nullopt;
  CandidateSweep sweep(h.size());
  while (auto c = sweep.next()) {
    ModuleMap f = linearCombination(h, *c, m, n);
    if (f.isIsomorphism()) return f;
  }
  return std::nullopt;
}

bool isIsomorphic(const Representation& m, const Representation& n) { return findIsomorphism(m, n).has_value(); }

std::vector<ModuleMap> endomorphismRadical(const Representation& m) {
  if (exactlin::FieldMode::isPrime())
    throw UnsupportedCharacteristic("the radical of End needs characteristic zero");
  const auto e = homBasis(m, m);
  std::vector<ModuleMap> out;
  if (e.size() <= 1) return out;
  const Matrix k = exactlin::kernelBasis(traceGram(e));
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(linearCombination(e, k.col(c), m, m));
  return out;
}

std::size_t countSimpleModules(const AlgebraPtr& a) { return decompose(regularModule(a)).size(); }

}  // namespace tauscope::repmod

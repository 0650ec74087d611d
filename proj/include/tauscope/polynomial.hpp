#pragma once

#include <string>
#include <vector>

#include "tauscope/matrix.hpp"

namespace tauscope::exactlin {

// Univariate polynomial, coefficients from the constant term upwards.  The
// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial monomial(std::size_t degree, const Scalar& c = Scalar(1));
  static Polynomial linear(const Scalar& root);  // x - root

  bool isZero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& leading() const { return c_.back(); }
  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;
  Matrix evaluate(const Matrix& m) const;
  std::string str() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
Polynomial power(const Polynomial& p, std::size_t k);
Polynomial lcm(const Polynomial& a, const Polynomial& b);  // monic

// Yun's algorithm: monic squarefree factors f_1, f_2, ... with
// p = lc * prod f_i^i.  Entry i-1 holds f_i (possibly 1).
std::vector<Polynomial> squarefreeDecomposition(const Polynomial& p);

// Rational roots of p.  Candidates come from the rational-root theorem;
// when a constant or leading coefficient is too large to factor by trial
// division the search is skipped and fewer roots are reported.
std::vector<Scalar> rationalRoots(const Polynomial& p);

Polynomial minimalPolynomial(const Matrix& m);

struct InvariantPiece {
  Polynomial factor;  // power of a squarefree polynomial, monic
  Matrix basis;       // columns span ker factor(m)
};

// Splits the space under m into kernels of pairwise coprime factors of the
// minimal polynomial: one factor (x - r)^k per rational root r, plus the
// root-free remainder of each squarefree layer raised to its multiplicity.
std::vector<InvariantPiece> coprimeSplit(const Matrix& m);
// The factors used by coprimeSplit, for a given minimal polynomial.
std::vector<Polynomial> coprimeFactors(const Polynomial& mu);

}  // namespace tauscope::exactlin

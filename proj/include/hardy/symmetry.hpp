#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hardy/conjugation.hpp"
#include "hardy/diffop.hpp"

namespace hardy {

/// Absolute tolerance for symbolic coefficient matching in the classifiers.
inline constexpr double kClassifierTolerance = 1e-12;

/// psi0 = a + b z, psi1 = conj(b) + c z + b z^2 with a, c real.
struct HermitianWitness {
  double a = 0.0;
  cplx b;
  double c = 0.0;
  friend bool operator==(const HermitianWitness&, const HermitianWitness&) = default;
};

/// psi0 = a + b z, psi1 = b beta + c z + b z^2.
struct CWitness {
  cplx a, b, c;
  friend bool operator==(const CWitness&, const CWitness&) = default;
};

/// psi0 = a + b z, psi1 = d + c z + b z^2 with d = -lambda b / conj(lambda) - lambda c.
struct JWitness {
  cplx a, b, c, d;
  friend bool operator==(const JWitness&, const JWitness&) = default;
};

template <typename Witness>
struct Verdict {
  bool yes = false;
  std::optional<Witness> witness;
  std::string violation;  // empty on yes

  explicit operator bool() const noexcept { return yes; }
};

// The classifiers describe the maximal operator; E = 0 is hermitian and
// selfadjoint for every conjugation.

Verdict<HermitianWitness> classify_hermitian(const SymbolPair& symbols);
/// Independent of alpha: the symbol form of C_{alpha,beta}-selfadjointness only involves beta.
Verdict<CWitness> classify_c_selfadjoint(const SymbolPair& symbols, cplx beta);
Verdict<JWitness> classify_j_selfadjoint(const SymbolPair& symbols, cplx lambda);

/// alpha = 1, beta = conj(b)/b (or 1 when |b| <= 1e-12). Throws NotHermitian.
CAlphaBeta hermitian_to_conjugation(const SymbolPair& symbols);

/**
 * Numeric residual of C E C - E* over the test set
 * {K_w, K_w^[1] at 10 points |w| <= 0.6} and {z^k : k <= N/4},
 * measured on the interior rows 0..N/2.
 *
 * Two routes are computed when available: the exact route pushes the
 * symbols through the conjugation, the sandwich route applies the
 * conjugation, E, and the conjugation again in coefficient space. A
 * NotPolynomial pushforward yields value = +inf with not_polynomial set.
 */
struct ResidualReport {
  double value = 0.0;
  std::optional<double> exact_route;
  std::optional<double> sandwich_route;
  bool not_polynomial = false;

  /// |exact - sandwich| when both routes ran, else 0.
  double route_disagreement() const noexcept;
};

ResidualReport residual(const SymbolPair& symbols, const ConjugationSpec& conj,
                        std::size_t N);

/// Same test set, for E - E*.
double hermitian_residual(const SymbolPair& symbols, std::size_t N);

/// Everything `classify` reports about one symbol pair.
struct ClassificationReport {
  Verdict<HermitianWitness> hermitian;
  cplx beta{1.0, 0.0};
  Verdict<CWitness> c_selfadjoint;
  std::optional<cplx> lambda;
  std::optional<Verdict<JWitness>> j_selfadjoint;
  std::optional<double> numeric_residual;  // under C_{1,beta}; +inf when not polynomial
  std::optional<double> j_residual;        // under J_{1,lambda}
};

ClassificationReport classify(const SymbolPair& symbols, cplx beta,
                              std::optional<cplx> lambda,
                              std::optional<std::size_t> residual_truncation);

}  // namespace hardy

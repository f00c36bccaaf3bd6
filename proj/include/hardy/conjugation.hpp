#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hardy/diffop.hpp"
#include "hardy/hardy_space.hpp"
#include "hardy/matrix.hpp"

namespace hardy {

/// Tolerance for the unimodularity checks on alpha and beta.
inline constexpr double kUnimodularTolerance = 1e-12;

/// C f(z) = alpha conj(f(beta conj(z))) with |alpha| = |beta| = 1.
class CAlphaBeta {
 public:
  CAlphaBeta(cplx alpha, cplx beta);

  cplx alpha() const noexcept { return alpha_; }
  cplx beta() const noexcept { return beta_; }

  /// Diagonal factor alpha conj(beta)^n: (C f)_n = multiplier(n) conj(f_n).
  cplx multiplier(std::size_t n) const;

  friend bool operator==(const CAlphaBeta&, const CAlphaBeta&) = default;

 private:
  cplx alpha_;
  cplx beta_;
};

/**
 * J f(z) = beta kappa(z) conj(f(conj(phi(z)))) with
 * kappa(z) = sqrt(1 - |lambda|^2) / (1 - z conj(lambda)) and the involutive
 * disk automorphism phi(z) = (conj(lambda)/lambda) (lambda - z) / (1 - z conj(lambda)).
 *
 * Since conj(f(conj(w))) has conjugated Taylor coefficients, J f is the
 * holomorphic series beta kappa sum conj(f_n) phi^n.
 */
class JBetaLambda {
 public:
  JBetaLambda(cplx beta, cplx lambda);

  cplx beta() const noexcept { return beta_; }
  cplx lambda() const noexcept { return lambda_; }

  cplx kappa(cplx z) const;
  cplx kappa_prime(cplx z) const;
  cplx phi(cplx z) const;
  cplx phi_prime(cplx z) const;

  friend bool operator==(const JBetaLambda&, const JBetaLambda&) = default;

 private:
  cplx beta_;
  cplx lambda_;
};

using ConjugationSpec = std::variant<CAlphaBeta, JBetaLambda>;

/// Anti-linear map v -> M conj(v) on coefficient vectors.
class AntiLinearMatrix {
 public:
  AntiLinearMatrix() = default;
  explicit AntiLinearMatrix(CMatrix m) : m_(std::move(m)) {}

  const CMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

  std::vector<cplx> apply(std::span<const cplx> v) const;
  /// Linear matrix of this o other, namely M1 conj(M2).
  CMatrix compose(const AntiLinearMatrix& other) const;

 private:
  CMatrix m_;
};

HardyElement apply_c(const CAlphaBeta& conj, const HardyElement& f);

/// Degree-N truncation of J f. Output coefficients are exact for polynomial f. Requires N >= truncation of f.
HardyElement apply_j(const JBetaLambda& conj, const HardyElement& f, std::size_t N);

AntiLinearMatrix c_matrix(const CAlphaBeta& conj, std::size_t N);
/// Column j holds the degree-N truncation of beta kappa phi^j.
AntiLinearMatrix j_matrix(const JBetaLambda& conj, std::size_t N);

/// Symbols of C E C: coefficients p_k -> conj(p_k) conj(beta)^k, psi1 also times beta.
SymbolPair conjugated_symbols_c(const CAlphaBeta& conj, const SymbolPair& symbols);

/**
 * Symbols of J E J:
 *   psi0' = conj(psi0(conj phi)) + lambda (1 - z conj lambda) conj(psi1(conj phi)) / (1 - |lambda|^2)
 *   psi1' = -lambda (1 - z conj lambda)^2 conj(psi1(conj phi)) / (conj(lambda) (1 - |lambda|^2))
 * Both are rational with denominators powers of (1 - z conj lambda); throws
 * NotPolynomial when a division leaves a remainder above 1e-10.
 */
SymbolPair conjugated_symbols_j(const JBetaLambda& conj, const SymbolPair& symbols);

SymbolPair conjugated_symbols(const ConjugationSpec& conj, const SymbolPair& symbols);

struct AxiomReport {
  double antilinearity = 0.0;
  double isometry = 0.0;
  double involution = 0.0;         // on the test subspace: |P_d(C C v) - v|
  double involution_spill = 0.0;   // |(I - P_d) C C v|, mass pushed past the test degree

  double max() const noexcept;
};

/**
 * Residuals of the conjugation axioms over random test vectors of degree
 * <= test_degree (seeded, so reports are reproducible). Anti-linearity is
 * probed with the exactly representable scalars i and 2.
 *
 * C_{alpha,beta} is checked in phase form: each coefficient carries modulus
 * |alpha||beta|^n and phase arg(alpha) - n arg(beta), and composing two maps
 * subtracts phases, so the composed action carries no rounding.
 */
AxiomReport conjugation_axioms(const CAlphaBeta& conj, std::size_t test_degree,
                               std::uint64_t seed = 1);
AxiomReport conjugation_axioms(const AntiLinearMatrix& matrix, std::size_t test_degree,
                               std::uint64_t seed = 1);

struct CalibrationPoint {
  std::size_t truncation = 0;
  double involution = 0.0;
  double isometry = 0.0;
  double involution_spill = 0.0;
};

/// Axiom residuals of j_matrix at each truncation degree.
std::vector<CalibrationPoint> calibrate_truncation(const JBetaLambda& conj,
                                                   std::span<const std::size_t> truncations,
                                                   std::size_t test_degree);

}  // namespace hardy

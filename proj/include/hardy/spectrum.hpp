#pragma once

#include <cstddef>
#include <vector>

#include "hardy/diffop.hpp"
#include "hardy/eigen.hpp"
#include "hardy/hardy_space.hpp"

namespace hardy {

inline constexpr double kZeroTolerance = 1e-10;      // |psi1(u)| gate
inline constexpr double kSimpleTolerance = 1e-8;     // derivative test
inline constexpr double kBoundaryBand = 1e-10;       // |u| < 1 - band
inline constexpr int kDefaultKmax = 16;

struct RootWithMultiplicity {
  cplx root;
  int multiplicity = 1;
};

/// Roots of psi1 with |root| < 1 - 1e-10, from companion-matrix eigenvalues.
/// Clustered roots are merged; multiplicity comes from derivative testing.
std::vector<RootWithMultiplicity> zeros_in_disk(const Poly& psi1);

struct SpectrumResult {
  cplx zero;
  /// psi0(u) + k psi1'(u), k = 0..kmax.
  std::vector<cplx> eigenvalues;
  /// conj(psi0(u) + k psi1'(u)), the eigenvalues of the adjoint.
  std::vector<cplx> adjoint_eigenvalues;
  std::vector<cplx> numeric_eigenvalues;
  /// Distance from each candidate to the nearest numeric eigenvalue.
  std::vector<double> pairing_distances;
  double pairing_max_distance = 0.0;
};

/// Candidates at a simple zero u of psi1. Throws NotAZero, NotSimple, OutsideDisk.
SpectrumResult formula_spectrum(const SymbolPair& symbols, cplx u, int kmax = kDefaultKmax);

/// Fills numeric_eigenvalues and the pairing report from a truncated matrix.
void attach_numeric(SpectrumResult& result, const OperatorMatrix& matrix);

/// Upper-triangular matrix of E* on span{K_u, ..., K_u^[m]}; column j is E* K_u^[j].
struct TriangularKernelMatrix {
  CMatrix entries;
  /// Largest discarded sub-diagonal modulus (the K_u^[j+1] coefficient conj(psi1(u))).
  double dropped_subdiagonal = 0.0;
};

TriangularKernelMatrix kernel_basis_matrix(const SymbolPair& symbols, cplx u, int m);

enum class Membership { In, Out, Inconclusive };

struct Eigenfunction {
  cplx eigenvalue;
  HardyElement coeffs{0};
  Membership membership = Membership::Inconclusive;
  /// sum_{n > N/2} |g_n|^2 / |g|^2
  double tail_fraction = 0.0;
};

/**
 * Power-series solution of psi1 g' = (lambda - psi0) g at lambda = psi0(u) + k psi1'(u),
 * written g = (z - u)^k h with h(0) = 1 and h'/h analytic near u. The
 * membership flag is a heuristic: "in" when the tail fraction is at most
 * 1e-10, "out" when it is at least 1e-2.
 *
 * Throws SeriesDivergence when psi1 has another zero at the origin (singular
 * expansion point) or coefficients exceed 1e100.
 */
Eigenfunction eigenfunction(const SymbolPair& symbols, cplx u, int k, std::size_t N);

/// Same ODE for an arbitrary trial eigenvalue, expanded directly around 0 (needs psi1(0) != 0).
Eigenfunction trial_eigenfunction(const SymbolPair& symbols, cplx lambda, std::size_t N);

/// Eigenvalues of the finite section, sorted by (real, imag).
std::vector<cplx> truncated_eigenvalues(const OperatorMatrix& matrix);

/// |E g - lambda g| on degrees 0..N-1, which the truncation determines exactly.
double eigen_residual(const SymbolPair& symbols, const Eigenfunction& g);

}  // namespace hardy

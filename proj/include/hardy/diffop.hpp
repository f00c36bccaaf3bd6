#pragma once

#include <cstddef>
#include <vector>

#include "hardy/hardy_space.hpp"
#include "hardy/matrix.hpp"
#include "hardy/poly.hpp"

namespace hardy {

/// Symbols of the first-order expression E f = psi0 f + psi1 f'.
struct SymbolPair {
  Poly psi0;
  Poly psi1;

  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

/// psi0 f + psi1 f', exact polynomial arithmetic.
Poly apply(const SymbolPair& symbols, const Poly& f);

/// psi0 f + psi1 f' on raw coefficients, untruncated: the result has degree
/// up to N + max(deg psi0, deg psi1 - 1) and is never normalized.
HardyElement apply(const SymbolPair& symbols, const HardyElement& f);

/// Coefficients discarded when a column of the truncated matrix overflows degree N.
struct TruncationSpill {
  std::size_t count = 0;
  double max_modulus = 0.0;
};

enum class MatrixOrigin {
  Truncation,      // compression of E onto degree <= N
  NumericAdjoint,  // conjugate transpose of a truncation only
};

/// Matrix of an operator in the orthonormal monomial basis z^0..z^N.
struct OperatorMatrix {
  CMatrix entries;
  TruncationSpill spill;
  MatrixOrigin origin = MatrixOrigin::Truncation;

  std::size_t dim() const noexcept { return entries.rows(); }
};

/// Entry (i, j) is the coefficient of z^i in E(z^j), for i, j <= N.
OperatorMatrix truncated_matrix(const SymbolPair& symbols, std::size_t N);

/// Conjugate transpose of the truncation, labeled NumericAdjoint.
OperatorMatrix numeric_adjoint(const SymbolPair& symbols, std::size_t N);

/// True when psi0 = a + b z and psi1 = d + c z + b z^2 (tolerance 1e-12).
bool in_adjoint_family(const SymbolPair& symbols);

/**
 * Symbols of the maximal adjoint for the coupled family
 * psi0 = a + b z, psi1 = d + c z + b z^2:
 * returns (conj a + conj d z, conj b + conj c z + conj d z^2).
 *
 * Throws FamilyMismatch outside the family; use numeric_adjoint there.
 */
SymbolPair adjoint_symbols(const SymbolPair& symbols);

struct KernelTerm {
  int order = 0;
  cplx coeff;

  friend bool operator==(const KernelTerm&, const KernelTerm&) = default;
};

/// Finite combination sum_k c_k K_w^[m_k] over a common base point.
struct KernelCombination {
  cplx w;
  std::vector<KernelTerm> terms;

  bool empty() const noexcept { return terms.empty(); }
  int max_order() const noexcept;
  /// Coefficient attached to K_w^[order]; zero if absent.
  cplx coefficient(int order) const noexcept;
  /// Materializes the combination at truncation N (orders above N contribute nothing).
  HardyElement expand(std::size_t N) const;
};

/**
 * E* K_w^[m] as a combination of K_w, ..., K_w^[m+1]:
 *   conj(psi0^(m)(w)) K_w
 *   + sum_{j=1..m} conj(C(m,j) psi0^(m-j)(w) + C(m,j-1) psi1^(m-j+1)(w)) K_w^[j]
 *   + conj(psi1(w)) K_w^[m+1].
 * Terms whose coefficient is exactly zero are omitted.
 */
KernelCombination adjoint_on_kernel(const SymbolPair& symbols, cplx w, int m);

}  // namespace hardy

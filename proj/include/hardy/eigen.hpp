#pragma once

#include <vector>

#include "hardy/error.hpp"
#include "hardy/matrix.hpp"

namespace hardy {

/// Thrown when QR iteration hits its cap (100 sweeps per dimension).
/// Carries the eigenvalues that had already deflated.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<cplx> partial)
      : Error(ErrorKind::NonConvergence, what), partial_(std::move(partial)) {}

  const std::vector<cplx>& partial() const noexcept { return partial_; }

 private:
  std::vector<cplx> partial_;
};

/// Householder reduction to upper Hessenberg form (similarity transform).
CMatrix hessenberg(const CMatrix& a);

/**
 * All eigenvalues of a square complex matrix: Hessenberg reduction, then
 * single-shift QR with Wilkinson shifts and deflation on exactly zeroed
 * subdiagonals. Triangular input is returned exactly (its diagonal).
 * Output is sorted lexicographically by (real, imag).
 */
std::vector<cplx> eigenvalues(const CMatrix& a);

/// Lexicographic (real, imag) order used for all eigenvalue lists.
void sort_eigenvalues(std::vector<cplx>& values);

/// Monic companion matrix of a polynomial given by ascending coefficients.
CMatrix companion_matrix(const std::vector<cplx>& coeffs);

}  // namespace hardy

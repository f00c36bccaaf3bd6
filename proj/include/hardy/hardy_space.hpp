#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hardy/poly.hpp"

namespace hardy {

/**
 * Element of H^2 truncated to degree N, stored as its Taylor coefficients at
 * the origin. Monomials are orthonormal, so the H^2 inner product is the
 * plain l^2 coefficient sum.
 */
class HardyElement {
 public:
  /// Zero element with the given truncation degree.
  explicit HardyElement(std::size_t truncation_degree)
      : coeffs_(truncation_degree + 1) {}
  /// Takes ownership of coefficients; an empty vector becomes the zero element at N = 0.
  explicit HardyElement(std::vector<cplx> coeffs);

  /// Embeds a polynomial at truncation N; rejects deg p > N.
  static HardyElement from_poly(const Poly& p, std::size_t N);
  /// Unit vector z^n at truncation N.
  static HardyElement monomial(std::size_t n, std::size_t N);

  std::size_t truncation_degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : cplx{};
  }

  double norm() const;
  /// Zero-pads or cuts to truncation degree N.
  HardyElement truncated(std::size_t N) const;
  Poly to_poly() const { return Poly(coeffs_); }

  HardyElement& operator+=(const HardyElement& o);
  HardyElement& operator-=(const HardyElement& o);
  HardyElement& operator*=(cplx s);
  friend HardyElement operator+(HardyElement a, const HardyElement& b) { return a += b; }
  friend HardyElement operator-(HardyElement a, const HardyElement& b) { return a -= b; }
  friend HardyElement operator*(cplx s, HardyElement a) { return a *= s; }

 private:
  std::vector<cplx> coeffs_;
};

/// <f, g> = sum f_n conj(g_n); the shorter vector is zero-padded.
cplx inner_product(const HardyElement& f, const HardyElement& g);

/// Point z in the open disk and a derivative order m.
struct KernelSpec {
  cplx z;
  int m = 0;
};

/// Throws OutsideDisk unless |z| < 1, InvalidArgument for negative m.
void validate(const KernelSpec& spec);

/**
 * Taylor coefficients of the derivative-reproducing kernel
 * K_z^[m](u) = m! u^m / (1 - conj(z) u)^(m+1), truncated at degree N.
 *
 * The coefficient of u^n is m! C(n, m) conj(z)^(n-m) for n >= m and zero
 * below. Requires N >= m.
 */
HardyElement kernel_coefficients(const KernelSpec& spec, std::size_t N);

/// f^(m)(z) computed as <f, K_z^[m]> at the truncation degree of f.
cplx derivative_at(const HardyElement& f, cplx z, int m);

}  // namespace hardy

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

/// Coefficients with modulus at or below this are dropped as trailing terms.
inline constexpr double kTrailingTolerance = 1e-13;

/**
 * Complex polynomial with ascending-degree coefficients.
 *
 * Always kept in canonical form: the trailing coefficient is nonzero, except
 * for the zero polynomial which is stored as the single coefficient {0}.
 * degree() reports -1 for the zero polynomial.
 */
class Poly {
 public:
  Poly() : coeffs_{cplx{}} {}
  explicit Poly(std::vector<cplx> coeffs);
  Poly(std::initializer_list<cplx> coeffs)
      : Poly(std::vector<cplx>(coeffs)) {}

  static Poly constant(cplx c) { return Poly({c}); }
  static Poly monomial(int k, cplx c = 1.0);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx{}; }

  /// Coefficient of z^k; zero beyond the stored range.
  cplx operator[](int k) const noexcept;

  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept;

  Poly derivative() const;
  Poly derivative(int m) const;
  /// m-th derivative evaluated at z.
  cplx derivative_at(cplx z, int m) const;

  /// Coefficientwise complex conjugate (not composition with conj).
  Poly conj_coeffs() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly::constant(-1.0) * a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, cplx s) { return a *= s; }
  friend Poly operator*(cplx s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Integer power, p^0 = 1.
  Poly pow(int k) const;

 private:
  void normalize();
  std::vector<cplx> coeffs_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor);

/// Binomial coefficient C(n, k) via the multiplicative recurrence.
double binomial(int n, int k);

/// Largest coefficient modulus.
double max_coeff_abs(const Poly& p);

}  // namespace hardy

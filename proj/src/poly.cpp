#include "hardy/poly.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"

namespace hardy {

Poly::Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int k, cplx c) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "monomial degree must be >= 0");
  std::vector<cplx> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrailingTolerance)
    coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
}

int Poly::degree() const noexcept {
  return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1;
}

cplx Poly::operator[](int k) const noexcept {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx Poly::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(d));
}

Poly Poly::derivative(int m) const {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "derivative order must be >= 0");
  Poly p = *this;
  for (int i = 0; i < m && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

cplx Poly::derivative_at(cplx z, int m) const { return derivative(m)(z); }

Poly Poly::conj_coeffs() const {
  std::vector<cplx> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                 [](const cplx& a) { return std::conj(a); });
  return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly Poly::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
  Poly result = Poly::constant(1.0);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor) {
  if (divisor.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  const int dn = numerator.degree();
  const int dd = divisor.degree();
  if (dn < dd) return {Poly{}, numerator};

  std::vector<cplx> rem = numerator.coeffs();
  std::vector<cplx> quot(static_cast<std::size_t>(dn - dd) + 1);
  const cplx lead = divisor.coeffs().back();
  for (int k = dn - dd; k >= 0; --k) {
    const cplx q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(dd, 1)));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double max_coeff_abs(const Poly& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace hardy

#include "hardy/hardy_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

HardyElement::HardyElement(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
}

HardyElement HardyElement::from_poly(const Poly& p, std::size_t N) {
  if (p.degree() > static_cast<int>(N))
    throw Error(ErrorKind::InvalidArgument,
                "polynomial of degree " + std::to_string(p.degree()) +
                    " does not fit truncation degree " + std::to_string(N));
  HardyElement f(N);
  std::copy(p.coeffs().begin(), p.coeffs().end(), f.coeffs_.begin());
  return f;
}

HardyElement HardyElement::monomial(std::size_t n, std::size_t N) {
  if (n > N) throw Error(ErrorKind::InvalidArgument, "monomial degree exceeds truncation");
  HardyElement f(N);
  f.coeffs_[n] = 1.0;
  return f;
}

double HardyElement::norm() const { return std::sqrt(std::real(inner_product(*this, *this))); }

HardyElement HardyElement::truncated(std::size_t N) const {
  std::vector<cplx> c(N + 1);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), N + 1), c.begin());
  return HardyElement(std::move(c));
}

HardyElement& HardyElement::operator+=(const HardyElement& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

HardyElement& HardyElement::operator-=(const HardyElement& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

HardyElement& HardyElement::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

cplx inner_product(const HardyElement& f, const HardyElement& g) {
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  const std::size_t n = std::min(a.size(), b.size());
  cplx acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * std::conj(b[k]);
  return acc;
}

void validate(const KernelSpec& spec) {
  if (!(std::abs(spec.z) < 1.0))
    throw Error(ErrorKind::OutsideDisk, "kernel point must satisfy |z| < 1");
  if (spec.m < 0) throw Error(ErrorKind::InvalidArgument, "kernel order must be >= 0");
}

HardyElement kernel_coefficients(const KernelSpec& spec, std::size_t N) {
  validate(spec);
  const auto m = static_cast<std::size_t>(spec.m);
  if (N < m)
    throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= kernel order");
  HardyElement k(N);
  auto c = k.coeffs();
  const cplx zbar = std::conj(spec.z);
  cplx power = 1.0;
  for (std::size_t n = m; n <= N; ++n) {
    // m! C(n, m) = n (n-1) ... (n-m+1)
    double falling = 1.0;
    for (std::size_t i = 0; i < m; ++i) falling *= static_cast<double>(n - i);
    c[n] = falling * power;
    power *= zbar;
  }
  return k;
}

cplx derivative_at(const HardyElement& f, cplx z, int m) {
  validate({z, m});
  const std::size_t N = f.truncation_degree();
  if (static_cast<std::size_t>(m) > N) return {};
  return inner_product(f, kernel_coefficients({z, m}, N));
}

}  // namespace hardy

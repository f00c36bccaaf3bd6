#include "hardy/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hardy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Complex Givens rotation G = [c s; -conj(s) c] with G [a; b] = [r; 0].
struct Givens {
  double c;
  cplx s;
};

Givens make_givens(cplx a, cplx b) {
  const double aa = std::abs(a);
  const double r = std::hypot(aa, std::abs(b));
  if (r == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, 1.0};
  return {aa / r, (a / aa) * std::conj(b) / r};
}

/// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half_diff = 0.5 * (a - d);
  const cplx disc = std::sqrt(half_diff * half_diff + b * c);
  const cplx mid = 0.5 * (a + d);
  const cplx r1 = mid + disc;
  const cplx r2 = mid - disc;
  return std::abs(r1 - d) <= std::abs(r2 - d) ? r1 : r2;
}

}  // namespace

CMatrix hessenberg(const CMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::InvalidArgument, "hessenberg: matrix must be square");
  CMatrix a = input;
  const std::size_t n = a.rows();
  if (n < 3) return a;

  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double tail = 0.0;
    for (std::size_t i = 1; i < len; ++i) tail += std::norm(a(k + 1 + i, k));
    if (tail == 0.0) continue;  // column already in Hessenberg form

    const cplx x0 = a(k + 1, k);
    const double xnorm = std::sqrt(tail + std::norm(x0));
    const cplx phase = x0 == cplx{} ? cplx{1.0} : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;

    for (std::size_t i = 0; i < len; ++i) v[i] = a(k + 1 + i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) vnorm2 += std::norm(v[i]);

    // A <- (I - 2 v v* / |v|^2) A
    for (std::size_t j = k; j < n; ++j) {
      cplx w = 0.0;
      for (std::size_t i = 0; i < len; ++i) w += std::conj(v[i]) * a(k + 1 + i, j);
      w *= 2.0 / vnorm2;
      for (std::size_t i = 0; i < len; ++i) a(k + 1 + i, j) -= v[i] * w;
    }
    // A <- A (I - 2 v v* / |v|^2)
    for (std::size_t r = 0; r < n; ++r) {
      cplx w = 0.0;
      for (std::size_t i = 0; i < len; ++i) w += a(r, k + 1 + i) * v[i];
      w *= 2.0 / vnorm2;
      for (std::size_t i = 0; i < len; ++i) a(r, k + 1 + i) -= w * std::conj(v[i]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = 1; i < len; ++i) a(k + 1 + i, k) = 0.0;
  }
  return a;
}

std::vector<cplx> eigenvalues(const CMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::InvalidArgument, "eigenvalues: matrix must be square");
  const std::size_t n = input.rows();
  std::vector<cplx> eig;
  if (n == 0) return eig;

  CMatrix h = hessenberg(input);
  const double hnorm = h.max_abs();
  const std::size_t max_sweeps = 100 * n;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;
  std::vector<Givens> rot(n);

  std::size_t hi = n - 1;
  while (true) {
    if (hi == 0) {
      eig.push_back(h(0, 0));
      break;
    }
    // Locate the top of the unreduced block ending at hi.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double tol = kEps * (std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1)));
      if (tol == 0.0) tol = kEps * hnorm;
      if (sub <= tol) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig.push_back(h(hi, hi));
      --hi;
      since_deflation = 0;
      continue;
    }

    if (++sweeps > max_sweeps) {
      sort_eigenvalues(eig);
      throw NonConvergenceError("QR iteration did not converge within " +
                                    std::to_string(max_sweeps) + " sweeps",
                                eig);
    }
    ++since_deflation;

    cplx mu;
    if (since_deflation % 10 == 0) {
      mu = h(hi, hi) + std::abs(h(hi, hi - 1)) * cplx{0.75, 0.5};
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const cplx x = h(k, j);
        const cplx y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = 0.0;
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = rot[k];
      const std::size_t last = std::min(k + 1, hi);
      for (std::size_t i = lo; i <= last; ++i) {
        const cplx x = h(i, k);
        const cplx y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }

  sort_eigenvalues(eig);
  return eig;
}

void sort_eigenvalues(std::vector<cplx>& values) {
  std::sort(values.begin(), values.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

CMatrix companion_matrix(const std::vector<cplx>& coeffs) {
  std::size_t d = coeffs.size();
  while (d > 0 && coeffs[d - 1] == cplx{}) --d;
  if (d < 2) return CMatrix(0, 0);
  const std::size_t n = d - 1;
  const cplx lead = coeffs[n];
  CMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -coeffs[i] / lead;
  return c;
}

}  // namespace hardy

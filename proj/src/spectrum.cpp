#include "hardy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr double kClusterTolerance = 1e-6;
constexpr double kOverflowGuard = 1e100;
constexpr double kInsideTail = 1e-10;
constexpr double kOutsideTail = 1e-2;

int multiplicity_at(const Poly& p, cplx r) {
  const double tol = kSimpleTolerance * std::max(1.0, max_coeff_abs(p));
  int m = 1;
  Poly d = p.derivative();
  while (!d.is_zero() && std::abs(d(r)) <= tol) {
    ++m;
    d = d.derivative();
  }
  return m;
}

cplx newton_polish(const Poly& p, cplx r) {
  const Poly dp = p.derivative();
  for (int it = 0; it < 3; ++it) {
    const cplx slope = dp(r);
    if (std::abs(slope) <= kSimpleTolerance) break;
    const cplx step = p(r) / slope;
    r -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
  }
  return r;
}

void check_simple_zero(const SymbolPair& symbols, cplx u) {
  if (!(std::abs(u) < 1.0 - kBoundaryBand))
    throw Error(ErrorKind::OutsideDisk, "zero must lie in |u| < 1 - 1e-10");
  if (std::abs(symbols.psi1(u)) > kZeroTolerance)
    throw Error(ErrorKind::NotAZero, "psi1(u) is not zero within 1e-10");
  if (std::abs(symbols.psi1.derivative_at(u, 1)) <= kSimpleTolerance)
    throw Error(ErrorKind::NotSimple, "psi1'(u) vanishes: zero is not simple");
}

/// a / b as a power series truncated at degree N; b(0) must be nonzero.
std::vector<cplx> series_divide(const Poly& a, const Poly& b, std::size_t N) {
  std::vector<cplx> out(N + 1);
  const cplx b0 = b[0];
  for (std::size_t n = 0; n <= N; ++n) {
    cplx acc = a[static_cast<int>(n)];
    const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(b.degree(), 0)));
    for (std::size_t i = 1; i <= top; ++i) acc -= b[static_cast<int>(i)] * out[n - i];
    out[n] = acc / b0;
  }
  return out;
}

/// Solution of h' = r h with h(0) = 1, truncated at N.
std::vector<cplx> exp_integral(const std::vector<cplx>& r, std::size_t N) {
  std::vector<cplx> h(N + 1);
  h[0] = 1.0;
  for (std::size_t n = 0; n < N; ++n) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) acc += r[i] * h[n - i];
    h[n + 1] = acc / static_cast<double>(n + 1);
    if (!(std::abs(h[n + 1]) <= kOverflowGuard))
      throw Error(ErrorKind::SeriesDivergence,
                  "eigenfunction coefficients exceed the overflow guard at degree " +
                      std::to_string(n + 1));
  }
  return h;
}

Eigenfunction finish(cplx lambda, std::vector<cplx> g) {
  Eigenfunction out;
  out.eigenvalue = lambda;
  const std::size_t N = g.size() - 1;
  double total = 0.0, tail = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    if (!(std::abs(g[n]) <= kOverflowGuard))
      throw Error(ErrorKind::SeriesDivergence, "eigenfunction coefficients exceed the overflow guard");
    total += std::norm(g[n]);
    if (n > N / 2) tail += std::norm(g[n]);
  }
  out.tail_fraction = total > 0.0 ? tail / total : 0.0;
  if (out.tail_fraction <= kInsideTail)
    out.membership = Membership::In;
  else if (out.tail_fraction >= kOutsideTail)
    out.membership = Membership::Out;
  else
    out.membership = Membership::Inconclusive;
  out.coeffs = HardyElement(std::move(g));
  return out;
}

}  // namespace

std::vector<RootWithMultiplicity> zeros_in_disk(const Poly& psi1) {
  if (psi1.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "psi1 is the zero polynomial");
  std::vector<RootWithMultiplicity> out;
  if (psi1.degree() < 1) return out;

  std::vector<cplx> roots = eigenvalues(companion_matrix(psi1.coeffs()));
  std::vector<bool> used(roots.size(), false);
  std::vector<RootWithMultiplicity> all;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cluster{i};
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) <= kClusterTolerance * std::max(1.0, std::abs(roots[i])))
        cluster.push_back(j);
    cplx mean = 0.0;
    for (const auto j : cluster) mean += roots[j];
    mean /= static_cast<double>(cluster.size());

    const int mult = multiplicity_at(psi1, mean);
    if (mult == static_cast<int>(cluster.size())) {
      for (const auto j : cluster) used[j] = true;
      all.push_back({mult == 1 ? newton_polish(psi1, mean) : mean, mult});
    } else {
      used[i] = true;
      const cplx r = newton_polish(psi1, roots[i]);
      all.push_back({r, multiplicity_at(psi1, r)});
    }
  }
  for (const auto& r : all)
    if (std::abs(r.root) < 1.0 - kBoundaryBand) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

SpectrumResult formula_spectrum(const SymbolPair& symbols, cplx u, int kmax) {
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be >= 0");
  check_simple_zero(symbols, u);
  SpectrumResult r;
  r.zero = u;
  const cplx base = symbols.psi0(u);
  const cplx step = symbols.psi1.derivative_at(u, 1);
  for (int k = 0; k <= kmax; ++k) {
    r.eigenvalues.push_back(base + static_cast<double>(k) * step);
    r.adjoint_eigenvalues.push_back(std::conj(r.eigenvalues.back()));
  }
  return r;
}

void attach_numeric(SpectrumResult& result, const OperatorMatrix& matrix) {
  result.numeric_eigenvalues = truncated_eigenvalues(matrix);
  result.pairing_distances.clear();
  result.pairing_max_distance = 0.0;
  for (const cplx c : result.eigenvalues) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx e : result.numeric_eigenvalues) best = std::min(best, std::abs(c - e));
    result.pairing_distances.push_back(best);
    result.pairing_max_distance = std::max(result.pairing_max_distance, best);
  }
}

TriangularKernelMatrix kernel_basis_matrix(const SymbolPair& symbols, cplx u, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "m must be >= 0");
  check_simple_zero(symbols, u);
  const auto dim = static_cast<std::size_t>(m) + 1;
  TriangularKernelMatrix out{CMatrix(dim, dim), 0.0};
  for (int j = 0; j <= m; ++j) {
    for (const auto& term : adjoint_on_kernel(symbols, u, j).terms) {
      if (term.order > j) {
        out.dropped_subdiagonal = std::max(out.dropped_subdiagonal, std::abs(term.coeff));
        continue;
      }
      out.entries(static_cast<std::size_t>(term.order), static_cast<std::size_t>(j)) = term.coeff;
    }
  }
  return out;
}

Eigenfunction eigenfunction(const SymbolPair& symbols, cplx u, int k, std::size_t N) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 0");
  check_simple_zero(symbols, u);
  const cplx lambda = symbols.psi0(u) + static_cast<double>(k) * symbols.psi1.derivative_at(u, 1);
  const Poly linear({-u, 1.0});

  const Poly q = divmod(symbols.psi1, linear).first;  // psi1 / (z - u)
  if (std::abs(q[0]) <= kZeroTolerance * std::max(1.0, max_coeff_abs(q)))
    throw Error(ErrorKind::SeriesDivergence,
                "psi1 has a further zero at the origin; the expansion point is singular");
  const Poly p = Poly::constant(lambda) - symbols.psi0 - static_cast<double>(k) * q;
  const Poly p_reduced = divmod(p, linear).first;

  std::vector<cplx> g = exp_integral(series_divide(p_reduced, q, N), N);
  for (int i = 0; i < k; ++i) {
    // g <- (z - u) g, truncated
    for (std::size_t n = N + 1; n-- > 0;) g[n] = (n > 0 ? g[n - 1] : cplx{}) - u * g[n];
  }
  return finish(lambda, std::move(g));
}

Eigenfunction trial_eigenfunction(const SymbolPair& symbols, cplx lambda, std::size_t N) {
  if (std::abs(symbols.psi1[0]) <= kZeroTolerance)
    throw Error(ErrorKind::SeriesDivergence, "psi1 vanishes at the origin; expansion point is singular");
  const Poly numerator = Poly::constant(lambda) - symbols.psi0;
  return finish(lambda, exp_integral(series_divide(numerator, symbols.psi1, N), N));
}

std::vector<cplx> truncated_eigenvalues(const OperatorMatrix& matrix) {
  if (matrix.dim() == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  return eigenvalues(matrix.entries);
}

double eigen_residual(const SymbolPair& symbols, const Eigenfunction& g) {
  const HardyElement eg = apply(symbols, g.coeffs);
  const std::size_t N = g.coeffs.truncation_degree();
  double s = 0.0;
  for (std::size_t n = 0; n < N; ++n) s += std::norm(eg[n] - g.eigenvalue * g.coeffs[n]);
  return std::sqrt(s);
}

}  // namespace hardy

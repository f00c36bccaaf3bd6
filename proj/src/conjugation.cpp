#include "hardy/conjugation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr double kRemainderTolerance = 1e-10;

void require_unimodular(cplx v, const char* name) {
  if (std::abs(std::abs(v) - 1.0) > kUnimodularTolerance)
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be unimodular");
}

/// s <- s / (1 - z conj(lambda)) as truncated power series.
void divide_by_denominator(std::vector<cplx>& s, cplx lambda_bar) {
  for (std::size_t n = 1; n < s.size(); ++n) s[n] += lambda_bar * s[n - 1];
}

/// s <- phi s, in place and O(N), in one pass.
void multiply_by_phi(std::vector<cplx>& s, cplx lambda) {
  const cplx lambda_bar = std::conj(lambda);
  const cplx scale = lambda_bar / lambda;
  cplx prev = 0.0;  // s[n-1] before overwrite
  cplx u = 0.0;     // running quotient by (1 - z conj(lambda))
  for (auto& c : s) {
    u = lambda * c - prev + lambda_bar * u;
    prev = c;
    c = scale * u;
  }
}

void multiply_by_kappa(std::vector<cplx>& s, cplx lambda) {
  divide_by_denominator(s, std::conj(lambda));
  const double root = std::sqrt(1.0 - std::norm(lambda));
  for (auto& c : s) c *= root;
}

std::size_t effective_degree(std::span<const cplx> v) {
  std::size_t d = v.size();
  while (d > 0 && v[d - 1] == cplx{}) --d;
  return d == 0 ? 0 : d - 1;
}

/// (1 - z conj(lambda))
Poly denominator_poly(cplx lambda) { return Poly({1.0, -std::conj(lambda)}); }

/// Numerator P with conj(psi(conj(phi(z)))) = P(z) / (1 - z conj(lambda))^deg(psi).
Poly composed_numerator(const Poly& psi, cplx lambda, int n) {
  const Poly den = denominator_poly(lambda);
  const cplx lambda_bar = std::conj(lambda);
  const Poly mobius({lambda_bar, -lambda_bar / lambda});  // (conj l / l)(l - z)
  Poly out;
  for (int k = 0; k <= psi.degree(); ++k)
    out += std::conj(psi[k]) * (mobius.pow(k) * den.pow(n - k));
  return out;
}

/// numerator / (1 - z conj(lambda))^power, requiring exact division.
Poly reduce(Poly numerator, int power, cplx lambda, const char* which) {
  const Poly den = denominator_poly(lambda);
  if (power <= 0) return numerator * den.pow(-power);
  const double scale = std::max(1.0, max_coeff_abs(numerator));
  for (int i = 0; i < power; ++i) {
    auto [q, r] = divmod(numerator, den);
    if (max_coeff_abs(r) > kRemainderTolerance * scale)
      throw Error(ErrorKind::NotPolynomial,
                  std::string("conjugated symbol ") + which +
                      " is rational, not polynomial (remainder " +
                      std::to_string(max_coeff_abs(r)) + ")");
    numerator = std::move(q);
  }
  return numerator;
}

std::vector<std::vector<cplx>> random_unit_vectors(std::size_t count, std::size_t degree,
                                                   std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<cplx>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<cplx> v(dim);
    for (std::size_t n = 0; n <= degree && n < dim; ++n) v[n] = {normal(rng), normal(rng)};
    const double nv = l2_norm(v);
    for (auto& c : v) c /= nv;
    out.push_back(std::move(v));
  }
  return out;
}

template <typename Map>
AxiomReport measure_axioms(Map&& map, std::size_t dim, std::size_t test_degree,
                           std::uint64_t seed) {
  AxiomReport rep;
  const std::vector<cplx> scalars{cplx{0.0, 1.0}, cplx{2.0, 0.0}};
  const std::size_t test_dim = std::min(dim, test_degree + 1);
  for (const auto& v : random_unit_vectors(8, test_degree, dim, seed)) {
    const std::vector<cplx> cv = map(v);
    rep.isometry = std::max(rep.isometry, std::abs(l2_norm(cv) - l2_norm(v)));

    std::vector<cplx> twice = map(cv);
    for (std::size_t n = 0; n < test_dim; ++n) twice[n] -= v[n];
    const std::span<const cplx> all(twice);
    rep.involution = std::max(rep.involution, l2_norm(all.first(test_dim)));
    rep.involution_spill = std::max(rep.involution_spill, l2_norm(all.subspan(test_dim)));

    for (const cplx s : scalars) {
      std::vector<cplx> sv(v);
      for (auto& c : sv) c *= s;
      std::vector<cplx> lhs = map(sv);
      for (std::size_t n = 0; n < dim; ++n) lhs[n] -= std::conj(s) * cv[n];
      rep.antilinearity = std::max(rep.antilinearity, l2_norm(lhs));
    }
  }
  return rep;
}

/// Diagonal (anti-)linear action in polar form: coefficient n is rho_n e^{i theta_n}.
struct PhaseDiagonal {
  std::vector<double> modulus;
  std::vector<double> phase;

  std::vector<cplx> apply(std::span<const cplx> v, bool antilinear) const {
    std::vector<cplx> out(v.size());
    for (std::size_t n = 0; n < v.size(); ++n)
      out[n] = std::polar(modulus[n], phase[n]) * (antilinear ? std::conj(v[n]) : v[n]);
    return out;
  }
  /// Norm of the image of v, from moduli alone.
  double image_norm(std::span<const cplx> v) const {
    double s = 0.0;
    for (std::size_t n = 0; n < v.size(); ++n) s += modulus[n] * modulus[n] * std::norm(v[n]);
    return std::sqrt(s);
  }
};

/// alpha and beta are unimodular by construction, so only their phases enter.
PhaseDiagonal phase_form(const CAlphaBeta& conj, std::size_t dim) {
  PhaseDiagonal d{std::vector<double>(dim, 1.0), std::vector<double>(dim)};
  for (std::size_t n = 0; n < dim; ++n)
    d.phase[n] = std::arg(conj.alpha()) - static_cast<double>(n) * std::arg(conj.beta());
  return d;
}

/// The linear map C2 C1 for two anti-linear phase diagonals: moduli multiply, phases subtract.
PhaseDiagonal compose(const PhaseDiagonal& outer, const PhaseDiagonal& inner) {
  PhaseDiagonal d = outer;
  for (std::size_t n = 0; n < d.phase.size(); ++n) {
    d.modulus[n] *= inner.modulus[n];
    d.phase[n] -= inner.phase[n];
  }
  return d;
}

}  // namespace

CAlphaBeta::CAlphaBeta(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
  require_unimodular(alpha, "alpha");
  require_unimodular(beta, "beta");
}

cplx CAlphaBeta::multiplier(std::size_t n) const {
  cplx m = alpha_;
  const cplx beta_bar = std::conj(beta_);
  for (std::size_t k = 0; k < n; ++k) m *= beta_bar;
  return m;
}

JBetaLambda::JBetaLambda(cplx beta, cplx lambda) : beta_(beta), lambda_(lambda) {
  require_unimodular(beta, "beta");
  if (lambda == cplx{} || !(std::abs(lambda) < 1.0))
    throw Error(ErrorKind::InvalidArgument, "lambda must satisfy 0 < |lambda| < 1");
}

cplx JBetaLambda::kappa(cplx z) const {
  return std::sqrt(1.0 - std::norm(lambda_)) / (1.0 - z * std::conj(lambda_));
}

cplx JBetaLambda::kappa_prime(cplx z) const {
  const cplx den = 1.0 - z * std::conj(lambda_);
  return std::sqrt(1.0 - std::norm(lambda_)) * std::conj(lambda_) / (den * den);
}

cplx JBetaLambda::phi(cplx z) const {
  return std::conj(lambda_) / lambda_ * (lambda_ - z) / (1.0 - z * std::conj(lambda_));
}

cplx JBetaLambda::phi_prime(cplx z) const {
  const cplx den = 1.0 - z * std::conj(lambda_);
  return std::conj(lambda_) / lambda_ * (std::norm(lambda_) - 1.0) / (den * den);
}

std::vector<cplx> AntiLinearMatrix::apply(std::span<const cplx> v) const {
  std::vector<cplx> c(v.begin(), v.end());
  for (auto& x : c) x = std::conj(x);
  return m_ * std::span<const cplx>(c);
}

CMatrix AntiLinearMatrix::compose(const AntiLinearMatrix& other) const {
  return m_ * other.m_.conjugate();
}

HardyElement apply_c(const CAlphaBeta& conj, const HardyElement& f) {
  HardyElement out(f.truncation_degree());
  auto c = out.coeffs();
  cplx m = conj.alpha();
  const cplx beta_bar = std::conj(conj.beta());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = m * std::conj(f[n]);
    m *= beta_bar;
  }
  return out;
}

HardyElement apply_j(const JBetaLambda& conj, const HardyElement& f, std::size_t N) {
  const std::size_t d = effective_degree(f.coeffs());
  // Horner in series space: sum conj(f_n) phi^n
  std::vector<cplx> acc(N + 1);
  acc[0] = std::conj(f[d]);
  for (std::size_t n = d; n-- > 0;) {
    multiply_by_phi(acc, conj.lambda());
    acc[0] += std::conj(f[n]);
  }
  multiply_by_kappa(acc, conj.lambda());
  for (auto& c : acc) c *= conj.beta();
  return HardyElement(std::move(acc));
}

AntiLinearMatrix c_matrix(const CAlphaBeta& conj, std::size_t N) {
  CMatrix m(N + 1, N + 1);
  cplx d = conj.alpha();
  for (std::size_t n = 0; n <= N; ++n) {
    m(n, n) = d;
    d *= std::conj(conj.beta());
  }
  return AntiLinearMatrix(std::move(m));
}

AntiLinearMatrix j_matrix(const JBetaLambda& conj, std::size_t N) {
  CMatrix m(N + 1, N + 1);
  std::vector<cplx> power(N + 1);  // phi^j
  power[0] = 1.0;
  for (std::size_t j = 0; j <= N; ++j) {
    if (j > 0) multiply_by_phi(power, conj.lambda());
    std::vector<cplx> col = power;
    multiply_by_kappa(col, conj.lambda());
    for (std::size_t i = 0; i <= N; ++i) m(i, j) = conj.beta() * col[i];
  }
  return AntiLinearMatrix(std::move(m));
}

SymbolPair conjugated_symbols_c(const CAlphaBeta& conj, const SymbolPair& symbols) {
  auto push = [&](const Poly& p, cplx extra) {
    std::vector<cplx> c(p.coeffs().size());
    cplx f = extra;
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = std::conj(p.coeffs()[k]) * f;
      f *= std::conj(conj.beta());
    }
    return Poly(std::move(c));
  };
  return {push(symbols.psi0, 1.0), push(symbols.psi1, conj.beta())};
}

SymbolPair conjugated_symbols_j(const JBetaLambda& conj, const SymbolPair& symbols) {
  const cplx lambda = conj.lambda();
  const double one_minus = 1.0 - std::norm(lambda);
  const int n0 = std::max(symbols.psi0.degree(), 0);
  const int n1 = std::max(symbols.psi1.degree(), 0);
  const Poly den = denominator_poly(lambda);
  const Poly p0 = composed_numerator(symbols.psi0, lambda, n0);
  const Poly p1 = composed_numerator(symbols.psi1, lambda, n1);

  // psi1' = -lambda / (conj(lambda)(1-|l|^2)) * P1 / den^(n1-2)
  Poly psi1 = reduce((-lambda / (std::conj(lambda) * one_minus)) * p1, n1 - 2, lambda, "psi1");

  // psi0' = P0 / den^n0 + lambda/(1-|l|^2) * P1 / den^(n1-1), over a common denominator
  const int common = std::max({n0, n1 - 1, 0});
  Poly numerator = p0 * den.pow(common - n0) + (lambda / one_minus) * (p1 * den.pow(common - (n1 - 1)));
  Poly psi0 = reduce(std::move(numerator), common, lambda, "psi0");
  return {std::move(psi0), std::move(psi1)};
}

SymbolPair conjugated_symbols(const ConjugationSpec& conj, const SymbolPair& symbols) {
  return std::visit(
      [&](const auto& c) -> SymbolPair {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CAlphaBeta>)
          return conjugated_symbols_c(c, symbols);
        else
          return conjugated_symbols_j(c, symbols);
      },
      conj);
}

double AxiomReport::max() const noexcept {
  return std::max({antilinearity, isometry, involution});
}

AxiomReport conjugation_axioms(const CAlphaBeta& conj, std::size_t test_degree,
                               std::uint64_t seed) {
  const std::size_t dim = test_degree + 1;
  const PhaseDiagonal c = phase_form(conj, dim);
  const PhaseDiagonal cc = compose(c, c);
  AxiomReport rep;
  for (const auto& v : random_unit_vectors(8, test_degree, dim, seed)) {
    rep.isometry = std::max(rep.isometry, std::abs(c.image_norm(v) - l2_norm(v)));
    std::vector<cplx> twice = cc.apply(v, false);
    for (std::size_t n = 0; n < dim; ++n) twice[n] -= v[n];
    rep.involution = std::max(rep.involution, l2_norm(twice));
    const std::vector<cplx> cv = c.apply(v, true);
    for (const cplx s : {cplx{0.0, 1.0}, cplx{2.0, 0.0}}) {
      std::vector<cplx> sv(v);
      for (auto& x : sv) x *= s;
      std::vector<cplx> lhs = c.apply(sv, true);
      for (std::size_t n = 0; n < dim; ++n) lhs[n] -= std::conj(s) * cv[n];
      rep.antilinearity = std::max(rep.antilinearity, l2_norm(lhs));
    }
  }
  return rep;
}

AxiomReport conjugation_axioms(const AntiLinearMatrix& matrix, std::size_t test_degree,
                               std::uint64_t seed) {
  if (test_degree >= matrix.dim())
    throw Error(ErrorKind::InvalidArgument, "test degree must be below the matrix dimension");
  return measure_axioms([&](const std::vector<cplx>& v) { return matrix.apply(v); },
                        matrix.dim(), test_degree, seed);
}

std::vector<CalibrationPoint> calibrate_truncation(const JBetaLambda& conj,
                                                   std::span<const std::size_t> truncations,
                                                   std::size_t test_degree) {
  std::vector<CalibrationPoint> out;
  for (const std::size_t N : truncations) {
    const AxiomReport rep = conjugation_axioms(j_matrix(conj, N), test_degree);
    out.push_back({N, rep.involution, rep.isometry, rep.involution_spill});
  }
  return out;
}

}  // namespace hardy

#include "hardy/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy {

namespace {

bool close(cplx a, cplx b) { return std::abs(a - b) <= kClassifierTolerance; }

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

/// Shared degree gate; empty string when deg psi0 <= 1 and deg psi1 <= 2.
std::string degree_violation(const SymbolPair& s) {
  if (s.psi0.degree() > 1) return "deg psi0 = " + std::to_string(s.psi0.degree()) + " > 1";
  if (s.psi1.degree() > 2) return "deg psi1 = " + std::to_string(s.psi1.degree()) + " > 2";
  return {};
}

std::vector<cplx> residual_grid() {
  std::vector<cplx> w{0.0};
  for (int k = 0; k < 4; ++k) w.push_back(std::polar(0.3, k * std::numbers::pi / 2));
  for (int k = 0; k < 5; ++k) w.push_back(std::polar(0.6, 2 * std::numbers::pi * k / 5 + 0.3));
  return w;
}

std::vector<HardyElement> residual_test_set(std::size_t N) {
  std::vector<HardyElement> out;
  for (const cplx w : residual_grid()) {
    out.push_back(kernel_coefficients({w, 0}, N));
    out.push_back(kernel_coefficients({w, 1}, N));
  }
  for (std::size_t k = 0; k <= N / 4; ++k) out.push_back(HardyElement::monomial(k, N));
  return out;
}

/// (E* v)_i for i < rows, from the conjugate transpose of the exact truncation.
std::vector<cplx> adjoint_rows(const CMatrix& t, const HardyElement& v, std::size_t rows) {
  std::vector<cplx> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < t.rows(); ++j) acc += std::conj(t(j, i)) * v[j];
    out[i] = acc;
  }
  return out;
}

double row_distance(const HardyElement& a, std::span<const cplx> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

void require_truncation(std::size_t N) {
  if (N < 32) throw Error(ErrorKind::InvalidArgument, "residual needs truncation N >= 32");
}

}  // namespace

Verdict<HermitianWitness> classify_hermitian(const SymbolPair& s) {
  Verdict<HermitianWitness> v;
  if (auto why = degree_violation(s); !why.empty()) {
    v.violation = why;
    return v;
  }
  const cplx a = s.psi0[0], b = s.psi0[1], c = s.psi1[1];
  if (std::abs(a.imag()) > kClassifierTolerance)
    v.violation = "a = psi0(0) is not real: " + describe(a);
  else if (std::abs(c.imag()) > kClassifierTolerance)
    v.violation = "c = psi1'(0) is not real: " + describe(c);
  else if (!close(s.psi1[0], std::conj(b)))
    v.violation = "psi1(0) = " + describe(s.psi1[0]) + " differs from conj(b) = " + describe(std::conj(b));
  else if (!close(s.psi1[2], b))
    v.violation = "quadratic coefficient of psi1 " + describe(s.psi1[2]) + " differs from b = " + describe(b);
  if (!v.violation.empty()) return v;
  v.yes = true;
  v.witness = HermitianWitness{a.real(), b, c.real()};
  return v;
}

Verdict<CWitness> classify_c_selfadjoint(const SymbolPair& s, cplx beta) {
  if (std::abs(std::abs(beta) - 1.0) > kUnimodularTolerance)
    throw Error(ErrorKind::InvalidArgument, "beta must be unimodular");
  Verdict<CWitness> v;
  if (auto why = degree_violation(s); !why.empty()) {
    v.violation = why;
    return v;
  }
  const cplx a = s.psi0[0], b = s.psi0[1], c = s.psi1[1];
  if (!close(s.psi1[0], b * beta))
    v.violation = "psi1(0) = " + describe(s.psi1[0]) + " differs from b beta = " + describe(b * beta);
  else if (!close(s.psi1[2], b))
    v.violation = "quadratic coefficient of psi1 " + describe(s.psi1[2]) + " differs from b = " + describe(b);
  if (!v.violation.empty()) return v;
  v.yes = true;
  v.witness = CWitness{a, b, c};
  return v;
}

Verdict<JWitness> classify_j_selfadjoint(const SymbolPair& s, cplx lambda) {
  if (lambda == cplx{} || !(std::abs(lambda) < 1.0))
    throw Error(ErrorKind::InvalidArgument, "lambda must satisfy 0 < |lambda| < 1");
  Verdict<JWitness> v;
  if (auto why = degree_violation(s); !why.empty()) {
    v.violation = why;
    return v;
  }
  const cplx a = s.psi0[0], b = s.psi0[1], c = s.psi1[1], d = s.psi1[0];
  const cplx required = -lambda * b / std::conj(lambda) - lambda * c;
  if (!close(d, required))
    v.violation = "psi1(0) = " + describe(d) + " differs from -lambda b / conj(lambda) - lambda c = " +
                  describe(required);
  else if (!close(s.psi1[2], b))
    v.violation = "quadratic coefficient of psi1 " + describe(s.psi1[2]) + " differs from b = " + describe(b);
  if (!v.violation.empty()) return v;
  v.yes = true;
  v.witness = JWitness{a, b, c, d};
  return v;
}

CAlphaBeta hermitian_to_conjugation(const SymbolPair& symbols) {
  const auto h = classify_hermitian(symbols);
  if (!h) throw Error(ErrorKind::NotHermitian, "symbols are not hermitian: " + h.violation);
  const cplx b = h.witness->b;
  if (std::abs(b) <= kClassifierTolerance) return CAlphaBeta(1.0, 1.0);
  // conj(b)/b normalized back onto the circle
  const cplx beta = std::conj(b) / b;
  return CAlphaBeta(1.0, beta / std::abs(beta));
}

double ResidualReport::route_disagreement() const noexcept {
  if (!exact_route || !sandwich_route) return 0.0;
  return std::abs(*exact_route - *sandwich_route);
}

ResidualReport residual(const SymbolPair& symbols, const ConjugationSpec& conj, std::size_t N) {
  require_truncation(N);
  const std::size_t rows = N / 2 + 1;
  const CMatrix t = truncated_matrix(symbols, N).entries;
  const auto tests = residual_test_set(N);

  ResidualReport rep;
  std::optional<SymbolPair> pushed;
  try {
    pushed = conjugated_symbols(conj, symbols);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPolynomial) throw;
    rep.not_polynomial = true;
  }

  double exact = 0.0;
  double sandwich = 0.0;
  for (const auto& v : tests) {
    const std::vector<cplx> adj = adjoint_rows(t, v, rows);
    if (pushed) exact = std::max(exact, row_distance(apply(*pushed, v), adj));

    HardyElement route = std::visit(
        [&](const auto& c) {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CAlphaBeta>) {
            return apply_c(c, apply(symbols, apply_c(c, v)).truncated(rows - 1));
          } else {
            const std::size_t inner = 2 * N;
            const HardyElement x = apply_j(c, v, inner);
            return apply_j(c, apply(symbols, x).truncated(inner - 1), rows - 1);
          }
        },
        conj);
    sandwich = std::max(sandwich, row_distance(route, adj));
  }

  rep.sandwich_route = sandwich;
  if (pushed) {
    rep.exact_route = exact;
    rep.value = exact;
  } else {
    rep.value = std::numeric_limits<double>::infinity();
  }
  return rep;
}

double hermitian_residual(const SymbolPair& symbols, std::size_t N) {
  require_truncation(N);
  const std::size_t rows = N / 2 + 1;
  const CMatrix t = truncated_matrix(symbols, N).entries;
  double worst = 0.0;
  for (const auto& v : residual_test_set(N))
    worst = std::max(worst, row_distance(apply(symbols, v), adjoint_rows(t, v, rows)));
  return worst;
}

ClassificationReport classify(const SymbolPair& symbols, cplx beta, std::optional<cplx> lambda,
                              std::optional<std::size_t> residual_truncation) {
  ClassificationReport rep;
  rep.hermitian = classify_hermitian(symbols);
  rep.beta = beta;
  rep.c_selfadjoint = classify_c_selfadjoint(symbols, beta);
  rep.lambda = lambda;
  if (lambda) rep.j_selfadjoint = classify_j_selfadjoint(symbols, *lambda);
  if (residual_truncation) {
    rep.numeric_residual = residual(symbols, CAlphaBeta(1.0, beta), *residual_truncation).value;
    if (lambda)
      rep.j_residual = residual(symbols, JBetaLambda(1.0, *lambda), *residual_truncation).value;
  }
  return rep;
}

}  // namespace hardy

#include "hardy/diffop.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr double kFamilyTolerance = 1e-12;

}  // namespace

Poly apply(const SymbolPair& symbols, const Poly& f) {
  return symbols.psi0 * f + symbols.psi1 * f.derivative();
}

HardyElement apply(const SymbolPair& symbols, const HardyElement& f) {
  const auto v = f.coeffs();
  const int d0 = symbols.psi0.degree();
  const int d1 = symbols.psi1.degree();
  const std::size_t N = f.truncation_degree();
  const std::size_t grow = static_cast<std::size_t>(std::max({d0, d1 - 1, 0}));
  HardyElement out(N + grow);
  auto w = out.coeffs();
  for (std::size_t j = 0; j <= N; ++j) {
    if (v[j] == cplx{}) continue;
    for (int k = 0; k <= d0; ++k) w[j + static_cast<std::size_t>(k)] += symbols.psi0[k] * v[j];
    if (j == 0) continue;
    const cplx dv = static_cast<double>(j) * v[j];
    for (int k = 0; k <= d1; ++k) w[j - 1 + static_cast<std::size_t>(k)] += symbols.psi1[k] * dv;
  }
  return out;
}

OperatorMatrix truncated_matrix(const SymbolPair& symbols, std::size_t N) {
  OperatorMatrix out;
  out.entries = CMatrix(N + 1, N + 1);
  const int d0 = symbols.psi0.degree();
  const int d1 = symbols.psi1.degree();

  for (std::size_t j = 0; j <= N; ++j) {
    const int jj = static_cast<int>(j);
    // E z^j = psi0 z^j + j psi1 z^(j-1)
    const int top = std::max(d0 >= 0 ? jj + d0 : -1, (d1 >= 0 && jj > 0) ? jj - 1 + d1 : -1);
    const int bottom = jj > 0 ? jj - 1 : 0;
    for (int i = bottom; i <= top; ++i) {
      cplx v = symbols.psi0[i - jj];
      if (jj > 0) v += static_cast<double>(jj) * symbols.psi1[i - jj + 1];
      if (static_cast<std::size_t>(i) <= N) {
        out.entries(static_cast<std::size_t>(i), j) = v;
      } else if (v != cplx{}) {
        ++out.spill.count;
        out.spill.max_modulus = std::max(out.spill.max_modulus, std::abs(v));
      }
    }
  }
  return out;
}

OperatorMatrix numeric_adjoint(const SymbolPair& symbols, std::size_t N) {
  OperatorMatrix m = truncated_matrix(symbols, N);
  m.entries = m.entries.adjoint();
  m.origin = MatrixOrigin::NumericAdjoint;
  return m;
}

bool in_adjoint_family(const SymbolPair& symbols) {
  return symbols.psi0.degree() <= 1 && symbols.psi1.degree() <= 2 &&
         std::abs(symbols.psi1[2] - symbols.psi0[1]) <= kFamilyTolerance;
}

SymbolPair adjoint_symbols(const SymbolPair& symbols) {
  if (symbols.psi0.degree() > 1 || symbols.psi1.degree() > 2)
    throw Error(ErrorKind::FamilyMismatch,
                "adjoint formula needs deg psi0 <= 1 and deg psi1 <= 2");
  if (!in_adjoint_family(symbols))
    throw Error(ErrorKind::FamilyMismatch,
                "quadratic coefficient of psi1 must equal linear coefficient of psi0");
  const cplx a = symbols.psi0[0];
  const cplx b = symbols.psi0[1];
  const cplx c = symbols.psi1[1];
  const cplx d = symbols.psi1[0];
  return {Poly({std::conj(a), std::conj(d)}),
          Poly({std::conj(b), std::conj(c), std::conj(d)})};
}

int KernelCombination::max_order() const noexcept {
  int m = -1;
  for (const auto& t : terms) m = std::max(m, t.order);
  return m;
}

cplx KernelCombination::coefficient(int order) const noexcept {
  for (const auto& t : terms)
    if (t.order == order) return t.coeff;
  return {};
}

HardyElement KernelCombination::expand(std::size_t N) const {
  HardyElement out(N);
  for (const auto& t : terms) {
    if (static_cast<std::size_t>(t.order) > N) continue;  // K^[m] vanishes below degree m
    out += t.coeff * kernel_coefficients({w, t.order}, N);
  }
  return out;
}

KernelCombination adjoint_on_kernel(const SymbolPair& symbols, cplx w, int m) {
  validate(KernelSpec{w, m});
  KernelCombination out{w, {}};
  auto push = [&](int order, cplx c) {
    if (c != cplx{}) out.terms.push_back({order, c});
  };

  push(0, std::conj(symbols.psi0.derivative_at(w, m)));
  for (int j = 1; j <= m; ++j) {
    const cplx v = binomial(m, j) * symbols.psi0.derivative_at(w, m - j) +
                   binomial(m, j - 1) * symbols.psi1.derivative_at(w, m - j + 1);
    push(j, std::conj(v));
  }
  push(m + 1, std::conj(symbols.psi1(w)));
  return out;
}

}  // namespace hardy

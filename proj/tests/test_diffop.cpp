#include <gtest/gtest.h>

#include "hardy/diffop.hpp"
#include "hardy/error.hpp"
#include "oracles.hpp"

using hardy::cplx;
using hardy::HardyElement;
using hardy::Poly;
using hardy::SymbolPair;

namespace {

constexpr cplx I{0.0, 1.0};

void expect_poly_near(const Poly& got, const Poly& want, double tol = 1e-14) {
  const int top = std::max(got.degree(), want.degree());
  for (int k = 0; k <= top; ++k) EXPECT_NEAR(std::abs(got[k] - want[k]), 0.0, tol) << "z^" << k;
}

/// Coupled-family symbols from (a, b, c, d).
SymbolPair family(cplx a, cplx b, cplx c, cplx d) { return {Poly({a, b}), Poly({d, c, b})}; }

TEST(Apply, EigenRelation) {
  const SymbolPair s{Poly({2.0}), Poly({0.0, 3.0})};
  EXPECT_EQ(hardy::apply(s, Poly::monomial(3)), Poly::monomial(3, 11.0));
}

TEST(Apply, ZeroSymbols) {
  const SymbolPair s{Poly(), Poly()};
  EXPECT_TRUE(hardy::apply(s, Poly({1.0, 2.0, 3.0})).is_zero());
}

TEST(Apply, ConstantInput) {
  const SymbolPair s{Poly({0.0, 1.0}), Poly({1.0, 0.0, 1.0})};
  EXPECT_EQ(hardy::apply(s, Poly({1.0})), Poly({0.0, 1.0}));
}

TEST(Apply, MatchesOracleOnRandomData) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p0 = rng.coeffs(rng.integer(0, 3));
    const auto p1 = rng.coeffs(rng.integer(0, 4));
    const auto f = rng.coeffs(rng.integer(0, 10));
    const auto want = oracle::apply_operator(p0, p1, f);
    const Poly got = hardy::apply(SymbolPair{Poly(p0), Poly(p1)}, Poly(f));
    for (std::size_t k = 0; k < want.size(); ++k)
      EXPECT_NEAR(std::abs(got[static_cast<int>(k)] - want[k]), 0.0, 1e-12);
    const HardyElement fe(f);
    const HardyElement ge = hardy::apply(SymbolPair{Poly(p0), Poly(p1)}, fe);
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_NEAR(std::abs(ge[k] - want[k]), 0.0, 1e-12);
  }
}

TEST(TruncatedMatrix, Diagonal) {
  const auto m = hardy::truncated_matrix({Poly({2.0}), Poly({0.0, 3.0})}, 3);
  ASSERT_EQ(m.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(m.entries(i, j), i == j ? cplx(2.0 + 3.0 * static_cast<double>(i)) : cplx{});
  EXPECT_EQ(m.origin, hardy::MatrixOrigin::Truncation);
}

TEST(TruncatedMatrix, Bidiagonal) {
  const auto m = hardy::truncated_matrix({Poly(), Poly({-0.5, 1.0})}, 2);
  const cplx want[3][3] = {{0.0, -0.5, 0.0}, {0.0, 1.0, -1.0}, {0.0, 0.0, 2.0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.entries(i, j), want[i][j]);
  EXPECT_EQ(m.spill.count, 0u);
}

TEST(TruncatedMatrix, Identity) {
  for (std::size_t n : {0u, 1u, 7u})
    EXPECT_EQ(hardy::truncated_matrix({Poly({1.0}), Poly()}, n).entries, hardy::CMatrix::identity(n + 1));
}

TEST(TruncatedMatrix, SpillReportsDroppedMass) {
  // z * z^N falls outside the section.
  const auto m = hardy::truncated_matrix({Poly({0.0, 2.0}), Poly()}, 4);
  EXPECT_GE(m.spill.count, 1u);
  EXPECT_DOUBLE_EQ(m.spill.max_modulus, 2.0);
}

TEST(TruncatedMatrix, ColumnsAreImagesOfMonomials) {
  oracle::Rng rng(5);
  const SymbolPair s{rng.poly(2), rng.poly(3)};
  const std::size_t N = 10;
  const auto m = hardy::truncated_matrix(s, N);
  for (std::size_t j = 0; j <= N; ++j) {
    const Poly col = hardy::apply(s, Poly::monomial(static_cast<int>(j)));
    for (std::size_t i = 0; i <= N; ++i)
      EXPECT_NEAR(std::abs(m.entries(i, j) - col[static_cast<int>(i)]), 0.0, 1e-13);
  }
}

TEST(AdjointSymbols, WorkedExample) {
  const auto adj = hardy::adjoint_symbols(family(1.0, I, 2.0, 3.0));
  expect_poly_near(adj.psi0, Poly({1.0, 3.0}));
  expect_poly_near(adj.psi1, Poly({-I, 2.0, 3.0}));
}

TEST(AdjointSymbols, ZeroOperator) {
  const auto adj = hardy::adjoint_symbols({Poly(), Poly()});
  EXPECT_TRUE(adj.psi0.is_zero());
  EXPECT_TRUE(adj.psi1.is_zero());
}

TEST(AdjointSymbols, HermitianFixedPoint) {
  const SymbolPair s{Poly({2.0}), Poly({0.0, 3.0})};
  EXPECT_EQ(hardy::adjoint_symbols(s), s);
}

TEST(AdjointSymbols, IsAnInvolution) {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolPair s = family(rng.box(2), rng.box(2), rng.box(2), rng.box(2));
    const SymbolPair back = hardy::adjoint_symbols(hardy::adjoint_symbols(s));
    expect_poly_near(back.psi0, s.psi0);
    expect_poly_near(back.psi1, s.psi1);
  }
}

TEST(AdjointSymbols, FamilyMismatch) {
  for (const SymbolPair& s : {SymbolPair{Poly({0.0, 1.0}), Poly({0.0, 0.0, 2.0})},
                              SymbolPair{Poly({0.0, 0.0, 1.0}), Poly()},
                              SymbolPair{Poly(), Poly({0.0, 0.0, 0.0, 1.0})}}) {
    EXPECT_FALSE(hardy::in_adjoint_family(s));
    try {
      hardy::adjoint_symbols(s);
      FAIL();
    } catch (const hardy::Error& e) {
      EXPECT_EQ(e.kind(), hardy::ErrorKind::FamilyMismatch);
    }
  }
}

TEST(AdjointSymbols, InteriorBlockMatchesConjugateTranspose) {
  oracle::Rng rng(17);
  const std::size_t N = 40;
  for (int trial = 0; trial < 10; ++trial) {
    const SymbolPair s = family(rng.box(2), rng.box(2), rng.box(2), rng.box(2));
    const auto lhs = hardy::truncated_matrix(s, N).entries.adjoint().block(0, 0, N - 1, N - 1);
    const auto rhs = hardy::truncated_matrix(hardy::adjoint_symbols(s), N).entries.block(0, 0, N - 1, N - 1);
    EXPECT_LE((lhs - rhs).max_abs(), 1e-12);
  }
}

TEST(NumericAdjoint, LabeledAndConjugateTransposed) {
  const SymbolPair s{Poly({0.0, 0.0, 1.0}), Poly({I})};
  const auto num = hardy::numeric_adjoint(s, 6);
  EXPECT_EQ(num.origin, hardy::MatrixOrigin::NumericAdjoint);
  EXPECT_EQ(num.entries, hardy::truncated_matrix(s, 6).entries.adjoint());
}

TEST(AdjointOnKernel, BaseCase) {
  const auto k = hardy::adjoint_on_kernel({Poly({2.0}), Poly({0.0, 3.0})}, 0.5, 0);
  EXPECT_NEAR(std::abs(k.coefficient(0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.coefficient(1) - 1.5), 0.0, 1e-15);
  EXPECT_EQ(k.max_order(), 1);
}

TEST(AdjointOnKernel, ZeroSymbolsGiveEmptyCombination) {
  EXPECT_TRUE(hardy::adjoint_on_kernel({Poly(), Poly()}, {0.1, 0.2}, 3).empty());
}

TEST(AdjointOnKernel, OrderOneAtOrigin) {
  const SymbolPair s{Poly({0.0, 1.0}), Poly({1.0, 0.0, 1.0})};
  const auto k = hardy::adjoint_on_kernel(s, 0.0, 1);
  EXPECT_NEAR(std::abs(k.coefficient(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.coefficient(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.coefficient(2) - 1.0), 0.0, 1e-15);
  // (Eg)'(0) for g = 1, z, z^2, z^3 against <g, E* K_0^[1]>.
  const auto kk = k.expand(8);
  for (int n = 0; n <= 3; ++n) {
    const Poly eg = hardy::apply(s, Poly::monomial(n));
    EXPECT_NEAR(std::abs(eg.derivative_at(0.0, 1) -
                         hardy::inner_product(HardyElement::monomial(static_cast<std::size_t>(n), 8), kk)),
                0.0, 1e-14);
  }
}

TEST(AdjointOnKernel, RejectsOutsideDisk) {
  EXPECT_THROW(hardy::adjoint_on_kernel({Poly({1.0}), Poly()}, 1.0, 0), hardy::Error);
}

TEST(AdjointOnKernel, BilinearIdentityOnRandomData) {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p0 = rng.coeffs(rng.integer(0, 3));
    const auto p1 = rng.coeffs(rng.integer(0, 4));
    const SymbolPair s{Poly(p0), Poly(p1)};
    const cplx w = rng.disk(0.8);
    const int m = rng.integer(0, 4);
    const auto g = rng.coeffs(rng.integer(0, 12));
    const cplx lhs = oracle::derivative(oracle::apply_operator(p0, p1, g), w, m);
    const cplx rhs = hardy::inner_product(HardyElement(g), hardy::adjoint_on_kernel(s, w, m).expand(300));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Closedness, PolynomialLimitsCommuteWithApply) {
  // f_n = partial sums of a fixed polynomial f: E f_n reaches E f exactly once n >= deg f.
  const SymbolPair s{Poly({1.0, I}), Poly({2.0, 0.0, I})};
  const Poly f({1.0, -1.0, 0.5, 0.25});
  for (int n = 0; n <= 6; ++n) {
    std::vector<cplx> head(f.coeffs().begin(), f.coeffs().begin() + std::min(n + 1, f.degree() + 1));
    if (n >= f.degree()) EXPECT_EQ(hardy::apply(s, Poly(head)), hardy::apply(s, f));
  }
}

}  // namespace

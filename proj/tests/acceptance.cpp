// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hardy/cli.hpp"
#include "hardy/conjugation.hpp"
#include "hardy/diffop.hpp"
#include "hardy/eigen.hpp"
#include "hardy/error.hpp"
#include "hardy/spectrum.hpp"
#include "hardy/symmetry.hpp"
#include "oracles.hpp"

using hardy::cplx;
using hardy::HardyElement;
using hardy::Poly;
using hardy::SymbolPair;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

/// Points with |z| <= radius: the origin plus rings at radius/3, 2radius/3, radius.
std::vector<cplx> disk_grid(double radius) {
  std::vector<cplx> g{0.0};
  for (int ring = 1; ring <= 3; ++ring)
    for (int k = 0; k < 8; ++k)
      g.push_back(std::polar(radius * ring / 3.0, 2 * std::numbers::pi * k / 8 + 0.1 * ring));
  return g;
}

SymbolPair c_family(oracle::Rng& rng, cplx beta) {
  const cplx a = rng.box(2), b = rng.box(2), c = rng.box(2);
  return {Poly({a, b}), Poly({b * beta, c, b})};
}

SymbolPair j_family(oracle::Rng& rng, cplx lambda) {
  const cplx a = rng.box(2), b = rng.box(2), c = rng.box(2);
  const cplx d = -lambda * b / std::conj(lambda) - lambda * c;
  return {Poly({a, b}), Poly({d, c, b})};
}

SymbolPair hermitian_family(oracle::Rng& rng) {
  const double a = rng.uniform(-2, 2), c = rng.uniform(-2, 2);
  const cplx b = rng.box(2);
  return {Poly({a, b}), Poly({std::conj(b), c, b})};
}

/// Adds 0.1 in a random direction to psi1's constant or quadratic coefficient.
SymbolPair perturb_coupling(oracle::Rng& rng, SymbolPair s) {
  std::vector<cplx> c(s.psi1.coeffs());
  c.resize(3);
  c[rng.integer(0, 1) == 0 ? 0 : 2] += 0.1 * rng.unit();
  s.psi1 = Poly(c);
  return s;
}

cplx random_lambda(oracle::Rng& rng) { return std::polar(rng.uniform(0.05, 0.5), rng.uniform(0, 2 * std::numbers::pi)); }

Outcome reproducing_kernel() {
  oracle::Rng rng(101);
  const auto grid = disk_grid(0.9);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = rng.integer(0, 32);
    auto c = rng.coeffs(deg);
    double norm = 0.0;
    for (const auto& x : c) norm += std::norm(x);
    for (auto& x : c) x /= std::sqrt(norm);
    const HardyElement f(c);
    for (const cplx z : grid)
      for (int m = 0; m <= 3; ++m) {
        const cplx got = hardy::inner_product(f, hardy::kernel_coefficients({z, m}, 32));
        worst = std::max(worst, std::abs(got - oracle::derivative(c, z, m)));
      }
  }
  return {worst <= 1e-10, fmt("max |<f,K_z^[m]> - f^(m)(z)| = %.2e over 200 unit-norm f, %zu points, m<=3 (bound 1e-10)",
                              worst, grid.size())};
}

Outcome symbolic_adjoint() {
  oracle::Rng rng(202);
  const std::size_t N = 64;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const cplx a = rng.disk(2), b = rng.disk(2), c = rng.disk(2), d = rng.disk(2);
    const SymbolPair s{Poly({a, b}), Poly({d, c, b})};
    const auto lhs = hardy::truncated_matrix(s, N).entries.adjoint().block(0, 0, N - 2, N - 2);
    const auto rhs = hardy::truncated_matrix(hardy::adjoint_symbols(s), N).entries.block(0, 0, N - 2, N - 2);
    worst = std::max(worst, (lhs - rhs).max_abs());
  }
  return {worst <= 1e-12, fmt("max entry gap on the interior %zu-block = %.2e over 100 draws (bound 1e-12)", N - 2, worst)};
}

Outcome adjoint_on_kernels() {
  oracle::Rng rng(303);
  const auto grid = disk_grid(0.8);
  double worst = 0.0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const auto p0 = rng.coeffs(rng.integer(0, 3));
    const auto p1 = rng.coeffs(rng.integer(0, 4));
    const SymbolPair s{Poly(p0), Poly(p1)};
    for (const cplx w : grid)
      for (int m = 0; m <= 4; ++m) {
        const HardyElement comb = hardy::adjoint_on_kernel(s, w, m).expand(24);
        for (int gi = 0; gi < 50; ++gi) {
          auto g = rng.coeffs(rng.integer(0, 12));
          double norm = 0.0;
          for (const auto& x : g) norm += std::norm(x);
          for (auto& x : g) x /= std::sqrt(norm);
          const cplx lhs = hardy::inner_product(HardyElement(oracle::apply_operator(p0, p1, g)),
                                                hardy::kernel_coefficients({w, m}, 24));
          const cplx rhs = hardy::inner_product(HardyElement(g), comb);
          worst = std::max(worst, std::abs(lhs - rhs));
          ++checks;
        }
      }
  }
  return {worst <= 1e-10, fmt("max |<Eg,K_w^[m]> - <g,E*K_w^[m]>| = %.2e over %zu checks, |w|<=0.8, m<=4 (bound 1e-10)",
                              worst, checks)};
}

Outcome conjugation_axioms() {
  oracle::Rng rng(404);
  double c_worst = 0.0;
  for (int trial = 0; trial < 50; ++trial)
    c_worst = std::max(c_worst, hardy::conjugation_axioms(hardy::CAlphaBeta(rng.unit(), rng.unit()), 32).max());

  std::vector<cplx> lambdas{0.5, -0.5, cplx(0.0, 0.5), cplx(0.3, -0.4), cplx(0.25, 0.25)};
  for (int i = 0; i < 10; ++i) lambdas.push_back(random_lambda(rng));
  const std::vector<std::size_t> ns{32, 64, 128, 256};
  constexpr double kFloor = 1e-13;
  double j_worst = 0.0;
  bool monotone = true;
  for (const cplx lam : lambdas) {
    const hardy::JBetaLambda j(rng.unit(), lam);
    j_worst = std::max(j_worst, hardy::conjugation_axioms(hardy::j_matrix(j, 128), 32).max());
    const auto pts = hardy::calibrate_truncation(j, ns, 32);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double prev = std::max(pts[i - 1].involution, pts[i - 1].isometry);
      const double cur = std::max(pts[i].involution, pts[i].isometry);
      if (!(cur < prev || cur <= kFloor)) monotone = false;
    }
  }
  const bool pass = c_worst == 0.0 && j_worst <= 1e-8 && monotone;
  return {pass, fmt("C max residual = %.1e (must be 0); J max residual at N=128 = %.2e over %zu lambdas, |lambda|<=0.5 "
                    "(bound 1e-8); decrease over N=32..256 %s",
                    c_worst, j_worst, lambdas.size(), monotone ? "monotone" : "NOT monotone")};
}

Outcome classifier_agreement() {
  oracle::Rng rng(505);
  int bad_in = 0, bad_out = 0;
  double in_worst = 0.0, out_least = std::numeric_limits<double>::infinity();
  auto record = [&](bool yes, double r, bool in_family) {
    if (in_family) {
      in_worst = std::max(in_worst, r);
      if (!(yes && r <= 1e-7)) ++bad_in;
    } else {
      out_least = std::min(out_least, r);
      if (!(!yes && r >= 1e-3)) ++bad_out;
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    const cplx beta = rng.unit();
    const SymbolPair s = c_family(rng, beta);
    const hardy::CAlphaBeta c(rng.unit(), beta);
    record(hardy::classify_c_selfadjoint(s, beta).yes, hardy::residual(s, c, 64).value, true);
    const SymbolPair p = perturb_coupling(rng, s);
    record(hardy::classify_c_selfadjoint(p, beta).yes, hardy::residual(p, c, 64).value, false);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const cplx lam = random_lambda(rng);
    const SymbolPair s = j_family(rng, lam);
    const hardy::JBetaLambda j(rng.unit(), lam);
    record(hardy::classify_j_selfadjoint(s, lam).yes, hardy::residual(s, j, 128).value, true);
    const SymbolPair p = perturb_coupling(rng, s);
    record(hardy::classify_j_selfadjoint(p, lam).yes, hardy::residual(p, j, 128).value, false);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const SymbolPair s = hermitian_family(rng);
    record(hardy::classify_hermitian(s).yes, hardy::hermitian_residual(s, 64), true);
    const SymbolPair p = perturb_coupling(rng, s);
    record(hardy::classify_hermitian(p).yes, hardy::hermitian_residual(p, 64), false);
  }
  return {bad_in == 0 && bad_out == 0,
          fmt("in-family: %d/300 disagree, max residual %.2e (bound 1e-7); perturbed: %d/300 disagree, "
              "min residual %.2e (bound 1e-3)",
              bad_in, in_worst, bad_out, out_least)};
}

Outcome hermitian_containment() {
  oracle::Rng rng(606);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const SymbolPair s = hermitian_family(rng);
    const auto conj = hardy::hermitian_to_conjugation(s);
    if (!hardy::classify_c_selfadjoint(s, conj.beta()).yes) ++failures;
  }
  const cplx i{0.0, 1.0};
  const SymbolPair witness{Poly({0.0, i}), Poly({i, 0.0, i})};
  const bool strict = hardy::classify_c_selfadjoint(witness, 1.0).yes && !hardy::classify_hermitian(witness).yes;
  return {failures == 0 && strict,
          fmt("%d/100 hermitian draws fail C-classification; witness (iz, i+iz^2) %s", failures,
              strict ? "is C-selfadjoint and not hermitian" : "does NOT separate the classes")};
}

Outcome spectrum_suite() {
  const SymbolPair shift{Poly(), Poly({-0.5, 1.0})};
  const auto ev = hardy::truncated_eigenvalues(hardy::truncated_matrix(shift, 32));
  bool exact = ev.size() == 33;
  for (std::size_t k = 0; exact && k <= 32; ++k) exact = ev[k] == cplx(static_cast<double>(k));

  oracle::Rng rng(707);
  double diag_worst = 0.0, res_worst = 0.0;
  int in = 0, out = 0, unsure = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const cplx beta = rng.unit();
    const cplx u = std::polar(rng.uniform(0.1, 0.8), rng.uniform(0, 2 * std::numbers::pi));
    const cplx a = rng.box(1), b = rng.box(1);
    const cplx c = -(b * beta + b * u * u) / u;
    const SymbolPair s{Poly({a, b}), Poly({b * beta, c, b})};
    const int m = 5;
    const auto t = hardy::kernel_basis_matrix(s, u, m);
    const cplx step = s.psi1.derivative_at(u, 1);
    for (int j = 0; j <= m; ++j)
      diag_worst = std::max(diag_worst, std::abs(t.entries(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) -
                                                 std::conj(s.psi0(u) + static_cast<double>(j) * step)));
    for (int k = 0; k <= 3; ++k) {
      try {
        const auto g = hardy::eigenfunction(s, u, k, 128);
        if (g.membership == hardy::Membership::In) {
          ++in;
          res_worst = std::max(res_worst, hardy::eigen_residual(s, g));
        } else if (g.membership == hardy::Membership::Out) {
          ++out;
        } else {
          ++unsure;
        }
      } catch (const hardy::Error&) {
        ++out;
      }
    }
  }
  return {exact && diag_worst <= 1e-10 && res_worst <= 1e-9 && in > 0,
          fmt("N=32 shift eigenvalues %s; kernel-basis diagonal gap %.2e (bound 1e-10); eigenfunctions "
              "in/out/inconclusive = %d/%d/%d, max residual of 'in' cases %.2e (bound 1e-9)",
              exact ? "exactly {0..32}" : "NOT exact", diag_worst, in, out, unsure, res_worst)};
}

Outcome eigensolver_oracle() {
  oracle::Rng rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
    hardy::CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.box(1.0);
    worst = std::max(worst, oracle::best_pairing(hardy::eigenvalues(a), oracle::durand_kerner(oracle::charpoly(a))));
  }
  return {worst <= 1e-8, fmt("max paired distance QR vs characteristic-polynomial roots = %.2e over 100 matrices (bound 1e-8)",
                             worst)};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome cli_golden() {
  const std::string dir = HARDY_GOLDEN_DIR;
  int mismatches = 0;
  for (const auto& [command, stem] : std::vector<std::pair<std::string, std::string>>{
           {"classify", "classify_witness"}, {"adjoint", "adjoint_family"}, {"spectrum", "spectrum_shift"}}) {
    const std::string golden = slurp(dir + "/" + stem + ".golden.json");
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      std::istringstream in;
      const int code = hardy::cli::run({command, "--input", dir + "/" + stem + ".input.json"}, in, out, err);
      if (code != 0 || golden.empty() || out.str() != golden) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%d/6 runs differ from the golden bytes (classify, adjoint, spectrum; twice each)", mismatches)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 reproducing kernel", reproducing_kernel},
      {"2 symbolic adjoint", symbolic_adjoint},
      {"3 adjoint on kernels", adjoint_on_kernels},
      {"4 conjugation axioms", conjugation_axioms},
      {"5 classifier/residual agreement", classifier_agreement},
      {"6 hermitian containment", hermitian_containment},
      {"7 spectrum", spectrum_suite},
      {"8 eigensolver oracle", eigensolver_oracle},
      {"9 CLI golden files", cli_golden},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 30.0) {
      o.pass = false;
      o.detail += " [exceeded 30 s]";
    }
    std::printf("[%s] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

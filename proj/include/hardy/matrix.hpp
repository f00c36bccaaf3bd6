#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Small and deliberately plain: the
/// operator matrices in this library are at most a few hundred wide.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  /// Conjugate transpose.
  CMatrix adjoint() const;
  /// Entrywise complex conjugate.
  CMatrix conjugate() const;
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                std::size_t nc) const;

  /// Largest entry modulus; 0 for an empty matrix.
  double max_abs() const;

  std::vector<cplx> operator*(std::span<const cplx> v) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Euclidean norm of a coefficient vector.
double l2_norm(std::span<const cplx> v);

}  // namespace hardy

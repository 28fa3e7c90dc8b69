// Dense row-major matrix of Scalars. Carries no basis tag; callers track
// which basis a matrix is expressed in.
#pragma once

#include <cstddef>
#include <vector>

#include "nbz/scalar.hpp"

namespace nbz {

class DenseMatrix {
  public:
    DenseMatrix(std::size_t rows, std::size_t cols, FieldMode mode);
    static DenseMatrix identity(std::size_t n, FieldMode mode);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldMode mode() const noexcept { return mode_; }

    Scalar& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    DenseMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) {
        return !(a == b);
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    FieldMode mode_;
    std::vector<Scalar> entries_;
};

// Plain cubic product; operand dimensions and field modes must agree.
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace nbz

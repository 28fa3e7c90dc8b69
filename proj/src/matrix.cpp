#include "nbz/matrix.hpp"

namespace nbz {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, FieldMode mode)
    : rows_(rows), cols_(cols), mode_(mode),
      entries_(rows * cols, Scalar::zero(mode)) {
    if (rows == 0 || cols == 0)
        throw precondition_error("matrix dimensions must be positive");
}

DenseMatrix DenseMatrix::identity(std::size_t n, FieldMode mode) {
    DenseMatrix m(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(cols_, rows_, mode_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool DenseMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool DenseMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k]) return false;
    return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw precondition_error("matrix product dimension mismatch");
    if (a.mode() != b.mode())
        throw precondition_error("matrix product field mode mismatch");
    DenseMatrix out(a.rows(), b.cols(), a.mode());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k)
                acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace nbz

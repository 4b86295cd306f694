#pragma once

#include <optional>
#include <vector>

#include "hennings/scalar.hpp"

namespace hennings {

/// Dense matrix over the exact ground field, just big enough for the
/// integral solver, antipode inversion and elementwise unit solves.
class Matrix {
public:
    Matrix(int rows, int cols, const FieldPtr& field)
        : rows_(rows), cols_(cols), field_(field),
          a_(static_cast<size_t>(rows) * cols, Scalar::zero(field)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_, cols_;
    FieldPtr field_;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form in place; returns the pivot column per row rank.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/// Basis of the right nullspace {x : Mx = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix m);

/// Solves Mx = b exactly; empty optional when inconsistent.
std::optional<std::vector<Scalar>> solve(Matrix m, const std::vector<Scalar>& b);

/// Exact inverse of a square matrix; empty optional when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hennings

#include "hennings/linalg.hpp"

namespace hennings {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> nullspace(Matrix m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(Matrix m, const std::vector<Scalar>& b) {
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[static_cast<size_t>(r)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    int d = m.rows();
    Matrix aug(d, 2 * d, m.field());
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, d + r) = Scalar::one(m.field());
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != d || pivots[d - 1] != d - 1) return std::nullopt;
    Matrix inv(d, d, m.field());
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) inv.at(r, c) = aug.at(r, d + c);
    return inv;
}

}  // namespace hennings

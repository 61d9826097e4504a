#include "hopfyd/linsolve.hpp"

#include <stdexcept>

namespace hopfyd {

namespace {

long fieldOf(const Matrix& m) {
    return m.empty() || m[0].empty() ? 0 : m[0][0].field();
}

}  // namespace

std::vector<int> rowReduce(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col].isZero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Scalar inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].isZero()) continue;
            Scalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int matrixRank(Matrix m) { return static_cast<int>(rowReduce(m).size()); }

std::optional<Vector> solveLinear(const Matrix& a, const Vector& b) {
    size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solveLinear: shape mismatch");
    size_t cols = rows == 0 ? 0 : a[0].size();
    long p = rows ? b[0].field() : 0;
    Matrix aug(rows, Vector(cols + 1, Scalar::zero(p)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rowReduce(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    Vector x(cols, Scalar::zero(p));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::vector<Vector> kernelBasis(const Matrix& a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    long p = fieldOf(a);
    Matrix m = a;
    auto pivots = rowReduce(m);
    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<Vector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (isPivot[free]) continue;
        Vector v(cols, Scalar::zero(p));
        v[free] = Scalar::one(p);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverseMatrix(const Matrix& a) {
    size_t n = a.size();
    long p = fieldOf(a);
    Matrix aug(n, Vector(2 * n, Scalar::zero(p)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverseMatrix: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Scalar::one(p);
    }
    auto pivots = rowReduce(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != static_cast<int>(n) - 1))
        return std::nullopt;
    Matrix inv(n, Vector(n, Scalar::zero(p)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Vector matVec(const Matrix& a, const Vector& x) {
    size_t rows = a.size();
    long p = x.empty() ? 0 : x[0].field();
    Vector y(rows, Scalar::zero(p));
    for (size_t i = 0; i < rows; ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("matVec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

}  // namespace hopfyd

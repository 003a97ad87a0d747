#include "stringcubes/linalg.hpp"

#include <vector>

namespace stringcubes::linalg {

namespace {

// Row echelon reduction in place. Returns the pivot columns, in order.
std::vector<int> echelon(MatrixXr& A)
{
    const Eigen::Index rows = A.rows(), cols = A.cols();
    std::vector<int> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (A(i, c) != 0) { p = i; break; }
        }
        if (p < 0)
            continue;
        if (p != r)
            A.row(p).swap(A.row(r));
        const Rational inv = Rational(1) / A(r, c);
        for (Eigen::Index j = c; j < cols; ++j)
            A(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || A(i, c) == 0)
                continue;
            const Rational f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                A(i, j) -= f * A(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

bool solve_square(MatrixXr A, VectorXr b, VectorXr& x)
{
    const Eigen::Index n = A.rows();
    if (A.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_square: shape mismatch");
    MatrixXr aug(n, n + 1);
    aug.leftCols(n) = A;
    aug.col(n) = b;
    const auto pivots = echelon(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
        return false;
    x = aug.col(n);
    return true;
}

int rank(MatrixXr A)
{
    return static_cast<int>(echelon(A).size());
}

Rational determinant(MatrixXr A)
{
    const Eigen::Index n = A.rows();
    if (A.cols() != n)
        throw std::invalid_argument("determinant: matrix not square");
    Rational det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (A(i, c) != 0) { p = i; break; }
        }
        if (p < 0)
            return 0;
        if (p != c) {
            A.row(p).swap(A.row(c));
            det = -det;
        }
        det *= A(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (A(i, c) == 0)
                continue;
            const Rational f = A(i, c) / A(c, c);
            for (Eigen::Index j = c; j < n; ++j)
                A(i, j) -= f * A(c, j);
        }
    }
    return det;
}

MatrixXr nullspace(const MatrixXr& A)
{
    MatrixXr R = A;
    const auto pivots = echelon(R);
    const Eigen::Index cols = A.cols();
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(static_cast<int>(c));
        }
    }
    MatrixXr basis(cols, static_cast<Eigen::Index>(free_cols.size()));
    basis.setZero();
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis(f, static_cast<Eigen::Index>(k)) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], static_cast<Eigen::Index>(k)) = -R(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

VectorXz primitive(const VectorXr& v)
{
    const Eigen::Index n = v.size();
    Integer lcm_den = 1;
    for (Eigen::Index i = 0; i < n; ++i)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v(i)));
    VectorXz w(n);
    Integer g = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        w(i) = numerator(v(i)) * (lcm_den / denominator(v(i)));
        g = boost::multiprecision::gcd(g, w(i));
    }
    if (g > 1)
        for (Eigen::Index i = 0; i < n; ++i)
            w(i) /= g;
    return w;
}

MatrixXz integer_kernel(const MatrixXz& A)
{
    const Eigen::Index rows = A.rows(), n = A.cols();
    MatrixXz M = A;
    MatrixXz U = MatrixXz::Identity(n, n);
    Eigen::Index pivot = 0;
    for (Eigen::Index r = 0; r < rows && pivot < n; ++r) {
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index j = pivot; j < n; ++j) {
                if (M(r, j) == 0)
                    continue;
                if (best < 0 || abs(M(r, j)) < abs(M(r, best)))
                    best = j;
            }
            if (best < 0)
                break;
            if (best != pivot) {
                M.col(best).swap(M.col(pivot));
                U.col(best).swap(U.col(pivot));
            }
            bool cleared = true;
            for (Eigen::Index j = pivot + 1; j < n; ++j) {
                if (M(r, j) == 0)
                    continue;
                const Integer q = M(r, j) / M(r, pivot);  // truncated division
                if (q != 0) {
                    M.col(j) -= q * M.col(pivot);
                    U.col(j) -= q * U.col(pivot);
                }
                if (M(r, j) != 0)
                    cleared = false;
            }
            if (cleared) {
                ++pivot;
                break;
            }
        }
    }
    return U.rightCols(n - pivot);
}

}  // namespace stringcubes::linalg

#include "stringcubes/lp.hpp"

#include <limits>
#include <vector>

namespace stringcubes::lp {

namespace {

// Tableau simplex over the split variables y = [u; v], x = u - v, with one
// slack per row and an optional phase-1 auxiliary column at the end.
class Simplex {
  public:
    Simplex(const MatrixXr& A, const VectorXr& b)
        : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())),
          cols_(2 * n_ + m_ + 1), aux_(2 * n_ + m_)
    {
        T_.setZero(m_, cols_);
        rhs_ = b;
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) {
                T_(i, j) = A(i, j);
                T_(i, n_ + j) = -A(i, j);
            }
            T_(i, 2 * n_ + i) = 1;
            T_(i, aux_) = -1;
            basis_[i] = 2 * n_ + i;
        }
    }

    // Returns false when the constraint system is infeasible.
    bool phase1()
    {
        int worst = -1;
        for (int i = 0; i < m_; ++i)
            if (rhs_(i) < 0 && (worst < 0 || rhs_(i) < rhs_(worst)))
                worst = i;
        if (worst < 0)
            return true;

        obj_.setZero(cols_);
        obj_(aux_) = -1;
        objval_ = 0;
        pivot(worst, aux_);
        run(/*allow_aux=*/true);
        if (objval_ < 0)
            return false;
        // Drive the auxiliary out of the basis; it sits at value zero, so
        // these pivots are degenerate and keep the tableau feasible. A row
        // with no eligible column is an implied "aux = 0" identity and can
        // never change again.
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] != aux_)
                continue;
            for (int j = 0; j < cols_; ++j) {
                if (j != aux_ && T_(i, j) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        return true;
    }

    // Maximizes c over x = u - v. Requires a feasible tableau.
    Status phase2(const VectorXr& c)
    {
        obj_.setZero(cols_);
        for (int j = 0; j < n_; ++j) {
            obj_(j) = c(j);
            obj_(n_ + j) = -c(j);
        }
        objval_ = 0;
        for (int i = 0; i < m_; ++i) {
            const int k = basis_[i];
            if (obj_(k) != 0) {
                const Rational f = obj_(k);
                objval_ += f * rhs_(i);
                for (int j = 0; j < cols_; ++j)
                    obj_(j) -= f * T_(i, j);
                obj_(k) = 0;  // clear exactly, no drift possible but be tidy
            }
        }
        return run(/*allow_aux=*/false);
    }

    Rational objective() const { return objval_; }

    VectorXr point() const
    {
        VectorXr y = VectorXr::Zero(cols_);
        for (int i = 0; i < m_; ++i)
            y(basis_[i]) = rhs_(i);
        VectorXr x(n_);
        for (int j = 0; j < n_; ++j)
            x(j) = y(j) - y(n_ + j);
        return x;
    }

    VectorXr ray() const { return ray_; }

  private:
    void pivot(int row, int col)
    {
        const Rational p = T_(row, col);
        for (int j = 0; j < cols_; ++j)
            T_(row, j) /= p;
        rhs_(row) /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || T_(i, col) == 0)
                continue;
            const Rational f = T_(i, col);
            for (int j = 0; j < cols_; ++j)
                T_(i, j) -= f * T_(row, j);
            rhs_(i) -= f * rhs_(row);
        }
        if (obj_.size() == cols_ && obj_(col) != 0) {
            const Rational f = obj_(col);
            for (int j = 0; j < cols_; ++j)
                obj_(j) -= f * T_(row, j);
            objval_ += f * rhs_(row);
        }
        basis_[row] = col;
    }

    Status run(bool allow_aux)
    {
        std::vector<char> in_basis(cols_, 0);
        while (true) {
            for (int i = 0; i < m_; ++i)
                in_basis[basis_[i]] = 1;
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (in_basis[j] || (j == aux_ && !allow_aux))
                    continue;
                if (obj_(j) > 0) { enter = j; break; }  // Bland: smallest index
            }
            for (int i = 0; i < m_; ++i)
                in_basis[basis_[i]] = 0;
            if (enter < 0)
                return Status::Optimal;

            int leave = -1;
            Rational best = 0;
            for (int i = 0; i < m_; ++i) {
                if (T_(i, enter) <= 0)
                    continue;
                const Rational ratio = rhs_(i) / T_(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) {
                ray_ = VectorXr::Zero(n_);
                VectorXr dy = VectorXr::Zero(cols_);
                dy(enter) = 1;
                for (int i = 0; i < m_; ++i)
                    dy(basis_[i]) = -T_(i, enter);
                for (int j = 0; j < n_; ++j)
                    ray_(j) = dy(j) - dy(n_ + j);
                return Status::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    int m_, n_, cols_, aux_;
    MatrixXr T_;
    VectorXr rhs_;
    VectorXr obj_;
    Rational objval_ = 0;
    std::vector<int> basis_;
    VectorXr ray_;
};

}  // namespace

Result maximize(const MatrixXr& A, const VectorXr& b, const VectorXr& c)
{
    if (A.rows() != b.size() || A.cols() != c.size())
        throw std::invalid_argument("lp::maximize: shape mismatch");
    Result res;
    if (A.cols() == 0) {
        // No variables: the system is a list of "0 <= b_i" facts.
        for (Eigen::Index i = 0; i < b.size(); ++i)
            if (b(i) < 0)
                return res;
        res.status = Status::Optimal;
        res.point = VectorXr(0);
        res.value = 0;
        return res;
    }
    Simplex simplex(A, b);
    if (!simplex.phase1())
        return res;
    res.status = simplex.phase2(c);
    res.value = simplex.objective();
    res.point = simplex.point();
    if (res.status == Status::Unbounded)
        res.ray = simplex.ray();
    return res;
}

bool feasible(const MatrixXr& A, const VectorXr& b, VectorXr* point)
{
    Result r = maximize(A, b, VectorXr::Zero(A.cols()));
    if (r.status == Status::Infeasible)
        return false;
    if (point)
        *point = r.point;
    return true;
}

}  // namespace stringcubes::lp

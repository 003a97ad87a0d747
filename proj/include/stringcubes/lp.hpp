/**
 * Exact rational linear programming, maximize c.x subject to A x <= b with x
 * free. Dense two-phase simplex with Bland's rule, so no cycling and no
 * tolerances. Problem sizes here are tiny (tens of rows), density is fine.
 */

#pragma once

#include "stringcubes/rational.hpp"

namespace stringcubes::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value = 0;
    VectorXr point;  // optimal (or last feasible) point when one exists
    VectorXr ray;    // improving ray when status == Unbounded
};

Result maximize(const MatrixXr& A, const VectorXr& b, const VectorXr& c);

/** Feasibility of {x : A x <= b}; optionally reports a feasible point. */
bool feasible(const MatrixXr& A, const VectorXr& b, VectorXr* point = nullptr);

}  // namespace stringcubes::lp

/**
 * Generalized string polytopes: the descending min/max recursion that defines
 * membership, the m(lambda) rule, lattice-point enumeration by filtering the
 * twisted cube, and the equality test against the twisted cube under
 * condition (P).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringcubes/twistedcube.hpp"

namespace stringcubes {

/**
 * Full evaluation trace of the recursion: the levels x^(n), ..., x^(1), the
 * Psi^(k)(i) values for 2 <= k <= n, and every intermediate s(i,j,k).
 * Defined verbatim over rationals; every step is linear or a min/max.
 */
struct PsiTrace {
    // level(k) = x^(k), a vector of length k, for k = 1..n.
    std::vector<VectorXr> levels;
    // psi[k-2][i-1] = Psi^(k)(i) for 2 <= k <= n, 1 <= i <= k-1.
    std::vector<std::vector<Rational>> psi;

    struct SValue {
        int i, j, k;
        Rational value;
    };
    std::vector<SValue> s_values;

    const VectorXr& level(int k) const { return levels.at(k - 1); }
    const Rational& psi_at(int k, int i) const { return psi.at(k - 2).at(i - 1); }
};

PsiTrace psi_trace(const WordMult& wm, const VectorXr& x);

struct StringMembership {
    bool inside = false;

    enum class Violation { None, Psi, Box };
    Violation kind = Violation::None;
    int k = 0, i = 0;   // first Psi violation, scanned k = n..2, i ascending
    int box_index = 0;  // first violated box inequality otherwise

    std::string describe() const;
};

/** Membership in the generalized string polytope: all Psi^(k)(i) >= 0 plus
 *  the box inequalities 0 <= x_j <= A_j. Exact arithmetic throughout. */
StringMembership in_delta(const WordMult& wm, const VectorXr& x);

/** Same predicate on integer points without leaving 64-bit arithmetic. */
bool in_delta_int(const WordMult& wm, const std::vector<long long>& x);

/**
 * The multiplicity list m(lambda): the rightmost occurrence of each letter a
 * in the word receives lambda's a-th fundamental coordinate, every other
 * position 0. Requires lambda dominant.
 */
std::vector<long long> m_of_lambda(const RootDatum& datum, const Word& word,
                                   const Weight& lambda);

/** Lattice points of dilate * Delta: enumerate the dilated twisted cube and
 *  filter by membership (Delta sits inside the cube by definition). */
std::vector<std::vector<long long>> delta_lattice_points(
    const WordMult& wm, long long dilate, std::uint64_t cap = kDefaultLatticeCap);

struct DeltaEqualsPEvidence {
    bool equal = false;
    bool vertices_inside = false;
    std::string vertex_witness;  // first cube vertex failing membership

    struct Count {
        int dilate = 0;
        std::uint64_t cube_points = 0;
        std::uint64_t delta_points = 0;
    };
    std::vector<Count> counts;
};

/**
 * Certify Delta == P under condition (P): every vertex of the twisted cube
 * passes membership and the lattice-point counts agree at dilates
 * 1..max_dilate. Throws std::domain_error naming the certificate when
 * condition (P) fails.
 */
DeltaEqualsPEvidence delta_equals_P(const WordMult& wm, int max_dilate = 3,
                                    std::uint64_t cap = kDefaultLatticeCap);

}  // namespace stringcubes

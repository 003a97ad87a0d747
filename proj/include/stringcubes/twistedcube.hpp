/**
 * Twisted cubes: the box polytope P cut out by 0 <= x_j <= A_j, its Cartier
 * data indexed by sign vectors, and the condition (P) decision with
 * certificates. The A_j are affine forms in the later coordinates whose
 * coefficients come from Cartan integers of the word's letters.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringcubes/polyhedra.hpp"
#include "stringcubes/rootsys.hpp"

namespace stringcubes {

/** A word together with a multiplicity list; the parameter of every polytope
 *  in this library. Multiplicities must be non-negative. */
struct WordMult {
    RootDatum datum;
    Word word;
    std::vector<long long> mult;

    WordMult(RootDatum d, Word w, std::vector<long long> m);

    int size() const { return word.size(); }

    /** Same word, multiplicities scaled by k >= 0. */
    WordMult scaled(long long k) const;
};

/**
 * A_j as an explicit affine form: constant plus integer coefficients on
 * x_{j+1}, ..., x_n. Coefficients at positions <= j are zero by construction.
 */
struct AffineForm {
    int index = 0;  // j, 1-based
    long long constant = 0;
    std::vector<long long> coeffs;  // full length n

    Rational eval(const VectorXr& x) const;
    long long eval_int(const std::vector<long long>& x) const;
};

/** The forms A_1, ..., A_n: A_j = m_j + sum of later same-letter
 *  multiplicities minus Cartan-weighted later coordinates. */
std::vector<AffineForm> a_forms(const WordMult& wm);

/** The polytope {0 <= x_j <= A_j(x_{j+1},...,x_n)} with its 2n halfspaces. */
HPolytope twisted_cube(const WordMult& wm);

/** Image under (x_1,...,x_n) -> (x_n,...,x_1). */
HPolytope reverse_coords(const HPolytope& P);

/** Image under x -> -x. */
HPolytope negate_coords(const HPolytope& P);

/**
 * The integer vectors r_sigma for every sign vector sigma, computed by the
 * descending recursion r_i = 0 when sigma_i = '+', else A_i of the later
 * entries. Entries are listed lexicographically with '-' before '+'.
 */
struct CartierTable {
    int n = 0;
    std::vector<std::pair<std::string, std::vector<long long>>> entries;

    const std::vector<long long>& at(const std::string& sigma) const;
};

CartierTable cartier_data(const WordMult& wm);

/** max over sign vectors of r_{sigma,ell}; only the suffix of the
 *  multiplicity list from ell on is read. */
long long max_cartier_coordinate(const WordMult& wm, int ell);

struct ConditionPCertificate {
    bool holds = false;
    // Populated when holds is false: the largest violating index k, the sign
    // vector producing it (lexicographically smallest, '-' < '+'), the point
    // (x_{k+1},...,x_n) taken from r_sigma, and A_k there.
    int violating_index = 0;
    std::string sigma;
    std::vector<long long> witness;
    long long value = 0;
    // Populated when holds is true.
    std::optional<CartierTable> table;

    std::string witness_text() const;  // e.g. "k=1 x=(0,1) A_1=-1"
};

/** Decide condition (P) by the finite criterion: all Cartier entries
 *  non-negative. */
ConditionPCertificate satisfies_P(const WordMult& wm);

/**
 * Direct quantifier check of (P-k) for every k: exhaustively test all points
 * of the region {0 <= x_l <= A_l, l > k} whose coordinates are multiples of
 * 1/denominator_cap, generated from l = n downward. Independent of the
 * Cartier criterion; kept as a cross-checking oracle. Throws
 * ResourceLimitError past the candidate cap.
 */
bool direct_P_oracle(const WordMult& wm, int denominator_cap,
                     std::uint64_t candidate_cap = 10'000'000ull);

/**
 * Lattice points of the twisted cube by descending-coordinate recursion with
 * exact per-prefix bounds. Same set as lattice_points(twisted_cube(wm)) but
 * without the bounding-box blowup; the generic scan stays around as the
 * independent oracle.
 */
std::vector<std::vector<long long>> twisted_cube_lattice_points(
    const WordMult& wm, std::uint64_t cap = kDefaultLatticeCap);

}  // namespace stringcubes

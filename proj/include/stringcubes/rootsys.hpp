/**
 * Finite root-system data: Cartan integers per family, weights in
 * fundamental-weight coordinates, words in the simple reflections, and the
 * few Weyl-group facts the polytope formulas need.
 *
 * Convention fixed once for the whole library: cartan(i, j) = <alpha_j,
 * alpha_i^vee>, with 0-based storage and 1-based node indices in the public
 * interface. Node numbering follows the usual Bourbaki labels; for G2 we take
 * alpha_1 long, so cartan(G2) = [[2,-1],[-3,2]].
 */

#pragma once

#include <vector>

#include "stringcubes/rational.hpp"

namespace stringcubes {

enum class Family : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

/** Throws std::invalid_argument for anything but A..G. */
Family family_from_char(char c);

/** Cartan matrix in the library convention. Throws std::domain_error when
 *  the rank is not admissible for the family. */
Eigen::MatrixXi cartan_matrix(Family family, int rank);

struct RootDatum {
    Family family;
    int rank;
    Eigen::MatrixXi cartan;

    static RootDatum create(Family family, int rank)
    {
        return RootDatum{family, rank, cartan_matrix(family, rank)};
    }

    /** <alpha_j, alpha_i^vee> with 1-based node indices. */
    int pairing_entry(int i, int j) const { return cartan(i - 1, j - 1); }
};

/** A weight written as sum of fundamental weights; coords[i] is the
 *  coefficient of the (i+1)-th fundamental weight. */
struct Weight {
    Eigen::VectorXi coords;

    bool dominant() const { return (coords.array() >= 0).all(); }
};

/** Word in the simple reflections, letters 1..rank. */
struct Word {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
};

/** Validates letters against the rank. Throws std::domain_error. */
void validate_word(const RootDatum& datum, const Word& word);

/** <lambda, alpha_i^vee>, which is just coordinate extraction. */
int pairing(const RootDatum& datum, const Weight& lambda, int i);

/** Rewrite a vector in the simple-root basis into fundamental-weight
 *  coordinates (multiply by the Cartan matrix). */
Weight root_to_weight_coords(const RootDatum& datum, const Eigen::VectorXi& a);

/** s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i. */
Weight apply_simple_reflection(const RootDatum& datum, int i, const Weight& lambda);

/** Positive roots in simple-root coordinates, by reflection closure. */
std::vector<Eigen::VectorXi> positive_roots(const RootDatum& datum);

/** Positive coroots in simple-coroot coordinates. These are the positive
 *  roots of the dual system, whose Cartan matrix is the transpose. */
std::vector<Eigen::VectorXi> positive_coroots(const RootDatum& datum);

int num_positive_roots(const RootDatum& datum);

/** True iff every prefix of the word sends its next simple root to a
 *  positive root, the standard length-additivity criterion. */
bool is_reduced(const RootDatum& datum, const Word& word);

/** Reduced and of full length, i.e. a word for the longest element. */
bool is_reduced_for_longest(const RootDatum& datum, const Word& word);

/** Dimension of the irreducible representation with highest weight lambda,
 *  by the Weyl dimension formula over the positive coroots. Requires lambda
 *  dominant (std::domain_error otherwise). */
Integer weyl_dim(const RootDatum& datum, const Weight& lambda);

}  // namespace stringcubes

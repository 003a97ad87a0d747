/**
 * The resolution pipeline: the inductive construction of a multiplicity list
 * from (word, lambda) that forces condition (P) with strictly positive
 * Cartier entries, and the report assembling every polytope-level check on
 * the result.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringcubes/stringpoly.hpp"

namespace stringcubes {

struct CheckResult {
    bool pass = false;
    std::string witness;  // set on failure (and sometimes as a pass note)
};

struct ContainmentEntry {
    int dilate = 0;
    std::uint64_t small_points = 0;
    std::uint64_t missing = 0;
};

struct ContainmentReport {
    bool componentwise_le = false;  // reported, not required
    std::vector<ContainmentEntry> dilates;

    bool all_contained() const
    {
        for (const auto& e : dilates)
            if (e.missing != 0)
                return false;
        return true;
    }
};

/** Lattice-level containment of dilate * Delta_small in dilate * Delta_big:
 *  counts the points of the small polytope missing from the big one. */
ContainmentReport containment_check(const RootDatum& datum, const Word& word,
                                    const std::vector<long long>& m_small,
                                    const std::vector<long long>& m_big,
                                    int max_dilate,
                                    std::uint64_t cap = kDefaultLatticeCap);

/**
 * Build a multiplicity list from k = n down to 1, each entry the minimal
 * integer at least max{ m(lambda)_k, 1, 1 - sum over later same-letter
 * positions of (m_l - 2 M_l) }, where M_l is the largest Cartier coordinate
 * at position l. An optional non-negative offset is added entrywise for
 * callers who want a non-minimal list. Requires a reduced word and a
 * dominant weight.
 */
std::vector<long long> construct_m(const RootDatum& datum, const Word& word,
                                   const Weight& lambda,
                                   const std::vector<long long>& offset = {});

struct ResolutionReport {
    std::vector<long long> m_lambda;
    std::vector<long long> m;

    CheckResult m1;              // m(lambda)_i <= m_i
    CheckResult m2;              // m_i > 0
    CheckResult m3;              // all Cartier entries >= 0
    CheckResult m4;              // Cartier vectors pairwise distinct
    CheckResult condition_p;     // certificate check, must agree with m3
    CheckResult lattice;
    CheckResult simple;
    CheckResult smooth;
    CheckResult delta_equals_p;
    CheckResult containment;
    std::vector<ContainmentEntry> containment_dilates;

    bool all_pass() const
    {
        return m1.pass && m2.pass && m3.pass && m4.pass && condition_p.pass &&
               lattice.pass && simple.pass && smooth.pass && delta_equals_p.pass &&
               containment.pass;
    }
};

/** Run every check; failures are recorded in the report, never thrown. */
ResolutionReport verify_resolution(const RootDatum& datum, const Word& word,
                                   const Weight& lambda,
                                   const std::vector<long long>& m,
                                   int max_dilate = 3,
                                   std::uint64_t cap = kDefaultLatticeCap);

}  // namespace stringcubes

#include "stringcubes/resolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stringcubes {

namespace {

std::string list_text(const std::vector<long long>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

ContainmentReport containment_check(const RootDatum& datum, const Word& word,
                                    const std::vector<long long>& m_small,
                                    const std::vector<long long>& m_big,
                                    int max_dilate, std::uint64_t cap)
{
    const WordMult small(datum, word, m_small);
    const WordMult big(datum, word, m_big);
    ContainmentReport report;
    report.componentwise_le = true;
    for (std::size_t i = 0; i < m_small.size(); ++i)
        if (m_small[i] > m_big[i])
            report.componentwise_le = false;
    for (int k = 1; k <= max_dilate; ++k) {
        const WordMult big_k = big.scaled(k);
        ContainmentEntry entry;
        entry.dilate = k;
        for (const auto& p : delta_lattice_points(small, k, cap)) {
            ++entry.small_points;
            if (!in_delta_int(big_k, p))
                ++entry.missing;
        }
        report.dilates.push_back(entry);
    }
    return report;
}

std::vector<long long> construct_m(const RootDatum& datum, const Word& word,
                                   const Weight& lambda,
                                   const std::vector<long long>& offset)
{
    if (!is_reduced(datum, word))
        throw std::domain_error("construct_m requires a reduced word");
    const std::vector<long long> mlam = m_of_lambda(datum, word, lambda);
    const int n = word.size();
    if (!offset.empty()) {
        if (static_cast<int>(offset.size()) != n)
            throw std::invalid_argument("offset length does not match word length");
        for (long long v : offset)
            if (v < 0)
                throw std::domain_error("offset entries must be non-negative");
    }

    std::vector<long long> m(n, 0);
    std::vector<long long> M(n + 1, 0);  // M[l] valid once m_l..m_n are fixed
    for (int k = n; k >= 1; --k) {
        long long later = 0;
        for (int l = k + 1; l <= n; ++l)
            if (word.letters[l - 1] == word.letters[k - 1])
                later += m[l - 1] - 2 * M[l];
        const long long bound = std::max({mlam[k - 1], 1ll, 1ll - later});
        m[k - 1] = bound + (offset.empty() ? 0 : offset[k - 1]);
        M[k] = max_cartier_coordinate(WordMult(datum, word, m), k);
    }
    return m;
}

ResolutionReport verify_resolution(const RootDatum& datum, const Word& word,
                                   const Weight& lambda,
                                   const std::vector<long long>& m,
                                   int max_dilate, std::uint64_t cap)
{
    const WordMult wm(datum, word, m);
    ResolutionReport report;
    report.m_lambda = m_of_lambda(datum, word, lambda);
    report.m = m;
    const int n = wm.size();

    report.m1.pass = true;
    for (int i = 0; i < n; ++i) {
        if (report.m_lambda[i] > m[i]) {
            report.m1.pass = false;
            report.m1.witness = "m(lambda)_" + std::to_string(i + 1) + "=" +
                                std::to_string(report.m_lambda[i]) + " exceeds m_" +
                                std::to_string(i + 1) + "=" + std::to_string(m[i]);
            break;
        }
    }

    report.m2.pass = true;
    for (int i = 0; i < n; ++i) {
        if (m[i] <= 0) {
            report.m2.pass = false;
            report.m2.witness = "m_" + std::to_string(i + 1) + "=" + std::to_string(m[i]);
            break;
        }
    }

    const CartierTable table = cartier_data(wm);
    report.m3.pass = true;
    for (const auto& [sigma, r] : table.entries) {
        for (int i = 0; i < n; ++i) {
            if (r[i] < 0) {
                report.m3.pass = false;
                report.m3.witness = "r_{" + sigma + "," + std::to_string(i + 1) +
                                    "}=" + std::to_string(r[i]);
                break;
            }
        }
        if (!report.m3.pass)
            break;
    }

    report.m4.pass = true;
    {
        std::set<std::vector<long long>> seen;
        for (const auto& [sigma, r] : table.entries) {
            if (!seen.insert(r).second) {
                report.m4.pass = false;
                report.m4.witness = "r_" + sigma + "=" + list_text(r) + " repeats";
                break;
            }
        }
    }

    const ConditionPCertificate cert = satisfies_P(wm);
    report.condition_p.pass = cert.holds;
    if (!cert.holds)
        report.condition_p.witness = cert.witness_text();

    const HPolytope P = twisted_cube(wm);
    const VertexSet V = vertices(P);
    report.lattice.pass = is_lattice_polytope(V);
    if (!report.lattice.pass) {
        for (const auto& p : V.points)
            for (Eigen::Index i = 0; i < p.size() && report.lattice.witness.empty(); ++i)
                if (!is_integral(p(i)))
                    report.lattice.witness = "vertex coordinate " + to_fraction_string(p(i));
    }

    try {
        report.simple.pass = is_simple(P);
        if (!report.simple.pass)
            report.simple.witness = "a vertex meets more facets than the dimension";
    } catch (const std::domain_error& e) {
        report.simple.pass = false;
        report.simple.witness = e.what();
    }

    try {
        report.smooth.pass = is_smooth(P);
        if (!report.smooth.pass)
            report.smooth.witness = report.simple.pass
                                        ? "a vertex cone is not unimodular"
                                        : "not a simple polytope";
    } catch (const std::domain_error& e) {
        report.smooth.pass = false;
        report.smooth.witness = e.what();
    }

    if (!cert.holds) {
        report.delta_equals_p.pass = false;
        report.delta_equals_p.witness = "precondition failed: " + cert.witness_text();
    } else {
        const DeltaEqualsPEvidence ev = delta_equals_P(wm, max_dilate, cap);
        report.delta_equals_p.pass = ev.equal;
        if (!ev.vertices_inside) {
            report.delta_equals_p.witness = ev.vertex_witness;
        } else if (!ev.equal) {
            for (const auto& c : ev.counts)
                if (c.cube_points != c.delta_points)
                    report.delta_equals_p.witness =
                        "dilate " + std::to_string(c.dilate) + ": cube has " +
                        std::to_string(c.cube_points) + " lattice points, delta " +
                        std::to_string(c.delta_points);
        }
    }

    const ContainmentReport cont =
        containment_check(datum, word, report.m_lambda, m, max_dilate, cap);
    report.containment_dilates = cont.dilates;
    report.containment.pass = cont.all_contained();
    if (!report.containment.pass) {
        for (const auto& e : cont.dilates)
            if (e.missing != 0) {
                report.containment.witness = "dilate " + std::to_string(e.dilate) + ": " +
                                             std::to_string(e.missing) + " of " +
                                             std::to_string(e.small_points) +
                                             " points missing";
                break;
            }
    }
    return report;
}

}  // namespace stringcubes

#include "stringcubes/hull.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "stringcubes/linalg.hpp"

namespace stringcubes::hull {

namespace {

using FacetKey = std::pair<std::vector<Integer>, Rational>;

// Next k-combination of indices 0..m-1 in lexicographic order.
bool next_combination(std::vector<int>& idx, int m)
{
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < m - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Indices of coordinates whose projection is injective on the affine span of
// the given points (the row-rank profile of the difference matrix).
std::vector<int> chart_coordinates(const std::vector<VectorXr>& pts)
{
    const Eigen::Index d = pts[0].size();
    MatrixXr diffs(static_cast<Eigen::Index>(pts.size()) - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (pts[i] - pts[0]).transpose();
    // Pivot columns of the difference matrix are exactly the coordinates to
    // keep.
    std::vector<int> coords;
    MatrixXr R = diffs;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < d && r < R.rows(); ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < R.rows(); ++i)
            if (R(i, c) != 0) { p = i; break; }
        if (p < 0)
            continue;
        R.row(p).swap(R.row(r));
        for (Eigen::Index i = 0; i < R.rows(); ++i) {
            if (i == r || R(i, c) == 0)
                continue;
            const Rational f = R(i, c) / R(r, c);
            for (Eigen::Index j = c; j < d; ++j)
                R(i, j) -= f * R(r, j);
        }
        coords.push_back(static_cast<int>(c));
        ++r;
    }
    return coords;
}

}  // namespace

std::vector<Facet> facets_from_points(const std::vector<VectorXr>& points)
{
    const int d = points.empty() ? 0 : static_cast<int>(points[0].size());
    std::map<FacetKey, Facet> found;
    if (d == 0 || static_cast<int>(points.size()) < d)
        return {};

    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i)
        idx[i] = i;
    const int m = static_cast<int>(points.size());
    do {
        // Hyperplane through the chosen points, if they affinely span one.
        MatrixXr diffs(d - 1, d);
        for (int i = 1; i < d; ++i)
            diffs.row(i - 1) = (points[idx[i]] - points[idx[0]]).transpose();
        MatrixXr ns = linalg::nullspace(diffs);
        if (ns.cols() != 1)
            continue;  // degenerate subset
        VectorXz normal = linalg::primitive(ns.col(0));
        Rational offset = 0;
        for (int i = 0; i < d; ++i)
            offset += Rational(normal(i)) * points[idx[0]](i);

        bool above = false, below = false;
        for (const auto& q : points) {
            Rational v = -offset;
            for (int i = 0; i < d; ++i)
                v += Rational(normal(i)) * q(i);
            if (v > 0) above = true;
            if (v < 0) below = true;
            if (above && below)
                break;
        }
        if (above && below)
            continue;  // not supporting
        if (above) {
            normal = -normal;
            offset = -offset;
        }

        FacetKey key(std::vector<Integer>(normal.data(), normal.data() + d), offset);
        if (found.count(key))
            continue;
        Facet f;
        f.normal = normal;
        f.offset = offset;
        for (int q = 0; q < m; ++q) {
            Rational v = 0;
            for (int i = 0; i < d; ++i)
                v += Rational(normal(i)) * points[q](i);
            if (v == offset)
                f.incident.push_back(q);
        }
        found.emplace(std::move(key), std::move(f));
    } while (next_combination(idx, m));

    std::vector<Facet> facets;
    facets.reserve(found.size());
    for (auto& [key, f] : found)
        facets.push_back(std::move(f));
    return facets;
}

std::vector<std::vector<int>> triangulate_points(const std::vector<VectorXr>& points)
{
    const int d = points.empty() ? 0 : static_cast<int>(points[0].size());
    if (points.empty())
        return {};
    if (d == 0)
        return {{0}};
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(points.size()); ++i) {
            if (points[i](0) < points[lo](0)) lo = i;
            if (points[i](0) > points[hi](0)) hi = i;
        }
        if (lo == hi)
            return {};  // all points coincide, no 1-volume
        std::vector<int> seg{lo, hi};
        std::sort(seg.begin(), seg.end());
        return {seg};
    }

    int apex = 0;
    for (int i = 1; i < static_cast<int>(points.size()); ++i)
        if (lex_less(points[i], points[apex]))
            apex = i;

    std::vector<std::vector<int>> simplices;
    for (const auto& facet : facets_from_points(points)) {
        Rational v = -facet.offset;
        for (int i = 0; i < d; ++i)
            v += Rational(facet.normal(i)) * points[apex](i);
        if (v == 0)
            continue;  // apex lies on this facet, no cone volume

        std::vector<VectorXr> fpts;
        fpts.reserve(facet.incident.size());
        for (int q : facet.incident)
            fpts.push_back(points[q]);
        const auto coords = chart_coordinates(fpts);
        std::vector<VectorXr> charted;
        charted.reserve(fpts.size());
        for (const auto& p : fpts) {
            VectorXr c(static_cast<Eigen::Index>(coords.size()));
            for (std::size_t i = 0; i < coords.size(); ++i)
                c(static_cast<Eigen::Index>(i)) = p(coords[i]);
            charted.push_back(std::move(c));
        }
        for (const auto& local : triangulate_points(charted)) {
            std::vector<int> simplex;
            simplex.reserve(local.size() + 1);
            for (int li : local)
                simplex.push_back(facet.incident[li]);
            simplex.push_back(apex);
            std::sort(simplex.begin(), simplex.end());
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

}  // namespace stringcubes::hull

#include "stringcubes/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stringcubes/hull.hpp"
#include "stringcubes/linalg.hpp"
#include "stringcubes/lp.hpp"

namespace stringcubes {

namespace {

MatrixXr normal_matrix(const HPolytope& P)
{
    const int m = static_cast<int>(P.halfspaces().size());
    MatrixXr A(m, P.dim());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < P.dim(); ++j)
            A(i, j) = Rational(P.halfspaces()[i].normal(j));
    return A;
}

VectorXr bound_vector(const HPolytope& P)
{
    const int m = static_cast<int>(P.halfspaces().size());
    VectorXr b(m);
    for (int i = 0; i < m; ++i)
        b(i) = P.halfspaces()[i].bound;
    return b;
}

// Throws UnboundedError when the recession cone {A x <= 0} contains a
// nonzero vector; the witness comes from maximizing coordinates over the
// cone clipped to the unit box.
void require_bounded(const MatrixXr& A, int n)
{
    const int m = static_cast<int>(A.rows());
    MatrixXr coneA(m + 2 * n, n);
    VectorXr coneB = VectorXr::Zero(m + 2 * n);
    coneA.topRows(m) = A;
    for (int j = 0; j < n; ++j) {
        VectorXr e = VectorXr::Zero(n);
        e(j) = 1;
        coneA.row(m + 2 * j) = e.transpose();
        coneA.row(m + 2 * j + 1) = -e.transpose();
        coneB(m + 2 * j) = 1;
        coneB(m + 2 * j + 1) = 1;
    }
    for (int j = 0; j < n; ++j) {
        for (int sign : {1, -1}) {
            VectorXr c = VectorXr::Zero(n);
            c(j) = sign;
            lp::Result r = lp::maximize(coneA, coneB, c);
            if (r.status == lp::Status::Optimal && r.value > 0) {
                std::ostringstream os;
                os << "polytope is unbounded along (";
                for (int k = 0; k < n; ++k)
                    os << (k ? "," : "") << to_fraction_string(r.point(k));
                os << ")";
                throw UnboundedError(os.str(), r.point);
            }
        }
    }
}

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

bool satisfies_all(const HPolytope& P, const VectorXr& x)
{
    for (const auto& h : P.halfspaces())
        if (h.eval(x) > h.bound)
            return false;
    return true;
}

// Facet description and vertex list for the full-dimensional checks;
// parameterized so that lower-dimensional polytopes can be routed through a
// coordinate chart first.
bool full_dim_simple(const HPolytope& facets, const std::vector<VectorXr>& verts)
{
    const int n = facets.dim();
    for (const auto& v : verts) {
        int active = 0;
        for (const auto& h : facets.halfspaces())
            if (h.eval(v) == h.bound)
                ++active;
        if (active != n)
            return false;
    }
    return true;
}

bool full_dim_smooth(const HPolytope& facets, const std::vector<VectorXr>& verts)
{
    const int n = facets.dim();
    for (const auto& v : verts) {
        std::vector<int> active;
        for (int i = 0; i < static_cast<int>(facets.halfspaces().size()); ++i)
            if (facets.halfspaces()[i].eval(v) == facets.halfspaces()[i].bound)
                active.push_back(i);
        if (static_cast<int>(active.size()) != n)
            return false;  // not simple at this vertex

        MatrixXr edges(n, n);
        for (int k = 0; k < n; ++k) {
            // Edge direction: stay on every active facet except the k-th,
            // oriented into the polytope.
            MatrixXr rows(n - 1, n);
            int r = 0;
            for (int t = 0; t < n; ++t) {
                if (t == k)
                    continue;
                for (int j = 0; j < n; ++j)
                    rows(r, j) = Rational(facets.halfspaces()[active[t]].normal(j));
                ++r;
            }
            MatrixXr ns = linalg::nullspace(rows);
            if (ns.cols() != 1)
                return false;  // degenerate active set
            VectorXz dir = linalg::primitive(ns.col(0));
            Rational side = 0;
            for (int j = 0; j < n; ++j)
                side += Rational(facets.halfspaces()[active[k]].normal(j)) * Rational(dir(j));
            if (side == 0)
                return false;
            if (side > 0)
                dir = -dir;
            for (int j = 0; j < n; ++j)
                edges(j, k) = Rational(dir(j));
        }
        const Rational det = linalg::determinant(edges);
        if (det != 1 && det != -1)
            return false;
    }
    return true;
}

// Vertices mapped into full-dimensional coordinates on their affine hull.
// When `lattice_chart` is set the chart is lattice preserving (basis of the
// saturated direction lattice), so smoothness is judged correctly.
std::vector<VectorXr> chart_to_hull(const std::vector<VectorXr>& verts, bool lattice_chart)
{
    const int n = static_cast<int>(verts[0].size());
    const int k = static_cast<int>(verts.size());
    MatrixXr D(n, k - 1);
    for (int i = 1; i < k; ++i)
        D.col(i - 1) = verts[i] - verts[0];
    const int d = linalg::rank(D);

    MatrixXr basis(n, d);
    if (lattice_chart) {
        // Normals cutting out the direction space, then the saturated
        // integer kernel of those equations.
        MatrixXr comp = linalg::nullspace(D.transpose());
        MatrixXz N(comp.cols(), n);
        for (Eigen::Index c = 0; c < comp.cols(); ++c)
            N.row(c) = linalg::primitive(comp.col(c)).transpose();
        MatrixXz L = linalg::integer_kernel(N);
        if (L.cols() != d)
            throw std::logic_error("direction lattice has unexpected rank");
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i)
                basis(i, j) = Rational(L(i, j));
    } else {
        MatrixXr R = D;
        std::vector<int> cols;
        Eigen::Index r = 0;
        for (Eigen::Index c = 0; c < R.cols() && r < n; ++c) {
            Eigen::Index p = -1;
            for (Eigen::Index i = r; i < n; ++i)
                if (R(i, c) != 0) { p = i; break; }
            if (p < 0)
                continue;
            R.row(p).swap(R.row(r));
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i == r || R(i, c) == 0)
                    continue;
                const Rational f = R(i, c) / R(r, c);
                for (Eigen::Index j = c; j < R.cols(); ++j)
                    R(i, j) -= f * R(r, j);
            }
            cols.push_back(static_cast<int>(c));
            ++r;
        }
        for (int j = 0; j < d; ++j)
            basis.col(j) = D.col(cols[j]);
    }

    // Coordinates of each vertex w.r.t. the basis: solve on an invertible
    // row subset of the basis matrix.
    MatrixXr Rb = basis;
    std::vector<int> rows;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < n && r < d; ++i) {
        MatrixXr test(r + 1, d);
        for (Eigen::Index t = 0; t < r; ++t)
            test.row(t) = basis.row(rows[t]);
        test.row(r) = basis.row(i);
        if (linalg::rank(test) == r + 1) {
            rows.push_back(static_cast<int>(i));
            ++r;
        }
    }
    MatrixXr square(d, d);
    for (int i = 0; i < d; ++i)
        square.row(i) = basis.row(rows[i]);

    std::vector<VectorXr> charted;
    charted.reserve(verts.size());
    for (const auto& v : verts) {
        VectorXr rhs(d);
        for (int i = 0; i < d; ++i)
            rhs(i) = v(rows[i]) - verts[0](rows[i]);
        VectorXr y;
        if (!linalg::solve_square(square, rhs, y))
            throw std::logic_error("chart basis not invertible");
        charted.push_back(std::move(y));
    }
    return charted;
}

}  // namespace

VertexSet vertices(const HPolytope& P)
{
    const int n = P.dim();
    VertexSet V;
    V.dim = n;
    if (n == 0) {
        V.points.push_back(VectorXr(0));
        return V;
    }
    const MatrixXr A = normal_matrix(P);
    const VectorXr b = bound_vector(P);
    if (!lp::feasible(A, b))
        return V;
    require_bounded(A, n);

    const int m = static_cast<int>(P.halfspaces().size());
    std::set<std::vector<Rational>> seen;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    if (m < n)
        throw std::logic_error("bounded nonempty polytope with too few halfspaces");
    do {
        MatrixXr M(n, n);
        VectorXr rhs(n);
        for (int i = 0; i < n; ++i) {
            M.row(i) = A.row(idx[i]);
            rhs(i) = b(idx[i]);
        }
        VectorXr x;
        if (!linalg::solve_square(M, rhs, x))
            continue;
        if (!satisfies_all(P, x))
            continue;
        seen.insert(std::vector<Rational>(x.data(), x.data() + n));
    } while (next_combination(idx, m));

    for (const auto& coords : seen) {
        VectorXr p(n);
        for (int i = 0; i < n; ++i)
            p(i) = coords[i];
        V.points.push_back(std::move(p));
    }
    return V;
}

bool is_lattice_polytope(const VertexSet& V)
{
    for (const auto& p : V.points)
        for (Eigen::Index i = 0; i < p.size(); ++i)
            if (!is_integral(p(i)))
                return false;
    return true;
}

int affine_dimension(const VertexSet& V)
{
    if (V.points.empty())
        return -1;
    const int k = static_cast<int>(V.points.size());
    if (k == 1)
        return 0;
    MatrixXr D(V.dim, k - 1);
    for (int i = 1; i < k; ++i)
        D.col(i - 1) = V.points[i] - V.points[0];
    return linalg::rank(D);
}

HPolytope irredundant(const HPolytope& P)
{
    // Normalize to primitive normals so duplicates and parallel copies are
    // syntactically comparable; among parallel constraints only the tightest
    // can matter.
    std::map<std::vector<Integer>, Rational> tightest;
    for (const auto& h : P.halfspaces()) {
        VectorXr nr(h.normal.size());
        for (Eigen::Index i = 0; i < h.normal.size(); ++i)
            nr(i) = Rational(h.normal(i));
        VectorXz prim = linalg::primitive(nr);
        // The scale between h.normal and prim is the positive rational
        // |h.normal| / |prim| on any nonzero entry.
        Eigen::Index nz = 0;
        while (h.normal(nz) == 0)
            ++nz;
        const Rational scale = Rational(prim(nz)) / Rational(h.normal(nz));
        const Rational bound = h.bound * scale;
        std::vector<Integer> key(prim.data(), prim.data() + prim.size());
        auto it = tightest.find(key);
        if (it == tightest.end())
            tightest.emplace(std::move(key), bound);
        else if (bound < it->second)
            it->second = bound;
    }

    std::vector<Halfspace> hs;
    for (const auto& [key, bound] : tightest) {
        VectorXz nz(static_cast<Eigen::Index>(key.size()));
        for (std::size_t i = 0; i < key.size(); ++i)
            nz(static_cast<Eigen::Index>(i)) = key[i];
        hs.emplace_back(std::move(nz), bound);
    }

    // Drop each halfspace whose removal does not let the maximum of its own
    // functional rise above its bound.
    std::vector<bool> keep(hs.size(), true);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::vector<int> others;
        for (std::size_t j = 0; j < hs.size(); ++j)
            if (j != i && keep[j])
                others.push_back(static_cast<int>(j));
        MatrixXr A(static_cast<Eigen::Index>(others.size()), P.dim());
        VectorXr b(static_cast<Eigen::Index>(others.size()));
        for (std::size_t r = 0; r < others.size(); ++r) {
            for (int c = 0; c < P.dim(); ++c)
                A(static_cast<Eigen::Index>(r), c) = Rational(hs[others[r]].normal(c));
            b(static_cast<Eigen::Index>(r)) = hs[others[r]].bound;
        }
        VectorXr c(P.dim());
        for (int j = 0; j < P.dim(); ++j)
            c(j) = Rational(hs[i].normal(j));
        lp::Result r = lp::maximize(A, b, c);
        if (r.status == lp::Status::Optimal && r.value <= hs[i].bound)
            keep[i] = false;
    }

    std::vector<Halfspace> out;
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (keep[i])
            out.push_back(hs[i]);
    return HPolytope(P.dim(), std::move(out));
}

bool is_simple(const HPolytope& P)
{
    VertexSet V = vertices(P);
    if (V.empty())
        throw std::domain_error("is_simple: empty polytope");
    const int d = affine_dimension(V);
    if (d == 0)
        return true;
    if (d == P.dim())
        return full_dim_simple(irredundant(P), V.points);
    // Judge inside the affine hull.
    std::vector<VectorXr> charted = chart_to_hull(V.points, /*lattice_chart=*/false);
    VertexSet CV{d, charted};
    std::sort(CV.points.begin(), CV.points.end(), lex_less);
    return full_dim_simple(hull_halfspaces(CV), charted);
}

bool is_smooth(const HPolytope& P)
{
    VertexSet V = vertices(P);
    if (V.empty())
        throw std::domain_error("is_smooth: empty polytope");
    if (!is_lattice_polytope(V)) {
        for (const auto& p : V.points)
            for (Eigen::Index i = 0; i < p.size(); ++i)
                if (!is_integral(p(i))) {
                    std::ostringstream os;
                    os << "is_smooth: not a lattice polytope, vertex coordinate "
                       << to_fraction_string(p(i));
                    throw std::domain_error(os.str());
                }
    }
    const int d = affine_dimension(V);
    if (d == 0)
        return true;
    if (d == P.dim())
        return full_dim_smooth(irredundant(P), V.points);
    std::vector<VectorXr> charted = chart_to_hull(V.points, /*lattice_chart=*/true);
    VertexSet CV{d, charted};
    std::sort(CV.points.begin(), CV.points.end(), lex_less);
    return full_dim_smooth(hull_halfspaces(CV), charted);
}

std::vector<std::vector<long long>> lattice_points(const HPolytope& P, std::uint64_t cap)
{
    const int n = P.dim();
    VertexSet V = vertices(P);
    if (V.empty())
        return {};
    if (n == 0)
        return {std::vector<long long>{}};

    std::vector<long long> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rational mn = V.points[0](j), mx = V.points[0](j);
        for (const auto& p : V.points) {
            mn = std::min(mn, p(j));
            mx = std::max(mx, p(j));
        }
        lo[j] = static_cast<long long>(ceil_int(mn));
        hi[j] = static_cast<long long>(floor_int(mx));
        if (lo[j] > hi[j])
            return {};
    }
    Integer count = 1;
    for (int j = 0; j < n; ++j)
        count *= Integer(hi[j] - lo[j] + 1);
    if (count > Integer(cap))
        throw ResourceLimitError("lattice point scan over candidate cap: box has " +
                                 count.str() + " candidates, cap " + std::to_string(cap));

    // Integer-only halfspace tests: normal.x * den(bound) <= num(bound).
    const auto& hs = P.halfspaces();
    std::vector<Integer> num(hs.size()), den(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        num[i] = numerator(hs[i].bound);
        den[i] = denominator(hs[i].bound);
    }

    std::vector<std::vector<long long>> out;
    std::vector<long long> x(lo);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < hs.size() && ok; ++i) {
            Integer v = 0;
            for (int j = 0; j < n; ++j)
                v += hs[i].normal(j) * Integer(x[j]);
            if (v * den[i] > num[i])
                ok = false;
        }
        if (ok)
            out.push_back(x);
        int j = n - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0)
            break;
        ++x[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational volume(const VertexSet& V)
{
    if (V.points.empty())
        throw std::invalid_argument("volume: empty point set");
    const int n = V.dim;
    if (n == 0)
        return 0;
    if (affine_dimension(V) < n)
        return 0;
    Rational total = 0;
    Rational factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= i;
    for (const auto& simplex : hull::triangulate_points(V.points)) {
        MatrixXr M(n, n);
        for (int i = 1; i <= n; ++i)
            M.col(i - 1) = V.points[simplex[i]] - V.points[simplex[0]];
        Rational det = linalg::determinant(M);
        if (det < 0)
            det = -det;
        total += det;
    }
    return total / factorial;
}

bool contains(const HPolytope& P, const VectorXr& x)
{
    if (x.size() != P.dim())
        throw std::invalid_argument("contains: dimension mismatch");
    return satisfies_all(P, x);
}

bool contains_polytope(const HPolytope& P, const VertexSet& V)
{
    if (V.dim != P.dim())
        throw std::invalid_argument("contains_polytope: dimension mismatch");
    for (const auto& p : V.points)
        if (!satisfies_all(P, p))
            return false;
    return true;
}

HPolytope hull_halfspaces(const VertexSet& V)
{
    if (V.points.empty())
        throw std::invalid_argument("hull_halfspaces: empty point set");
    if (affine_dimension(V) != V.dim)
        throw std::domain_error("hull_halfspaces: points do not span the ambient space");
    std::vector<Halfspace> hs;
    for (const auto& f : hull::facets_from_points(V.points))
        hs.emplace_back(f.normal, f.offset);
    return HPolytope(V.dim, std::move(hs));
}

std::string to_off(const VertexSet& V)
{
    if (V.dim != 3)
        throw std::domain_error("OFF export only supports ambient dimension 3");
    if (affine_dimension(V) != 3)
        throw std::domain_error("OFF export requires a full-dimensional point set");
    const auto facets = hull::facets_from_points(V.points);

    std::ostringstream os;
    os << "OFF\n" << V.points.size() << " " << facets.size() << " 0\n";
    os.precision(17);
    for (const auto& p : V.points) {
        for (int j = 0; j < 3; ++j)
            os << (j ? " " : "") << static_cast<double>(p(j));
        os << "\n";
    }
    for (const auto& f : facets) {
        // Order the facet cycle by exact angular sort around the centroid.
        std::vector<int> cycle = f.incident;
        VectorXr centroid = VectorXr::Zero(3);
        for (int q : cycle)
            centroid += V.points[q];
        centroid /= Rational(static_cast<int>(cycle.size()));
        VectorXr u = V.points[cycle[0]] - centroid;
        VectorXr nr(3);
        for (int i = 0; i < 3; ++i)
            nr(i) = Rational(f.normal(i));
        VectorXr w(3);  // w = normal x u
        w(0) = nr(1) * u(2) - nr(2) * u(1);
        w(1) = nr(2) * u(0) - nr(0) * u(2);
        w(2) = nr(0) * u(1) - nr(1) * u(0);
        auto plane_coords = [&](int q) {
            const VectorXr r = V.points[q] - centroid;
            return std::make_pair(r.dot(u), r.dot(w));
        };
        std::sort(cycle.begin(), cycle.end(), [&](int a, int b) {
            const auto [sa, ta] = plane_coords(a);
            const auto [sb, tb] = plane_coords(b);
            const int ha = (ta < 0 || (ta == 0 && sa < 0)) ? 1 : 0;
            const int hb = (tb < 0 || (tb == 0 && sb < 0)) ? 1 : 0;
            if (ha != hb)
                return ha < hb;
            const Rational cross = sa * tb - sb * ta;
            if (cross != 0)
                return cross > 0;
            return a < b;
        });
        os << cycle.size();
        for (int q : cycle)
            os << " " << q;
        os << "\n";
    }
    return os.str();
}

}  // namespace stringcubes

#include <doctest.h>

#include <random>

#include "stringcubes/polyhedra.hpp"

using namespace stringcubes;

namespace {

Halfspace hs(std::initializer_list<long long> normal, const Rational& bound)
{
    VectorXz n(static_cast<Eigen::Index>(normal.size()));
    Eigen::Index i = 0;
    for (long long v : normal)
        n(i++) = Integer(v);
    return Halfspace(n, bound);
}

// Axis box prod [lo_i, hi_i].
HPolytope box(const std::vector<std::pair<long long, long long>>& sides)
{
    const int n = static_cast<int>(sides.size());
    std::vector<Halfspace> out;
    for (int i = 0; i < n; ++i) {
        VectorXz up = VectorXz::Zero(n), down = VectorXz::Zero(n);
        up(i) = 1;
        down(i) = -1;
        out.emplace_back(up, Rational(sides[i].second));
        out.emplace_back(down, Rational(-sides[i].first));
    }
    return HPolytope(n, std::move(out));
}

// conv{0, e_1, ..., e_n} scaled by s.
HPolytope simplex(int n, long long s = 1)
{
    std::vector<Halfspace> out;
    for (int i = 0; i < n; ++i) {
        VectorXz down = VectorXz::Zero(n);
        down(i) = -1;
        out.emplace_back(down, Rational(0));
    }
    out.emplace_back(VectorXz::Ones(n), Rational(s));
    return HPolytope(n, std::move(out));
}

VectorXr pt(std::initializer_list<Rational> coords)
{
    VectorXr x(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const Rational& c : coords)
        x(i++) = c;
    return x;
}

}  // namespace

TEST_CASE("fraction strings round-trip")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational q(num(rng), den(rng));
        CHECK(rational_from_string(to_fraction_string(q)) == q);
    }
    CHECK(to_fraction_string(Rational(-7, 2)) == "-7/2");
    CHECK(to_fraction_string(Rational(6, 3)) == "2");
    CHECK(rational_from_string("1/2") == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("vertices of the unit square")
{
    const auto V = vertices(box({{0, 1}, {0, 1}}));
    REQUIRE(V.size() == 4);
    CHECK(V.points[0] == pt({0, 0}));
    CHECK(V.points[1] == pt({0, 1}));
    CHECK(V.points[2] == pt({1, 0}));
    CHECK(V.points[3] == pt({1, 1}));
    for (const auto& p : V.points)
        CHECK(contains(box({{0, 1}, {0, 1}}), p));
}

TEST_CASE("empty and unbounded systems")
{
    const HPolytope empty(1, {hs({1}, 0), hs({-1}, -1)});
    CHECK(vertices(empty).empty());
    CHECK(lattice_points(empty).empty());

    const HPolytope ray(1, {hs({-1}, 0)});
    CHECK_THROWS_AS(vertices(ray), UnboundedError);
    try {
        vertices(ray);
    } catch (const UnboundedError& e) {
        REQUIRE(e.ray.size() == 1);
        CHECK(e.ray(0) > 0);
    }

    // Infeasible system whose recession cone is a line: still just empty.
    const HPolytope empty2(2, {hs({1, -1}, 0), hs({-1, 1}, -1)});
    CHECK(vertices(empty2).empty());
}

TEST_CASE("zero-dimensional polytope is a point")
{
    const HPolytope origin(0, {});
    const auto V = vertices(origin);
    REQUIRE(V.size() == 1);
    CHECK(V.points[0].size() == 0);
    CHECK(lattice_points(origin).size() == 1);
}

TEST_CASE("lattice polytope detection")
{
    CHECK(is_lattice_polytope(vertices(box({{0, 1}, {0, 1}}))));
    const HPolytope half(1, {hs({-1}, 0), hs({2}, 1)});
    CHECK_FALSE(is_lattice_polytope(vertices(half)));
}

TEST_CASE("simplicity")
{
    CHECK(is_simple(box({{0, 1}, {0, 1}, {0, 1}})));
    CHECK(is_simple(simplex(3)));

    // Square pyramid: apex meets four facets.
    const HPolytope pyramid(3, {hs({0, 0, -1}, 0), hs({1, 0, 1}, 1), hs({-1, 0, 1}, 1),
                                hs({0, 1, 1}, 1), hs({0, -1, 1}, 1)});
    CHECK_FALSE(is_simple(pyramid));

    CHECK_THROWS_AS(is_simple(HPolytope(1, {hs({1}, 0), hs({-1}, -1)})), std::domain_error);
}

TEST_CASE("smoothness")
{
    CHECK(is_smooth(box({{0, 1}, {0, 1}, {0, 1}})));
    CHECK(is_smooth(simplex(2)));
    CHECK(is_smooth(simplex(3)));

    // Simple but not smooth: conv{(0,0),(1,0),(0,2)}.
    const HPolytope tri(2, {hs({-1, 0}, 0), hs({0, -1}, 0), hs({2, 1}, 2)});
    CHECK(is_simple(tri));
    CHECK_FALSE(is_smooth(tri));

    // Non-lattice input is a domain error.
    const HPolytope half(1, {hs({-1}, 0), hs({2}, 1)});
    CHECK_THROWS_AS(is_smooth(half), std::domain_error);

    // Not simple implies not smooth.
    const HPolytope pyramid(3, {hs({0, 0, -1}, 0), hs({1, 0, 1}, 1), hs({-1, 0, 1}, 1),
                                hs({0, 1, 1}, 1), hs({0, -1, 1}, 1)});
    CHECK_FALSE(is_smooth(pyramid));
}

TEST_CASE("lower-dimensional polytopes are judged inside their hull")
{
    // Lattice segment on the diagonal of the plane.
    const HPolytope seg(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({-1, 0}, 0), hs({1, 0}, 1)});
    CHECK(is_simple(seg));
    CHECK(is_smooth(seg));

    // Triangle conv{(0,0,0),(1,0,0),(0,2,0)} in the z = 0 plane: simple but
    // its charted vertex cone at the right-angle corner is not unimodular.
    const HPolytope tri(3, {hs({0, 0, 1}, 0), hs({0, 0, -1}, 0), hs({-1, 0, 0}, 0),
                            hs({0, -1, 0}, 0), hs({2, 1, 0}, 2)});
    CHECK(is_simple(tri));
    CHECK_FALSE(is_smooth(tri));
}

TEST_CASE("lattice point scans")
{
    CHECK(lattice_points(box({{0, 1}, {0, 1}})).size() == 4);
    CHECK(lattice_points(simplex(2)).size() == 3);
    CHECK(lattice_points(HPolytope(1, {hs({1}, 0), hs({-1}, -1)})).empty());
    CHECK_THROWS_AS(lattice_points(box({{0, 100}, {0, 100}}), 50), ResourceLimitError);
}

TEST_CASE("box lattice counts follow (k+1)^n")
{
    for (int n = 1; n <= 3; ++n) {
        for (long long k = 0; k <= 4; ++k) {
            std::vector<std::pair<long long, long long>> sides(n, {0, k});
            long long expect = 1;
            for (int i = 0; i < n; ++i)
                expect *= (k + 1);
            CHECK(lattice_points(box(sides)).size() == static_cast<std::size_t>(expect));
        }
    }
}

TEST_CASE("volume fixtures")
{
    CHECK(volume(vertices(box({{0, 1}, {0, 1}, {0, 1}}))) == 1);
    CHECK(volume(vertices(simplex(2))) == Rational(1, 2));
    CHECK(volume(vertices(simplex(3))) == Rational(1, 6));
    CHECK(volume(vertices(simplex(4))) == Rational(1, 24));
    // Degenerate: a segment has no area.
    const HPolytope seg(2, {hs({1, -1}, 0), hs({-1, 1}, 0), hs({-1, 0}, 0), hs({1, 0}, 1)});
    CHECK(volume(vertices(seg)) == 0);
}

TEST_CASE("volume is translation invariant and scales like k^n")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> side(1, 3), shift(-3, 3);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::pair<long long, long long>> sides;
            for (int i = 0; i < n; ++i) {
                const long long lo = shift(rng);
                sides.push_back({lo, lo + side(rng)});
            }
            const Rational base = volume(vertices(box(sides)));
            for (long long k = 1; k <= 3; ++k) {
                std::vector<std::pair<long long, long long>> scaled;
                for (auto [lo, hi] : sides)
                    scaled.push_back({k * lo, k * hi});
                Rational factor = 1;
                for (int i = 0; i < n; ++i)
                    factor *= k;
                CHECK(volume(vertices(box(scaled))) == factor * base);
            }
            std::vector<std::pair<long long, long long>> moved;
            for (auto [lo, hi] : sides)
                moved.push_back({lo + 5, hi + 5});
            CHECK(volume(vertices(box(moved))) == base);
        }
    }
}

TEST_CASE("hull halfspaces reproduce the vertex set")
{
    std::mt19937 rng(43);
    std::uniform_int_distribution<long long> side(1, 3), shift(-2, 2);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<std::pair<long long, long long>> sides;
            for (int i = 0; i < n; ++i) {
                const long long lo = shift(rng);
                sides.push_back({lo, lo + side(rng)});
            }
            const VertexSet V = vertices(box(sides));
            const VertexSet W = vertices(hull_halfspaces(V));
            REQUIRE(V.size() == W.size());
            for (std::size_t i = 0; i < V.size(); ++i)
                CHECK(V.points[i] == W.points[i]);
            // Every vertex satisfies every halfspace exactly.
            const HPolytope B = box(sides);
            for (const auto& h : B.halfspaces())
                for (const auto& p : V.points)
                    CHECK(h.eval(p) <= h.bound);
        }
        const VertexSet S = vertices(simplex(n, 2));
        const VertexSet S2 = vertices(hull_halfspaces(S));
        REQUIRE(S.size() == S2.size());
        for (std::size_t i = 0; i < S.size(); ++i)
            CHECK(S.points[i] == S2.points[i]);
    }
}

TEST_CASE("random cut polytopes: vertices, hull round trip, lattice membership")
{
    std::mt19937 rng(97);
    std::uniform_int_distribution<long long> coef(-3, 3), off(0, 4);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 12; ++trial) {
            // A bounding box plus a handful of random cuts through it.
            std::vector<Halfspace> halves;
            for (int i = 0; i < n; ++i) {
                VectorXz up = VectorXz::Zero(n), down = VectorXz::Zero(n);
                up(i) = 1;
                down(i) = -1;
                halves.emplace_back(up, Rational(3));
                halves.emplace_back(down, Rational(3));
            }
            for (int cut = 0; cut < 3; ++cut) {
                VectorXz a = VectorXz::Zero(n);
                bool nonzero = false;
                for (int i = 0; i < n; ++i) {
                    a(i) = Integer(coef(rng));
                    nonzero = nonzero || a(i) != 0;
                }
                if (!nonzero)
                    a(0) = 1;
                halves.emplace_back(a, Rational(off(rng)));
            }
            const HPolytope P(n, halves);
            const VertexSet V = vertices(P);
            if (V.empty())
                continue;
            for (const auto& p : V.points)
                for (const auto& h : P.halfspaces())
                    CHECK(h.eval(p) <= h.bound);
            if (affine_dimension(V) == n) {
                const VertexSet W = vertices(hull_halfspaces(V));
                REQUIRE(W.size() == V.size());
                for (std::size_t i = 0; i < V.size(); ++i)
                    CHECK(W.points[i] == V.points[i]);
            }
            for (const auto& z : lattice_points(P)) {
                VectorXr x(n);
                for (int i = 0; i < n; ++i)
                    x(i) = z[i];
                CHECK(contains(P, x));
            }
        }
    }
}

TEST_CASE("containment predicates")
{
    const HPolytope sq = box({{0, 1}, {0, 1}});
    CHECK(contains(sq, pt({Rational(1, 2), Rational(1, 2)})));
    CHECK_FALSE(contains(sq, pt({2, 0})));
    CHECK(contains_polytope(box({{0, 2}, {0, 2}}), vertices(sq)));
    CHECK_FALSE(contains_polytope(sq, vertices(box({{0, 2}, {0, 2}}))));
    CHECK_THROWS_AS(contains(sq, pt({0})), std::invalid_argument);
}

TEST_CASE("redundant halfspaces get removed")
{
    HPolytope sq(2, {hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0),
                     hs({1, 0}, 5), hs({2, 0}, 2), hs({1, 1}, 5)});
    const HPolytope red = irredundant(sq);
    CHECK(red.halfspaces().size() == 4);
    const auto V = vertices(red);
    CHECK(V.size() == 4);
}

TEST_CASE("OFF export of the cube")
{
    const auto off = to_off(vertices(box({{0, 1}, {0, 1}, {0, 1}})));
    CHECK(off.rfind("OFF\n8 6 0\n", 0) == 0);
    CHECK_THROWS_AS(to_off(vertices(box({{0, 1}, {0, 1}}))), std::domain_error);
}

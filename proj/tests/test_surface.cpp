#include "doctest.h"

#include "fixtures.hpp"
#include "veech2/surface.hpp"

#include <random>

using namespace veech2;
using fixtures::v;

namespace {

// |det| of the coordinate matrix of four vectors of O_5^2 in the Z-basis
// (1, phi) of each coordinate, by plain rational elimination.
Rational abs_det_in_o5(const std::vector<Vec2>& b) {
    std::vector<std::vector<Rational>> m;
    for (const auto& u : b) {
        std::vector<Rational> row;
        for (const QElem& c : {u.x, u.y}) {
            Rational m2 = 2 * c.b();
            row.push_back(c.a() - m2 / 2);
            row.push_back(m2);
        }
        m.push_back(row);
    }
    Rational det = 1;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        while (piv < 4 && m[piv][col] == 0) ++piv;
        if (piv == 4) return 0;
        if (piv != col) std::swap(m[piv], m[col]);
        det *= m[col][col];
        for (std::size_t r = col + 1; r < 4; ++r) {
            Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det < 0 ? Rational(-det) : det;
}

Surface relabel(const Surface& s, std::size_t rot) {
    Surface out = s;
    for (std::size_t i = 0; i < s.polygons.size(); ++i) {
        const auto& p = s.polygons[i];
        for (std::size_t k = 0; k < p.size(); ++k) out.polygons[i].vertices[k] = p.vertex(k + rot);
    }
    for (auto& g : out.gluings) {
        for (EdgeRef* e : {&g.first, &g.second}) {
            std::size_t n = s.polygons[e->polygon].size();
            e->edge = (e->edge + n - rot % n) % n;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("validate: torus and L-shapes") {
    StratumInfo t = validate(fixtures::torus());
    CHECK(t.genus == 1);
    CHECK(t.zero_orders.empty());
    CHECK(t.vertex_classes.size() == 1);
    CHECK(t.vertex_classes[0].angle_multiple == 1);

    StratumInfo l = validate(fixtures::rational_l());
    CHECK(l.genus == 2);
    CHECK(l.zero_orders == std::vector<int>{2});
    CHECK(l.is_h2());
    CHECK(l.name() == "H(2)");

    CHECK(validate(fixtures::golden_l()).is_h2());
    CHECK(validate(fixtures::torus_triangles()).genus == 1);
}

TEST_CASE("validate: error paths") {
    Surface s = fixtures::torus();
    s.gluings = {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}};
    CHECK_THROWS_AS(validate(s), SurfaceError);
    try {
        validate(s);
    } catch (const SurfaceError& e) {
        CHECK(e.kind() == SurfaceErrorKind::NonParallelGluing);
    }

    Surface unmatched = fixtures::torus();
    unmatched.gluings.pop_back();
    try {
        validate(unmatched);
        FAIL("expected an error");
    } catch (const SurfaceError& e) {
        CHECK(e.kind() == SurfaceErrorKind::UnmatchedEdge);
    }

    Surface two = fixtures::torus();
    two.polygons.push_back(two.polygons[0]);
    two.gluings.push_back({{1, 0}, {1, 2}});
    two.gluings.push_back({{1, 1}, {1, 3}});
    try {
        validate(two);
        FAIL("expected an error");
    } catch (const SurfaceError& e) {
        CHECK(e.kind() == SurfaceErrorKind::Disconnected);
    }

    Surface clockwise;
    clockwise.polygons.push_back({{v(0, 0), v(0, 1), v(1, 1), v(1, 0)}});
    clockwise.gluings = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
    try {
        validate(clockwise);
        FAIL("expected an error");
    } catch (const SurfaceError& e) {
        CHECK(e.kind() == SurfaceErrorKind::InvalidPolygon);
    }

    Surface bowtie;
    bowtie.polygons.push_back({{v(0, 0), v(2, 0), v(0, 1), v(2, 1), v(1, 3)}});
    CHECK_THROWS_AS(validate(bowtie), SurfaceError);
}

TEST_CASE("validate is invariant under cyclic relabeling") {
    for (std::size_t rot = 0; rot < 8; ++rot) {
        StratumInfo info = validate(relabel(fixtures::golden_l(), rot));
        CHECK(info.is_h2());
    }
}

TEST_CASE("holonomy lattice") {
    auto tb = holonomy_basis(fixtures::torus());
    REQUIRE(tb.size() == 2);
    CHECK(abs(cross(tb[0], tb[1])) == QElem(1));

    auto lb = holonomy_basis(fixtures::rational_l());
    REQUIRE(lb.size() == 2);
    CHECK(abs(cross(lb[0], lb[1])) == QElem(1));
    for (const auto& g : holonomy_lattice(fixtures::rational_l())) {
        CHECK(g.x.is_rational());
        CHECK(is_integer(g.x, 0));
        CHECK(is_integer(g.y, 0));
    }

    auto gb = holonomy_basis(fixtures::golden_l());
    CHECK(rational_rank(holonomy_lattice(fixtures::golden_l())) == 4);
    REQUIRE(gb.size() == 4);
    for (const auto& g : gb) {
        CHECK(is_integer(g.x, 5));
        CHECK(is_integer(g.y, 5));
    }
    // the lattice of the golden L is O_5 x O_5
    CHECK(abs_det_in_o5(gb) == 1);

    // subdivision does not change the lattice
    auto sb = holonomy_basis(fixtures::torus_triangles());
    REQUIRE(sb.size() == 2);
    CHECK(abs(cross(sb[0], sb[1])) == QElem(1));
}

TEST_CASE("is_quadratic") {
    CHECK(is_quadratic(fixtures::torus()).kind == Quadraticity::Kind::Rational);
    CHECK(is_quadratic(fixtures::rational_l()).kind == Quadraticity::Kind::Rational);
    Quadraticity g = is_quadratic(fixtures::golden_l());
    CHECK(g.kind == Quadraticity::Kind::Quadratic);
    CHECK(g.d == 5);
    // a torus scaled by sqrt 2 has irrational periods but rank 2
    Surface scaled = apply_gl2(Matrix2{QElem::sqrt_d(2), QElem(0), QElem(0), QElem::sqrt_d(2)}, fixtures::torus());
    CHECK(is_quadratic(scaled).kind == Quadraticity::Kind::Rational);
    CHECK_FALSE(has_rational_coordinates(scaled));
}

TEST_CASE("apply_gl2") {
    Surface l = fixtures::golden_l();
    CHECK(apply_gl2(Matrix2::identity(), l) == l);

    Surface sheared = apply_gl2(Matrix2{QElem(1), QElem(0), QElem(-1), QElem(1)}, fixtures::torus());
    CHECK(validate(sheared).genus == 1);

    std::mt19937 rng(2);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int i = 0; i < 40; ++i) {
        QElem a = QElem::frac(small(rng), small(rng), 1, 5);
        QElem b = QElem::frac(small(rng), small(rng), 1, 5);
        QElem c = QElem::frac(small(rng), small(rng), 1, 5);
        if (a.is_zero()) continue;
        Matrix2 g{a, b, c, (QElem(1) + b * c) / a};
        REQUIRE(g.det() == QElem(1));
        Surface gl = apply_gl2(g, l);
        CHECK(gl.area() == l.area());
        CHECK(validate(gl).is_h2());
    }

    Matrix2 flip{QElem(-1), QElem(0), QElem(0), QElem(2)};
    Surface fl = apply_gl2(flip, l);
    CHECK(validate(fl).is_h2());
    CHECK(fl.area() == QElem(2) * l.area());

    CHECK_THROWS_AS(apply_gl2(Matrix2{QElem(1), QElem(2), QElem(2), QElem(4)}, l), SurfaceError);
}

TEST_CASE("sector predicates") {
    Vec2 r = v(1, 0), u = v(0, 1), l = v(-1, 0), d = v(0, -1);
    CHECK(arg_less(r, u));
    CHECK(arg_less(u, l));
    CHECK(arg_less(l, d));
    CHECK_FALSE(arg_less(d, r));
    CHECK(in_ccw_sector(r, r, u));
    CHECK_FALSE(in_ccw_sector(u, r, u));
    CHECK(in_ccw_sector(l, u, r));
    CHECK(in_ccw_sector(d, r, r));
}

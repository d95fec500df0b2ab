// Hand-built surfaces shared by the unit tests. They are written out as raw
// polygons so that tests of the builders have something independent to
// compare against.

#ifndef VEECH2_TEST_FIXTURES_HPP
#define VEECH2_TEST_FIXTURES_HPP

#include "veech2/surface.hpp"

#include <array>

namespace fixtures {

using veech2::QElem;
using veech2::Surface;
using veech2::Vec2;

inline QElem phi() { return QElem::frac(1, 1, 2, 5); }

inline Vec2 v(const QElem& x, const QElem& y) { return Vec2{x, y}; }

inline Surface torus() {
    Surface s;
    s.polygons.push_back({{v(0, 0), v(1, 0), v(1, 1), v(0, 1)}});
    s.gluings = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
    return s;
}

// Torus cut along the diagonal into two triangles.
inline Surface torus_triangles() {
    Surface s;
    s.polygons.push_back({{v(0, 0), v(1, 0), v(1, 1)}});
    s.polygons.push_back({{v(0, 0), v(1, 1), v(0, 1)}});
    s.gluings = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 0}}};
    return s;
}

// One L-shaped polygon: a w1 x h1 block on the left of a w2 x h2 block,
// with opposite sides glued. Edges:
// 0 [0,w1] bottom, 1 [w1,w2] bottom, 2 right, 3 step, 4 inner right,
// 5 top, 6 upper left, 7 lower left.
inline Surface l_shape(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2, std::int64_t d = 0) {
    Surface s;
    s.d = d;
    s.polygons.push_back({{v(0, 0), v(w1, 0), v(w2, 0), v(w2, h2), v(w1, h2), v(w1, h2 + h1), v(0, h2 + h1), v(0, h2)}});
    s.gluings = {{{0, 0}, {0, 5}}, {{0, 1}, {0, 3}}, {{0, 2}, {0, 7}}, {{0, 4}, {0, 6}}};
    return s;
}

inline Surface rational_l() { return l_shape(1, 2, 1, 1); }
inline Surface golden_l() { return l_shape(1, phi(), 1, phi(), 5); }

}  // namespace fixtures

#endif

#include "veech2/jinvariant.hpp"

namespace veech2 {

JInvariant& JInvariant::operator+=(const JInvariant& o) {
    jxx += o.jxx;
    jyy += o.jyy;
    jxy += o.jxy;
    return *this;
}

JInvariant j_pair(const Vec2& u, const Vec2& v) {
    return JInvariant{wedge(u.x, v.x), wedge(u.y, v.y), tensor(u.x, v.y) - tensor(v.x, u.y)};
}

JInvariant j_polygon(const Polygon& p) {
    JInvariant sum;
    for (std::size_t k = 0; k < p.size(); ++k) sum += j_pair(p.vertex(k), p.vertex(k + 1));
    return sum;
}

JInvariant j_surface(const Surface& s) {
    JInvariant sum;
    for (const auto& p : s.polygons) sum += j_polygon(p);
    return sum;
}

TensorC4 j_yx(const Surface& s) {
    TensorC4 sum;
    for (const auto& p : s.polygons) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            const Vec2& u = p.vertex(k);
            const Vec2& v = p.vertex(k + 1);
            sum += tensor(u.y, v.x) - tensor(v.y, u.x);
        }
    }
    return sum;
}

Matrix2 horizontal_normalizer(const Vec2& v) {
    if (v.is_zero()) throw DirectionError("zero direction");
    if (v.x.is_zero()) return Matrix2{QElem(0), QElem(1), QElem(-1), QElem(0)};
    QElem q = v.y / v.x;
    return Matrix2{QElem(1), QElem(0), -q, QElem(1)};
}

WedgeQQ j_vv(const Surface& s, const Vec2& v) {
    if (v.is_zero()) throw DirectionError("zero direction");
    if (v.x.is_zero()) return j_surface(s).jxx;
    return j_surface(apply_gl2(horizontal_normalizer(v), s)).jyy;
}

namespace {

TensorC4 j_vw_with(const Surface& s, const Vec2& v_prime, const Vec2& w_prime) {
    Matrix2 frame{v_prime.x, w_prime.x, v_prime.y, w_prime.y};
    return j_surface(apply_gl2(frame.inverse(), s)).jxy;
}

QElem independent_det(const Vec2& v, const Vec2& w) {
    QElem det = cross(v, w);
    if (det.is_zero()) throw DirectionError("directions are linearly dependent");
    return det;
}

bool vertical_then_horizontal(const Vec2& v, const Vec2& w) {
    return v.x.is_zero() && v.y.sign() > 0 && w.y.is_zero() && w.x.sign() > 0;
}

}  // namespace

TensorC4 j_vw(const Surface& s, const Vec2& v, const Vec2& w) {
    QElem det = independent_det(v, w);
    if (vertical_then_horizontal(v, w)) return j_yx(s);
    return j_vw_with(s, det.inverse() * v, w);
}

TensorC4 j_vw_alternate(const Surface& s, const Vec2& v, const Vec2& w) {
    QElem det = independent_det(v, w);
    if (vertical_then_horizontal(v, w)) return j_yx(s);
    return j_vw_with(s, v, det.inverse() * w);
}

JInvariant j_from_homology(const std::vector<std::pair<Vec2, Vec2>>& basis) {
    JInvariant sum;
    for (const auto& [a, b] : basis) sum += j_pair(a, b);
    return JInvariant{Rational(2) * sum.jxx, Rational(2) * sum.jyy, Rational(2) * sum.jxy};
}

}  // namespace veech2

// The Kenyon-Smillie J-invariant and its projections.
//
// For vertices v_1..v_n of a polygon, J(P) is the cyclic sum v_i ^ v_{i+1}
// in R^2 ^_Q R^2. With v = (a, b) and w = (c, d) the projections are
//   J_xx(v ^ w) = a ^ c,  J_yy(v ^ w) = b ^ d,  J_xy(v ^ w) = a (x) d - c (x) b,
// which for coordinates in Q(sqrt d) are the six rational numbers kept here.

#ifndef VEECH2_JINVARIANT_HPP
#define VEECH2_JINVARIANT_HPP

#include "veech2/surface.hpp"
#include "veech2/tensor.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace veech2 {

struct JInvariant {
    WedgeQQ jxx;
    WedgeQQ jyy;
    TensorC4 jxy;

    JInvariant& operator+=(const JInvariant& o);
    friend JInvariant operator+(JInvariant x, const JInvariant& y) { return x += y; }
    friend bool operator==(const JInvariant&, const JInvariant&) = default;
};

class DirectionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Projections of u ^ v for a single pair of plane vectors.
JInvariant j_pair(const Vec2& u, const Vec2& v);

JInvariant j_polygon(const Polygon& p);
JInvariant j_surface(const Surface& s);

/// J_yx(S): b (x) c - d (x) a summed over the same wedge terms.
TensorC4 j_yx(const Surface& s);

/// Shear with det 1 sending the direction v = (1, q) to (1, 0); a quarter
/// turn when v is vertical.
Matrix2 horizontal_normalizer(const Vec2& v);

/// J_vv(S) = J_yy(gS) for the shear g taking v to the horizontal;
/// J_xx(S) for vertical v.
WedgeQQ j_vv(const Surface& s, const Vec2& v);

/// J_vw(S) = J_xy(gS) with g = [v' w']^-1, v' = v / det(v, w), w' = w.
/// For v vertical and w horizontal this is J_yx(S).
TensorC4 j_vw(const Surface& s, const Vec2& v, const Vec2& w);

/// Same, but normalizing w' = w / det(v, w), v' = v instead.
TensorC4 j_vw_alternate(const Surface& s, const Vec2& v, const Vec2& w);

/// 2 * sum p(a_i) ^ p(b_i) over a symplectic basis.
JInvariant j_from_homology(const std::vector<std::pair<Vec2, Vec2>>& basis);

}  // namespace veech2

#endif

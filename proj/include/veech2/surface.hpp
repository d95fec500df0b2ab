// Translation surfaces as planar polygons glued by translations.

#ifndef VEECH2_SURFACE_HPP
#define VEECH2_SURFACE_HPP

#include "veech2/qfield.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace veech2 {

struct Vec2 {
    QElem x;
    QElem y;

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    friend Vec2 operator+(Vec2 u, const Vec2& v) { return u += v; }
    friend Vec2 operator-(Vec2 u, const Vec2& v) { return u -= v; }
    friend Vec2 operator-(const Vec2& u) { return Vec2{-u.x, -u.y}; }
    friend Vec2 operator*(const QElem& s, const Vec2& u) { return Vec2{s * u.x, s * u.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

inline QElem cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline QElem dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

/// True iff u points strictly before v when both are measured
/// counterclockwise from the positive x axis, angles in [0, 2pi).
bool arg_less(const Vec2& u, const Vec2& v);

/// True iff the direction u lies in the half-open counterclockwise sector [from, to).
/// The sector sweep is taken in (0, 2pi]; from == to means the full turn.
bool in_ccw_sector(const Vec2& u, const Vec2& from, const Vec2& to);

/// Row-major 2x2 matrix [[a, b], [c, e]].
struct Matrix2 {
    QElem a{1}, b{0}, c{0}, e{1};

    static Matrix2 identity() { return {}; }
    QElem det() const { return a * e - b * c; }
    Matrix2 inverse() const;
    Vec2 operator*(const Vec2& v) const { return Vec2{a * v.x + b * v.y, c * v.x + e * v.y}; }
    Matrix2 operator*(const Matrix2& m) const;
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct Polygon {
    std::vector<Vec2> vertices;  // counterclockwise

    std::size_t size() const { return vertices.size(); }
    const Vec2& vertex(std::size_t k) const { return vertices[k % vertices.size()]; }
    Vec2 edge(std::size_t k) const { return vertex(k + 1) - vertex(k); }
    /// Twice the signed area.
    QElem twice_area() const;
    friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct EdgeRef {
    std::size_t polygon = 0;
    std::size_t edge = 0;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct Gluing {
    EdgeRef first;
    EdgeRef second;
    friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct Surface {
    std::int64_t d = 0;  // 0 when all coordinates are rational
    std::vector<Polygon> polygons;
    std::vector<Gluing> gluings;

    QElem area() const;
    /// Partner of an edge under the gluing; throws if the edge is unglued.
    EdgeRef partner(EdgeRef e) const;
    friend bool operator==(const Surface&, const Surface&) = default;
};

enum class SurfaceErrorKind {
    InvalidPolygon,
    UnmatchedEdge,
    NonParallelGluing,
    AngleNotMultipleOf2Pi,
    Disconnected,
    SingularMatrix,
};

class SurfaceError : public std::runtime_error {
public:
    SurfaceError(SurfaceErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    SurfaceErrorKind kind() const { return kind_; }

private:
    SurfaceErrorKind kind_;
};

struct Corner {
    std::size_t polygon = 0;
    std::size_t vertex = 0;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Corners of one identified vertex, in counterclockwise order around it.
struct VertexClass {
    std::vector<Corner> corners;
    int angle_multiple = 0;  // total angle is 2*pi*angle_multiple
};

struct StratumInfo {
    int genus = 0;
    std::vector<int> zero_orders;  // sorted descending; empty for the torus
    std::vector<VertexClass> vertex_classes;

    bool is_h2() const { return genus == 2 && zero_orders == std::vector<int>{2}; }
    bool is_h11() const { return genus == 2 && zero_orders == std::vector<int>{1, 1}; }
    std::string name() const;
    /// Index into vertex_classes for each (polygon, vertex).
    std::vector<std::vector<std::size_t>> class_of;
};

StratumInfo validate(const Surface& s);

/// Generators of the absolute period lattice p(H1(S, Z)): holonomies of
/// chord loops with respect to a spanning tree of the 1-skeleton.
std::vector<Vec2> holonomy_lattice(const Surface& s);

/// A Z-basis of the same lattice, obtained by integer row reduction of the
/// generators in the rational coordinates (x.a, x.b, y.a, y.b).
std::vector<Vec2> holonomy_basis(const Surface& s);

/// Rank over Q of a set of vectors in Q(sqrt d)^2 viewed in Q^4.
int rational_rank(const std::vector<Vec2>& vectors);

struct Quadraticity {
    enum class Kind { Rational, Quadratic, NotQuadratic };
    Kind kind = Kind::Rational;
    std::int64_t d = 0;
};

Quadraticity is_quadratic(const Surface& s);

/// True iff every vertex coordinate is rational (square-tiled up to scale).
bool has_rational_coordinates(const Surface& s);

Surface apply_gl2(const Matrix2& g, const Surface& s);

}  // namespace veech2

#endif

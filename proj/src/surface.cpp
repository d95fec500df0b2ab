#include "veech2/surface.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace veech2 {

namespace {

bool same_direction(const Vec2& u, const Vec2& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

// Is the counterclockwise angle from `from` to u smaller than that to v?
bool rel_less(const Vec2& from, const Vec2& u, const Vec2& v) {
    auto half = [&](const Vec2& w) {
        int c = cross(from, w).sign();
        if (c > 0) return 0;
        if (c == 0 && dot(from, w).sign() > 0) return 0;
        return 1;
    };
    int hu = half(u);
    int hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v).sign() > 0;
}

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& p3, const Vec2& p4) {
    int o1 = orientation(p1, p2, p3);
    int o2 = orientation(p1, p2, p4);
    int o3 = orientation(p3, p4, p1);
    int o4 = orientation(p3, p4, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(p1, p2, p3)) return true;
    if (o2 == 0 && on_segment(p1, p2, p4)) return true;
    if (o3 == 0 && on_segment(p3, p4, p1)) return true;
    if (o4 == 0 && on_segment(p3, p4, p2)) return true;
    return false;
}

std::string edge_name(EdgeRef e) {
    std::ostringstream os;
    os << "polygon " << e.polygon << " edge " << e.edge;
    return os.str();
}

void validate_polygon(const Polygon& p, std::size_t index) {
    auto fail = [&](const std::string& why) {
        throw SurfaceError(SurfaceErrorKind::InvalidPolygon, "polygon " + std::to_string(index) + ": " + why);
    };
    const std::size_t n = p.size();
    if (n < 3) fail("fewer than three vertices");
    for (std::size_t k = 0; k < n; ++k) {
        if (p.edge(k).is_zero()) fail("zero-length edge " + std::to_string(k));
    }
    if (p.twice_area().sign() <= 0) fail("not counterclockwise or zero area");
    for (std::size_t i = 0; i < n; ++i) {
        // consecutive edges must not fold back onto each other
        if (same_direction(p.edge(i), -p.edge(i + n - 1))) fail("degenerate spike at vertex " + std::to_string(i));
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1))) {
                fail("edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
            }
        }
    }
}

}  // namespace

bool arg_less(const Vec2& u, const Vec2& v) {
    return rel_less(Vec2{QElem(1), QElem(0)}, u, v);
}

bool in_ccw_sector(const Vec2& u, const Vec2& from, const Vec2& to) {
    if (same_direction(u, from)) return true;
    if (same_direction(from, to)) return true;
    return rel_less(from, u, to);
}

Matrix2 Matrix2::inverse() const {
    QElem det_value = det();
    if (det_value.is_zero()) throw SurfaceError(SurfaceErrorKind::SingularMatrix, "singular matrix");
    QElem inv = det_value.inverse();
    return Matrix2{e * inv, -b * inv, -c * inv, a * inv};
}

Matrix2 Matrix2::operator*(const Matrix2& m) const {
    return Matrix2{a * m.a + b * m.c, a * m.b + b * m.e, c * m.a + e * m.c, c * m.b + e * m.e};
}

QElem Polygon::twice_area() const {
    QElem sum(0);
    for (std::size_t k = 0; k < size(); ++k) sum += cross(vertex(k), vertex(k + 1));
    return sum;
}

QElem Surface::area() const {
    QElem sum(0);
    for (const auto& p : polygons) sum += p.twice_area();
    return sum / QElem(2);
}

EdgeRef Surface::partner(EdgeRef e) const {
    for (const auto& g : gluings) {
        if (g.first == e) return g.second;
        if (g.second == e) return g.first;
    }
    throw SurfaceError(SurfaceErrorKind::UnmatchedEdge, edge_name(e) + " is not glued");
}

std::string StratumInfo::name() const {
    std::ostringstream os;
    os << "H(";
    for (std::size_t i = 0; i < zero_orders.size(); ++i) os << (i ? "," : "") << zero_orders[i];
    if (zero_orders.empty()) os << "0";
    os << ")";
    return os.str();
}

StratumInfo validate(const Surface& s) {
    if (s.polygons.empty()) throw SurfaceError(SurfaceErrorKind::Disconnected, "surface has no polygons");
    for (std::size_t i = 0; i < s.polygons.size(); ++i) validate_polygon(s.polygons[i], i);

    // every edge glued exactly once, by a translation
    std::vector<std::vector<std::optional<EdgeRef>>> partner(s.polygons.size());
    for (std::size_t i = 0; i < s.polygons.size(); ++i) partner[i].resize(s.polygons[i].size());
    auto check_ref = [&](EdgeRef e) {
        if (e.polygon >= s.polygons.size() || e.edge >= s.polygons[e.polygon].size()) {
            throw SurfaceError(SurfaceErrorKind::UnmatchedEdge, edge_name(e) + " does not exist");
        }
    };
    for (const auto& g : s.gluings) {
        check_ref(g.first);
        check_ref(g.second);
        if (g.first == g.second) throw SurfaceError(SurfaceErrorKind::UnmatchedEdge, edge_name(g.first) + " glued to itself");
        for (EdgeRef e : {g.first, g.second}) {
            if (partner[e.polygon][e.edge]) throw SurfaceError(SurfaceErrorKind::UnmatchedEdge, edge_name(e) + " glued twice");
        }
        partner[g.first.polygon][g.first.edge] = g.second;
        partner[g.second.polygon][g.second.edge] = g.first;
        Vec2 u = s.polygons[g.first.polygon].edge(g.first.edge);
        Vec2 v = s.polygons[g.second.polygon].edge(g.second.edge);
        if (!(u + v).is_zero()) {
            throw SurfaceError(SurfaceErrorKind::NonParallelGluing,
                               edge_name(g.first) + " and " + edge_name(g.second) + " are not related by a translation");
        }
    }
    for (std::size_t i = 0; i < s.polygons.size(); ++i) {
        for (std::size_t k = 0; k < s.polygons[i].size(); ++k) {
            if (!partner[i][k]) throw SurfaceError(SurfaceErrorKind::UnmatchedEdge, edge_name({i, k}) + " is not glued");
        }
    }

    // connectivity of the polygon adjacency graph
    {
        std::vector<bool> seen(s.polygons.size(), false);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = true;
        while (!todo.empty()) {
            std::size_t p = todo.front();
            todo.pop();
            for (const auto& e : partner[p]) {
                if (!seen[e->polygon]) {
                    seen[e->polygon] = true;
                    todo.push(e->polygon);
                }
            }
        }
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) throw SurfaceError(SurfaceErrorKind::Disconnected, "polygon " + std::to_string(i) + " is not connected to polygon 0");
        }
    }

    // vertex classes: walk counterclockwise around each vertex, crossing the
    // incoming edge of each corner into the glued polygon
    StratumInfo info;
    info.class_of.resize(s.polygons.size());
    for (std::size_t i = 0; i < s.polygons.size(); ++i) info.class_of[i].assign(s.polygons[i].size(), SIZE_MAX);
    for (std::size_t i = 0; i < s.polygons.size(); ++i) {
        for (std::size_t k = 0; k < s.polygons[i].size(); ++k) {
            if (info.class_of[i][k] != SIZE_MAX) continue;
            VertexClass vc;
            int crossings = 0;
            Corner c{i, k};
            do {
                info.class_of[c.polygon][c.vertex] = info.vertex_classes.size();
                vc.corners.push_back(c);
                const Polygon& p = s.polygons[c.polygon];
                const std::size_t n = p.size();
                Vec2 out = p.edge(c.vertex);
                Vec2 in_rev = -p.edge(c.vertex + n - 1);
                if (arg_less(in_rev, out)) ++crossings;
                EdgeRef next = *partner[c.polygon][(c.vertex + n - 1) % n];
                c = Corner{next.polygon, next.edge};
                if (vc.corners.size() > 100000) {
                    throw SurfaceError(SurfaceErrorKind::AngleNotMultipleOf2Pi, "vertex cycle does not close");
                }
            } while (!(c == Corner{i, k}));
            if (crossings < 1) {
                throw SurfaceError(SurfaceErrorKind::AngleNotMultipleOf2Pi,
                                   "vertex class " + std::to_string(info.vertex_classes.size()) + " has no full turn");
            }
            vc.angle_multiple = crossings;
            info.vertex_classes.push_back(std::move(vc));
        }
    }

    const long vertices = static_cast<long>(info.vertex_classes.size());
    const long edges = static_cast<long>(s.gluings.size());
    const long faces = static_cast<long>(s.polygons.size());
    const long euler = vertices - edges + faces;
    if (euler > 2 || (2 - euler) % 2 != 0) {
        throw SurfaceError(SurfaceErrorKind::AngleNotMultipleOf2Pi, "Euler characteristic " + std::to_string(euler) + " is not that of a closed orientable surface");
    }
    info.genus = static_cast<int>((2 - euler) / 2);
    long excess = 0;
    for (const auto& vc : info.vertex_classes) {
        excess += vc.angle_multiple - 1;
        if (vc.angle_multiple > 1) info.zero_orders.push_back(vc.angle_multiple - 1);
    }
    if (excess != 2L * info.genus - 2) {
        throw SurfaceError(SurfaceErrorKind::AngleNotMultipleOf2Pi, "cone angle excess does not match the genus");
    }
    std::sort(info.zero_orders.begin(), info.zero_orders.end(), std::greater<>());
    return info;
}

std::vector<Vec2> holonomy_lattice(const Surface& s) {
    StratumInfo info = validate(s);
    const std::size_t nv = info.vertex_classes.size();
    struct Arc {
        std::size_t from, to;
        Vec2 hol;
    };
    std::vector<Arc> arcs;
    for (const auto& g : s.gluings) {
        const Polygon& p = s.polygons[g.first.polygon];
        std::size_t k = g.first.edge;
        arcs.push_back(Arc{info.class_of[g.first.polygon][k], info.class_of[g.first.polygon][(k + 1) % p.size()], p.edge(k)});
    }
    std::vector<std::vector<std::size_t>> adjacent(nv);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        adjacent[arcs[a].from].push_back(a);
        adjacent[arcs[a].to].push_back(a);
    }
    std::vector<std::optional<Vec2>> pos(nv);
    std::vector<bool> tree(arcs.size(), false);
    pos[0] = Vec2{QElem(0), QElem(0)};
    std::queue<std::size_t> todo;
    todo.push(0);
    while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop();
        for (std::size_t a : adjacent[v]) {
            const Arc& arc = arcs[a];
            if (arc.from == v && !pos[arc.to]) {
                pos[arc.to] = *pos[v] + arc.hol;
                tree[a] = true;
                todo.push(arc.to);
            } else if (arc.to == v && !pos[arc.from]) {
                pos[arc.from] = *pos[v] - arc.hol;
                tree[a] = true;
                todo.push(arc.from);
            }
        }
    }
    std::vector<Vec2> gens;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        if (tree[a]) continue;
        Vec2 loop = *pos[arcs[a].from] + arcs[a].hol - *pos[arcs[a].to];
        if (!loop.is_zero()) gens.push_back(loop);
    }
    return gens;
}

namespace {

std::array<Rational, 4> coords(const Vec2& v) {
    return {v.x.a(), v.x.b(), v.y.a(), v.y.b()};
}

std::int64_t field_of(const std::vector<Vec2>& vs) {
    std::int64_t d = 0;
    for (const auto& v : vs) {
        if (v.x.d() != 0) d = v.x.d();
        if (v.y.d() != 0) d = v.y.d();
    }
    return d;
}

}  // namespace

int rational_rank(const std::vector<Vec2>& vectors) {
    std::vector<std::array<Rational, 4>> rows;
    for (const auto& v : vectors) rows.push_back(coords(v));
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (int c = col; c < 4; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<Vec2> holonomy_basis(const Surface& s) {
    std::vector<Vec2> gens = holonomy_lattice(s);
    const std::int64_t d = field_of(gens) != 0 ? field_of(gens) : s.d;
    Integer scale = 1;
    for (const auto& g : gens) {
        for (const auto& c : coords(g)) scale = boost::multiprecision::lcm(scale, Integer(denominator(c)));
    }
    std::vector<std::array<Integer, 4>> rows;
    for (const auto& g : gens) {
        std::array<Integer, 4> r;
        auto c = coords(g);
        for (int i = 0; i < 4; ++i) r[i] = numerator(c[i] * Rational(scale));
        rows.push_back(r);
    }
    // integer echelon form by repeated Euclid steps on each column
    std::size_t rank = 0;
    for (int col = 0; col < 4; ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r) {
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool done = true;
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q = rows[r][col] / rows[rank][col];
                for (int c = 0; c < 4; ++c) rows[r][c] -= q * rows[rank][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) {
                if (rows[rank][col] < 0) {
                    for (auto& x : rows[rank]) x = -x;
                }
                ++rank;
                break;
            }
        }
    }
    std::vector<Vec2> basis;
    for (std::size_t r = 0; r < rank; ++r) {
        Rational inv(Integer(1), scale);
        const auto& row = rows[r];
        std::int64_t dd = (row[1] != 0 || row[3] != 0) ? d : 0;
        basis.push_back(Vec2{QElem(Rational(row[0]) * inv, Rational(row[1]) * inv, dd),
                             QElem(Rational(row[2]) * inv, Rational(row[3]) * inv, dd)});
    }
    return basis;
}

bool has_rational_coordinates(const Surface& s) {
    for (const auto& p : s.polygons) {
        for (const auto& v : p.vertices) {
            if (!v.x.is_rational() || !v.y.is_rational()) return false;
        }
    }
    return true;
}

Quadraticity is_quadratic(const Surface& s) {
    std::vector<Vec2> gens = holonomy_lattice(s);
    bool irrational = false;
    for (const auto& g : gens) irrational = irrational || !g.x.is_rational() || !g.y.is_rational();
    if (!irrational || rational_rank(gens) <= 2) return {Quadraticity::Kind::Rational, 0};
    return {Quadraticity::Kind::Quadratic, field_of(gens)};
}

Surface apply_gl2(const Matrix2& g, const Surface& s) {
    QElem det_value = g.det();
    if (det_value.is_zero()) throw SurfaceError(SurfaceErrorKind::SingularMatrix, "singular matrix");
    Surface out;
    out.d = s.d;
    for (const QElem* x : {&g.a, &g.b, &g.c, &g.e}) {
        if (x->d() != 0 && !x->is_rational()) out.d = x->d();
    }
    const bool flip = det_value.sign() < 0;
    for (const auto& p : s.polygons) {
        Polygon q;
        const std::size_t n = p.size();
        for (std::size_t j = 0; j < n; ++j) {
            q.vertices.push_back(g * p.vertex(flip ? (n - j) % n : j));
        }
        out.polygons.push_back(std::move(q));
    }
    for (const auto& gl : s.gluings) {
        auto remap = [&](EdgeRef e) {
            if (!flip) return e;
            std::size_t n = s.polygons[e.polygon].size();
            return EdgeRef{e.polygon, n - 1 - e.edge};
        };
        out.gluings.push_back(Gluing{remap(gl.first), remap(gl.second)});
    }
    return out;
}

}  // namespace veech2

#include "veech2/cylinder.hpp"

#include "veech2/jinvariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

namespace veech2 {

H11Derived h11_derived(const CylinderData& c1, const CylinderData& c2, const CylinderData& c3) {
    return H11Derived{c1.height + c3.height, c2.height + c3.height, c1.twist + c3.twist, c2.twist + c3.twist};
}

namespace {

std::int64_t common_field(std::initializer_list<QElem> xs) {
    std::int64_t d = 0;
    for (const auto& x : xs) {
        if (x.d() == 0) continue;
        if (d != 0 && d != x.d()) throw FieldError("parameters lie in different quadratic fields");
        d = x.d();
    }
    return d;
}

Vec2 pt(const QElem& x, const QElem& y) { return Vec2{x, y}; }

void require_positive(std::initializer_list<QElem> xs) {
    for (const auto& x : xs) {
        if (x.sign() <= 0) throw BuildError(BuildErrorKind::NonPositive, "widths and heights must be positive, got " + x.to_string());
    }
}

void require_twist(const QElem& t, const QElem& w) {
    if (t.sign() < 0 || !(t < w)) {
        throw BuildError(BuildErrorKind::TwistRange, "twist " + t.to_string() + " outside [0, " + w.to_string() + ")");
    }
}

// Parallelogram over [x0, x0 + w] at height y with top shifted by dx.
Polygon parallelogram(const QElem& x0, const QElem& y, const QElem& w, const QElem& h, const QElem& dx) {
    return Polygon{{pt(x0, y), pt(x0 + w, y), pt(x0 + w + dx, y + h), pt(x0 + dx, y + h)}};
}

}  // namespace

BuiltSurface build_h2(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2,
                      const QElem& t1, const QElem& t2) {
    const std::int64_t d = common_field({w1, w2, h1, h2, t1, t2});
    require_positive({w1, w2, h1, h2});
    if (!(w1 < w2)) throw BuildError(BuildErrorKind::WidthOrder, "build_h2 needs w1 < w2");
    require_twist(t1, w1);
    require_twist(t2, w2);

    // C2 bottom: [0, w1] meets the top of C1, [w1, w2] meets its own top.
    // C1 sits on [x2, x2 + w1] of the top of C2.
    const QElem x1 = t1;
    const QElem x2 = t2 - w1;
    Surface s;
    s.d = d;
    s.polygons.push_back(Polygon{{pt(0, 0), pt(w1, 0), pt(w2, 0), pt(w2 + x2, h2), pt(x2 + w1, h2), pt(x2, h2)}});
    s.polygons.push_back(parallelogram(x2, h2, w1, h1, x1));
    s.gluings = {
        {{0, 0}, {1, 2}},
        {{0, 1}, {0, 3}},
        {{0, 2}, {0, 5}},
        {{0, 4}, {1, 0}},
        {{1, 1}, {1, 3}},
    };
    SymplecticBasis basis{{pt(w1, 0), pt(x1, h1)}, {pt(w2, 0), pt(x2, h2)}};
    return BuiltSurface{std::move(s), std::move(basis)};
}

BuiltSurface build_h11(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2, const QElem& h3,
                       const QElem& t1, const QElem& t2, const QElem& t3) {
    const std::int64_t d = common_field({w1, w2, h1, h2, h3, t1, t2, t3});
    require_positive({w1, w2, h1, h2, h3});
    const QElem w3 = w1 + w2;
    require_twist(t1, w1);
    require_twist(t2, w2);
    require_twist(t3, w3);
    if (std::tie(w2, h2, t2) < std::tie(w1, h1, t1)) {
        throw BuildError(BuildErrorKind::WidthOrder, "build_h11 needs (w1, h1, t1) <= (w2, h2, t2)");
    }

    // C3 bottom: [0, w1] meets the top of C1, [w1, w3] the top of C2.
    // Its top carries C1 over [x3, x3 + w1] and C2 over [x3 + w1, x3 + w3].
    const QElem x1 = t1;
    const QElem x2 = t2;
    const QElem x3 = t3 - w1;
    Surface s;
    s.d = d;
    s.polygons.push_back(Polygon{{pt(0, 0), pt(w1, 0), pt(w3, 0), pt(w3 + x3, h3), pt(x3 + w1, h3), pt(x3, h3)}});
    s.polygons.push_back(parallelogram(x3, h3, w1, h1, x1));
    s.polygons.push_back(parallelogram(x3 + w1, h3, w2, h2, x2));
    s.gluings = {
        {{0, 0}, {1, 2}},
        {{0, 1}, {2, 2}},
        {{0, 2}, {0, 5}},
        {{0, 3}, {2, 0}},
        {{0, 4}, {1, 0}},
        {{1, 1}, {1, 3}},
        {{2, 1}, {2, 3}},
    };
    SymplecticBasis basis{{pt(w1, 0), pt(x1 + x3, h1 + h3)}, {pt(w2, 0), pt(x2 + x3, h2 + h3)}};
    return BuiltSurface{std::move(s), std::move(basis)};
}

Vec2 canonical_direction(const Vec2& v) {
    if (v.is_zero()) throw DirectionError("zero direction");
    if (v.x.is_zero()) return Vec2{QElem(0), QElem(1)};
    return Vec2{QElem(1), v.y / v.x};
}

QElem default_cap(const Surface& s, const Vec2& direction) {
    if (const char* env = std::getenv("VEECH2_CAP"); env != nullptr && *env != '\0') {
        try {
            Rational r(env);
            if (r > 0) return QElem(r);
        } catch (const std::exception&) {
            // fall through to the computed default
        }
    }
    Surface g = apply_gl2(horizontal_normalizer(direction), s);
    QElem extent(0);
    for (const auto& p : g.polygons) {
        for (std::size_t k = 0; k < p.size(); ++k) extent += abs(p.edge(k).x);
    }
    return QElem(100) * extent;
}


namespace {

const Vec2 kRight{QElem(1), QElem(0)};
const Vec2 kLeft{QElem(-1), QElem(0)};

bool same_dir(const Vec2& u, const Vec2& v) { return cross(u, v).is_zero() && dot(u, v).sign() > 0; }

struct Slot {
    bool right = false;
    Corner corner;
};

struct SlotRef {
    std::size_t cls = 0;
    std::size_t index = 0;
};

struct Hit {
    QElem at;  // x for horizontal walks, y for vertical ones
    bool vertex = false;
    std::size_t index = 0;  // vertex or edge of the polygon
};

void offer(std::optional<Hit>& best, Hit h) {
    if (!best || h.at < best->at || (h.at == best->at && h.vertex && !best->vertex)) best = std::move(h);
}

// A saddle connection piece as stored for the vertical probes: along-edge
// pieces are recorded in both polygons sharing the edge.
struct PlacedSegment {
    std::size_t saddle = 0;
    QElem y, x0, x1, offset;
};

class Decomposer {
public:
    Decomposer(const Surface& s, const QElem& cap) : s_(s), info_(validate(s)), cap_(cap) {
        partner_.resize(s_.polygons.size());
        for (std::size_t i = 0; i < s_.polygons.size(); ++i) partner_[i].resize(s_.polygons[i].size());
        for (const auto& g : s_.gluings) {
            partner_[g.first.polygon][g.first.edge] = g.second;
            partner_[g.second.polygon][g.second.edge] = g.first;
        }
        bool any_singular = false;
        for (const auto& vc : info_.vertex_classes) any_singular = any_singular || vc.angle_multiple > 1;
        for (const auto& vc : info_.vertex_classes) traced_.push_back(!any_singular || vc.angle_multiple > 1);
        build_slots();
    }

    DecomposeResult run();

private:
    const Polygon& poly(std::size_t i) const { return s_.polygons[i]; }

    void build_slots();
    std::optional<SaddleConnection> trace(SlotRef start, SlotRef& arrival, std::string& why);
    SlotRef slot_in_corner(Corner c, bool right) const;
    std::optional<Hit> horizontal_exit(std::size_t polygon, const Vec2& p) const;
    struct ProbeResult {
        std::size_t saddle;
        QElem u;  // position along the saddle connection
        QElem height;
    };
    std::optional<ProbeResult> probe(std::size_t polygon, Vec2 p) const;

    const Surface& s_;
    StratumInfo info_;
    QElem cap_;
    std::vector<std::vector<EdgeRef>> partner_;
    std::vector<bool> traced_;
    std::vector<std::vector<Slot>> slots_;
    std::map<Corner, std::vector<std::size_t>> corner_slots_;
    std::vector<std::vector<PlacedSegment>> placed_;
};

void Decomposer::build_slots() {
    slots_.resize(info_.vertex_classes.size());
    for (std::size_t c = 0; c < info_.vertex_classes.size(); ++c) {
        for (const Corner& corner : info_.vertex_classes[c].corners) {
            const Polygon& p = poly(corner.polygon);
            Vec2 out = p.edge(corner.vertex);
            Vec2 in_rev = -p.edge(corner.vertex + p.size() - 1);
            bool has_r = in_ccw_sector(kRight, out, in_rev);
            bool has_l = in_ccw_sector(kLeft, out, in_rev);
            bool r_first = !same_dir(out, kLeft) && in_ccw_sector(kRight, out, kLeft);
            auto push = [&](bool right) {
                corner_slots_[corner].push_back(slots_[c].size());
                slots_[c].push_back(Slot{right, corner});
            };
            if (has_r && has_l) {
                push(r_first);
                push(!r_first);
            } else if (has_r) {
                push(true);
            } else if (has_l) {
                push(false);
            }
        }
        const auto& sl = slots_[c];
        if (sl.empty() || sl.size() % 2 != 0) throw std::logic_error("horizontal directions at a vertex do not pair up");
        for (std::size_t i = 0; i < sl.size(); ++i) {
            if (sl[i].right == sl[(i + 1) % sl.size()].right) throw std::logic_error("horizontal directions at a vertex do not alternate");
        }
    }
}

SlotRef Decomposer::slot_in_corner(Corner c, bool right) const {
    std::size_t cls = info_.class_of[c.polygon][c.vertex];
    auto it = corner_slots_.find(c);
    if (it != corner_slots_.end()) {
        for (std::size_t i : it->second) {
            if (slots_[cls][i].right == right) return SlotRef{cls, i};
        }
    }
    throw std::logic_error("arrival direction not found at corner");
}

std::optional<Hit> Decomposer::horizontal_exit(std::size_t polygon, const Vec2& p) const {
    const Polygon& P = poly(polygon);
    std::optional<Hit> best;
    for (std::size_t j = 0; j < P.size(); ++j) {
        const Vec2& A = P.vertex(j);
        const Vec2& B = P.vertex(j + 1);
        const std::size_t jb = (j + 1) % P.size();
        if (A.y == p.y && B.y == p.y) {
            if (p.x < A.x) offer(best, Hit{A.x, true, j});
            if (p.x < B.x) offer(best, Hit{B.x, true, jb});
            continue;
        }
        if (p.y < min(A.y, B.y) || max(A.y, B.y) < p.y) continue;
        if (A.y == p.y) {
            if (p.x < A.x) offer(best, Hit{A.x, true, j});
            continue;
        }
        if (B.y == p.y) {
            if (p.x < B.x) offer(best, Hit{B.x, true, jb});
            continue;
        }
        QElem x = A.x + (p.y - A.y) * (B.x - A.x) / (B.y - A.y);
        if (p.x < x) offer(best, Hit{x, false, j});
    }
    return best;
}

// Follow the rightward ray leaving the vertex of `start` until it reaches a
// traced vertex class.
std::optional<SaddleConnection> Decomposer::trace(SlotRef start, SlotRef& arrival, std::string& why) {
    SaddleConnection sc;
    sc.from_class = start.cls;
    sc.length = QElem(0);
    Corner at = slots_[start.cls][start.index].corner;
    std::size_t polygon = at.polygon;
    Vec2 p = poly(polygon).vertex(at.vertex);
    bool on_vertex = true;
    constexpr std::size_t kMaxSteps = 1000000;
    for (std::size_t step = 0; step < kMaxSteps; ++step) {
        const Polygon& P = poly(polygon);
        std::optional<Corner> reached;
        QElem x_end;
        if (on_vertex && same_dir(P.edge(at.vertex), kRight)) {
            // along the edge to its far end; the leftward direction there
            // opens the corner across the edge
            x_end = P.vertex(at.vertex + 1).x;
            EdgeRef across = partner_[polygon][at.vertex];
            sc.segments.push_back(TraceSegment{polygon, p.y, p.x, x_end, sc.length});
            sc.length += x_end - p.x;
            reached = Corner{across.polygon, across.edge};
        } else {
            std::optional<Hit> hit = horizontal_exit(polygon, p);
            if (!hit) throw std::logic_error("horizontal ray leaves a polygon without crossing its boundary");
            x_end = hit->at;
            sc.segments.push_back(TraceSegment{polygon, p.y, p.x, x_end, sc.length});
            sc.length += x_end - p.x;
            if (hit->vertex) {
                reached = Corner{polygon, hit->index};
            } else {
                EdgeRef across = partner_[polygon][hit->index];
                Vec2 shift = poly(across.polygon).vertex(across.edge) - P.vertex(hit->index + 1);
                p = Vec2{x_end, p.y} + shift;
                polygon = across.polygon;
                on_vertex = false;
            }
        }
        if (cap_ < sc.length) {
            why = "a separatrix exceeds the length cap " + cap_.to_string();
            return std::nullopt;
        }
        if (!reached) continue;
        SlotRef in = slot_in_corner(*reached, false);
        if (traced_[in.cls]) {
            sc.to_class = in.cls;
            arrival = in;
            return sc;
        }
        // regular point: carry on straight through it
        std::size_t n = slots_[in.cls].size();
        SlotRef out{in.cls, (in.index + n / 2) % n};
        at = slots_[out.cls][out.index].corner;
        polygon = at.polygon;
        p = poly(polygon).vertex(at.vertex);
        on_vertex = true;
    }
    why = "separatrix tracing exceeded the step limit";
    return std::nullopt;
}

}  // namespace

namespace {

std::optional<Decomposer::ProbeResult> Decomposer::probe(std::size_t polygon, Vec2 p) const {
    QElem height(0);
    for (std::size_t step = 0; step < 100000; ++step) {
        const Polygon& P = poly(polygon);
        std::optional<Hit> edge_hit;
        for (std::size_t j = 0; j < P.size(); ++j) {
            const Vec2& A = P.vertex(j);
            const Vec2& B = P.vertex(j + 1);
            const std::size_t jb = (j + 1) % P.size();
            if (A.x == p.x && B.x == p.x) {
                if (p.y < A.y) offer(edge_hit, Hit{A.y, true, j});
                if (p.y < B.y) offer(edge_hit, Hit{B.y, true, jb});
                continue;
            }
            if (p.x < min(A.x, B.x) || max(A.x, B.x) < p.x) continue;
            if (A.x == p.x) {
                if (p.y < A.y) offer(edge_hit, Hit{A.y, true, j});
                continue;
            }
            if (B.x == p.x) {
                if (p.y < B.y) offer(edge_hit, Hit{B.y, true, jb});
                continue;
            }
            QElem y = A.y + (p.x - A.x) * (B.y - A.y) / (B.x - A.x);
            if (p.y < y) offer(edge_hit, Hit{y, false, j});
        }
        const PlacedSegment* seg_hit = nullptr;
        for (const auto& seg : placed_[polygon]) {
            if (!(p.y < seg.y) || p.x < seg.x0 || seg.x1 < p.x) continue;
            if (!seg_hit || seg.y < seg_hit->y) seg_hit = &seg;
        }
        if (seg_hit && (!edge_hit || !(edge_hit->at < seg_hit->y))) {
            if (edge_hit && edge_hit->at == seg_hit->y && edge_hit->vertex) return std::nullopt;
            for (const auto& v : P.vertices) {
                if (v.x == p.x && v.y == seg_hit->y) return std::nullopt;
            }
            height += seg_hit->y - p.y;
            return ProbeResult{seg_hit->saddle, seg_hit->offset + (p.x - seg_hit->x0), height};
        }
        if (!edge_hit) throw std::logic_error("vertical probe leaves a polygon without crossing its boundary");
        if (edge_hit->vertex) return std::nullopt;
        height += edge_hit->at - p.y;
        EdgeRef across = partner_[polygon][edge_hit->index];
        Vec2 shift = poly(across.polygon).vertex(across.edge) - P.vertex(edge_hit->index + 1);
        p = Vec2{p.x, edge_hit->at} + shift;
        polygon = across.polygon;
    }
    return std::nullopt;
}

QElem simple_offset(const CylinderBoundary& b) { return b.top_starts[0] - b.bottom_starts[0]; }

bool is_simple(const CylinderBoundary& b) { return b.bottom.size() == 1 && b.top.size() == 1; }

std::optional<std::size_t> index_of(const std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

// Offset along the core curve between the bottom and top anchors of
// cylinder i, measured against the normalized vertical.
QElem anchor_offset(const CylinderDecomposition& dec, std::size_t i) {
    const CylinderBoundary& b = dec.boundaries[i];
    if (is_simple(b)) return simple_offset(b);
    for (std::size_t n = 0; n < dec.boundaries.size(); ++n) {
        const CylinderBoundary& nb = dec.boundaries[n];
        if (n == i || !is_simple(nb)) continue;
        auto on_bottom = index_of(b.bottom, nb.top[0]);
        auto on_top = index_of(b.top, nb.bottom[0]);
        if (!on_bottom || !on_top) continue;
        const QElem& len = dec.saddles[nb.bottom[0]].length;
        return b.top_starts[*on_top] + len - b.bottom_starts[*on_bottom];
    }
    for (std::size_t k = 0; k < b.bottom.size(); ++k) {
        if (auto t = index_of(b.top, b.bottom[k])) return b.top_starts[*t] - b.bottom_starts[k];
    }
    return b.top_starts[0] - b.bottom_starts[0];
}

DecomposeResult Decomposer::run() {
    DecomposeResult result;
    std::vector<SaddleConnection> saddles;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> starts_at;
    std::vector<SlotRef> arrivals;
    for (std::size_t c = 0; c < slots_.size(); ++c) {
        if (!traced_[c]) continue;
        for (std::size_t i = 0; i < slots_[c].size(); ++i) {
            if (!slots_[c][i].right) continue;
            SlotRef arrival;
            std::string why;
            auto sc = trace(SlotRef{c, i}, arrival, why);
            if (!sc) {
                result.status = DecomposeStatus::Inconclusive;
                result.detail = why;
                return result;
            }
            starts_at[{c, i}] = saddles.size();
            arrivals.push_back(arrival);
            saddles.push_back(std::move(*sc));
        }
    }

    auto neighbour = [&](std::size_t sc, int step) {
        const SlotRef& a = arrivals[sc];
        const std::size_t n = slots_[a.cls].size();
        std::size_t j = (a.index + n + static_cast<std::size_t>(step + static_cast<int>(n))) % n;
        return starts_at.at({a.cls, j});
    };
    auto cycles = [&](int step) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> owner(saddles.size(), SIZE_MAX);
        for (std::size_t s0 = 0; s0 < saddles.size(); ++s0) {
            if (owner[s0] != SIZE_MAX) continue;
            std::vector<std::size_t> cyc;
            std::size_t s = s0;
            do {
                owner[s] = out.size();
                cyc.push_back(s);
                s = neighbour(s, step);
            } while (s != s0);
            out.push_back(std::move(cyc));
        }
        return std::pair{out, owner};
    };
    // the cylinder above a saddle connection continues clockwise at its end,
    // the one below continues counterclockwise
    auto [bottoms, bottom_owner] = cycles(-1);
    auto [tops, top_owner] = cycles(+1);

    placed_.assign(s_.polygons.size(), {});
    for (std::size_t id = 0; id < saddles.size(); ++id) {
        for (const auto& seg : saddles[id].segments) {
            placed_[seg.polygon].push_back(PlacedSegment{id, seg.y, seg.x0, seg.x1, seg.offset});
            const Polygon& P = poly(seg.polygon);
            for (std::size_t k = 0; k < P.size(); ++k) {
                if (P.vertex(k) == Vec2{seg.x0, seg.y} && P.vertex(k + 1) == Vec2{seg.x1, seg.y}) {
                    EdgeRef e = partner_[seg.polygon][k];
                    const Polygon& Q = poly(e.polygon);
                    placed_[e.polygon].push_back(PlacedSegment{id, Q.vertex(e.edge).y, Q.vertex(e.edge + 1).x, Q.vertex(e.edge).x, seg.offset});
                }
            }
        }
    }

    auto cumulative = [&](const std::vector<std::size_t>& cyc) {
        std::vector<QElem> starts;
        QElem acc(0);
        for (std::size_t s : cyc) {
            starts.push_back(acc);
            acc += saddles[s].length;
        }
        return std::pair{starts, acc};
    };

    std::vector<CylinderData> cylinders;
    std::vector<CylinderBoundary> boundaries;
    for (const auto& bottom : bottoms) {
        const TraceSegment& seg = saddles[bottom[0]].segments.front();
        std::optional<ProbeResult> hit;
        QElem u_b;
        for (long den = 2; den <= 64 && !hit; ++den) {
            for (long num = 1; num < den && !hit; ++num) {
                if (std::gcd(num, den) != 1) continue;
                QElem f(Rational(num, den));
                QElem dx = f * (seg.x1 - seg.x0);
                u_b = seg.offset + dx;
                hit = probe(seg.polygon, Vec2{seg.x0 + dx, seg.y});
            }
        }
        if (!hit) throw std::logic_error("no vertical probe crosses the cylinder cleanly");
        const auto& top = tops[top_owner[hit->saddle]];
        auto [bottom_starts, width] = cumulative(bottom);
        auto [top_raw, top_width] = cumulative(top);
        if (!(width == top_width)) throw std::logic_error("cylinder boundaries have different lengths");
        QElem shift = u_b - (top_raw[*index_of(top, hit->saddle)] + hit->u);
        CylinderBoundary b{bottom, top, bottom_starts, {}};
        for (const auto& t : top_raw) b.top_starts.push_back(t + shift);
        cylinders.push_back(CylinderData{width, hit->height, QElem(0)});
        boundaries.push_back(std::move(b));
    }

    QElem total(0);
    for (const auto& c : cylinders) total += c.width * c.height;
    if (!(total == s_.area())) throw std::logic_error("cylinder areas do not add up to the surface area");

    std::vector<std::size_t> order(cylinders.size());
    std::iota(order.begin(), order.end(), 0);
    auto key_twist = [&](std::size_t i) {
        return is_simple(boundaries[i]) ? mod_positive(simple_offset(boundaries[i]), cylinders[i].width) : QElem(0);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        bool si = is_simple(boundaries[i]);
        bool sj = is_simple(boundaries[j]);
        if (si != sj) return si;
        const auto& a = cylinders[i];
        const auto& b = cylinders[j];
        QElem ta = key_twist(i);
        QElem tb = key_twist(j);
        return std::tie(a.width, a.height, ta) < std::tie(b.width, b.height, tb);
    });

    CylinderDecomposition dec;
    for (std::size_t i : order) {
        dec.cylinders.push_back(cylinders[i]);
        dec.boundaries.push_back(boundaries[i]);
    }
    dec.saddles = std::move(saddles);
    result.status = DecomposeStatus::Periodic;
    result.decomposition = std::move(dec);
    return result;
}

}  // namespace

DecomposeResult decompose(const Surface& s, const Vec2& v, std::optional<QElem> cap) {
    Matrix2 g = horizontal_normalizer(v);
    Surface normalized = apply_gl2(g, s);
    QElem bound = cap ? *cap : default_cap(s, v);
    DecomposeResult result = Decomposer(normalized, bound).run();
    if (result.decomposition) {
        auto& dec = *result.decomposition;
        dec.direction = v;
        dec.normalizer = g;
        dec.twist_direction = g.inverse() * Vec2{QElem(0), QElem(1)};
        auto twists = measure_twists(dec, dec.twist_direction);
        for (std::size_t i = 0; i < twists.size(); ++i) dec.cylinders[i].twist = twists[i];
    }
    return result;
}

std::vector<QElem> measure_twists(const CylinderDecomposition& dec, const Vec2& w) {
    Vec2 gw = dec.normalizer * w;
    if (gw.y.is_zero()) throw ParallelDirectionsError("twist direction is parallel to the cylinders");
    if (gw.y.sign() < 0) gw = -gw;
    QElem slope = gw.x / gw.y;
    std::vector<QElem> out;
    for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
        const auto& c = dec.cylinders[i];
        out.push_back(mod_positive(anchor_offset(dec, i) - c.height * slope, c.width));
    }
    return out;
}

std::vector<Vec2> homological_directions(const Surface& s, int coeff_bound) {
    if (coeff_bound <= 0) return {};
    std::vector<Vec2> basis = holonomy_basis(s);
    const std::size_t r = basis.size();
    auto lex_less = [](const Vec2& a, const Vec2& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); };
    std::map<Vec2, long, decltype(lex_less)> weight(lex_less);
    std::vector<int> n(r, -coeff_bound);
    while (true) {
        Vec2 v{QElem(0), QElem(0)};
        long w = 0;
        for (std::size_t i = 0; i < r; ++i) {
            v += QElem(static_cast<long>(n[i])) * basis[i];
            w += std::abs(n[i]);
        }
        if (!v.is_zero()) {
            Vec2 key = canonical_direction(v);
            auto it = weight.find(key);
            if (it == weight.end()) weight.emplace(key, w);
            else it->second = std::min(it->second, w);
        }
        std::size_t i = 0;
        while (i < r && n[i] == coeff_bound) n[i++] = -coeff_bound;
        if (i == r) break;
        ++n[i];
    }
    std::vector<std::pair<long, Vec2>> ranked;
    for (const auto& [dir, w] : weight) ranked.emplace_back(w, dir);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vec2> out;
    for (auto& [w, dir] : ranked) out.push_back(std::move(dir));
    return out;
}

}  // namespace veech2

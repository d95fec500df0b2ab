#include "veech2/classify.hpp"

#include "veech2/jinvariant.hpp"

#include <numeric>
#include <sstream>

namespace veech2 {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Proved: return "Proved";
        case VerdictStatus::RefutedWithWitness: return "RefutedWithWitness";
        case VerdictStatus::InconclusiveAtBound: return "InconclusiveAtBound";
    }
    return "?";
}

namespace {

void check_field(std::initializer_list<const CylinderData*> cs, std::int64_t d) {
    for (const CylinderData* c : cs) {
        for (const QElem* x : {&c->width, &c->height, &c->twist}) {
            if (x->d() != 0 && x->d() != d) throw FieldError("cylinder data outside Q(sqrt " + std::to_string(d) + ")");
        }
    }
}

EquationReport equations(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2,
                         const QElem& t1, const QElem& t2) {
    EquationReport r;
    r.height_lhs = w1 * conj(h1);
    r.height_rhs = -(w2 * conj(h2));
    r.twist_lhs = conj(w1) * t1 + conj(w2) * t2 + conj(w1) * w2;
    r.twist_rhs = conj(r.twist_lhs);
    r.c = (w1 * h1 + w2 * h2) * QElem(Rational(1, 2));
    r.height_holds = r.height_lhs == r.height_rhs;
    r.twist_holds = r.twist_lhs == r.twist_rhs;
    return r;
}

}  // namespace

EquationReport h2_equations(const CylinderData& c1, const CylinderData& c2) {
    return equations(c1.width, c2.width, c1.height, c2.height, c1.twist, c2.twist);
}

bool check_h2_equations(const CylinderData& c1, const CylinderData& c2, std::int64_t d) {
    check_field({&c1, &c2}, d);
    return h2_equations(c1, c2).holds();
}

EquationReport h11_equations(const CylinderData& a, const CylinderData& b, const CylinderData& c) {
    const CylinderData* in[3] = {&a, &b, &c};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t i = k == 0 ? 1 : 0;
        std::size_t j = k == 2 ? 1 : 2;
        if (!(in[k]->width == in[i]->width + in[j]->width)) continue;
        const CylinderData& c1 = *in[i];
        const CylinderData& c2 = *in[j];
        const CylinderData& c3 = *in[k];
        H11Derived x = h11_derived(c1, c2, c3);
        EquationReport r = equations(c1.width, c2.width, x.s1, x.s2, x.tau1, x.tau2);
        r.order = {i, j, k};
        return r;
    }
    throw NoValidRenumberingError("no cylinder width is the sum of the other two");
}

bool check_h11_equations(const CylinderData& a, const CylinderData& b, const CylinderData& c, std::int64_t d) {
    check_field({&a, &b, &c}, d);
    return h11_equations(a, b, c).holds();
}

std::vector<CylinderData> clear_denominators(std::vector<CylinderData> data, std::int64_t d) {
    Integer l = 1;
    for (const auto& c : data) {
        for (const QElem* x : {&c.width, &c.height, &c.twist}) {
            Integer n = integral_denominator(*x, d);
            l = l / boost::multiprecision::gcd(l, n) * n;
        }
    }
    QElem f{Rational(l)};
    for (auto& c : data) {
        c.width *= f;
        c.height *= f;
        c.twist *= f;
    }
    return data;
}

Verdict property_x(const Surface& s, int coeff_bound) {
    auto dirs = homological_directions(s, coeff_bound);
    for (const auto& v : dirs) {
        WedgeQQ j = j_vv(s, v);
        if (!j.is_zero()) {
            Verdict out;
            out.status = VerdictStatus::RefutedWithWitness;
            out.direction = v;
            out.equation = "J_vv";
            out.residual = QElem(j.c);
            out.detail = "J_vv = " + j.c.str() + " (1 ^ sqrt d) in a homological direction";
            return out;
        }
    }
    Verdict out;
    out.status = VerdictStatus::Proved;
    out.detail = "J_vv vanishes on all " + std::to_string(dirs.size()) +
                 " homological directions with coefficients up to " + std::to_string(coeff_bound);
    return out;
}

bool property_x_via_jvw(const Surface& s, const Vec2& v, const Vec2& w) {
    Quadraticity q = is_quadratic(s);
    if (q.kind != Quadraticity::Kind::Quadratic) {
        throw PreconditionFailedError("the periods can be rescaled into Q x Q");
    }
    if (!j_vv(s, v).is_zero() || !j_vv(s, w).is_zero()) {
        throw PreconditionFailedError("J_vv and J_ww must both vanish");
    }
    TensorC4 c = j_vw(s, v, w);
    return c.c2 == c.c3 && c.c1 == Rational(q.d) * c.c4;
}

namespace {

// Homological directions with their decompositions computed on demand.
class DirectionScan {
public:
    DirectionScan(const Surface& s, std::optional<QElem> cap, int bound)
        : s_(s), cap_(std::move(cap)), dirs_(homological_directions(s, bound)), cache_(dirs_.size()) {}

    std::size_t size() const { return dirs_.size(); }
    const Vec2& direction(std::size_t i) const { return dirs_[i]; }

    const DecomposeResult& at(std::size_t i) {
        if (!cache_[i]) cache_[i] = decompose(s_, dirs_[i], cap_);
        return *cache_[i];
    }

    /// First periodic direction other than dirs_[i].
    std::optional<std::size_t> partner(std::size_t i) {
        for (std::size_t j = 0; j < dirs_.size(); ++j) {
            if (j != i && at(j).periodic()) return j;
        }
        return std::nullopt;
    }

private:
    const Surface& s_;
    std::optional<QElem> cap_;
    std::vector<Vec2> dirs_;
    std::vector<std::optional<DecomposeResult>> cache_;
};

std::int64_t field_of(const Surface& s) {
    if (s.d != 0) return s.d;
    for (const auto& p : s.polygons) {
        for (const auto& v : p.vertices) {
            if (v.x.d() != 0) return v.x.d();
            if (v.y.d() != 0) return v.y.d();
        }
    }
    return 0;
}

bool periods_rescale_to_rational(const Surface& s) {
    std::vector<Vec2> edges;
    for (const auto& p : s.polygons) {
        for (std::size_t k = 0; k < p.size(); ++k) edges.push_back(p.edge(k));
    }
    return rational_rank(edges) <= 2;
}

Verdict refuted(const Vec2& v, std::optional<Vec2> w, std::string equation, QElem residual, std::string detail) {
    Verdict out;
    out.status = VerdictStatus::RefutedWithWitness;
    out.direction = v;
    out.twist_direction = std::move(w);
    out.equation = std::move(equation);
    out.residual = std::move(residual);
    out.detail = std::move(detail);
    return out;
}

Verdict inconclusive(std::string detail) {
    Verdict out;
    out.status = VerdictStatus::InconclusiveAtBound;
    out.detail = std::move(detail);
    return out;
}

std::string describe(const std::vector<CylinderData>& data) {
    std::ostringstream os;
    for (std::size_t i = 0; i < data.size(); ++i) {
        os << (i ? "; " : "") << "w" << i + 1 << " = " << data[i].width << ", h" << i + 1 << " = " << data[i].height
           << ", t" << i + 1 << " = " << data[i].twist;
    }
    return os.str();
}

// Shared scan for the two-cylinder H(2) and three-cylinder H(1,1) cases.
Verdict scan_cylinder_equations(const Surface& s, std::optional<QElem> cap, int coeff_bound, std::size_t cylinders) {
    const std::int64_t d = field_of(s);
    DirectionScan scan(s, std::move(cap), coeff_bound);
    bool unmeasured = false;
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const DecomposeResult& r = scan.at(i);
        if (!r.periodic() || r.decomposition->cylinders.size() != cylinders) continue;
        const Vec2& v = scan.direction(i);
        auto report = [&](const std::vector<CylinderData>& data) {
            return cylinders == 2 ? h2_equations(data[0], data[1]) : h11_equations(data[0], data[1], data[2]);
        };
        auto data = clear_denominators(r.decomposition->cylinders, d);
        EquationReport pre = report(data);
        if (!pre.height_holds) {
            return refuted(v, std::nullopt, "height", pre.height_residual(),
                           "height equation fails: " + pre.height_lhs.to_string() + " != " + pre.height_rhs.to_string() +
                               " for " + describe(data));
        }
        auto j = scan.partner(i);
        if (!j) {
            unmeasured = true;
            continue;
        }
        const Vec2& w = scan.direction(*j);
        auto twists = measure_twists(*r.decomposition, w);
        auto measured = r.decomposition->cylinders;
        for (std::size_t k = 0; k < measured.size(); ++k) measured[k].twist = twists[k];
        data = clear_denominators(measured, d);
        EquationReport full = report(data);
        if (!full.twist_holds) {
            return refuted(v, w, "twist", full.twist_residual(),
                           "twist equation fails: " + full.twist_lhs.to_string() + " != " + full.twist_rhs.to_string() +
                               " for " + describe(data));
        }
        Verdict out;
        out.status = VerdictStatus::Proved;
        out.direction = v;
        out.twist_direction = w;
        out.equation = "height and twist";
        out.detail = "cylinder equations hold for " + describe(data) + "; c1 + c2 sqrt d = " + full.c.to_string();
        return out;
    }
    return inconclusive(unmeasured ? "no second periodic direction to measure twists against within the bound"
                                   : "no " + std::to_string(cylinders) + "-cylinder direction found within the bound");
}

StratumInfo genus_two(const Surface& s) {
    StratumInfo info = validate(s);
    if (info.genus != 2) throw WrongStratumError("surface is in " + info.name() + ", not genus 2");
    return info;
}

}  // namespace

Verdict is_veech_h2(const Surface& s, std::optional<QElem> cap, int coeff_bound) {
    StratumInfo info = validate(s);
    if (!info.is_h2()) throw WrongStratumError("surface is in " + info.name() + ", not H(2)");
    if (is_quadratic(s).kind == Quadraticity::Kind::Rational) {
        Verdict out;
        out.status = VerdictStatus::Proved;
        out.detail = "periods rescale into Q x Q; with a single zero this makes the surface square-tiled";
        return out;
    }
    Verdict two = scan_cylinder_equations(s, cap, coeff_bound, 2);
    if (two.status != VerdictStatus::InconclusiveAtBound) return two;
    DirectionScan scan(s, cap, coeff_bound);
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const DecomposeResult& r = scan.at(i);
        if (r.periodic() && r.decomposition->cylinders.size() == 1) {
            const auto& c = r.decomposition->cylinders[0];
            return refuted(scan.direction(i), std::nullopt, "one-cylinder", c.width * c.height,
                           "one-cylinder direction, but the periods do not rescale into Q x Q");
        }
    }
    return two;
}

Verdict is_completely_periodic(const Surface& s, std::optional<QElem> cap, int coeff_bound) {
    StratumInfo info = genus_two(s);
    if (info.is_h2()) {
        Verdict v = is_veech_h2(s, std::move(cap), coeff_bound);
        v.detail = "H(2): completely periodic iff Veech; " + v.detail;
        return v;
    }
    if (periods_rescale_to_rational(s)) {
        Verdict out;
        out.status = VerdictStatus::Proved;
        out.detail = "all relative periods rescale into Q x Q, so the surface is square-tiled";
        return out;
    }
    if (is_quadratic(s).kind != Quadraticity::Kind::Quadratic) {
        return inconclusive("absolute periods rescale into Q x Q but relative periods do not; the cylinder equations do not apply");
    }
    return scan_cylinder_equations(s, std::move(cap), coeff_bound, 3);
}

Verdict is_hyperperiodic_genus2(const Surface& s, int coeff_bound) {
    genus_two(s);
    Verdict v = property_x(s, coeff_bound);
    v.detail = "hyperperiodicity via Property X: " + v.detail;
    return v;
}

namespace {

// Coordinates of x in the Z-basis (1, omega) of O_d.
std::array<Integer, 2> o_coords(const QElem& x, std::int64_t d) {
    Rational m, n;
    if (d % 4 == 1) {
        n = 2 * x.b();
        m = x.a() - x.b();
    } else {
        n = x.b();
        m = x.a();
    }
    if (denominator(m) != 1 || denominator(n) != 1) throw std::logic_error("element is not integral");
    return {numerator(m), numerator(n)};
}

Integer gcd_all(const std::vector<std::array<Integer, 2>>& rows) {
    Integer g = 0;
    for (const auto& r : rows) g = boost::multiprecision::gcd(g, boost::multiprecision::gcd(r[0], r[1]));
    return g;
}

// Generator of the ideal spanned by vals, normalized by sign and units; the
// rational content when the bounded search finds no generator.
QElem ideal_content(const std::vector<QElem>& vals, std::int64_t d) {
    Field f(d);
    const QElem omega = f.omega();
    std::vector<std::array<Integer, 2>> rows;
    for (const auto& x : vals) {
        rows.push_back(o_coords(x, d));
        rows.push_back(o_coords(omega * x, d));
    }
    // Hermite form [[a, b], [0, c]] of the row lattice
    Integer a = 0, b = 0;
    for (const auto& r : rows) {
        if (r[0] == 0) continue;
        if (a == 0) {
            a = r[0];
            b = r[1];
            continue;
        }
        // extended gcd on the first column
        Integer g = boost::multiprecision::gcd(a, r[0]);
        Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1, p = a, q = r[0];
        while (q != 0) {
            Integer t = p / q;
            Integer tmp = p - t * q; p = q; q = tmp;
            tmp = x0 - t * x1; x0 = x1; x1 = tmp;
            tmp = y0 - t * y1; y0 = y1; y1 = tmp;
        }
        (void)g;
        Integer nb = x0 * b + y0 * r[1];
        a = p;
        b = nb;
    }
    // everything in the second column modulo the first row
    Integer c = 0;
    for (const auto& r : rows) {
        Integer rem = a == 0 ? r[1] : r[1] - (r[0] / a) * b;
        c = boost::multiprecision::gcd(c, rem);
    }
    if (a < 0) { a = -a; b = -b; }
    const Integer norm = a * c;
    auto elem = [&](const Integer& m, const Integer& n) { return QElem(Rational(m)) + QElem(Rational(n)) * omega; };
    if (norm == 1) return QElem(1);
    std::optional<QElem> gen;
    for (long radius = 0; radius <= 40 && !gen; ++radius) {
        for (long i = -radius; i <= radius && !gen; ++i) {
            for (long j = -radius; j <= radius && !gen; ++j) {
                if (std::max(std::abs(i), std::abs(j)) != radius) continue;
                QElem g = elem(a * i, b * i + c * j);
                if (g.is_zero()) continue;
                Rational nm = g.norm();
                if (nm == Rational(norm) || nm == Rational(-norm)) gen = g;
            }
        }
    }
    if (!gen) return QElem(Rational(gcd_all(rows)));
    QElem g = gen->sign() < 0 ? -*gen : *gen;
    const QElem eps = f.fundamental_unit();
    const QElem eps2 = eps * eps;
    auto ratio = [](const QElem& x) { return x / abs(conj(x)); };
    while (ratio(g) < QElem(1)) g *= eps;
    while (!(ratio(g) < eps2)) g /= eps;
    while (ratio(g) < QElem(1)) g *= eps;
    return g;
}

}  // namespace

QElem area_invariant(const Surface& s) {
    std::vector<Vec2> gens = holonomy_basis(s);
    bool rational = true;
    for (const auto& g : gens) rational = rational && g.x.is_rational() && g.y.is_rational();
    std::int64_t d = 0;
    if (!rational) {
        Quadraticity q = is_quadratic(s);
        if (q.kind != Quadraticity::Kind::Quadratic) throw NotQuadraticError("periods are not those of a quadratic surface in this chart");
        d = q.d;
    }
    QElem scale(1);
    for (int coord = 0; coord < 2; ++coord) {
        std::vector<QElem> vals;
        for (const auto& g : gens) {
            const QElem& x = coord == 0 ? g.x : g.y;
            if (!x.is_zero()) vals.push_back(x);
        }
        if (vals.empty()) throw NotQuadraticError("degenerate period lattice");
        Integer l = 1;
        for (const auto& x : vals) {
            Integer n = integral_denominator(x, d);
            l = l / boost::multiprecision::gcd(l, n) * n;
        }
        for (auto& x : vals) x *= QElem(Rational(l));
        QElem content;
        if (d == 0) {
            Integer g = 0;
            for (const auto& x : vals) g = boost::multiprecision::gcd(g, numerator(x.a()));
            content = QElem(Rational(g));
        } else {
            content = ideal_content(vals, d);
        }
        scale *= QElem(Rational(l)) / content;
    }
    return s.area() * abs(scale);
}

}  // namespace veech2

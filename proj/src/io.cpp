#include "veech2/io.hpp"

#include <sstream>

namespace veech2 {

namespace {

Json field_json(std::int64_t d) { return d == 0 ? Json(nullptr) : Json(d); }

std::int64_t field_from(const Json& j) {
    if (!j.contains("d") || j.at("d").is_null()) return 0;
    if (!j.at("d").is_number_integer()) throw ParseError("\"d\" must be an integer or null");
    std::int64_t d = j.at("d").get<std::int64_t>();
    if (d != 0 && (d < 2 || !is_square_free(d))) throw ParseError("\"d\" must be a square-free integer >= 2");
    return d;
}

Integer integer_from(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a decimal string, got " + j.dump());
    const std::string s = j.get<std::string>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw ParseError("not a decimal integer: \"" + s + "\"");
    }
    return Integer(s);
}

Rational rational_from(const Json& num, const Json& den) {
    Integer n = integer_from(num), m = integer_from(den);
    if (m <= 0) throw ParseError("denominator must be positive");
    return Rational(n, m);
}

Json rational_json(const Rational& r) { return Json(r.str()); }

Rational rational_value(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    try {
        return Rational(j.get<std::string>());
    } catch (const std::exception&) {
        throw ParseError("not a rational: " + j.dump());
    }
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    return j.at(key);
}

std::size_t index_from(const Json& j) {
    if (!j.is_number_unsigned()) throw ParseError("expected a non-negative index, got " + j.dump());
    return j.get<std::size_t>();
}

Json cylinder_json(const CylinderData& c) {
    return Json{{"width", to_json(c.width)}, {"height", to_json(c.height)}, {"twist", to_json(c.twist)}};
}

}  // namespace

Json to_json(const QElem& x) {
    return Json::array({numerator(x.a()).str(), denominator(x.a()).str(), numerator(x.b()).str(), denominator(x.b()).str()});
}

Json to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

QElem qelem_from_json(const Json& j, std::int64_t d) {
    if (!j.is_array() || j.size() != 4) throw ParseError("field element must be [num_a, den_a, num_b, den_b]");
    Rational a = rational_from(j[0], j[1]), b = rational_from(j[2], j[3]);
    if (b == 0) return QElem(a);
    if (d == 0) throw ParseError("irrational coordinate in a document with \"d\": null");
    return QElem(a, b, d);
}

Vec2 vec2_from_json(const Json& j, std::int64_t d) {
    if (!j.is_array() || j.size() != 2) throw ParseError("vector must be [x, y]");
    return Vec2{qelem_from_json(j[0], d), qelem_from_json(j[1], d)};
}

Json surface_json(const Surface& s) {
    Json polys = Json::array();
    for (const auto& p : s.polygons) {
        Json verts = Json::array();
        for (const auto& v : p.vertices) verts.push_back(to_json(v));
        polys.push_back(verts);
    }
    Json glue = Json::array();
    for (const auto& g : s.gluings) glue.push_back(Json::array({g.first.polygon, g.first.edge, g.second.polygon, g.second.edge}));
    return Json{{"d", field_json(s.d)}, {"polygons", polys}, {"gluings", glue}};
}

Surface parse_surface(const Json& j) {
    Surface s;
    s.d = field_from(j);
    const Json& polys = member(j, "polygons");
    if (!polys.is_array()) throw ParseError("\"polygons\" must be an array");
    for (const auto& p : polys) {
        if (!p.is_array()) throw ParseError("polygon must be an array of vertices");
        Polygon poly;
        for (const auto& v : p) poly.vertices.push_back(vec2_from_json(v, s.d));
        s.polygons.push_back(std::move(poly));
    }
    const Json& glue = member(j, "gluings");
    if (!glue.is_array()) throw ParseError("\"gluings\" must be an array");
    for (const auto& g : glue) {
        if (!g.is_array() || g.size() != 4) throw ParseError("gluing must be [pi, ei, pj, ej]");
        s.gluings.push_back({{index_from(g[0]), index_from(g[1])}, {index_from(g[2]), index_from(g[3])}});
    }
    return s;
}

Json decomposition_json(const CylinderDecomposition& dec, std::int64_t d) {
    Json cyl = Json::array();
    for (const auto& c : dec.cylinders) cyl.push_back(cylinder_json(c));
    const Matrix2& g = dec.normalizer;
    return Json{{"d", field_json(d)},
                {"direction", to_json(dec.direction)},
                {"normalizer", Json::array({to_json(g.a), to_json(g.b), to_json(g.c), to_json(g.e)})},
                {"twist_direction", to_json(dec.twist_direction)},
                {"cylinders", cyl}};
}

Json jinvariant_json(const JInvariant& j, std::int64_t d) {
    return Json{{"d", field_json(d)},
                {"jxx", rational_json(j.jxx.c)},
                {"jyy", rational_json(j.jyy.c)},
                {"jxy", Json::array({rational_json(j.jxy.c1), rational_json(j.jxy.c2), rational_json(j.jxy.c3),
                                     rational_json(j.jxy.c4)})}};
}

Json verdict_json(const Verdict& v, std::int64_t d) {
    Json out{{"d", field_json(d)}, {"status", to_string(v.status)}};
    out["direction"] = v.direction ? to_json(*v.direction) : Json(nullptr);
    out["twist_direction"] = v.twist_direction ? to_json(*v.twist_direction) : Json(nullptr);
    out["equation"] = v.equation ? Json(*v.equation) : Json(nullptr);
    out["residual"] = v.residual ? to_json(*v.residual) : Json(nullptr);
    out["detail"] = v.detail;
    return out;
}

Verdict parse_verdict(const Json& j) {
    const std::int64_t d = field_from(j);
    Verdict v;
    const std::string status = member(j, "status").get<std::string>();
    if (status == "Proved") v.status = VerdictStatus::Proved;
    else if (status == "RefutedWithWitness") v.status = VerdictStatus::RefutedWithWitness;
    else if (status == "InconclusiveAtBound") v.status = VerdictStatus::InconclusiveAtBound;
    else throw ParseError("unknown verdict status \"" + status + "\"");
    if (!member(j, "direction").is_null()) v.direction = vec2_from_json(j.at("direction"), d);
    if (!member(j, "twist_direction").is_null()) v.twist_direction = vec2_from_json(j.at("twist_direction"), d);
    if (!member(j, "equation").is_null()) v.equation = j.at("equation").get<std::string>();
    if (!member(j, "residual").is_null()) v.residual = qelem_from_json(j.at("residual"), d);
    v.detail = member(j, "detail").get<std::string>();
    return v;
}

Json solution_set_json(const SolutionSet& s) {
    Json sols = Json::array();
    for (const auto& x : s.solutions) {
        sols.push_back(Json{{"w1", to_json(x.w1)}, {"w2", to_json(x.w2)}, {"h1", to_json(x.h1)},
                            {"h2", to_json(x.h2)}, {"t1", to_json(x.t1)}, {"t2", to_json(x.t2)}});
    }
    return Json{{"d", field_json(s.d)}, {"c1", rational_json(s.c1)}, {"c2", rational_json(s.c2)},
                {"box", s.box}, {"bounds_used", s.bounds_used()}, {"count", s.count()}, {"solutions", sols}};
}

SolutionSet parse_solution_set(const Json& j) {
    SolutionSet s;
    s.d = field_from(j);
    s.c1 = rational_value(member(j, "c1"));
    s.c2 = rational_value(member(j, "c2"));
    s.box = member(j, "box").get<long>();
    for (const auto& x : member(j, "solutions")) {
        s.solutions.push_back({qelem_from_json(member(x, "w1"), s.d), qelem_from_json(member(x, "w2"), s.d),
                               qelem_from_json(member(x, "h1"), s.d), qelem_from_json(member(x, "h2"), s.d),
                               qelem_from_json(member(x, "t1"), s.d), qelem_from_json(member(x, "t2"), s.d)});
    }
    if (member(j, "count").get<std::size_t>() != s.solutions.size()) throw ParseError("\"count\" does not match the solutions");
    return s;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

QElem parse_triple(const std::string& text, std::int64_t d) {
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad element \"" + text + "\": expected p,q,r");
        }
    }
    if (parts.empty() || parts.size() > 3) throw ParseError("bad element \"" + text + "\": expected p,q,r");
    long p = parts[0], q = parts.size() > 1 ? parts[1] : 0, r = parts.size() > 2 ? parts[2] : 1;
    if (r == 0) throw ParseError("bad element \"" + text + "\": zero denominator");
    if (q != 0 && d == 0) throw ParseError("element \"" + text + "\" needs --d");
    if (q == 0) return QElem(Rational(p, r));
    return QElem::frac(p, q, r, d);
}

}  // namespace veech2

// veech2 command-line front end. JSON goes to standard output, a short
// human-readable summary to standard error.

#include "veech2/classify.hpp"
#include "veech2/enumerate.hpp"
#include "veech2/io.hpp"
#include "veech2/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace veech2;

namespace {

constexpr int kUsage = 1;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read --input " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Surface load(const std::string& path) { return parse_surface(parse_json(read_input(path))); }

std::vector<Rational> rationals(const std::string& text, const std::string& flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": \"" + item + "\" is not a rational");
        }
    }
    return out;
}

// "x,y" with rational entries, or "xa,xb,ya,yb" for (xa + xb sqrt d, ya + yb sqrt d).
Vec2 parse_direction(const std::string& text, std::int64_t d, const std::string& flag) {
    auto r = rationals(text, flag);
    if (r.size() == 2) return Vec2{QElem(r[0]), QElem(r[1])};
    if (r.size() != 4) throw UsageError(flag + " expects x,y or xa,xb,ya,yb");
    if ((r[1] != 0 || r[3] != 0) && d == 0) throw UsageError(flag + " has sqrt d parts but the surface has no field");
    auto elem = [&](const Rational& a, const Rational& b) { return b == 0 ? QElem(a) : QElem(a, b, d); };
    return Vec2{elem(r[0], r[1]), elem(r[2], r[3])};
}

std::optional<QElem> parse_cap(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto r = rationals(text, "--cap");
    if (r.size() != 1 || r[0] <= 0) throw UsageError("--cap expects one positive rational");
    return QElem(r[0]);
}

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case VerdictStatus::Proved: return 0;
        case VerdictStatus::RefutedWithWitness: return 2;
        case VerdictStatus::InconclusiveAtBound: return 3;
    }
    return kUsage;
}

int emit_verdict(const Verdict& v, std::int64_t d, const std::string& what) {
    std::cout << dump(verdict_json(v, d));
    std::cerr << what << ": " << to_string(v.status) << " (" << v.detail << ")\n";
    return verdict_exit(v);
}

std::string surface_error_name(SurfaceErrorKind k) {
    switch (k) {
        case SurfaceErrorKind::InvalidPolygon: return "InvalidPolygon";
        case SurfaceErrorKind::UnmatchedEdge: return "UnmatchedEdge";
        case SurfaceErrorKind::NonParallelGluing: return "NonParallelGluing";
        case SurfaceErrorKind::AngleNotMultipleOf2Pi: return "AngleNotMultipleOf2Pi";
        case SurfaceErrorKind::Disconnected: return "Disconnected";
        case SurfaceErrorKind::SingularMatrix: return "SingularMatrix";
    }
    return "SurfaceError";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact genus-2 translation surface toolkit.\n"
        "Field elements on the command line are p,q,r meaning (p + q sqrt d)/r.\n"
        "JSON documents write each element as [num_a, den_a, num_b, den_b] strings.\n"
        "Exit codes: 0 proved, 2 refuted, 3 inconclusive, 1 usage or input error.\n"
        "VEECH2_CAP (an exact rational) overrides the default tracing cap."};
    app.require_subcommand(1);

    std::string input = "-";
    std::string cap_text;
    int bound = 2;

    auto* build = app.add_subcommand("build", "build a two- or three-cylinder surface");
    std::string family;
    std::int64_t build_d = 0;
    std::vector<std::string> ws, hs, ts;
    build->set_help_flag("--help", "print this help message and exit");
    build->add_option("--family", family, "h2 or h11")->required()->check(CLI::IsMember({"h2", "h11"}));
    build->add_option("--d", build_d, "square-free field parameter (0 for rational data)");
    build->add_option("--w", ws, "widths w1 w2")->required()->expected(2);
    build->add_option("--h", hs, "heights (2 for h2, 3 for h11)")->required()->expected(2, 3);
    build->add_option("--t", ts, "twists (2 for h2, 3 for h11)")->required()->expected(2, 3);

    auto* val = app.add_subcommand("validate", "check gluings and report the stratum");
    val->add_option("--input", input, "surface JSON ('-' for stdin)");

    auto* jinv = app.add_subcommand("jinv", "print the J-invariant");
    jinv->add_option("--input", input, "surface JSON ('-' for stdin)");

    auto* dec = app.add_subcommand("decompose", "cylinder decomposition in a direction");
    std::string dir_text, twist_text;
    dec->add_option("--input", input, "surface JSON ('-' for stdin)");
    dec->add_option("--dir", dir_text, "direction x,y or xa,xb,ya,yb")->required();
    dec->add_option("--twist-dir", twist_text, "measure twists along this direction instead");
    dec->add_option("--cap", cap_text, "tracing cap (exact rational)");

    auto* veech = app.add_subcommand("veech", "Veech verdict for a surface in H(2)");
    auto* cp = app.add_subcommand("cp", "complete periodicity verdict in genus 2");
    for (auto* sc : {veech, cp}) {
        sc->add_option("--input", input, "surface JSON ('-' for stdin)");
        sc->add_option("--bound", bound, "homological coefficient bound")->check(CLI::NonNegativeNumber);
        sc->add_option("--cap", cap_text, "tracing cap (exact rational)");
    }
    auto* hyper = app.add_subcommand("hyper", "hyperperiodicity verdict in genus 2");
    auto* propx = app.add_subcommand("propx", "Property X verdict");
    std::string v_text, w_text;
    for (auto* sc : {hyper, propx}) {
        sc->add_option("--input", input, "surface JSON ('-' for stdin)");
        sc->add_option("--bound", bound, "homological coefficient bound")->check(CLI::NonNegativeNumber);
    }
    propx->add_option("--v", v_text, "with --w: test c2 = c3 and c1 = d c4 for J_vw");
    propx->add_option("--w", w_text, "second direction for the J_vw test");

    auto* en = app.add_subcommand("enumerate", "solutions of the two-cylinder equations in a box");
    std::int64_t en_d = 0;
    std::string c1_text, c2_text;
    long box = 8;
    bool oracle = false, count_only = false, allow_half = false;
    unsigned threads = 0;
    en->add_option("--d", en_d, "square-free field parameter")->required();
    en->add_option("--c1", c1_text, "area constant c1")->required();
    en->add_option("--c2", c2_text, "area constant c2")->required();
    en->add_option("--box", box, "coordinate bound N")->check(CLI::NonNegativeNumber);
    en->add_flag("--oracle", oracle, "use the exhaustive search");
    en->add_flag("--count-only", count_only, "print only the number of solutions");
    en->add_flag("--allow-half", allow_half, "accept half-integer constants when d = 1 mod 4");
    en->add_option("--threads", threads, "worker threads (0: all cores)");

    auto* svg = app.add_subcommand("export-svg", "draw a surface");
    std::string output;
    svg->add_option("--input", input, "surface JSON ('-' for stdin)");
    svg->add_option("--dir", dir_text, "also draw the decomposition in this direction");
    svg->add_option("--cap", cap_text, "tracing cap (exact rational)");
    svg->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) {
            const bool h2 = family == "h2";
            const std::size_t n = h2 ? 2 : 3;
            if (hs.size() != n || ts.size() != n) throw UsageError("--h and --t need " + std::to_string(n) + " values for " + family);
            auto e = [&](const std::string& s) { return parse_triple(s, build_d); };
            BuiltSurface b = h2 ? build_h2(e(ws[0]), e(ws[1]), e(hs[0]), e(hs[1]), e(ts[0]), e(ts[1]))
                                : build_h11(e(ws[0]), e(ws[1]), e(hs[0]), e(hs[1]), e(hs[2]), e(ts[0]), e(ts[1]), e(ts[2]));
            std::cout << dump(surface_json(b.surface));
            std::cerr << "built " << validate(b.surface).name() << " surface\n";
            return 0;
        }
        if (*val) {
            Surface s = load(input);
            StratumInfo info = validate(s);
            Json classes = Json::array();
            for (const auto& c : info.vertex_classes) classes.push_back(Json{{"corners", c.corners.size()}, {"angle_multiple", c.angle_multiple}});
            std::cout << dump(Json{{"valid", true}, {"stratum", info.name()}, {"genus", info.genus},
                                   {"zero_orders", info.zero_orders}, {"vertex_classes", classes}});
            std::cerr << info.name() << ", genus " << info.genus << "\n";
            return 0;
        }
        if (*jinv) {
            Surface s = load(input);
            JInvariant j = j_surface(s);
            std::cout << dump(jinvariant_json(j, s.d));
            std::cerr << "J_xx = " << j.jxx.c << ", J_yy = " << j.jyy.c << "\n";
            return 0;
        }
        if (*dec) {
            Surface s = load(input);
            Vec2 dir = parse_direction(dir_text, s.d, "--dir");
            DecomposeResult r = decompose(s, dir, parse_cap(cap_text));
            if (!r.periodic()) {
                std::cout << dump(Json{{"status", "Inconclusive"}, {"detail", r.detail}});
                std::cerr << "inconclusive: " << r.detail << "\n";
                return 3;
            }
            CylinderDecomposition d = *r.decomposition;
            if (!twist_text.empty()) {
                Vec2 w = parse_direction(twist_text, s.d, "--twist-dir");
                auto t = measure_twists(d, w);
                for (std::size_t i = 0; i < t.size(); ++i) d.cylinders[i].twist = t[i];
                d.twist_direction = w;
            }
            Json out = decomposition_json(d, s.d);
            out["status"] = "Periodic";
            std::cout << dump(out);
            std::cerr << d.cylinders.size() << " cylinder(s)\n";
            return 0;
        }
        if (*veech || *cp) {
            Surface s = load(input);
            auto cap = parse_cap(cap_text);
            Verdict v = *veech ? is_veech_h2(s, cap, bound) : is_completely_periodic(s, cap, bound);
            return emit_verdict(v, s.d, *veech ? "veech" : "completely periodic");
        }
        if (*hyper) {
            Surface s = load(input);
            return emit_verdict(is_hyperperiodic_genus2(s, bound), s.d, "hyperperiodic");
        }
        if (*propx) {
            Surface s = load(input);
            if (v_text.empty() != w_text.empty()) throw UsageError("--v and --w go together");
            if (!v_text.empty()) {
                bool ok = property_x_via_jvw(s, parse_direction(v_text, s.d, "--v"), parse_direction(w_text, s.d, "--w"));
                std::cout << dump(Json{{"property_x", ok}});
                std::cerr << "J_vw test: " << (ok ? "holds" : "fails") << "\n";
                return ok ? 0 : 2;
            }
            return emit_verdict(property_x(s, bound), s.d, "property X");
        }
        if (*en) {
            auto c1 = rationals(c1_text, "--c1"), c2 = rationals(c2_text, "--c2");
            if (c1.size() != 1 || c2.size() != 1) throw UsageError("--c1 and --c2 take one rational each");
            EnumerateOptions opts;
            opts.allow_half = allow_half;
            opts.threads = threads;
            SolutionSet set = oracle ? oracle_h2(c1[0], c2[0], en_d, box, opts) : solve_h2(c1[0], c2[0], en_d, box, opts);
            if (count_only) std::cout << set.count() << "\n";
            else std::cout << dump(solution_set_json(set));
            std::cerr << "H(" << c1[0] << ", " << c2[0] << ") within " << set.bounds_used() << ": " << set.count() << "\n";
            return 0;
        }
        if (*svg) {
            Surface s = load(input);
            validate(s);
            std::optional<CylinderDecomposition> d;
            if (!dir_text.empty()) {
                DecomposeResult r = decompose(s, parse_direction(dir_text, s.d, "--dir"), parse_cap(cap_text));
                if (!r.periodic()) throw UsageError("direction is not periodic within the cap: " + r.detail);
                d = *r.decomposition;
            }
            std::string doc = export_svg(s, d ? &*d : nullptr);
            if (output.empty()) {
                std::cout << doc;
            } else {
                std::ofstream out(output);
                if (!out) throw UsageError("cannot write " + output);
                out << doc;
            }
            return 0;
        }
    } catch (const SurfaceError& e) {
        std::cerr << "error: " << surface_error_name(e.kind()) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

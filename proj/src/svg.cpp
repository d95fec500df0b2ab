#include "veech2/svg.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

namespace veech2 {

namespace {

constexpr double kScale = 100.0;
constexpr double kMargin = 30.0;

const std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                              "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Pt {
    double x, y;
};

Pt to_pt(const Vec2& v) { return {v.x.to_double(), v.y.to_double()}; }

std::string label(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

// Maps polygon-chart points of one polygon to picture coordinates.
struct Placement {
    double dx, top;
    Pt operator()(Pt p) const { return {dx + p.x * kScale, top - p.y * kScale}; }
};

}  // namespace

std::string export_svg(const Surface& s, const CylinderDecomposition* dec) {
    std::ostringstream body;
    body << std::fixed << std::setprecision(3);

    std::vector<Placement> place;
    double cursor = kMargin, max_height = 0;
    for (const auto& poly : s.polygons) {
        double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
        for (const auto& v : poly.vertices) {
            Pt p = to_pt(v);
            minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
        }
        place.push_back({cursor - minx * kScale, kMargin + maxy * kScale});
        cursor += (maxx - minx) * kScale + kMargin;
        max_height = std::max(max_height, (maxy - miny) * kScale);
    }

    std::vector<std::size_t> gluing_of;
    std::vector<std::vector<std::size_t>> edge_gluing(s.polygons.size());
    for (std::size_t i = 0; i < s.polygons.size(); ++i) edge_gluing[i].assign(s.polygons[i].size(), 0);
    for (std::size_t g = 0; g < s.gluings.size(); ++g) {
        edge_gluing[s.gluings[g].first.polygon][s.gluings[g].first.edge] = g;
        edge_gluing[s.gluings[g].second.polygon][s.gluings[g].second.edge] = g;
    }

    for (std::size_t i = 0; i < s.polygons.size(); ++i) {
        const auto& poly = s.polygons[i];
        body << "<path class=\"polygon\" d=\"";
        Pt centroid{0, 0};
        for (std::size_t k = 0; k < poly.size(); ++k) {
            Pt p = place[i](to_pt(poly.vertex(k)));
            centroid.x += p.x / poly.size();
            centroid.y += p.y / poly.size();
            body << (k ? " L " : "M ") << p.x << ' ' << p.y;
        }
        body << " Z\" fill=\"#f4f4f4\" stroke=\"none\"/>\n";
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const std::size_t g = edge_gluing[i][k];
            Pt a = place[i](to_pt(poly.vertex(k))), b = place[i](to_pt(poly.vertex(k + 1)));
            const char* color = kPalette[g % kPalette.size()];
            body << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
                 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            Pt m{(a.x + b.x) / 2, (a.y + b.y) / 2};
            m.x += (centroid.x - m.x) * 0.12;
            m.y += (centroid.y - m.y) * 0.12;
            body << "<text class=\"edge-label\" x=\"" << m.x << "\" y=\"" << m.y << "\" fill=\"" << color
                 << "\" font-size=\"12\" text-anchor=\"middle\">" << label(g) << "</text>\n";
        }
    }

    double height = max_height + 2 * kMargin;
    double width = cursor;
    if (dec) {
        const Matrix2 back = dec->normalizer.inverse();
        for (const auto& sc : dec->saddles) {
            for (const auto& seg : sc.segments) {
                Pt a = place[seg.polygon](to_pt(back * Vec2{seg.x0, seg.y}));
                Pt b = place[seg.polygon](to_pt(back * Vec2{seg.x1, seg.y}));
                body << "<line class=\"saddle\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
                     << "\" stroke=\"#c00000\" stroke-width=\"1\"/>\n";
            }
        }
        double x = kMargin, base = height, band = 0;
        for (std::size_t i = 0; i < dec->cylinders.size(); ++i) {
            const auto& c = dec->cylinders[i];
            double w = c.width.to_double() * kScale, h = c.height.to_double() * kScale, t = c.twist.to_double() * kScale;
            double y0 = base + h;
            const char* color = kPalette[i % kPalette.size()];
            body << "<path class=\"cylinder\" d=\"M " << x << ' ' << y0 << " L " << x + w << ' ' << y0 << " L " << x + w + t
                 << ' ' << base << " L " << x + t << ' ' << base << " Z\" fill=\"" << color
                 << "\" fill-opacity=\"0.3\" stroke=\"" << color << "\"/>\n";
            body << "<line class=\"core\" x1=\"" << x + t / 2 << "\" y1=\"" << y0 - h / 2 << "\" x2=\"" << x + w + t / 2
                 << "\" y2=\"" << y0 - h / 2 << "\" stroke=\"" << color << "\" stroke-dasharray=\"4 3\"/>\n";
            x += w + t + kMargin;
            band = std::max(band, h);
        }
        width = std::max(width, x);
        height += band + kMargin;
    }

    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

}  // namespace veech2

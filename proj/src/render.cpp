#include "brauercat/render.hpp"

#include <algorithm>
#include <sstream>

#include "brauercat/errors.hpp"
#include "brauercat/json_io.hpp"

namespace brauercat {

namespace {

constexpr int kUnit = 40;      // horizontal spacing between boundary points
constexpr int kMargin = 24;
constexpr int kCoeffWidth = 64;
constexpr int kHeight = 200;
constexpr int kTopY = 30;
constexpr int kBottomY = 170;
constexpr int kMidY = 100;

int point_x(const EnhancedDiagram& d, int p, int x0) {
    const int slot = p < d.source ? p : p - d.source;
    return x0 + kMargin + slot * kUnit;
}

int point_y(const EnhancedDiagram& d, int p) {
    return p < d.source ? kBottomY : kTopY;
}

void draw_strand(std::ostringstream& os, int x1, int y1, int x2, int y2) {
    // vertical endpoints; same-side pairs arc toward the middle
    int c1y, c2y;
    if (y1 == y2) {
        const int depth = 36 + std::abs(x2 - x1) / 4;
        const int dir = y1 == kTopY ? 1 : -1;
        c1y = y1 + dir * depth;
        c2y = c1y;
    } else {
        c1y = kMidY;
        c2y = kMidY;
    }
    os << "  <path d=\"M " << x1 << " " << y1 << " C " << x1 << " " << c1y << ", " << x2
       << " " << c2y << ", " << x2 << " " << y2 << "\" fill=\"none\" stroke=\"black\""
       << " stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const EnhancedMorphism& f) {
    if (f.terms().size() > static_cast<std::size_t>(kRenderTermCap))
        throw CapExceeded("render cap exceeded: " + std::to_string(f.terms().size()) +
                          " terms (cap " + std::to_string(kRenderTermCap) + ")");
    const int width_pts = std::max(std::max(f.source(), f.target()), 1);
    const int term_width = kCoeffWidth + 2 * kMargin + (width_pts - 1) * kUnit + kMargin;
    const std::size_t n_terms = std::max<std::size_t>(f.terms().size(), 1);
    const int total_width = static_cast<int>(n_terms) * term_width;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_width
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << total_width << " " << kHeight
       << "\">\n";

    int x0 = 0;
    std::size_t index = 0;
    for (const auto& [d, c] : f.terms()) {
        const int base = x0 + kCoeffWidth;
        os << "  <text x=\"" << x0 + 8 << "\" y=\"" << kMidY + 5
           << "\" font-family=\"monospace\" font-size=\"14\">" << to_string(c) << "</text>\n";
        for (auto [a, bpt] : d.pairs)
            draw_strand(os, point_x(d, a, base), point_y(d, a), point_x(d, bpt, base),
                        point_y(d, bpt));
        if (d.has_delta()) {
            // triangle at the barycenter of the legs, one connector per leg
            long sx = 0;
            for (int l : d.delta_legs) sx += point_x(d, l, base);
            const int cx = static_cast<int>(sx / static_cast<long>(d.delta_legs.size()));
            const int cy = kMidY;
            os << "  <polygon points=\"" << cx - 14 << "," << cy + 12 << " " << cx + 14 << ","
               << cy + 12 << " " << cx << "," << cy - 14 << "\" fill=\"none\""
               << " stroke=\"black\" stroke-width=\"2\"/>\n";
            const int nlegs = static_cast<int>(d.delta_legs.size());
            for (int k = 0; k < nlegs; ++k) {
                const int l = d.delta_legs[static_cast<std::size_t>(k)];
                const int ax = nlegs == 1 ? cx : cx - 10 + (20 * k) / (nlegs - 1);
                const int ay = point_y(d, l) == kTopY ? cy - 5 : cy + 12;
                draw_strand(os, ax, ay, point_x(d, l, base), point_y(d, l));
            }
        }
        if (f.terms().size() > 1 && index + 1 < f.terms().size()) {
            const int sep = x0 + term_width;
            os << "  <line x1=\"" << sep << "\" y1=\"20\" x2=\"" << sep
               << "\" y2=\"180\" stroke=\"lightgray\" stroke-width=\"1\"/>\n";
        }
        x0 += term_width;
        ++index;
    }
    if (f.terms().empty())
        os << "  <text x=\"8\" y=\"" << kMidY + 5
           << "\" font-family=\"monospace\" font-size=\"14\">0</text>\n";
    os << "</svg>\n";
    return os.str();
}

void render_svg_file(const EnhancedMorphism& f, const std::string& path) {
    save_file(path, render_svg(f));
}

}  // namespace brauercat

#include "ratlink/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ratlink {

DiagramSpec DiagramSpec::for_conway(ContinuedFraction cf, RenderStyle style) {
    DiagramSpec spec;
    spec.kind = Kind::conway;
    spec.conway = std::move(cf);
    spec.style = style;
    return spec;
}

DiagramSpec DiagramSpec::for_schubert(BridgePresentation bp, RenderStyle style) {
    DiagramSpec spec;
    spec.kind = Kind::schubert;
    spec.schubert = std::move(bp);
    spec.style = style;
    return spec;
}

namespace {

constexpr long kMaxCrossings = 10000;

// Fixed two-decimal formatting with trailing zeros stripped, so identical
// inputs always produce byte-identical output.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

class Svg {
  public:
    explicit Svg(double stroke_width) : stroke_width_(stroke_width) {}

    void line(double x1, double y1, double x2, double y2, const std::string& cls = "") {
        body_ += "    <line";
        if (!cls.empty()) body_ += " class=\"" + cls + "\"";
        body_ += " x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
                 "\" y2=\"" + fmt(y2) + "\"/>\n";
    }

    void cubic(double x1, double y1, double cx1, double cy1, double cx2, double cy2, double x2,
               double y2, const std::string& cls = "") {
        body_ += "    <path";
        if (!cls.empty()) body_ += " class=\"" + cls + "\"";
        body_ += " d=\"M " + fmt(x1) + " " + fmt(y1) + " C " + fmt(cx1) + " " + fmt(cy1) + ", " +
                 fmt(cx2) + " " + fmt(cy2) + ", " + fmt(x2) + " " + fmt(y2) + "\"/>\n";
    }

    void open_group(const std::string& attrs) { body_ += "  <g " + attrs + ">\n"; }
    void close_group() { body_ += "  </g>\n"; }
    void raw(const std::string& s) { body_ += s; }

    std::string finish(double width, double height, const std::string& root_attrs) const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
               "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
               fmt(height) + "\" " + root_attrs + ">\n";
        out += "<g fill=\"none\" stroke=\"#111111\" stroke-width=\"" + fmt(stroke_width_) +
               "\" stroke-linecap=\"round\">\n";
        out += body_;
        out += "</g>\n</svg>\n";
        return out;
    }

  private:
    double stroke_width_;
    std::string body_;
};

// Diagonal with a centered break, for the strand passing underneath.
void broken_diagonal(Svg& svg, double x1, double y1, double x2, double y2, double gap) {
    const double dx = x2 - x1, dy = y2 - y1;
    const double len = std::sqrt(dx * dx + dy * dy);
    const double ux = dx / len, uy = dy / len;
    const double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    svg.line(x1, y1, mx - ux * gap, my - uy * gap, "under");
    svg.line(mx + ux * gap, my + uy * gap, x2, y2, "under");
}

}  // namespace

std::string render_conway(const DiagramSpec& spec) {
    if (spec.kind != DiagramSpec::Kind::conway)
        throw std::invalid_argument("spec does not describe a twist-region diagram");
    if (!spec.style.valid()) throw std::invalid_argument("invalid render style");
    const ContinuedFraction& cf = spec.conway;
    if (cf.empty()) throw std::domain_error("nothing to draw for the empty fraction");

    BigInt total = 0;
    for (const auto& a : cf.terms()) total += a;
    if (total > kMaxCrossings) throw std::length_error("diagram too large to render");

    const double pad = spec.style.padding;
    const double gap = spec.style.gap;
    const double row_gap = 48, cw = 36, tangle_gap = 24, bulge = 30;
    const auto row_y = [&](int r) { return pad + 20 + (r - 1) * row_gap; };
    const double x_start = pad + bulge + 10;

    const std::size_t m = cf.length();
    Svg svg(spec.style.stroke_width);

    // Straight rail pieces are collected while walking the twist regions.
    std::vector<std::pair<double, double>> rail[5];  // 1..4 used
    int occupant[4] = {0, 1, 2, 3};                  // string id on rows 1..3

    double x = x_start;
    for (std::size_t n = 1; n <= m; ++n) {
        const bool odd_position = (n % 2 == 1);
        const int outer = odd_position ? 1 : 3;
        const int inner = 2;
        const long a = cf.term(n).convert_to<long>();

        const double tx0 = x, tx1 = x + static_cast<double>(a) * cw;
        for (int r = 1; r <= 3; ++r)
            if (r != outer && r != inner) rail[r].emplace_back(tx0, tx1);

        svg.open_group("class=\"tangle\" data-n=\"" + std::to_string(n) + "\" data-a=\"" +
                       std::to_string(a) + "\"");
        for (long c = 1; c <= a; ++c) {
            const double cx0 = x, cx1 = x + cw;
            const int over_string = occupant[outer];
            const int under_string = occupant[inner];
            svg.open_group(std::string("class=\"crossing\" data-tangle=\"") + std::to_string(n) +
                           "\" data-index=\"" + std::to_string(c) + "\" data-sign=\"" +
                           (odd_position ? "negative" : "positive") + "\" data-over=\"" +
                           std::to_string(over_string) + "\" data-under=\"" +
                           std::to_string(under_string) + "\"");
            broken_diagonal(svg, cx0, row_y(inner), cx1, row_y(outer), gap);
            svg.line(cx0, row_y(outer), cx1, row_y(inner), "over");
            svg.close_group();
            std::swap(occupant[outer], occupant[inner]);
            x = cx1;
        }
        svg.close_group();

        if (n < m)
            for (int r = 1; r <= 3; ++r) rail[r].emplace_back(x, x + tangle_gap);
        if (n < m) x += tangle_gap;
    }
    const double x_end = x;
    rail[4].emplace_back(x_start, x_end);

    for (int r = 1; r <= 4; ++r)
        for (auto [sx, ex] : rail[r]) svg.line(sx, row_y(r), ex, row_y(r), "rail");

    // End arcs; their shape depends on the parity of the number of twist
    // regions.
    const char* kind = (m % 2 == 1) ? "odd-m" : "even-m";
    svg.open_group(std::string("class=\"closure\" data-kind=\"") + kind + "\"");
    svg.cubic(x_start, row_y(1), x_start - bulge, row_y(1), x_start - bulge, row_y(2), x_start,
              row_y(2));
    svg.cubic(x_start, row_y(3), x_start - bulge, row_y(3), x_start - bulge, row_y(4), x_start,
              row_y(4));
    if (m % 2 == 1) {
        svg.cubic(x_end, row_y(1), x_end + bulge, row_y(1), x_end + bulge, row_y(2), x_end,
                  row_y(2));
        svg.cubic(x_end, row_y(3), x_end + bulge, row_y(3), x_end + bulge, row_y(4), x_end,
                  row_y(4));
    } else {
        svg.cubic(x_end, row_y(2), x_end + bulge, row_y(2), x_end + bulge, row_y(3), x_end,
                  row_y(3));
        svg.cubic(x_end, row_y(1), x_end + bulge + 18, row_y(1), x_end + bulge + 18, row_y(4),
                  x_end, row_y(4));
    }
    svg.close_group();

    std::string terms = "[";
    for (std::size_t idx = 0; idx < cf.terms().size(); ++idx) {
        if (idx) terms += ",";
        terms += cf.terms()[idx].str();
    }
    terms += "]";

    const double width = x_end + bulge + 18 + pad;
    const double height = row_y(4) + 20 + pad;
    return svg.finish(width, height,
                      "data-kind=\"conway\" data-terms=\"" + terms + "\" data-crossings=\"" +
                          total.str() + "\"");
}

std::string render_schubert(const DiagramSpec& spec) {
    if (spec.kind != DiagramSpec::Kind::schubert)
        throw std::invalid_argument("spec does not describe a two-bridge diagram");
    if (!spec.style.valid()) throw std::invalid_argument("invalid render style");
    const BridgePresentation& bp = spec.schubert;
    if (bp.degenerate) throw std::domain_error("cannot draw a degenerate presentation");
    if (bp.p - 1 > kMaxCrossings / 2) throw std::length_error("diagram too large to render");

    const long p = bp.p.convert_to<long>();
    const long q = bp.q.convert_to<long>();

    const double pad = spec.style.padding;
    const double gap = spec.style.gap;
    const double seg = 26, tick = 16, bridge_y = pad + 40;
    const double ax0 = pad + 20;
    const double ax1 = ax0 + static_cast<double>(p) * seg;
    const double bx0 = ax1 + 60;
    const double bx1 = bx0 + static_cast<double>(p) * seg;

    Svg svg(spec.style.stroke_width);

    // Bridges: the two over-arcs, drawn heavier. The right one is handled as
    // two strands joined at its midpoint, hence the split tick marking.
    svg.open_group("class=\"bridges\"");
    svg.raw("    <line class=\"bridge\" data-name=\"alpha\" stroke-width=\"" +
            fmt(2.2 * spec.style.stroke_width) + "\" x1=\"" + fmt(ax0) + "\" y1=\"" +
            fmt(bridge_y) + "\" x2=\"" + fmt(ax1) + "\" y2=\"" + fmt(bridge_y) + "\"/>\n");
    svg.raw("    <line class=\"bridge\" data-name=\"beta\" stroke-width=\"" +
            fmt(2.2 * spec.style.stroke_width) + "\" x1=\"" + fmt(bx0) + "\" y1=\"" +
            fmt(bridge_y) + "\" x2=\"" + fmt(bx1) + "\" y2=\"" + fmt(bridge_y) + "\"/>\n");
    svg.close_group();

    auto ticks = [&](double x0, const char* bridge) {
        for (long c = 1; c <= p - 1; ++c) {
            const double tx = x0 + static_cast<double>(c) * seg;
            std::string attrs = std::string("class=\"crossing\" data-bridge=\"") + bridge +
                                "\" data-pos=\"" + std::to_string(c) + "\"";
            if (bridge[0] == 'b' && c == q) attrs += " data-first-alpha-under-beta=\"true\"";
            svg.open_group(attrs);
            svg.line(tx, bridge_y - tick, tx, bridge_y - gap, "under");
            svg.line(tx, bridge_y + gap, tx, bridge_y + tick, "under");
            svg.close_group();
        }
    };
    ticks(ax0, "alpha");
    ticks(bx0, "beta");

    // Understrand arcs connecting consecutive passages, scalloped below the
    // bridges and once across the middle.
    svg.open_group("class=\"strand\"");
    auto scallops = [&](double x0) {
        for (long c = 1; c < p - 1; ++c) {
            const double xa = x0 + static_cast<double>(c) * seg;
            const double xb = xa + seg;
            const double y0 = bridge_y + tick;
            const double dip = bridge_y + tick + 14;
            svg.cubic(xa, y0, xa, dip, xb, dip, xb, y0);
        }
    };
    scallops(ax0);
    scallops(bx0);
    if (p >= 2) {
        const double last_a = ax0 + static_cast<double>(p - 1) * seg;
        const double first_b = bx0 + seg;
        const double y0 = bridge_y - tick;
        svg.cubic(last_a, y0, last_a, y0 - 18, first_b, y0 - 18, first_b, y0);
        svg.cubic(ax0 + seg, y0, ax0 + seg, y0 - 24, bx1 - seg, y0 - 24, bx1 - seg, y0);
    }
    svg.close_group();

    const double width = bx1 + 20 + pad;
    const double height = bridge_y + tick + 14 + 20 + pad;
    return svg.finish(width, height,
                      "data-kind=\"schubert\" data-p=\"" + bp.p.str() + "\" data-q=\"" +
                          bp.q.str() + "\" data-crossings=\"" + BigInt(2 * (p - 1)).str() + "\"");
}

}  // namespace ratlink

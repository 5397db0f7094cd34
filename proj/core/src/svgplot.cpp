#include "vsb/svgplot.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "vsb/dilation.hpp"
#include "vsb/errors.hpp"
#include "vsb/gf.hpp"

namespace vsb {

namespace {

struct Pt {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

std::int64_t cross(Pt o, Pt a, Pt b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain, counterclockwise, strictly convex (collinear interior
// points dropped). Degenerate inputs come back as the segment or point
// they span.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

struct RPt {
    Rational x;
    Rational y;
};

Rational rcross(const RPt& o, const RPt& a, const RPt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Inside-or-on test against the hull scaled by `s`, exact throughout.
bool inside_scaled(const std::vector<Pt>& hull, const Rational& s,
                   std::int64_t px, std::int64_t py) {
    RPt p{Rational(px), Rational(py)};
    std::vector<RPt> v;
    v.reserve(hull.size());
    for (auto h : hull) v.push_back({Rational(h.x) * s, Rational(h.y) * s});
    if (v.size() == 1) return p.x == v[0].x && p.y == v[0].y;
    if (v.size() == 2) {
        if (rcross(v[0], v[1], p) != 0) return false;
        Rational dot = (p.x - v[0].x) * (v[1].x - v[0].x) +
                       (p.y - v[0].y) * (v[1].y - v[0].y);
        Rational len2 = (v[1].x - v[0].x) * (v[1].x - v[0].x) +
                        (v[1].y - v[0].y) * (v[1].y - v[0].y);
        return dot >= 0 && dot <= len2;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (rcross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    return true;
}

// Pixel coordinate with at most four decimals, trailing zeros trimmed.
// Rounding is exact integer arithmetic, so output bytes never depend
// on floating point.
std::string px(const Rational& v) {
    BigInt num = boost::multiprecision::numerator(v) * 10000;
    BigInt den = boost::multiprecision::denominator(v);
    BigInt q = num / den;
    if ((num % den) * 2 >= den) ++q;
    std::ostringstream os;
    os << q / 10000;
    BigInt frac = q % 10000;
    if (frac != 0) {
        std::string digits = frac.convert_to<std::string>();
        digits.insert(0, 4 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        os << '.' << digits;
    }
    return os.str();
}

std::string frac_str(const Rational& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1)
        os << '/' << boost::multiprecision::denominator(v);
    return os.str();
}

} // namespace

std::string polytope_svg(const PolyMap& f) {
    if (f.nvars() != 2)
        throw NotTwoDimensionalError("polytope plots need exactly 2 variables");

    auto poly = newton_polytope(f);
    auto mres = mu(f);
    std::uint64_t d = f.degree();
    Rational contraction(2, d);

    std::vector<Pt> pts;
    for (const auto& g : poly.generators)
        pts.push_back({static_cast<std::int64_t>(g[0]),
                       static_cast<std::int64_t>(g[1])});
    auto hull = convex_hull(pts);

    std::int64_t top = 2;
    for (auto p : hull) top = std::max({top, p.x, p.y});
    top = std::max({top,
                    static_cast<std::int64_t>(mres.witness_target[0]),
                    static_cast<std::int64_t>(mres.witness_target[1])});

    const std::int64_t scale = 60;
    const std::int64_t margin = 48;
    std::int64_t side = 2 * margin + top * scale;
    auto X = [&](const Rational& wx) { return Rational(margin) + wx * scale; };
    auto Y = [&](const Rational& wy) {
        return Rational(margin) + (Rational(top) - wy) * scale;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " "
        << side << "\">\n";
    svg << "<rect width=\"" << side << "\" height=\"" << side
        << "\" fill=\"#ffffff\"/>\n";

    svg << "<g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (std::int64_t i = 0; i <= top; ++i) {
        svg << "<line x1=\"" << px(X(Rational(i))) << "\" y1=\""
            << px(Y(Rational(0))) << "\" x2=\"" << px(X(Rational(i)))
            << "\" y2=\"" << px(Y(Rational(top))) << "\"/>\n";
        svg << "<line x1=\"" << px(X(Rational(0))) << "\" y1=\""
            << px(Y(Rational(i))) << "\" x2=\"" << px(X(Rational(top)))
            << "\" y2=\"" << px(Y(Rational(i))) << "\"/>\n";
    }
    svg << "</g>\n";

    auto polygon_points = [&](const Rational& s) {
        std::ostringstream os;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            if (i) os << ' ';
            os << px(X(Rational(hull[i].x) * s)) << ','
               << px(Y(Rational(hull[i].y) * s));
        }
        return os.str();
    };
    svg << "<polygon points=\"" << polygon_points(Rational(1))
        << "\" fill=\"#c7d9f4\" fill-opacity=\"0.55\" stroke=\"#3a6ea5\" "
           "stroke-width=\"2\"/>\n";
    svg << "<polygon points=\"" << polygon_points(contraction)
        << "\" fill=\"none\" stroke=\"#b0483a\" stroke-width=\"2\" "
           "stroke-dasharray=\"6 4\"/>\n";

    for (std::int64_t x = 1; x <= top; ++x)
        for (std::int64_t y = 1; y <= top; ++y) {
            bool in_contraction = inside_scaled(hull, contraction, x, y);
            bool in_hull =
                in_contraction || inside_scaled(hull, Rational(1), x, y);
            const char* fill = in_contraction ? "#b0483a"
                               : in_hull      ? "#3a6ea5"
                                              : "#c8c8c8";
            const char* r = in_contraction ? "5" : in_hull ? "4" : "2.5";
            svg << "<circle cx=\"" << px(X(Rational(x))) << "\" cy=\""
                << px(Y(Rational(y))) << "\" r=\"" << r << "\" fill=\""
                << fill << "\"/>\n";
        }

    Rational wx(mres.witness_target[0]);
    Rational wy(mres.witness_target[1]);
    svg << "<path d=\"M " << px(X(wx) - 8) << " " << px(Y(wy)) << " L "
        << px(X(wx) + 8) << " " << px(Y(wy)) << " M " << px(X(wx)) << " "
        << px(Y(wy) - 8) << " L " << px(X(wx)) << " " << px(Y(wy) + 8)
        << "\" stroke=\"#1a7a3a\" stroke-width=\"3\"/>\n";
    svg << "<text x=\"" << px(X(wx) + 10) << "\" y=\"" << px(Y(wy) - 10)
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#1a7a3a\">("
        << mres.witness_target[0] << "," << mres.witness_target[1]
        << ")</text>\n";

    svg << "<text x=\"8\" y=\"16\" font-family=\"monospace\" "
           "font-size=\"13\" fill=\"#3a6ea5\">hull, deg = "
        << d << "</text>\n";
    svg << "<text x=\"8\" y=\"32\" font-family=\"monospace\" "
           "font-size=\"13\" fill=\"#b0483a\">contracted by n/d = 2/"
        << d << "</text>\n";
    svg << "<text x=\"8\" y=\"48\" font-family=\"monospace\" "
           "font-size=\"13\" fill=\"#1a7a3a\">mu = " << frac_str(mres.mu)
        << " at (" << mres.witness_target[0] << ","
        << mres.witness_target[1] << ")</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace vsb

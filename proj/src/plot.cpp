#include "cevalat/plot.hpp"

#include <gmpxx.h>

#include <array>
#include <sstream>
#include <vector>

namespace cevalat {

std::pair<std::string, bool> rat_decimal(const Rat& r) {
    mpz_class num = r.num(), den = r.den();
    bool neg = num < 0;
    if (neg) num = -num;
    // strip the 2s and 5s; an empty remainder means the expansion is
    // finite
    mpz_class rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    std::string digits;
    size_t frac;
    bool approx;
    if (rest == 1) {
        unsigned k = std::max(twos, fives);
        mpz_class scale = 1;
        for (unsigned i = 0; i < k; ++i) scale *= 10;
        mpz_class n = num * scale / den;
        digits = n.get_str();
        frac = k;
        approx = false;
    } else {
        // 12 significant digits: scale to 18 fractional digits, round
        // the digit string, then trim
        mpz_class scale = 1;
        for (int i = 0; i < 18; ++i) scale *= 10;
        mpz_class n = (2 * num * scale + den) / (2 * den);
        size_t len = n.get_str().size();
        if (len > 12) {
            mpz_class divisor = 1;
            for (size_t i = 0; i < len - 12; ++i) divisor *= 10;
            n = ((n + divisor / 2) / divisor) * divisor;
        }
        digits = n.get_str();
        frac = 18;
        approx = true;
    }
    if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
    std::string out = digits.substr(0, digits.size() - frac);
    std::string fpart = frac ? digits.substr(digits.size() - frac) : "";
    while (!fpart.empty() && fpart.back() == '0') fpart.pop_back();
    if (!fpart.empty()) out += "." + fpart;
    if (neg && out != "0") out = "-" + out;
    return {out, approx};
}

namespace {

struct Pt {
    Rat x, y;
};

// screen placement of barycentric (a, b, c): v1 = (40, 520),
// v2 = (600, 520), v3 = (320, 40)
Pt place(const Rat& a, const Rat& b, const Rat& c) {
    Rat s = a + b + c;
    Rat px = (b + c * Rat(1, 2)) / s;
    Rat py = c / s;
    return {Rat(40) + Rat(560) * px, Rat(520) - Rat(480) * py};
}

// the point of the edge-ij boundary with parameter t (possibly inf)
Pt edge_point(int edge, const ExtRat& t) {
    if (edge == 12)
        return t.is_infinite() ? place(Rat(0), Rat(1), Rat(0))
                               : place(Rat(1), t.finite(), Rat(0));
    if (edge == 23)
        return t.is_infinite() ? place(Rat(0), Rat(0), Rat(1))
                               : place(Rat(0), Rat(1), t.finite());
    return t.is_infinite() ? place(Rat(0), Rat(0), Rat(1))
                           : place(Rat(1), Rat(0), t.finite());
}

std::string coord(const Rat& r, bool* any_approx) {
    auto [s, approx] = rat_decimal(r);
    if (approx && any_approx) *any_approx = true;
    return s;
}

std::string angle_label(const std::string& a, const std::string& b, const std::string& c) {
    return "⟨" + a + "," + b + "," + c + "⟩";
}

}  // namespace

std::string ceva_svg(const Rat& x, const Rat& y, const RatioSet& u12,
                     const RatioSet& u23, const RatioSet& u13) {
    std::ostringstream out;
    bool any_approx = false;
    auto line = [&](const Pt& p, const Pt& q, const std::string& style) {
        out << "  <line x1=\"" << coord(p.x, &any_approx) << "\" y1=\""
            << coord(p.y, &any_approx) << "\" x2=\"" << coord(q.x, &any_approx)
            << "\" y2=\"" << coord(q.y, &any_approx) << "\" " << style << "/>\n";
    };
    auto text = [&](const Pt& p, const Rat& dx, const Rat& dy, const std::string& s,
                    const std::string& anchor) {
        out << "  <text x=\"" << coord(p.x + dx, &any_approx) << "\" y=\""
            << coord(p.y + dy, &any_approx) << "\" text-anchor=\"" << anchor
            << "\" font-size=\"15\">" << s << "</text>\n";
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 560\" "
           "font-family=\"serif\">\n";

    Pt v1 = place(Rat(1), Rat(0), Rat(0));
    Pt v2 = place(Rat(0), Rat(1), Rat(0));
    Pt v3 = place(Rat(0), Rat(0), Rat(1));

    // shaded C regions: fans from the opposite vertex over each
    // boundary interval
    struct EdgeSpec {
        int edge;
        const RatioSet* u;
        Pt apex;
        const char* fill;
    };
    std::array<EdgeSpec, 3> specs{{{12, &u12, v3, "#c03030"},
                                   {23, &u23, v1, "#3050c0"},
                                   {13, &u13, v2, "#308040"}}};
    for (const EdgeSpec& es : specs)
        for (const Interval& iv : es.u->intervals()) {
            Pt p = edge_point(es.edge, iv.lo), q = edge_point(es.edge, iv.hi);
            out << "  <polygon points=\"" << coord(es.apex.x, &any_approx) << ","
                << coord(es.apex.y, &any_approx) << " " << coord(p.x, &any_approx) << ","
                << coord(p.y, &any_approx) << " " << coord(q.x, &any_approx) << ","
                << coord(q.y, &any_approx) << "\" fill=\"" << es.fill
                << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
        }

    // the triangle
    line(v1, v2, "stroke=\"black\" stroke-width=\"1.5\"");
    line(v2, v3, "stroke=\"black\" stroke-width=\"1.5\"");
    line(v1, v3, "stroke=\"black\" stroke-width=\"1.5\"");
    text(v1, Rat(-8), Rat(18), angle_label("1", "0", "0"), "middle");
    text(v2, Rat(8), Rat(18), angle_label("0", "1", "0"), "middle");
    text(v3, Rat(0), Rat(-10), angle_label("0", "0", "1"), "middle");

    // thick U segments on the boundary
    for (const EdgeSpec& es : specs)
        for (const Interval& iv : es.u->intervals())
            line(edge_point(es.edge, iv.lo), edge_point(es.edge, iv.hi),
                 std::string("stroke=\"") + es.fill + "\" stroke-width=\"6\"");

    // the cevians through <1,x,0>, <0,1,y>, <1,0,xy>
    Rat xy = x * y;
    Pt p12 = place(Rat(1), x, Rat(0));
    Pt p23 = place(Rat(0), Rat(1), y);
    Pt p13 = place(Rat(1), Rat(0), xy);
    line(v3, p12, "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"none\"");
    line(v1, p23, "stroke=\"black\" stroke-width=\"1\"");
    line(v2, p13, "stroke=\"black\" stroke-width=\"1\"");
    text(p12, Rat(0), Rat(18), angle_label("1", x.str(), "0"), "middle");
    text(p23, Rat(10), Rat(0), angle_label("0", "1", y.str()), "start");
    text(p13, Rat(-10), Rat(0), angle_label("1", "0", xy.str()), "end");

    // the concurrency point <1,x,xy>
    Pt c = place(Rat(1), x, xy);
    out << "  <circle cx=\"" << coord(c.x, &any_approx) << "\" cy=\""
        << coord(c.y, &any_approx) << "\" r=\"3\" fill=\"black\"/>\n";
    text(c, Rat(8), Rat(-8), angle_label("1", x.str(), xy.str()), "start");

    if (any_approx)
        out << "  <!-- some coordinates rounded to 12 significant digits -->\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace cevalat

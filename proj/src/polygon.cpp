#include "puiseux/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace puiseux {

NewtonPolygon newton_polygon_from_valuations(const std::vector<std::optional<long>>& v) {
    struct Pt {
        long j, val;
    };
    std::vector<Pt> pts;
    for (long j = 0; j < static_cast<long>(v.size()); ++j)
        if (v[static_cast<std::size_t>(j)]) pts.push_back({j, *v[static_cast<std::size_t>(j)]});
    if (pts.empty()) throw ZeroPolynomial();

    NewtonPolygon np;
    np.jmin = pts.front().j;
    np.degy = static_cast<long>(v.size()) - 1;

    // Monotone-chain lower hull; collinear interior points are dropped so the
    // remaining vertices are exactly the hull corners.
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            long cross = (b.j - a.j) * (p.val - a.val) - (b.val - a.val) * (p.j - a.j);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }

    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const Pt& a = hull[i];
        const Pt& b = hull[i + 1];
        if (b.val > a.val) break;  // hull turned upward: valuation < 0 branches
        long dj = b.j - a.j;
        long dv = a.val - b.val;
        long g = dv == 0 ? dj : std::gcd(dj, dv);
        Edge e;
        e.q = dv == 0 ? 1 : dj / g;
        e.m = dv == 0 ? 0 : dv / g;
        e.l = e.q * a.val + e.m * a.j;
        e.j0 = a.j;
        e.j1 = b.j;
        // Every support point lies on or above the edge line.
        for (const Pt& p : pts)
            if (e.q * p.val + e.m * p.j < e.l)
                throw InternalError("newton_polygon: hull edge violated by support point");
        np.edges.push_back(e);
    }
    return np;
}

std::string polygon_svg(const NewtonPolygon& np, const std::vector<std::optional<long>>& support) {
    long maxj = static_cast<long>(support.size()) - 1;
    long maxv = 1;
    for (const auto& s : support)
        if (s && *s > maxv) maxv = *s;
    const long cell = 40, pad = 50;
    long w = pad * 2 + cell * std::max(maxj, 1L);
    long h = pad * 2 + cell * maxv;
    auto X = [&](long j) { return pad + j * cell; };
    auto Y = [&](long val) { return h - pad - val * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (long j = 0; j <= maxj; ++j)
        os << "<line x1=\"" << X(j) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(j) << "\" y2=\""
           << Y(maxv) << "\" stroke=\"#dddddd\"/>\n";
    for (long v = 0; v <= maxv; ++v)
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(v) << "\" x2=\"" << X(maxj) << "\" y2=\""
           << Y(v) << "\" stroke=\"#dddddd\"/>\n";
    for (long j = 0; j <= maxj; ++j)
        os << "<text x=\"" << X(j) << "\" y=\"" << Y(0) + 24
           << "\" font-size=\"12\" text-anchor=\"middle\">" << j << "</text>\n";
    for (long v = 0; v <= maxv; ++v)
        os << "<text x=\"" << X(0) - 20 << "\" y=\"" << Y(v) + 4
           << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
    for (const Edge& e : np.edges) {
        long v0 = (e.l - e.m * e.j0) / e.q;
        long v1 = (e.l - e.m * e.j1) / e.q;
        os << "<line x1=\"" << X(e.j0) << "\" y1=\"" << Y(v0) << "\" x2=\"" << X(e.j1)
           << "\" y2=\"" << Y(v1) << "\" stroke=\"#c02020\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << (X(e.j0) + X(e.j1)) / 2 + 6 << "\" y=\"" << (Y(v0) + Y(v1)) / 2 - 6
           << "\" font-size=\"12\" fill=\"#c02020\">(" << e.q << "," << e.m << "," << e.l
           << ")</text>\n";
    }
    for (long j = 0; j <= maxj; ++j) {
        const auto& s = support[static_cast<std::size_t>(j)];
        if (!s) continue;
        os << "<circle cx=\"" << X(j) << "\" cy=\"" << Y(*s)
           << "\" r=\"4\" fill=\"#202020\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace puiseux

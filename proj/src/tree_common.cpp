#include <algorithm>
#include <numeric>
#include <sstream>

#include "puiseux/tree.hpp"

namespace puiseux {

PolygonTree::Weight::Weight(long n, long d) : num(n), den(d) {
    if (den <= 0 || num <= 0) throw InternalError("tree weight must be positive");
    long g = std::gcd(num, den);
    num /= g;
    den /= g;
}

PolygonTree::Weight PolygonTree::Weight::operator+(const Weight& o) const {
    return Weight(num * o.den + o.num * den, den * o.den);
}

int tree_cmp(const PolygonTree& a, const PolygonTree& b) {
    if (a.content != b.content) return a.content < b.content ? -1 : 1;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto& ea = a.edges[i];
        const auto& eb = b.edges[i];
        if (ea.q != eb.q) return ea.q < eb.q ? -1 : 1;
        if (ea.m != eb.m) return ea.m < eb.m ? -1 : 1;
        if (ea.l != eb.l) return ea.l < eb.l ? -1 : 1;
        if (ea.profile != eb.profile) return ea.profile < eb.profile ? -1 : 1;
        if (ea.children.size() != eb.children.size())
            return ea.children.size() < eb.children.size() ? -1 : 1;
        for (std::size_t j = 0; j < ea.children.size(); ++j) {
            const auto& ca = ea.children[j];
            const auto& cb = eb.children[j];
            if (ca.mult != cb.mult) return ca.mult < cb.mult ? -1 : 1;
            if (ca.sub.size() != cb.sub.size()) return ca.sub.size() < cb.sub.size() ? -1 : 1;
            for (std::size_t s = 0; s < ca.sub.size(); ++s) {
                if (ca.sub[s].first != cb.sub[s].first)
                    return ca.sub[s].first < cb.sub[s].first ? -1 : 1;
                int c = tree_cmp(ca.sub[s].second, cb.sub[s].second);
                if (c != 0) return c;
            }
        }
    }
    return 0;
}

bool tree_equal(const PolygonTree& a, const PolygonTree& b) { return tree_cmp(a, b) == 0; }

namespace {

void tree_str_rec(const PolygonTree& t, std::ostringstream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (t.content > 0) os << pad << "content y^" << t.content << "\n";
    if (t.edges.empty()) os << pad << "(regular)\n";
    for (const auto& e : t.edges) {
        os << pad << "edge (q=" << e.q << ", m=" << e.m << ", l=" << e.l << ") profile {";
        for (std::size_t i = 0; i < e.profile.size(); ++i) {
            if (i) os << ", ";
            os << "(" << e.profile[i].deg << "," << e.profile[i].mult << ")";
        }
        os << "}\n";
        for (const auto& g : e.children) {
            os << pad << "  part with multiplicity " << g.mult << ":\n";
            for (const auto& [w, sub] : g.sub) {
                os << pad << "  [weight " << w.num;
                if (w.den != 1) os << "/" << w.den;
                os << "]\n";
                tree_str_rec(sub, os, indent + 2);
            }
        }
    }
}

}  // namespace

std::string tree_str(const PolygonTree& t) {
    std::ostringstream os;
    tree_str_rec(t, os, 0);
    return os.str();
}

namespace detail {

void canonicalize_group(PolygonTree::ChildGroup& g) {
    std::sort(g.sub.begin(), g.sub.end(), [](const auto& a, const auto& b) {
        int c = tree_cmp(a.second, b.second);
        if (c != 0) return c < 0;
        return a.first < b.first;
    });
    std::vector<std::pair<PolygonTree::Weight, PolygonTree>> merged;
    for (auto& [w, t] : g.sub) {
        if (!merged.empty() && tree_cmp(merged.back().second, t) == 0)
            merged.back().first = merged.back().first + w;
        else merged.emplace_back(w, std::move(t));
    }
    g.sub = std::move(merged);
}

void sort_node(PolygonTree& t) {
    for (auto& e : t.edges)
        std::sort(e.children.begin(), e.children.end(),
                  [](const auto& a, const auto& b) { return a.mult < b.mult; });
    // edges stay in polygon order; profiles are sorted at construction
}

long depth_guard_from_disc(long disc_val, long degy) { return disc_val + degy + 4; }

long depth_guard_fallback(long degy, long degx) { return (degy + 2) * (degx + 2) + 8; }

}  // namespace detail

}  // namespace puiseux

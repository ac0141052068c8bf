#ifndef PUISEUX_TREE_HPP
#define PUISEUX_TREE_HPP

#include <string>
#include <vector>

#include "puiseux/bpoly.hpp"
#include "puiseux/dyn.hpp"
#include "puiseux/polygon.hpp"

namespace puiseux {

// The discrete invariant of the Newton-Puiseux recursion. Pure integers, so
// trees computed over Q (by dynamic evaluation) and over F_p (by genuine
// factorization) compare directly; a prime is good exactly when they agree.
//
// Node payload per edge: (q, m, l) plus the multiset of
// (degree, multiplicity) of the squarefree parts of the edge's characteristic
// polynomial. Every part of multiplicity >= 2 owns a group of weighted
// subtrees: one per irreducible factor over F_q, one per dynamic-evaluation
// component over Q. The weight counts roots of the part covered by the
// branch, i.e. the coefficient-ring degree relative to the ring at this node;
// equal subtrees merge by adding weights, which is what makes conjugate
// branches aggregate identically on both sides.
struct PolygonTree {
    // Exact rational weight (dynamic-evaluation components can cover ring
    // components unevenly, so relative degrees need not be integers).
    struct Weight {
        long num = 0;
        long den = 1;
        Weight() = default;
        Weight(long n, long d);
        Weight operator+(const Weight& o) const;
        auto operator<=>(const Weight&) const = default;
    };
    struct Part {
        long deg;
        long mult;
        auto operator<=>(const Part&) const = default;
    };
    struct ChildGroup {
        long mult;  // multiplicities are pairwise distinct within an edge
        std::vector<std::pair<Weight, PolygonTree>> sub;  // (weight, subtree), canonical
    };
    struct EdgeNode {
        long q, m, l;
        std::vector<Part> profile;        // sorted
        std::vector<ChildGroup> children; // sorted by mult
    };

    long content = 0;  // y^content divided out at this node
    std::vector<EdgeNode> edges;  // polygon order (slopes increasing)
};

// Total order; equality of canonical trees is tree_cmp == 0.
int tree_cmp(const PolygonTree& a, const PolygonTree& b);
bool tree_equal(const PolygonTree& a, const PolygonTree& b);

std::string tree_str(const PolygonTree& t);

struct TreeOptions {
    // Reject non-squarefree input via the discriminant. Lifting the check is
    // for harnesses that probe wild characteristic on purpose; the depth guard
    // then falls back to a degree-based bound.
    bool check_squarefree = true;
};

PolygonTree polygon_tree_fq(const BiPoly<FqField>& f, Rng& rng, const TreeOptions& opts = {});
PolygonTree polygon_tree_q(const BiPoly<QQ>& f, const TreeOptions& opts = {});

namespace detail {

// Shared node assembly helpers.
void canonicalize_group(PolygonTree::ChildGroup& g);
void sort_node(PolygonTree& t);
long depth_guard_from_disc(long disc_val, long degy);
long depth_guard_fallback(long degy, long degx);

}  // namespace detail

}  // namespace puiseux

#endif

#pragma once

#include "sarkisov/exact_linalg.hpp"
#include "sarkisov/finite_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sarkisov {

// Automorphism of P^1 x P^1: swap=0 acts by (x,y) -> (Ax, By), swap=1 by
// (x,y) -> (Ay, Bx).
struct QuadAut {
    Mat a, b;
    bool swap = false;

    std::string key() const;  // canonical projective key
};

QuadAut quad_identity();
QuadAut quad_compose(const QuadAut& g, const QuadAut& h);  // g after h
QuadAut quad_inverse(const QuadAut& g);

struct QuadPoint {
    ProjPoint x, y;
    bool operator==(const QuadPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const QuadPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

QuadPoint quad_apply(const QuadAut& g, const QuadPoint& p);

// Symbolic fixed-locus vocabulary. A locus is a finite union of primitives;
// the empty union is the empty locus.
struct QuadLocusPart {
    enum class Kind { Whole, Graph, Fiber1, Fiber2, Point } kind = Kind::Whole;
    Mat graph;       // Graph: {(x, Mx) : x in P^1}
    ProjPoint base;  // Fiber1: {base} x P^1;  Fiber2: P^1 x {base}
    QuadPoint point;

    std::string str() const;
};
using QuadLocus = std::vector<QuadLocusPart>;

QuadLocus fixed_locus_of_element(const QuadAut& g);
QuadLocus intersect_locus(const QuadLocus& a, const QuadLocus& b);
bool locus_contains(const QuadLocusPart& part, const QuadPoint& p);
bool locus_is_empty(const QuadLocus& l);
bool locus_has_curve(const QuadLocus& l);
std::string locus_str(const QuadLocus& l);

// A quadric group given by its explicit element list (closed under
// composition), with the generating set kept alongside. Groups above the
// materialization cap are handled in this element form directly.
struct QuadGroupElems {
    std::vector<QuadAut> gens;
    std::vector<QuadAut> elements;

    long order() const { return static_cast<long>(elements.size()); }
};

QuadGroupElems close_quad_group(const std::vector<QuadAut>& gens, size_t cap = 20000);

bool quad_is_minimal(const QuadGroupElems& g);

// Common fixed locus of the group (intersection over generators).
QuadLocus quad_fixed_locus(const QuadGroupElems& g);

// First components of swap-0 elements whose second component is the identity.
std::vector<Mat> quad_kernel_k1(const QuadGroupElems& g);

// Orbit of a point under the group generators, capped.
std::vector<QuadPoint> quad_orbit(const QuadGroupElems& g, const QuadPoint& p, size_t cap);

// Degree-2 orbits {p,q} with p,q distinct in both coordinates. The search is
// exhaustive: the four canonical coordinate points first, then the common
// fixed loci of all index-2 subgroups with certified curve sampling; an empty
// answer really means no such orbit exists.
std::optional<std::pair<QuadPoint, QuadPoint>> find_degree2_orbit_general_position(
    const QuadGroupElems& g);

// General-position test for a degree-4 orbit: no two points on a common fiber
// of either ruling, and the four points not on a (1,1)-curve (equal cross
// ratios of the two coordinate quadruples).
bool degree4_orbit_general_position(const std::vector<QuadPoint>& orbit);

// Exhaustive existence test for a degree-4 orbit in general position; needs
// the materialized subgroup lattice, so only valid when order() fits a table.
bool exists_degree4_orbit_general_position(const QuadGroupElems& g);

// Index-2 subgroups of an element-form group, each as a list of element ids.
std::vector<std::vector<int>> quad_index2_subgroups(const QuadGroupElems& g);

// Materialize into a FiniteGroup (throws OrderBoundExceeded above the cap).
Materialized<QuadAut> quad_materialize(const QuadGroupElems& g, int cap = kDefaultOrderCap);

// Fingerprint usable above the cap: element-order histogram joined with the
// order (conjugacy data omitted for element-form groups).
std::string quad_coarse_fingerprint(const QuadGroupElems& g);

}  // namespace sarkisov

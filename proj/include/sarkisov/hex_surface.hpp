#pragma once

#include "sarkisov/exact_linalg.hpp"
#include "sarkisov/finite_group.hpp"
#include "sarkisov/pic_lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sarkisov {

// Automorphism of the sextic model {x0 y0 = x1 y1 = x2 y2} in P^2 x P^2:
// a finite-order torus element (exponents mod 1 modulo the diagonal, stored
// with a0 = 0), a coordinate permutation acting diagonally, and the factor
// swap. Normal form: torus after permutation after swap.
struct HexElement {
    Rational a1, a2;  // torus exponents of coordinates 1 and 2 (a0 = 0)
    int sigma = 0;    // index into s3_perms()
    bool swap = false;

    std::string key() const;
    bool is_torus() const { return sigma == 0 && !swap; }
    bool is_identity() const { return is_torus() && a1 == 0 && a2 == 0; }
};

const std::array<std::array<int, 3>, 6>& s3_perms();  // index 0 = identity
int s3_compose(int a, int b);                          // perm a after perm b
int s3_inverse(int a);

HexElement hex_identity();
HexElement hex_compose(const HexElement& g, const HexElement& h);  // g after h
HexElement hex_torus(const Rational& a0, const Rational& a1, const Rational& a2);
HexElement hex_perm(const std::array<int, 3>& images);
HexElement hex_swap();

// A point of the model surface.
struct HexPoint {
    ProjPoint x, y;  // dim 3 each; x_i y_i all equal
    bool operator==(const HexPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const HexPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
    std::string str() const { return x.str() + "*" + y.str(); }
};

HexPoint hex_apply(const HexElement& g, const HexPoint& p);
bool on_surface(const HexPoint& p);

struct HexGroup {
    std::vector<HexElement> gens;
    FiniteGroup group;
    std::vector<HexElement> elements;
};

HexGroup build_hex_group(const std::vector<HexElement>& gens, int cap = kDefaultOrderCap);

// Induced permutation of the six (-1)-curves. Positions around the hexagon:
// 0:e0, 1:d01, 2:e1, 3:d12, 4:e2, 5:d02 (0-based blown-up points); every
// element induces a symmetry of this 6-cycle.
using HexPerm = std::array<int, 6>;
HexPerm hexagon_perm(const HexElement& g);

// Image of the induced hexagon action, as a sorted set of position
// permutations plus a <r^d, r^k s> style label (s = the edge reflection
// 0<->1, 2<->5, 3<->4).
struct HexImage {
    std::vector<HexPerm> perms;
    std::string label;
};
HexImage hexagon_image(const HexGroup& g);

// Lattice action of one hexagon symmetry on Pic (basis h, e1, e2, e3).
LatticeAction lattice_action_of(const HexPerm& p);

// Minimal iff the image is <r>, <r^2,s> or <r,s>; cross-checked against
// invariant rank 1 of the induced lattice action.
bool hex_minimal(const HexGroup& g);

// The torus part N = G intersected with Ker(rho), as an abelian group.
struct TorusPart {
    std::vector<HexElement> elements;
    std::vector<long> invariants;  // abelian invariant factors (empty = trivial)
    bool trivial() const { return elements.size() == 1; }
};
TorusPart torus_part(const HexGroup& g);

// Exact fixed points of a minimal group (finite); the trivial group returns
// whole = true. Throws NotMinimal otherwise.
struct HexFixedPoints {
    bool whole = false;
    std::vector<HexPoint> points;
};
HexFixedPoints hex_fixed_points(const HexGroup& g);

// Plain sections of the three minimal hexagon images (trivial torus part).
std::vector<HexElement> hex_section_gens(const std::string& image);  // "C6" | "S3" | "D6"

}  // namespace sarkisov

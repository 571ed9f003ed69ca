#pragma once

#include "sarkisov/exact_linalg.hpp"
#include "sarkisov/finite_group.hpp"

#include <string>
#include <vector>

namespace sarkisov {

// Conjugacy-class labels for the finite subgroups of PGL_2.
struct KleinLabel {
    enum class Kind { Cyclic, Dihedral, A4, S4, A5 } kind = Kind::Cyclic;
    long n = 1;  // parameter for Cyclic / Dihedral

    static KleinLabel cyclic(long n) { return {Kind::Cyclic, n}; }
    static KleinLabel dihedral(long n) { return {Kind::Dihedral, n}; }
    static KleinLabel a4() { return {Kind::A4, 0}; }
    static KleinLabel s4() { return {Kind::S4, 0}; }
    static KleinLabel a5() { return {Kind::A5, 0}; }

    long group_order() const;
    std::string str() const;
    bool operator==(const KleinLabel& o) const = default;
};

// A fixed matrix realization of a Klein label, with the abstract group
// materialized over canonical projective matrix classes.
struct KleinGroup {
    KleinLabel label;
    std::vector<Mat> gens;
    FiniteGroup group;        // element 0 = identity class
    std::vector<Mat> mats;    // element i of group = mats[i] (canonical form)

    const Mat& mat(int i) const { return mats[static_cast<size_t>(i)]; }
    // Index of a projective class in the element list; -1 if absent.
    int index_of(const Mat& m) const;
};

// One conjugacy representative per label. Cyclic(n) is generated by the class
// of diag(zeta_n, 1); Dihedral(n) adds the antidiagonal involution; the three
// exceptional groups use stored generator matrices validated on construction.
KleinGroup realize(const KleinLabel& label);

// Fixed locus on P^1 of one projective class (delegates to the eigen solver).
FixedSet1D fixed_locus_on_P1(const Mat& g);

struct P1FixedPoints {
    bool whole = false;             // trivial group: all of P^1
    std::vector<ProjPoint> points;  // otherwise a finite (possibly empty) set
};

// Common fixed points of the whole realized group.
P1FixedPoints group_fixed_points(const KleinGroup& k);

}  // namespace sarkisov

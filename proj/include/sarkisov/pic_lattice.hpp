#pragma once

#include "sarkisov/rational.hpp"

#include <string>
#include <vector>

namespace sarkisov {

// Picard lattice of a del Pezzo surface of degree d: basis h, e_1..e_{9-d}
// with h^2 = 1, e_i^2 = -1, mixed products 0, K = -3h + sum e_i. The quadric
// gets its own two-generator lattice (see quad_lattice()).
class PicLattice {
public:
    explicit PicLattice(int degree);
    static PicLattice quadric();  // basis f1, f2; f1^2 = f2^2 = 0, f1.f2 = 1

    int degree() const { return degree_; }
    int rank() const { return rank_; }
    long gram(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<long>& canonical_class() const { return k_; }

    long dot(const std::vector<long>& a, const std::vector<long>& b) const;

private:
    int degree_;
    int rank_;
    std::vector<std::vector<long>> gram_;
    std::vector<long> k_;
};

// Class of a (-1)-curve: c.c = c.K = -1.
struct MinusOneCurve {
    std::vector<long> c;
    bool operator==(const MinusOneCurve& o) const = default;
    bool operator<(const MinusOneCurve& o) const { return c < o.c; }
};

// Exhaustive bounded search; `bound` caps |coefficient|. The count is
// certified stable by rerunning with the bound doubled.
std::vector<MinusOneCurve> minus_one_curves(const PicLattice& lat, long bound = 8);
bool minus_one_curve_count_stable(const PicLattice& lat, long bound = 8);

// A lattice isometry given by basis images (column j = image of basis j).
struct LatticeAction {
    std::vector<std::vector<long>> m;  // rank x rank, m[i][j]
};

// Rank of the invariant sublattice of the group generated by the actions.
// Throws NotIsometry if some action does not preserve the form or K.
long invariant_rank(const PicLattice& lat, const std::vector<LatticeAction>& actions);

}  // namespace sarkisov

#include "sarkisov/pic_lattice.hpp"

#include "sarkisov/errors.hpp"
#include "sarkisov/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace sarkisov {

PicLattice::PicLattice(int degree) : degree_(degree) {
    if (degree < 1 || degree > 9) throw invalid_parameter("PicLattice: degree in 1..9");
    rank_ = 10 - degree;
    gram_.assign(static_cast<size_t>(rank_), std::vector<long>(static_cast<size_t>(rank_), 0));
    gram_[0][0] = 1;
    for (int i = 1; i < rank_; ++i) gram_[static_cast<size_t>(i)][static_cast<size_t>(i)] = -1;
    k_.assign(static_cast<size_t>(rank_), 1);
    k_[0] = -3;
}

PicLattice PicLattice::quadric() {
    PicLattice lat(9);  // placeholder, overwritten below
    lat.degree_ = 8;
    lat.rank_ = 2;
    lat.gram_ = {{0, 1}, {1, 0}};
    lat.k_ = {-2, -2};
    return lat;
}

long PicLattice::dot(const std::vector<long>& a, const std::vector<long>& b) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a[static_cast<size_t>(i)] * gram(i, j) * b[static_cast<size_t>(j)];
    return s;
}

std::vector<MinusOneCurve> minus_one_curves(const PicLattice& lat, long bound) {
    // Solve c.c = -1, c.K = -1 with |coefficients| <= bound by DFS with
    // partial-sum pruning. In the standard basis c = (a; b_1..b_r):
    //   a^2 - sum b_i^2 = -1,  3a - sum b_i = 1.
    std::vector<MinusOneCurve> out;
    if (lat.rank() == 2 && lat.degree() == 8) return out;  // 2ab = -1 has no integer solutions
    int r = lat.rank() - 1;  // number of e_i
    for (long a = -bound; a <= bound; ++a) {
        long target_sum = 3 * a - 1;
        long target_sq = a * a + 1;
        std::vector<long> b(static_cast<size_t>(r), 0);
        std::function<void(int, long, long)> dfs = [&](int idx, long sum, long sq) {
            if (sq > target_sq) return;
            long rest = static_cast<long>(r - idx);
            if (rest == 0) {
                if (sum == target_sum && sq == target_sq) {
                    std::vector<long> c(static_cast<size_t>(lat.rank()));
                    c[0] = a;
                    for (int i = 0; i < r; ++i) c[static_cast<size_t>(i) + 1] = -b[static_cast<size_t>(i)];
                    out.push_back(MinusOneCurve{std::move(c)});
                }
                return;
            }
            // |remaining sum| bounded by rest * bound and by Cauchy-Schwarz
            long need = target_sum - sum;
            if (need > rest * bound || need < -rest * bound) return;
            if (static_cast<long long>(need) * need > static_cast<long long>(rest) * (target_sq - sq)) return;
            for (long v = -bound; v <= bound; ++v) {
                b[static_cast<size_t>(idx)] = v;
                dfs(idx + 1, sum + v, sq + v * v);
            }
        };
        dfs(0, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool minus_one_curve_count_stable(const PicLattice& lat, long bound) {
    return minus_one_curves(lat, bound).size() == minus_one_curves(lat, 2 * bound).size();
}

long invariant_rank(const PicLattice& lat, const std::vector<LatticeAction>& actions) {
    int r = lat.rank();
    for (const auto& act : actions) {
        if (static_cast<int>(act.m.size()) != r) throw invalid_parameter("invariant_rank: size");
        // preserves the intersection form: M^T G M = G
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long s = 0;
                for (int p = 0; p < r; ++p)
                    for (int q = 0; q < r; ++q)
                        s += act.m[static_cast<size_t>(p)][static_cast<size_t>(i)] * lat.gram(p, q) *
                             act.m[static_cast<size_t>(q)][static_cast<size_t>(j)];
                if (s != lat.gram(i, j)) throw not_isometry("action does not preserve the form");
            }
        // fixes K
        for (int i = 0; i < r; ++i) {
            long s = 0;
            for (int j = 0; j < r; ++j)
                s += act.m[static_cast<size_t>(i)][static_cast<size_t>(j)] * lat.canonical_class()[static_cast<size_t>(j)];
            if (s != lat.canonical_class()[static_cast<size_t>(i)])
                throw not_isometry("action does not fix the canonical class");
        }
    }
    // invariant sublattice = common kernel of (M - I) over the generators
    std::vector<std::vector<Rational>> rows;
    for (const auto& act : actions) {
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> row(static_cast<size_t>(r));
            for (int j = 0; j < r; ++j)
                row[static_cast<size_t>(j)] =
                    Rational(act.m[static_cast<size_t>(i)][static_cast<size_t>(j)] - (i == j ? 1 : 0));
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return r;
    return r - rational_rank(rows);
}

}  // namespace sarkisov

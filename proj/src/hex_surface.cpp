#include "sarkisov/hex_surface.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sarkisov {

const std::array<std::array<int, 3>, 6>& s3_perms() {
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return perms;
}

namespace {

int s3_index(const std::array<int, 3>& p) {
    const auto& all = s3_perms();
    for (int i = 0; i < 6; ++i)
        if (all[static_cast<size_t>(i)] == p) return i;
    throw invalid_parameter("s3_index: not a permutation of {0,1,2}");
}

CycNum torus_scalar(const Rational& a) {
    Rational r = frac_mod1(a);
    long q = static_cast<long>(denominator(r));
    long p = static_cast<long>(numerator(r));
    return CycNum::root_of_unity(q, p);
}

}  // namespace

int s3_compose(int a, int b) {
    const auto& all = s3_perms();
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i)
        r[static_cast<size_t>(i)] = all[static_cast<size_t>(a)][static_cast<size_t>(all[static_cast<size_t>(b)][static_cast<size_t>(i)])];
    return s3_index(r);
}

int s3_inverse(int a) {
    const auto& all = s3_perms();
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[static_cast<size_t>(all[static_cast<size_t>(a)][static_cast<size_t>(i)])] = i;
    return s3_index(r);
}

std::string HexElement::key() const {
    std::ostringstream os;
    os << to_string(a1) << "|" << to_string(a2) << "|" << sigma << "|" << (swap ? 1 : 0);
    return os.str();
}

HexElement hex_identity() { return HexElement{Rational(0), Rational(0), 0, false}; }

HexElement hex_torus(const Rational& a0, const Rational& a1, const Rational& a2) {
    HexElement e;
    e.a1 = frac_mod1(a1 - a0);
    e.a2 = frac_mod1(a2 - a0);
    return e;
}

HexElement hex_perm(const std::array<int, 3>& images) {
    HexElement e;
    e.sigma = s3_index(images);
    return e;
}

HexElement hex_swap() {
    HexElement e;
    e.swap = true;
    return e;
}

HexElement hex_compose(const HexElement& g, const HexElement& h) {
    // g,h in normal form torus . sigma . swap; moving h's torus through g's
    // swap inverts it, moving it through g's sigma permutes the exponents.
    std::array<Rational, 3> th = {Rational(0), h.a1, h.a2};
    if (g.swap)
        for (auto& x : th) x = -x;
    const auto& inv = s3_perms()[static_cast<size_t>(s3_inverse(g.sigma))];
    std::array<Rational, 3> perm{};
    for (int i = 0; i < 3; ++i) perm[static_cast<size_t>(i)] = th[static_cast<size_t>(inv[static_cast<size_t>(i)])];
    HexElement r;
    Rational b0 = perm[0];
    r.a1 = frac_mod1(g.a1 + perm[1] - b0);
    r.a2 = frac_mod1(g.a2 + perm[2] - b0);
    r.sigma = s3_compose(g.sigma, h.sigma);
    r.swap = g.swap != h.swap;
    return r;
}

HexPoint hex_apply(const HexElement& g, const HexPoint& p) {
    std::vector<CycNum> x = p.x.coords(), y = p.y.coords();
    if (g.swap) std::swap(x, y);
    const auto& inv = s3_perms()[static_cast<size_t>(s3_inverse(g.sigma))];
    std::vector<CycNum> xs(3), ys(3);
    for (int i = 0; i < 3; ++i) {
        xs[static_cast<size_t>(i)] = x[static_cast<size_t>(inv[static_cast<size_t>(i)])];
        ys[static_cast<size_t>(i)] = y[static_cast<size_t>(inv[static_cast<size_t>(i)])];
    }
    std::array<CycNum, 3> lam = {CycNum::one(), torus_scalar(g.a1), torus_scalar(g.a2)};
    for (int i = 0; i < 3; ++i) {
        xs[static_cast<size_t>(i)] = xs[static_cast<size_t>(i)] * lam[static_cast<size_t>(i)];
        ys[static_cast<size_t>(i)] = ys[static_cast<size_t>(i)] * lam[static_cast<size_t>(i)].inverse();
    }
    return HexPoint{ProjPoint(std::move(xs)), ProjPoint(std::move(ys))};
}

bool on_surface(const HexPoint& p) {
    CycNum p0 = p.x[0] * p.y[0], p1 = p.x[1] * p.y[1], p2 = p.x[2] * p.y[2];
    return p0 == p1 && p1 == p2;
}

HexGroup build_hex_group(const std::vector<HexElement>& gens, int cap) {
    auto mul = [](const HexElement& a, const HexElement& b) { return hex_compose(a, b); };
    auto key = [](const HexElement& e) { return e.key(); };
    auto mat = materialize_group(hex_identity(), gens, mul, key, cap);
    return HexGroup{gens, std::move(mat.group), std::move(mat.elements)};
}

HexPerm hexagon_perm(const HexElement& g) {
    const auto& sig = s3_perms()[static_cast<size_t>(g.sigma)];
    HexPerm out{};
    for (int pos = 0; pos < 6; ++pos) {
        bool is_e = (pos % 2 == 0);
        int idx = is_e ? pos / 2 : ((pos + 3) % 6) / 2;
        if (g.swap) is_e = !is_e;
        idx = sig[static_cast<size_t>(idx)];
        out[static_cast<size_t>(pos)] = is_e ? 2 * idx : (2 * idx + 3) % 6;
    }
    return out;
}

namespace {

HexPerm perm_compose(const HexPerm& a, const HexPerm& b) {
    HexPerm r{};
    for (int i = 0; i < 6; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(b[static_cast<size_t>(i)])];
    return r;
}

HexPerm rot_perm(int k) {
    HexPerm r{};
    for (int i = 0; i < 6; ++i) r[static_cast<size_t>(i)] = (i + k) % 6;
    return r;
}

// the edge reflection 0<->1, 2<->5, 3<->4
HexPerm edge_s() { return HexPerm{1, 0, 5, 4, 3, 2}; }

bool is_rotation(const HexPerm& p, int* k) {
    for (int kk = 0; kk < 6; ++kk) {
        if (p == rot_perm(kk)) {
            *k = kk;
            return true;
        }
    }
    return false;
}

}  // namespace

HexImage hexagon_image(const HexGroup& g) {
    std::set<HexPerm> set;
    set.insert(rot_perm(0));
    std::vector<HexPerm> queue = {rot_perm(0)};
    std::vector<HexPerm> gen_perms;
    for (const auto& e : g.gens) gen_perms.push_back(hexagon_perm(e));
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const auto& gp : gen_perms) {
            HexPerm np = perm_compose(gp, queue[i]);
            if (set.insert(np).second) queue.push_back(np);
        }
    }
    HexImage out;
    out.perms.assign(set.begin(), set.end());

    // label via the <r^d, r^k s> parametrization
    int rot_count = 0;
    int refl_count = 0;
    std::vector<int> rot_ks, refl_ks;
    for (const auto& p : out.perms) {
        int k;
        if (is_rotation(p, &k)) {
            ++rot_count;
            if (k != 0) rot_ks.push_back(k);
        } else {
            // reflection r^k s: (r^k s)(0) = r^k(1) = 1 + k
            ++refl_count;
            refl_ks.push_back((p[0] + 5) % 6);
        }
    }
    std::ostringstream label;
    if (rot_count == 1 && refl_count == 0) {
        label << "1";
    } else if (refl_count == 0) {
        int d = 6 / rot_count;
        label << "<r" << (d == 1 ? "" : "^" + std::to_string(d)) << ">";
    } else {
        int d = 6 / rot_count;
        int k = 6;
        for (int kk : refl_ks) k = std::min(k, ((kk % d) + d) % d);
        label << "<";
        if (rot_count > 1) label << "r" << (d == 1 ? "" : "^" + std::to_string(d)) << ",";
        if (k == 0) label << "s";
        else if (k == 1) label << "r*s";
        else label << "r^" << k << "*s";
        label << ">";
    }
    out.label = label.str();
    return out;
}

LatticeAction lattice_action_of(const HexPerm& p) {
    static const std::vector<std::vector<long>> cls = {
        {0, 1, 0, 0},    // e0
        {1, -1, -1, 0},  // d01
        {0, 0, 1, 0},    // e1
        {1, 0, -1, -1},  // d12
        {0, 0, 0, 1},    // e2
        {1, -1, 0, -1},  // d02
    };
    LatticeAction act;
    act.m.assign(4, std::vector<long>(4, 0));
    // columns 1..3: images of e0, e1, e2 (positions 0, 2, 4)
    for (int i = 0; i < 3; ++i) {
        const auto& im = cls[static_cast<size_t>(p[static_cast<size_t>(2 * i)])];
        for (int r = 0; r < 4; ++r) act.m[static_cast<size_t>(r)][static_cast<size_t>(i) + 1] = im[static_cast<size_t>(r)];
    }
    // h = e0 + d01 + e1: image = sum of images of positions 0, 1, 2
    for (int pos = 0; pos < 3; ++pos) {
        const auto& im = cls[static_cast<size_t>(p[static_cast<size_t>(pos)])];
        for (int r = 0; r < 4; ++r) act.m[static_cast<size_t>(r)][0] += im[static_cast<size_t>(r)];
    }
    return act;
}

bool hex_minimal(const HexGroup& g) {
    HexImage img = hexagon_image(g);
    auto make_set = [](std::vector<HexPerm> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<HexPerm> c6, s3, d6;
    for (int k = 0; k < 6; ++k) {
        c6.push_back(rot_perm(k));
        d6.push_back(rot_perm(k));
        d6.push_back(perm_compose(rot_perm(k), edge_s()));
    }
    for (int k = 0; k < 6; k += 2) {
        s3.push_back(rot_perm(k));
        s3.push_back(perm_compose(rot_perm(k), edge_s()));
    }
    auto sorted = img.perms;  // already sorted (set order)
    bool minimal = sorted == make_set(c6) || sorted == make_set(s3) || sorted == make_set(d6);

    // independent route: invariant rank of the induced lattice action
    PicLattice lat(6);
    std::vector<LatticeAction> acts;
    for (const auto& e : g.gens) acts.push_back(lattice_action_of(hexagon_perm(e)));
    bool rank_one = invariant_rank(lat, acts) == 1;
    if (minimal != rank_one)
        throw EngineError("InternalError", "hex_minimal: image test and invariant rank disagree");
    return minimal;
}

TorusPart torus_part(const HexGroup& g) {
    TorusPart out;
    ElemSet mask;
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (g.elements[i].is_torus()) {
            out.elements.push_back(g.elements[i]);
            mask.set(static_cast<int>(i));
        }
    }
    auto [sub, map] = g.group.subgroup_group(mask);
    out.invariants = sub.abelian_invariants();
    if (out.invariants.size() > 2)
        throw EngineError("InternalError", "torus_part: more than two invariant factors");
    return out;
}

namespace {

// integer 2x2 monomial-exponent matrix of the chart action w -> mu . w^M
struct ChartAction {
    std::array<std::array<long, 2>, 2> m;
    std::array<CycNum, 2> mu;
};

ChartAction chart_action(const HexElement& g) {
    // sigma exponent matrix: w'_i = x_{inv(i)} / x_{inv(0)} with x = (1,w1,w2)
    const auto& inv = s3_perms()[static_cast<size_t>(s3_inverse(g.sigma))];
    auto evec = [](int j) -> std::array<long, 2> {
        if (j == 0) return {0, 0};
        if (j == 1) return {1, 0};
        return {0, 1};
    };
    ChartAction a;
    for (int i = 1; i <= 2; ++i) {
        auto num = evec(inv[static_cast<size_t>(i)]);
        auto den = evec(inv[0]);
        a.m[static_cast<size_t>(i - 1)] = {num[0] - den[0], num[1] - den[1]};
    }
    if (g.swap) {
        for (auto& row : a.m)
            for (auto& x : row) x = -x;
    }
    a.mu = {torus_scalar(g.a1), torus_scalar(g.a2)};
    return a;
}

long det2(const std::array<std::array<long, 2>, 2>& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// Smith-style diagonalization U A V = D for 2x2 integer A with det != 0.
struct Snf {
    std::array<std::array<long, 2>, 2> u, v, d;
};

Snf snf2(std::array<std::array<long, 2>, 2> a) {
    Snf s;
    s.u = {{{1, 0}, {0, 1}}};
    s.v = {{{1, 0}, {0, 1}}};
    auto row_op = [&](int dst, int src, long f) {  // row dst -= f * row src
        for (int j = 0; j < 2; ++j) {
            a[static_cast<size_t>(dst)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(src)][static_cast<size_t>(j)];
            s.u[static_cast<size_t>(dst)][static_cast<size_t>(j)] -= f * s.u[static_cast<size_t>(src)][static_cast<size_t>(j)];
        }
    };
    auto col_op = [&](int dst, int src, long f) {  // col dst -= f * col src
        for (int i = 0; i < 2; ++i) {
            a[static_cast<size_t>(i)][static_cast<size_t>(dst)] -= f * a[static_cast<size_t>(i)][static_cast<size_t>(src)];
            s.v[static_cast<size_t>(i)][static_cast<size_t>(dst)] -= f * s.v[static_cast<size_t>(i)][static_cast<size_t>(src)];
        }
    };
    auto swap_rows = [&]() {
        std::swap(a[0], a[1]);
        std::swap(s.u[0], s.u[1]);
    };
    auto swap_cols = [&]() {
        for (int i = 0; i < 2; ++i) {
            std::swap(a[static_cast<size_t>(i)][0], a[static_cast<size_t>(i)][1]);
            std::swap(s.v[static_cast<size_t>(i)][0], s.v[static_cast<size_t>(i)][1]);
        }
    };
    for (int iter = 0; iter < 64; ++iter) {
        if (a[0][0] == 0) {
            if (a[1][0] != 0) swap_rows();
            else if (a[0][1] != 0) swap_cols();
            else if (a[1][1] != 0) { swap_rows(); swap_cols(); }
        }
        if (a[1][0] != 0) {
            row_op(1, 0, a[1][0] / a[0][0]);
            if (a[1][0] != 0) { swap_rows(); continue; }
        }
        if (a[0][1] != 0) {
            col_op(1, 0, a[0][1] / a[0][0]);
            if (a[0][1] != 0) { swap_cols(); continue; }
        }
        break;
    }
    s.d = a;
    return s;
}

std::vector<CycNum> roots_of_unity_solutions(const CycNum& c, long d) {
    // all z with z^d = c, c a root of unity
    auto ord = c.root_of_unity_order();
    if (!ord) throw invalid_parameter("chart solver: multiplier is not a root of unity");
    long m = *ord;
    long j = -1;
    for (long i = 0; i < m; ++i)
        if (CycNum::root_of_unity(m, i) == c) { j = i; break; }
    long ad = d < 0 ? -d : d;
    CycNum z0 = CycNum::root_of_unity(m * ad, d < 0 ? ((m * ad) - j) % (m * ad) : j);
    std::vector<CycNum> out;
    for (long t = 0; t < ad; ++t) out.push_back(z0 * CycNum::root_of_unity(ad, t));
    return out;
}

std::vector<HexPoint> chart_fixed_points(const HexElement& g) {
    ChartAction a = chart_action(g);
    std::array<std::array<long, 2>, 2> mi = a.m;
    mi[0][0] -= 1;
    mi[1][1] -= 1;
    if (det2(mi) == 0) return {};
    Snf s = snf2(mi);
    // solve w^(M-I) = mu^{-1}:  z^D = (mu^{-1})^U with w = z^V
    std::array<CycNum, 2> c = {a.mu[0].inverse(), a.mu[1].inverse()};
    auto pw = [](const CycNum& x, long e) { return x.pow(e); };
    std::array<CycNum, 2> cu = {pw(c[0], s.u[0][0]) * pw(c[1], s.u[0][1]),
                                pw(c[0], s.u[1][0]) * pw(c[1], s.u[1][1])};
    std::vector<HexPoint> out;
    for (const CycNum& z1 : roots_of_unity_solutions(cu[0], s.d[0][0]))
        for (const CycNum& z2 : roots_of_unity_solutions(cu[1], s.d[1][1])) {
            CycNum w1 = pw(z1, s.v[0][0]) * pw(z2, s.v[0][1]);
            CycNum w2 = pw(z1, s.v[1][0]) * pw(z2, s.v[1][1]);
            HexPoint p{ProjPoint({CycNum::one(), w1, w2}),
                       ProjPoint({CycNum::one(), w1.inverse(), w2.inverse()})};
            out.push_back(std::move(p));
        }
    return out;
}

}  // namespace

HexFixedPoints hex_fixed_points(const HexGroup& g) {
    HexFixedPoints out;
    if (g.group.order() == 1) {
        out.whole = true;
        return out;
    }
    if (!hex_minimal(g)) throw not_minimal("hex_fixed_points requires a minimal action");

    std::vector<HexPoint> candidates;
    bool solver_found = false;
    for (const auto& e : g.elements) {
        if (e.is_identity()) continue;
        ChartAction a = chart_action(e);
        std::array<std::array<long, 2>, 2> mi = a.m;
        mi[0][0] -= 1;
        mi[1][1] -= 1;
        if (det2(mi) == 0) continue;
        candidates = chart_fixed_points(e);
        solver_found = true;
        break;
    }
    if (!solver_found)
        throw EngineError("InternalError", "hex_fixed_points: no element with isolated chart fixed points");
    // vertices of the hexagon
    auto unit = [](int i) {
        std::vector<CycNum> v(3, CycNum::zero());
        v[static_cast<size_t>(i)] = CycNum::one();
        return ProjPoint(std::move(v));
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            candidates.push_back(HexPoint{unit(i), unit(j)});
        }

    std::vector<HexPoint> fixed;
    for (const auto& p : candidates) {
        if (!on_surface(p)) continue;
        bool ok = true;
        for (const auto& gen : g.gens) {
            if (!(hex_apply(gen, p) == p)) { ok = false; break; }
        }
        if (ok && std::find(fixed.begin(), fixed.end(), p) == fixed.end()) fixed.push_back(p);
    }
    std::sort(fixed.begin(), fixed.end());
    out.points = std::move(fixed);
    return out;
}

std::vector<HexElement> hex_section_gens(const std::string& image) {
    HexElement rot3 = hex_perm({1, 2, 0});       // 0->1->2->0
    HexElement rot3b = hex_perm({2, 0, 1});      // inverse 3-cycle
    HexElement t01 = hex_perm({1, 0, 2});        // transposition
    if (image == "C6") return {hex_compose(rot3b, hex_swap())};
    if (image == "S3") return {rot3, hex_compose(t01, hex_swap())};
    if (image == "D6") return {hex_compose(rot3b, hex_swap()), rot3, hex_compose(t01, hex_swap())};
    throw invalid_parameter("hex_section_gens: image must be C6, S3 or D6");
}

}  // namespace sarkisov

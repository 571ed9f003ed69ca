#include "sarkisov/quad_aut.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sarkisov {

std::string QuadAut::key() const {
    return (swap ? "s|" : "n|") + a.str() + "|" + b.str();
}

QuadAut quad_identity() { return QuadAut{Mat::identity(2), Mat::identity(2), false}; }

QuadAut quad_compose(const QuadAut& g, const QuadAut& h) {
    // action of g after h; validated pointwise by tests
    QuadAut r;
    r.a = g.a * (g.swap ? h.b : h.a);
    r.b = g.b * (g.swap ? h.a : h.b);
    r.swap = g.swap != h.swap;
    return r;
}

QuadAut quad_inverse(const QuadAut& g) {
    if (!g.swap) return QuadAut{g.a.inverse(), g.b.inverse(), false};
    // (x,y) -> (Ay, Bx) inverts to (x,y) -> (B^{-1} y, A^{-1} x)
    return QuadAut{g.b.inverse(), g.a.inverse(), true};
}

QuadPoint quad_apply(const QuadAut& g, const QuadPoint& p) {
    if (!g.swap) return QuadPoint{g.a.apply(p.x), g.b.apply(p.y)};
    return QuadPoint{g.a.apply(p.y), g.b.apply(p.x)};
}

std::string QuadLocusPart::str() const {
    switch (kind) {
        case Kind::Whole: return "whole";
        case Kind::Graph: return "graph" + graph.str();
        case Kind::Fiber1: return "fiber1@" + base.str();
        case Kind::Fiber2: return "fiber2@" + base.str();
        case Kind::Point: return "pt" + point.str();
    }
    return "?";
}

namespace {

QuadLocusPart whole_part() { return QuadLocusPart{QuadLocusPart::Kind::Whole, Mat(), ProjPoint(), QuadPoint()}; }
QuadLocusPart graph_part(Mat m) {
    QuadLocusPart p;
    p.kind = QuadLocusPart::Kind::Graph;
    p.graph = std::move(m);
    return p;
}
QuadLocusPart fiber1_part(ProjPoint b) {
    QuadLocusPart p;
    p.kind = QuadLocusPart::Kind::Fiber1;
    p.base = std::move(b);
    return p;
}
QuadLocusPart fiber2_part(ProjPoint b) {
    QuadLocusPart p;
    p.kind = QuadLocusPart::Kind::Fiber2;
    p.base = std::move(b);
    return p;
}
QuadLocusPart point_part(QuadPoint q) {
    QuadLocusPart p;
    p.kind = QuadLocusPart::Kind::Point;
    p.point = std::move(q);
    return p;
}

void push_unique(QuadLocus& l, QuadLocusPart part) {
    for (const auto& e : l)
        if (e.str() == part.str()) return;
    l.push_back(std::move(part));
}

QuadLocus intersect_parts(const QuadLocusPart& a, const QuadLocusPart& b);

}  // namespace

QuadLocus fixed_locus_of_element(const QuadAut& g) {
    using K = QuadLocusPart::Kind;
    QuadLocus out;
    if (!g.swap) {
        FixedSet1D fa = eigen_fixed_points(g.a);
        FixedSet1D fb = eigen_fixed_points(g.b);
        if (fa.all && fb.all) {
            out.push_back(whole_part());
        } else if (fa.all) {
            for (const auto& q : fb.points) out.push_back(fiber2_part(q));
        } else if (fb.all) {
            for (const auto& p : fa.points) out.push_back(fiber1_part(p));
        } else {
            for (const auto& p : fa.points)
                for (const auto& q : fb.points) out.push_back(point_part(QuadPoint{p, q}));
        }
        return out;
    }
    // swap element (A,B): fixed points are (x, Bx) with (AB)x ~ x
    Mat ab = g.a * g.b;
    if (ab.is_scalar()) {
        out.push_back(graph_part(g.b));
        return out;
    }
    for (const auto& x : eigen_fixed_points(ab).points)
        out.push_back(point_part(QuadPoint{x, g.b.apply(x)}));
    (void)K::Point;
    return out;
}

bool locus_contains(const QuadLocusPart& part, const QuadPoint& p) {
    using K = QuadLocusPart::Kind;
    switch (part.kind) {
        case K::Whole: return true;
        case K::Graph: return part.graph.apply(p.x) == p.y;
        case K::Fiber1: return p.x == part.base;
        case K::Fiber2: return p.y == part.base;
        case K::Point: return part.point == p;
    }
    return false;
}

namespace {

QuadLocus intersect_parts(const QuadLocusPart& a, const QuadLocusPart& b) {
    using K = QuadLocusPart::Kind;
    QuadLocus out;
    if (a.kind == K::Whole) return {b};
    if (b.kind == K::Whole) return {a};
    if (a.kind == K::Point) {
        if (locus_contains(b, a.point)) out.push_back(a);
        return out;
    }
    if (b.kind == K::Point) {
        if (locus_contains(a, b.point)) out.push_back(b);
        return out;
    }
    auto ordered = [&](K ka, K kb) { return a.kind == ka && b.kind == kb; };
    if (ordered(K::Graph, K::Graph)) {
        if ((a.graph.inverse() * b.graph).is_scalar()) {
            out.push_back(a);
        } else {
            // x with Ax ~ Bx, i.e. fixed points of A^{-1} B
            for (const auto& x : eigen_fixed_points(a.graph.inverse() * b.graph).points)
                out.push_back(point_part(QuadPoint{x, a.graph.apply(x)}));
        }
        return out;
    }
    if (ordered(K::Graph, K::Fiber1)) {
        out.push_back(point_part(QuadPoint{b.base, a.graph.apply(b.base)}));
        return out;
    }
    if (ordered(K::Fiber1, K::Graph)) return intersect_parts(b, a);
    if (ordered(K::Graph, K::Fiber2)) {
        ProjPoint x = a.graph.inverse().apply(b.base);
        out.push_back(point_part(QuadPoint{x, b.base}));
        return out;
    }
    if (ordered(K::Fiber2, K::Graph)) return intersect_parts(b, a);
    if (ordered(K::Fiber1, K::Fiber1)) {
        if (a.base == b.base) out.push_back(a);
        return out;
    }
    if (ordered(K::Fiber2, K::Fiber2)) {
        if (a.base == b.base) out.push_back(a);
        return out;
    }
    if (ordered(K::Fiber1, K::Fiber2)) {
        out.push_back(point_part(QuadPoint{a.base, b.base}));
        return out;
    }
    if (ordered(K::Fiber2, K::Fiber1)) {
        out.push_back(point_part(QuadPoint{b.base, a.base}));
        return out;
    }
    throw EngineError("InternalError", "intersect_parts: unhandled case");
}

}  // namespace

QuadLocus intersect_locus(const QuadLocus& a, const QuadLocus& b) {
    QuadLocus out;
    for (const auto& pa : a)
        for (const auto& pb : b)
            for (auto& part : intersect_parts(pa, pb)) push_unique(out, std::move(part));
    return out;
}

bool locus_is_empty(const QuadLocus& l) { return l.empty(); }

bool locus_has_curve(const QuadLocus& l) {
    using K = QuadLocusPart::Kind;
    for (const auto& p : l)
        if (p.kind != K::Point) return true;
    return false;
}

std::string locus_str(const QuadLocus& l) {
    if (l.empty()) return "empty";
    std::vector<std::string> parts;
    for (const auto& p : l) parts.push_back(p.str());
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
    return os.str();
}

QuadGroupElems close_quad_group(const std::vector<QuadAut>& gens, size_t cap) {
    auto mul = [](const QuadAut& a, const QuadAut& b) { return quad_compose(a, b); };
    auto key = [](const QuadAut& q) { return q.key(); };
    QuadGroupElems g;
    g.gens = gens;
    g.elements = close_elements(quad_identity(), gens, mul, key, cap);
    return g;
}

bool quad_is_minimal(const QuadGroupElems& g) {
    for (const auto& e : g.elements)
        if (e.swap) return true;
    return false;
}

QuadLocus quad_fixed_locus(const QuadGroupElems& g) {
    QuadLocus acc = {whole_part()};
    for (const auto& gen : g.gens) {
        acc = intersect_locus(acc, fixed_locus_of_element(gen));
        if (acc.empty()) return acc;
    }
    return acc;
}

std::vector<Mat> quad_kernel_k1(const QuadGroupElems& g) {
    std::vector<Mat> out;
    std::set<std::string> seen;
    for (const auto& e : g.elements) {
        if (e.swap || !e.b.is_scalar()) continue;
        Mat c = e.a.proj_canonical();
        if (seen.insert(c.str()).second) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Mat& x, const Mat& y) { return x.str() < y.str(); });
    return out;
}

std::vector<QuadPoint> quad_orbit(const QuadGroupElems& g, const QuadPoint& p, size_t cap) {
    std::vector<QuadPoint> orbit = {p};
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& gen : g.gens) {
            QuadPoint q = quad_apply(gen, orbit[i]);
            if (std::find(orbit.begin(), orbit.end(), q) == orbit.end()) {
                orbit.push_back(q);
                if (orbit.size() > cap) return orbit;
            }
        }
    }
    return orbit;
}

namespace {

struct ElemView {
    const QuadGroupElems* g;
    std::unordered_map<std::string, int> index;

    explicit ElemView(const QuadGroupElems& grp) : g(&grp) {
        for (size_t i = 0; i < grp.elements.size(); ++i) index.emplace(grp.elements[i].key(), static_cast<int>(i));
    }
    int mul(int a, int b) const {
        return index.at(quad_compose(g->elements[static_cast<size_t>(a)], g->elements[static_cast<size_t>(b)]).key());
    }
    int inv(int a) const { return index.at(quad_inverse(g->elements[static_cast<size_t>(a)]).key()); }
};

// Subgroup generated by a set of element ids: close under right
// multiplication by the generators only.
std::vector<int> id_closure(const ElemView& v, const std::vector<int>& gens) {
    std::set<int> seen = {0};
    std::vector<int> queue = {0};
    for (size_t i = 0; i < queue.size(); ++i)
        for (int t : gens) {
            int p = v.mul(queue[i], t);
            if (seen.insert(p).second) queue.push_back(p);
        }
    std::vector<int> out(seen.begin(), seen.end());
    return out;
}

// Small generating subset of a subgroup given by sorted element ids.
std::vector<int> generating_subset(const ElemView& v, const std::vector<int>& subgroup) {
    std::vector<int> gens;
    std::vector<int> cl = {0};
    for (int e : subgroup) {
        if (std::binary_search(cl.begin(), cl.end(), e)) continue;
        gens.push_back(e);
        cl = id_closure(v, gens);
        if (cl.size() == subgroup.size()) break;
    }
    return gens;
}

}  // namespace

std::vector<std::vector<int>> quad_index2_subgroups(const QuadGroupElems& g) {
    ElemView v(g);
    int n = static_cast<int>(g.elements.size());
    std::vector<int> gen_ids;
    for (const auto& gen : g.gens) gen_ids.push_back(v.index.at(gen.key()));
    // normal closure of generator squares and commutators: grow the local
    // generating set whenever conjugation leaves the current subgroup
    std::vector<int> local_gens;
    for (int a : gen_ids) {
        local_gens.push_back(v.mul(a, a));
        for (int b : gen_ids) local_gens.push_back(v.mul(v.mul(a, b), v.inv(v.mul(b, a))));
    }
    std::sort(local_gens.begin(), local_gens.end());
    local_gens.erase(std::unique(local_gens.begin(), local_gens.end()), local_gens.end());
    std::set<int> base_set = {0};
    std::vector<int> queue = {0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < queue.size(); ++i) {
            for (int t : local_gens) {
                int p = v.mul(queue[i], t);
                if (base_set.insert(p).second) queue.push_back(p);
            }
        }
        for (size_t i = 0; i < queue.size(); ++i) {
            for (int ggen : gen_ids) {
                int c = v.mul(v.mul(ggen, queue[i]), v.inv(ggen));
                if (!base_set.count(c)) {
                    base_set.insert(c);
                    queue.push_back(c);
                    local_gens.push_back(c);
                    grew = true;
                }
            }
        }
    }
    if (static_cast<int>(base_set.size()) == n) return {};
    // coset ids
    std::vector<int> base(base_set.begin(), base_set.end());
    std::vector<int> coset_of(static_cast<size_t>(n), -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset_of[static_cast<size_t>(e)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int b : base) coset_of[static_cast<size_t>(v.mul(e, b))] = id;
    }
    int q = static_cast<int>(reps.size());
    // quotient is elementary abelian 2: F2 coordinates via a greedy basis
    auto qmul = [&](int x, int y) { return coset_of[static_cast<size_t>(v.mul(reps[static_cast<size_t>(x)], reps[static_cast<size_t>(y)]))]; };
    std::vector<int> basis;
    std::set<int> span = {0};
    for (int x = 1; x < q; ++x) {
        if (span.count(x)) continue;
        basis.push_back(x);
        std::set<int> next = span;
        for (int s : span) next.insert(qmul(s, x));
        span = next;
    }
    int k = static_cast<int>(basis.size());
    std::vector<std::vector<int>> coords(static_cast<size_t>(q));
    for (int combo = 0; combo < (1 << k); ++combo) {
        int e = 0;
        for (int i = 0; i < k; ++i)
            if (combo & (1 << i)) e = qmul(e, basis[static_cast<size_t>(i)]);
        coords[static_cast<size_t>(e)].clear();
        for (int i = 0; i < k; ++i) coords[static_cast<size_t>(e)].push_back((combo >> i) & 1);
    }
    std::vector<std::vector<int>> out;
    for (int functional = 1; functional < (1 << k); ++functional) {
        std::vector<int> sub;
        for (int e = 0; e < n; ++e) {
            int c = coset_of[static_cast<size_t>(e)];
            int dot = 0;
            for (int i = 0; i < k; ++i) dot ^= ((functional >> i) & 1) & coords[static_cast<size_t>(c)][static_cast<size_t>(i)];
            if (dot == 0) sub.push_back(e);
        }
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool differ_in_both_coords(const QuadPoint& p, const QuadPoint& q) {
    return !(p.x == q.x) && !(p.y == q.y);
}

// Deterministic P^1 sample points.
ProjPoint p1_sample(int t) {
    if (t == 0) return ProjPoint::of({0, 1});
    return ProjPoint({CycNum::one(), CycNum::from_rational(Rational(t - 1))});
}

// Points of a curve part, parametrized deterministically.
QuadPoint curve_point(const QuadLocusPart& part, int t) {
    using K = QuadLocusPart::Kind;
    ProjPoint s = p1_sample(t);
    switch (part.kind) {
        case K::Graph: return QuadPoint{s, part.graph.apply(s)};
        case K::Fiber1: return QuadPoint{part.base, s};
        case K::Fiber2: return QuadPoint{s, part.base};
        case K::Whole: {
            // two-parameter family; diagonalize t deterministically
            ProjPoint s2 = p1_sample((t * 7 + 3) % 23);
            return QuadPoint{s, s2};
        }
        case K::Point: return part.point;
    }
    return part.point;
}

}  // namespace

std::optional<std::pair<QuadPoint, QuadPoint>> find_degree2_orbit_general_position(
    const QuadGroupElems& g) {
    std::vector<std::pair<QuadPoint, QuadPoint>> found;
    auto try_point = [&](const QuadPoint& p) -> std::optional<std::pair<QuadPoint, QuadPoint>> {
        auto orbit = quad_orbit(g, p, 3);
        if (orbit.size() != 2) return std::nullopt;
        if (!differ_in_both_coords(orbit[0], orbit[1])) return std::nullopt;
        QuadPoint a = std::min(orbit[0], orbit[1]);
        QuadPoint b = std::max(orbit[0], orbit[1]);
        return std::make_pair(a, b);
    };

    // canonical candidate set first
    ProjPoint zero = ProjPoint::of({1, 0}), inf = ProjPoint::of({0, 1});
    for (const QuadPoint& p : {QuadPoint{zero, zero}, QuadPoint{zero, inf}, QuadPoint{inf, zero},
                               QuadPoint{inf, inf}}) {
        if (auto r = try_point(p)) return r;
    }

    // exhaustive sweep: a 2-orbit consists of points fixed by an index-2
    // subgroup, so walk the common fixed loci of all of them
    for (const auto& sub : quad_index2_subgroups(g)) {
        ElemView v(g);
        auto gens = generating_subset(v, sub);
        QuadLocus locus = {QuadLocusPart{}};  // whole
        for (int e : gens)
            locus = intersect_locus(locus, fixed_locus_of_element(g.elements[static_cast<size_t>(e)]));
        for (const auto& part : locus) {
            if (part.kind == QuadLocusPart::Kind::Point) {
                if (auto r = try_point(part.point)) found.push_back(*r);
                continue;
            }
            // curve component: sample past the finite bad set (at most a few
            // points fail each exact condition, so 40 distinct samples decide)
            for (int t = 0; t < 40; ++t) {
                QuadPoint p = curve_point(part, t);
                if (auto r = try_point(p)) {
                    found.push_back(*r);
                    break;
                }
            }
        }
    }
    if (found.empty()) return std::nullopt;
    std::sort(found.begin(), found.end());
    return found.front();
}

bool degree4_orbit_general_position(const std::vector<QuadPoint>& orbit) {
    if (orbit.size() != 4) throw degenerate_input("degree4_orbit_general_position: need 4 points");
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            if (orbit[i] == orbit[j]) throw degenerate_input("degree4 orbit: repeated point");
            if (orbit[i].x == orbit[j].x || orbit[i].y == orbit[j].y) return false;
        }
    auto cx = cross_ratio(orbit[0].x, orbit[1].x, orbit[2].x, orbit[3].x);
    auto cy = cross_ratio(orbit[0].y, orbit[1].y, orbit[2].y, orbit[3].y);
    if (cx.infinite != cy.infinite) return true;
    if (cx.infinite) return false;
    return !(cx.value == cy.value);
}

bool exists_degree4_orbit_general_position(const QuadGroupElems& g) {
    auto mat = quad_materialize(g);
    ElemView v(g);
    long n = g.order();
    if (n % 4 != 0) return false;
    for (const auto& s : mat.group.subgroups()) {
        if (s.count() * 4 != n) continue;
        // map table ids back to element ids (the materialization preserves
        // element order through keys)
        std::vector<int> ids;
        for (int e : s.elements()) ids.push_back(v.index.at(mat.elements[static_cast<size_t>(e)].key()));
        auto gens = generating_subset(v, [&] {
            std::vector<int> sorted = ids;
            std::sort(sorted.begin(), sorted.end());
            return sorted;
        }());
        QuadLocus locus = {QuadLocusPart{}};
        for (int e : gens)
            locus = intersect_locus(locus, fixed_locus_of_element(g.elements[static_cast<size_t>(e)]));
        auto try_point = [&](const QuadPoint& p) {
            auto orbit = quad_orbit(g, p, 5);
            if (orbit.size() != 4) return false;
            // distinct points guaranteed; run the geometric test
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i + 1; j < 4; ++j)
                    if (orbit[i] == orbit[j]) return false;
            return degree4_orbit_general_position(orbit);
        };
        for (const auto& part : locus) {
            if (part.kind == QuadLocusPart::Kind::Point) {
                if (try_point(part.point)) return true;
                continue;
            }
            for (int t = 0; t < 60; ++t) {
                if (try_point(curve_point(part, t))) return true;
            }
        }
    }
    return false;
}

Materialized<QuadAut> quad_materialize(const QuadGroupElems& g, int cap) {
    auto mul = [](const QuadAut& a, const QuadAut& b) { return quad_compose(a, b); };
    auto key = [](const QuadAut& q) { return q.key(); };
    return materialize_group(quad_identity(), g.gens, mul, key, cap);
}

std::string quad_coarse_fingerprint(const QuadGroupElems& g) {
    ElemView v(g);
    std::map<long, long> hist;
    for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) {
        long ord = 1;
        int x = i;
        while (x != 0) {
            x = v.mul(x, i);
            ++ord;
        }
        hist[ord]++;
    }
    std::ostringstream os;
    os << "o" << g.order() << ";eo[";
    bool first = true;
    for (const auto& [o, c] : hist) {
        os << (first ? "" : ",") << o << "^" << c;
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace sarkisov

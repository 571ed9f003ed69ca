#include "sarkisov/finite_group.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace sarkisov {

int ElemSet::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

bool ElemSet::operator<(const ElemSet& o) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != o.w[i]) return w[i] < o.w[i];
    return false;
}

bool ElemSet::contains(const ElemSet& o) const {
    for (size_t i = 0; i < w.size(); ++i)
        if ((o.w[i] & ~w[i]) != 0) return false;
    return true;
}

ElemSet ElemSet::operator&(const ElemSet& o) const {
    ElemSet r;
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
}

ElemSet ElemSet::operator|(const ElemSet& o) const {
    ElemSet r;
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] | o.w[i];
    return r;
}

std::vector<int> ElemSet::elements() const {
    std::vector<int> out;
    for (int i = 0; i < kMaskWords * 64; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

size_t ElemSet::hash() const {
    size_t h = 1469598103934665603ULL;
    for (auto x : w) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "o" << order << ";ab[";
    for (size_t i = 0; i < abelianization.size(); ++i) os << (i ? "," : "") << abelianization[i];
    os << "];eo[";
    for (size_t i = 0; i < order_hist.size(); ++i)
        os << (i ? "," : "") << order_hist[i].first << "^" << order_hist[i].second;
    os << "];cc[";
    for (size_t i = 0; i < class_sizes.size(); ++i)
        os << (i ? "," : "") << class_sizes[i].first << "^" << class_sizes[i].second;
    os << "]";
    return os.str();
}

std::string IsoClass::str() const {
    switch (tag) {
        case IsoTag::Cyclic: return "C" + std::to_string(n);
        case IsoTag::Dihedral: return "D" + std::to_string(n);
        case IsoTag::Klein4: return "V4";
        case IsoTag::A4: return "A4";
        case IsoTag::S4: return "S4";
        case IsoTag::A5: return "A5";
        case IsoTag::S5: return "S5";
        case IsoTag::GA1F5: return "GA1F5";
        case IsoTag::ElemAbelian2: return "C2^" + std::to_string(n);
        case IsoTag::Other: return "Other(" + fp.str() + ")";
    }
    return "?";
}

FiniteGroup::FiniteGroup(int n, std::vector<uint16_t> table, std::vector<int> generators)
    : n_(n), table_(std::move(table)), gens_(std::move(generators)) {
    if (n_ <= 0 || table_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
        throw invalid_parameter("FiniteGroup: bad table size");
    // identity must be element 0
    for (int a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw invalid_parameter("FiniteGroup: element 0 is not the identity");
    }
    inv_.assign(static_cast<size_t>(n_), 0);
    for (int a = 0; a < n_; ++a) {
        bool found = false;
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == 0) {
                inv_[static_cast<size_t>(a)] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        }
        if (!found) throw invalid_parameter("FiniteGroup: element without inverse");
    }
    if (gens_.empty()) {
        for (int a = 0; a < n_; ++a) gens_.push_back(a);
    }
    if (closure(gens_).count() != n_)
        throw invalid_parameter("FiniteGroup: generators do not generate");
}

long FiniteGroup::element_order(int a) const {
    long ord = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

void FiniteGroup::validate() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw invalid_parameter("FiniteGroup: not associative");
}

ElemSet FiniteGroup::full_set() const {
    ElemSet s;
    for (int i = 0; i < n_; ++i) s.set(i);
    return s;
}

ElemSet FiniteGroup::closure(const std::vector<int>& elems) const {
    ElemSet mask;
    mask.set(0);
    std::vector<int> list = {0};
    std::vector<int> work;
    for (int e : elems) {
        if (!mask.test(e)) {
            mask.set(e);
            list.push_back(e);
            work.push_back(e);
        }
    }
    size_t head = 0;
    std::vector<int> queue = list;
    while (head < queue.size()) {
        int x = queue[head++];
        for (size_t i = 0; i < queue.size(); ++i) {
            int y = queue[i];
            for (int p : {mul(x, y), mul(y, x)}) {
                if (!mask.test(p)) {
                    mask.set(p);
                    queue.push_back(p);
                }
            }
        }
    }
    return mask;
}

bool FiniteGroup::is_subgroup(const ElemSet& s) const {
    if (!s.test(0)) return false;
    auto elems = s.elements();
    for (int a : elems) {
        if (!s.test(inv(a))) return false;
        for (int b : elems)
            if (!s.test(mul(a, b))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const ElemSet& s) const {
    auto elems = s.elements();
    for (int g = 0; g < n_; ++g)
        for (int x : elems)
            if (!s.test(conj(g, x))) return false;
    return true;
}

std::vector<ElemSet> FiniteGroup::subgroups() const {
    // BFS over <H, g>: every subgroup is reached from the trivial one by
    // adjoining one generator at a time.
    std::set<ElemSet> seen;
    ElemSet triv;
    triv.set(0);
    seen.insert(triv);
    // seed with all cyclic subgroups
    std::map<int, ElemSet> cyclic_of;  // element -> <element>
    for (int g = 1; g < n_; ++g) {
        ElemSet c = closure({g});
        cyclic_of[g] = c;
        seen.insert(c);
    }
    std::vector<ElemSet> queue(seen.begin(), seen.end());
    std::set<std::pair<ElemSet, ElemSet>> attempted;  // (subgroup, cyclic) pairs
    for (size_t head = 0; head < queue.size(); ++head) {
        ElemSet h = queue[head];
        if (h.count() == n_) continue;
        auto helems = h.elements();
        for (int g = 1; g < n_; ++g) {
            if (h.test(g)) continue;
            const ElemSet& cg = cyclic_of[g];
            if (h.contains(cg)) continue;
            auto key = std::make_pair(h, cg);
            if (!attempted.insert(key).second) continue;
            std::vector<int> gens = helems;
            gens.push_back(g);
            ElemSet j = closure(gens);
            if (seen.insert(j).second) queue.push_back(j);
        }
    }
    std::vector<ElemSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return out;
}

std::vector<ElemSet> FiniteGroup::normal_subgroups() const {
    std::vector<ElemSet> out;
    for (const auto& s : subgroups())
        if (is_normal(s)) out.push_back(s);
    return out;
}

ElemSet FiniteGroup::commutator_subgroup() const {
    std::vector<int> comms;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            int c = mul(mul(a, b), inv(mul(b, a)));
            if (c != 0) comms.push_back(c);
        }
    return closure(comms);
}

ElemSet FiniteGroup::center() const {
    ElemSet z;
    for (int a = 0; a < n_; ++a) {
        bool central = true;
        for (int b = 0; b < n_ && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.set(a);
    }
    return z;
}

std::vector<ElemSet> FiniteGroup::index2_subgroups() const {
    // Index-2 subgroups contain every square and every commutator.
    std::vector<int> gens;
    for (int a = 0; a < n_; ++a) {
        gens.push_back(mul(a, a));
        for (int b = a + 1; b < n_; ++b) gens.push_back(mul(mul(a, b), inv(mul(b, a))));
    }
    ElemSet base = closure(gens);
    if (base.count() == n_) return {};
    auto [v, cosets] = quotient(base);
    // v is elementary abelian of exponent 2; index-2 subgroups of G are
    // preimages of hyperplanes of v.
    int vn = v.order();
    // F2 basis of v
    std::vector<int> basis;
    ElemSet span;
    span.set(0);
    for (int x = 1; x < vn; ++x) {
        if (span.test(x)) continue;
        basis.push_back(x);
        auto se = span.elements();
        for (int s : se) span.set(v.mul(s, x));
    }
    int k = static_cast<int>(basis.size());
    // coordinates of each element of v over the F2 basis
    std::vector<std::vector<int>> coords(static_cast<size_t>(vn));
    for (int combo = 0; combo < (1 << k); ++combo) {
        int e = 0;
        for (int i = 0; i < k; ++i)
            if (combo & (1 << i)) e = v.mul(e, basis[static_cast<size_t>(i)]);
        coords[static_cast<size_t>(e)].clear();
        for (int i = 0; i < k; ++i) coords[static_cast<size_t>(e)].push_back((combo >> i) & 1);
    }
    std::vector<ElemSet> out;
    for (int functional = 1; functional < (1 << k); ++functional) {
        ElemSet sub;
        for (int g = 0; g < n_; ++g) {
            // coset of g
            int vx = -1;
            for (int x = 0; x < vn; ++x)
                if (cosets[static_cast<size_t>(x)].test(g)) { vx = x; break; }
            int dot = 0;
            for (int i = 0; i < k; ++i) dot ^= ((functional >> i) & 1) & coords[static_cast<size_t>(vx)][static_cast<size_t>(i)];
            if (dot == 0) sub.set(g);
        }
        out.push_back(sub);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroup::subgroup_group(const ElemSet& s) const {
    auto elems = s.elements();
    // identity first
    std::vector<int> map;
    map.push_back(0);
    for (int e : elems)
        if (e != 0) map.push_back(e);
    std::vector<int> pos(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < map.size(); ++i) pos[static_cast<size_t>(map[i])] = static_cast<int>(i);
    int m = static_cast<int>(map.size());
    std::vector<uint16_t> table(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int p = mul(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
            if (pos[static_cast<size_t>(p)] < 0) throw invalid_parameter("subgroup_group: not closed");
            table[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(pos[static_cast<size_t>(p)]);
        }
    return {FiniteGroup(m, std::move(table), {}), std::move(map)};
}

std::pair<FiniteGroup, std::vector<ElemSet>> FiniteGroup::quotient(const ElemSet& normal) const {
    if (!is_subgroup(normal) || !is_normal(normal))
        throw invalid_parameter("quotient: subgroup not normal");
    auto nelems = normal.elements();
    std::vector<int> coset_of(static_cast<size_t>(n_), -1);
    std::vector<ElemSet> cosets;
    std::vector<int> reps;
    for (int g = 0; g < n_; ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        ElemSet c;
        for (int x : nelems) c.set(mul(g, x));
        int idx = static_cast<int>(cosets.size());
        for (int e : c.elements()) coset_of[static_cast<size_t>(e)] = idx;
        cosets.push_back(c);
        reps.push_back(g);
    }
    int m = static_cast<int>(cosets.size());
    std::vector<uint16_t> table(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] = static_cast<uint16_t>(
                coset_of[static_cast<size_t>(mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))]);
    return {FiniteGroup(m, std::move(table), {}), std::move(cosets)};
}

std::vector<long> FiniteGroup::abelian_invariants() const {
    if (!is_abelian()) throw invalid_parameter("abelian_invariants: group not abelian");
    // Repeatedly split off a maximal-order cyclic factor.
    std::vector<long> factors;
    FiniteGroup g = *this;
    while (g.order() > 1) {
        long best_ord = 1;
        int best = 0;
        for (int a = 1; a < g.order(); ++a) {
            long o = g.element_order(a);
            if (o > best_ord) {
                best_ord = o;
                best = a;
            }
        }
        factors.push_back(best_ord);
        auto sub = g.closure({best});
        auto [q, cosets] = g.quotient(sub);
        g = q;
    }
    // invariant-factor convention: d1 | d2 | ... increasing
    std::sort(factors.begin(), factors.end());
    // successive maximal orders give the divisibility chain in reverse; the
    // sorted list of these orders is exactly the invariant factors.
    return factors;
}

Fingerprint FiniteGroup::fingerprint() const {
    Fingerprint fp;
    fp.order = n_;
    auto comm = commutator_subgroup();
    auto [ab, cosets] = quotient(comm);
    fp.abelianization = ab.abelian_invariants();

    std::map<long, long> hist;
    for (int a = 0; a < n_; ++a) hist[element_order(a)]++;
    fp.order_hist.assign(hist.begin(), hist.end());

    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::map<long, long> classes;
    for (int a = 0; a < n_; ++a) {
        if (seen[static_cast<size_t>(a)]) continue;
        ElemSet cls;
        for (int g = 0; g < n_; ++g) cls.set(conj(g, a));
        long size = 0;
        for (int e : cls.elements()) {
            seen[static_cast<size_t>(e)] = 1;
            ++size;
        }
        classes[size]++;
    }
    fp.class_sizes.assign(classes.begin(), classes.end());
    return fp;
}

// --- catalog constructors ---------------------------------------------------

FiniteGroup cyclic_group(long n) {
    if (n <= 0) throw invalid_parameter("cyclic_group: n must be positive");
    int m = static_cast<int>(n);
    std::vector<uint16_t> t(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] = static_cast<uint16_t>((a + b) % m);
    return FiniteGroup(m, std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

FiniteGroup dihedral_group(long n) {
    if (n <= 0) throw invalid_parameter("dihedral_group: n must be positive");
    // elements 0..n-1 are r^i, n..2n-1 are r^i s
    int m = static_cast<int>(2 * n);
    auto idx = [&](long rot, bool refl) {
        rot %= n;
        if (rot < 0) rot += n;
        return static_cast<int>(rot + (refl ? n : 0));
    };
    std::vector<uint16_t> t(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (long i = 0; i < 2 * n; ++i) {
        long ri = i % n;
        bool si = i >= n;
        for (long j = 0; j < 2 * n; ++j) {
            long rj = j % n;
            bool sj = j >= n;
            // (r^ri s^si)(r^rj s^sj) = r^(ri + (si ? -rj : rj)) s^(si^sj)
            long rot = ri + (si ? -rj : rj);
            t[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] =
                static_cast<uint16_t>(idx(rot, si != sj));
        }
    }
    std::vector<int> gens;
    if (n > 1) gens = {1, static_cast<int>(n)};
    else gens = {static_cast<int>(n)};
    return FiniteGroup(m, std::move(t), std::move(gens));
}

namespace {

struct Perm {
    std::array<int8_t, 5> p;
    static Perm id(int) {
        Perm x{};
        for (int i = 0; i < 5; ++i) x.p[static_cast<size_t>(i)] = static_cast<int8_t>(i);
        return x;
    }
    Perm then(const Perm& o) const {  // apply *this first, then o
        Perm r{};
        for (int i = 0; i < 5; ++i) r.p[static_cast<size_t>(i)] = o.p[static_cast<size_t>(p[static_cast<size_t>(i)])];
        return r;
    }
    std::string key() const {
        return std::string(p.begin(), p.end());
    }
};

FiniteGroup perm_group(const std::vector<Perm>& gens) {
    auto mul = [](const Perm& a, const Perm& b) { return b.then(a); };
    auto key = [](const Perm& x) { return x.key(); };
    auto mat = materialize_group(Perm::id(5), gens, mul, key, 240);
    return mat.group;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw invalid_parameter("symmetric_group: 1 <= n <= 5");
    if (n == 1) return cyclic_group(1);
    Perm t = Perm::id(5);
    std::swap(t.p[0], t.p[1]);
    Perm c = Perm::id(5);
    for (int i = 0; i < n; ++i) c.p[static_cast<size_t>(i)] = static_cast<int8_t>((i + 1) % n);
    return perm_group({t, c});
}

FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 5) throw invalid_parameter("alternating_group: 3 <= n <= 5");
    std::vector<Perm> gens;
    // 3-cycles (0 1 2), (0 1 3), ..., (0 1 n-1) generate A_n
    for (int k = 2; k < n; ++k) {
        Perm g = Perm::id(5);
        g.p[0] = 1;
        g.p[1] = static_cast<int8_t>(k);
        g.p[static_cast<size_t>(k)] = 0;
        gens.push_back(g);
    }
    return perm_group(gens);
}

FiniteGroup ga1f5_group() { return semidirect_cyclic(5, 4, 2); }

FiniteGroup elem_abelian_2(int rank) {
    if (rank < 0 || rank > 7) throw invalid_parameter("elem_abelian_2: rank out of range");
    int m = 1 << rank;
    std::vector<uint16_t> t(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] = static_cast<uint16_t>(a ^ b);
    std::vector<int> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(1 << i);
    return FiniteGroup(m, std::move(t), std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long n = static_cast<long>(a.order()) * b.order();
    if (n > 4096) throw order_bound_exceeded("direct_product too large");
    int m = static_cast<int>(n);
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<uint16_t> t(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[static_cast<size_t>(idx(x1, y1)) * static_cast<size_t>(m) + static_cast<size_t>(idx(x2, y2))] =
                        static_cast<uint16_t>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    return FiniteGroup(m, std::move(t), {});
}

FiniteGroup semidirect_cyclic(long n, long m, long action) {
    // elements (a, b) in Z_n x Z_m, (a1,b1)(a2,b2) = (a1 + action^b1 a2, b1+b2)
    if (n <= 0 || m <= 0) throw invalid_parameter("semidirect_cyclic: sizes");
    long size = n * m;
    if (size > 4096) throw order_bound_exceeded("semidirect_cyclic too large");
    // action^m = 1 mod n must hold for associativity
    long p = 1;
    for (long i = 0; i < m; ++i) p = (p * action) % n;
    if (p != 1 % n) throw invalid_parameter("semidirect_cyclic: action order does not divide m");
    auto powa = [&](long b) {
        long r = 1;
        for (long i = 0; i < b; ++i) r = (r * action) % n;
        return r;
    };
    int sz = static_cast<int>(size);
    auto idx = [&](long a, long b) { return static_cast<int>(a * m + b); };
    std::vector<uint16_t> t(static_cast<size_t>(sz) * static_cast<size_t>(sz));
    for (long a1 = 0; a1 < n; ++a1)
        for (long b1 = 0; b1 < m; ++b1)
            for (long a2 = 0; a2 < n; ++a2)
                for (long b2 = 0; b2 < m; ++b2)
                    t[static_cast<size_t>(idx(a1, b1)) * static_cast<size_t>(sz) + static_cast<size_t>(idx(a2, b2))] =
                        static_cast<uint16_t>(idx((a1 + powa(b1) * a2) % n, (b1 + b2) % m));
    return FiniteGroup(sz, std::move(t), {});
}

// --- recognition -------------------------------------------------------------

namespace {

struct CatalogEntry {
    IsoClass cls;
};

std::vector<CatalogEntry> catalog_for_order(long n) {
    static std::map<long, std::vector<CatalogEntry>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<CatalogEntry> out;
    auto add = [&](IsoTag tag, long param, const FiniteGroup& g) {
        IsoClass c;
        c.tag = tag;
        c.n = param;
        c.fp = g.fingerprint();
        out.push_back({c});
    };
    add(IsoTag::Cyclic, n, cyclic_group(n));
    if (n == 4) add(IsoTag::Klein4, 0, elem_abelian_2(2));
    if (n % 2 == 0 && n >= 6) add(IsoTag::Dihedral, n / 2, dihedral_group(n / 2));
    if (n >= 8 && (n & (n - 1)) == 0) {
        int rank = 0;
        long m = n;
        while (m > 1) { m >>= 1; ++rank; }
        add(IsoTag::ElemAbelian2, rank, elem_abelian_2(rank));
    }
    if (n == 12) add(IsoTag::A4, 0, alternating_group(4));
    if (n == 24) add(IsoTag::S4, 0, symmetric_group(4));
    if (n == 60) add(IsoTag::A5, 0, alternating_group(5));
    if (n == 120) add(IsoTag::S5, 0, symmetric_group(5));
    if (n == 20) add(IsoTag::GA1F5, 0, ga1f5_group());
    cache[n] = out;
    return out;
}

}  // namespace

IsoClass recognize(const FiniteGroup& g) {
    Fingerprint fp = g.fingerprint();
    for (const auto& entry : catalog_for_order(g.order())) {
        if (entry.cls.fp == fp) {
            IsoClass c = entry.cls;
            // canonical small aliases
            if (c.tag == IsoTag::Dihedral && c.n == 1) { c.tag = IsoTag::Cyclic; c.n = 2; }
            if (c.tag == IsoTag::Dihedral && c.n == 2) { c.tag = IsoTag::Klein4; c.n = 0; }
            if (c.tag == IsoTag::ElemAbelian2 && c.n == 2) { c.tag = IsoTag::Klein4; c.n = 0; }
            return c;
        }
    }
    IsoClass c;
    c.tag = IsoTag::Other;
    c.fp = fp;
    return c;
}

std::optional<long> min_faithful_linear_degree(const IsoClass& cls) {
    switch (cls.tag) {
        case IsoTag::Cyclic: return 1;
        case IsoTag::Klein4: return 2;
        case IsoTag::Dihedral: return 2;
        case IsoTag::ElemAbelian2: return cls.n;
        case IsoTag::A4: return 3;
        case IsoTag::S4: return 3;
        case IsoTag::A5: return 3;
        case IsoTag::S5: return 4;
        case IsoTag::GA1F5: return 4;
        case IsoTag::Other: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
    int n = g.order();
    // small generating set by greedy closure growth
    std::vector<int> gens;
    ElemSet cl;
    cl.set(0);
    for (int e = 1; e < n; ++e) {
        if (cl.test(e)) continue;
        gens.push_back(e);
        cl = g.closure(gens);
        if (cl.count() == n) break;
    }
    // words expressing every element over the generating set (BFS)
    std::vector<std::vector<int>> word(static_cast<size_t>(n));
    std::vector<char> known(static_cast<size_t>(n), 0);
    known[0] = 1;
    std::vector<int> queue = {0};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(x, gens[gi]);
            if (!known[static_cast<size_t>(y)]) {
                known[static_cast<size_t>(y)] = 1;
                word[static_cast<size_t>(y)] = word[static_cast<size_t>(x)];
                word[static_cast<size_t>(y)].push_back(static_cast<int>(gi));
                queue.push_back(y);
            }
        }
    }
    // backtrack over generator images of matching order
    std::vector<std::vector<int>> out;
    std::vector<int> images(gens.size(), -1);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == gens.size()) {
            // build the candidate map from words and verify it is bijective
            // and multiplicative
            std::vector<int> map(static_cast<size_t>(n));
            for (int e = 0; e < n; ++e) {
                int v = 0;
                for (int gi : word[static_cast<size_t>(e)]) v = g.mul(v, images[static_cast<size_t>(gi)]);
                map[static_cast<size_t>(e)] = v;
            }
            std::vector<char> hit(static_cast<size_t>(n), 0);
            for (int v : map) {
                if (hit[static_cast<size_t>(v)]) return;
                hit[static_cast<size_t>(v)] = 1;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (map[static_cast<size_t>(g.mul(a, b))] !=
                        g.mul(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
                        return;
            out.push_back(std::move(map));
            return;
        }
        long want = g.element_order(gens[idx]);
        for (int cand = 0; cand < n; ++cand) {
            if (g.element_order(cand) != want) continue;
            images[idx] = cand;
            rec(idx + 1);
        }
        images[idx] = -1;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_near_abelian_rank2_subgroup(const FiniteGroup& g) {
    auto check = [&](const FiniteGroup& h) {
        return h.is_abelian() && h.abelian_invariants().size() <= 2;
    };
    if (check(g)) return true;
    for (const auto& s : g.index2_subgroups()) {
        auto [h, map] = g.subgroup_group(s);
        if (check(h)) return true;
    }
    return false;
}

bool index_le_k_fixing_subgroup_exists(const FiniteGroup& g, int k) {
    if (k < 1 || k > 4) throw invalid_parameter("index_le_k_fixing_subgroup_exists: k in 1..4");
    for (const auto& s : g.subgroups()) {
        if (g.order() % s.count() != 0) continue;
        int index = g.order() / s.count();
        if (index > k) continue;
        auto [h, map] = g.subgroup_group(s);
        if (has_near_abelian_rank2_subgroup(h)) return true;
    }
    return false;
}

}  // namespace sarkisov

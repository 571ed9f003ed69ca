#include "sarkisov/goursat.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace sarkisov {

std::string GoursatDatum::str() const {
    std::ostringstream os;
    os << "F=" << f.str() << ",K#" << k_index << ",phi#" << phi_index;
    if (twist) os << ",c#" << *twist;
    return os.str();
}

GoursatContext::GoursatContext(const KleinLabel& f)
    : f_(std::make_shared<const KleinGroup>(realize(f))) {
    normals_ = f_->group.normal_subgroups();
    quotients_.resize(normals_.size());
}

std::string GoursatContext::kernel_name(int k_index) const {
    const auto& mask = normals_.at(static_cast<size_t>(k_index));
    if (mask.count() == 1) return "id";
    if (mask.count() == f_->group.order()) return "full";
    auto [sub, map] = f_->group.subgroup_group(mask);
    std::string base = recognize(sub).str();
    // disambiguate same-class kernels by canonical position
    int same = 0, pos = 0;
    for (int i = 0; i < static_cast<int>(normals_.size()); ++i) {
        const auto& m = normals_[static_cast<size_t>(i)];
        if (m.count() != mask.count()) continue;
        auto [s2, m2] = f_->group.subgroup_group(m);
        if (recognize(s2).str() == base) {
            if (i == k_index) pos = same;
            ++same;
        }
    }
    if (same <= 1) return base;
    return base + ":" + std::to_string(pos);
}

int GoursatContext::kernel_index_by_name(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(normals_.size()); ++i)
        if (kernel_name(i) == name) return i;
    throw invalid_parameter("unknown kernel name '" + name + "' for F=" + f_->label.str());
}

const GoursatContext::Quotient& GoursatContext::quotient(int k_index) const {
    auto& slot = quotients_.at(static_cast<size_t>(k_index));
    if (!slot) {
        Quotient q;
        auto [d, cosets] = f_->group.quotient(normals_[static_cast<size_t>(k_index)]);
        q.d = std::move(d);
        q.cosets = std::move(cosets);
        q.coset_of.assign(static_cast<size_t>(f_->group.order()), -1);
        for (int c = 0; c < static_cast<int>(q.cosets.size()); ++c)
            for (int e : q.cosets[static_cast<size_t>(c)].elements()) q.coset_of[static_cast<size_t>(e)] = c;
        q.autos = automorphisms(q.d);
        slot = std::move(q);
    }
    return *slot;
}

IsoClass GoursatContext::kernel_class(int k_index) const {
    auto [sub, map] = f_->group.subgroup_group(normals_.at(static_cast<size_t>(k_index)));
    return recognize(sub);
}

namespace {

std::map<std::string, std::shared_ptr<const GoursatContext>>& context_cache() {
    static std::map<std::string, std::shared_ptr<const GoursatContext>> cache;
    return cache;
}
std::mutex& context_mutex() {
    static std::mutex m;
    return m;
}

// Generator pairs (a, b) of G0 = F x_D F.
std::vector<std::pair<int, int>> g0_generator_pairs(const GoursatContext& ctx, const GoursatDatum& d) {
    const auto& f = ctx.f();
    const auto& q = ctx.quotient(d.k_index);
    const auto& phi = q.autos.at(static_cast<size_t>(d.phi_index));
    const auto& kmask = ctx.normal_subgroups()[static_cast<size_t>(d.k_index)];
    std::vector<std::pair<int, int>> pairs;
    for (int k : kmask.elements()) {
        if (k == 0) continue;
        pairs.emplace_back(k, 0);
        pairs.emplace_back(0, k);
    }
    // a section of phi on the generators of F: b with coset(b) = phi(coset(a))
    for (int a : f.group.generators()) {
        int target = phi[static_cast<size_t>(q.coset_of[static_cast<size_t>(a)])];
        int b = q.cosets[static_cast<size_t>(target)].elements().front();
        pairs.emplace_back(a, b);
    }
    return pairs;
}

}  // namespace

std::shared_ptr<const GoursatContext> goursat_context(const KleinLabel& f) {
    std::lock_guard<std::mutex> lock(context_mutex());
    auto& cache = context_cache();
    auto it = cache.find(f.str());
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const GoursatContext>(f);
    cache.emplace(f.str(), ctx);
    return ctx;
}

std::vector<int> valid_twist_reps(const GoursatContext& ctx, const GoursatDatum& d) {
    const auto& f = ctx.f();
    const auto& q = ctx.quotient(d.k_index);
    const auto& phi = q.autos.at(static_cast<size_t>(d.phi_index));
    auto pairs = g0_generator_pairs(ctx, d);
    std::vector<int> reps;
    std::vector<char> coset_seen(q.cosets.size(), 0);
    for (int c = 0; c < f.group.order(); ++c) {
        int cc = q.coset_of[static_cast<size_t>(c)];
        if (coset_seen[static_cast<size_t>(cc)]) continue;
        coset_seen[static_cast<size_t>(cc)] = 1;
        // (i) square condition: phi(coset(c)) = coset(c)
        if (phi[static_cast<size_t>(cc)] != cc) continue;
        // (ii) conjugation: (a,b) in G0  =>  (c b c^{-1}, a) in G0
        bool ok = true;
        for (const auto& [a, b] : pairs) {
            int cbc = f.group.conj(c, b);
            if (phi[static_cast<size_t>(q.coset_of[static_cast<size_t>(cbc)])] !=
                q.coset_of[static_cast<size_t>(a)]) {
                ok = false;
                break;
            }
        }
        if (ok) reps.push_back(c);
    }
    return reps;
}

BuiltQuad build_quad_group(const GoursatDatum& d) {
    auto ctx_ptr = goursat_context(d.f);
    const GoursatContext& ctx = *ctx_ptr;
    const auto& f = ctx.f();
    const auto& q = ctx.quotient(d.k_index);
    const auto& phi = q.autos.at(static_cast<size_t>(d.phi_index));

    auto twists = valid_twist_reps(ctx, d);
    int twist = -1;
    if (d.twist) {
        // accept any element whose K-coset matches a valid class
        int want = q.coset_of[static_cast<size_t>(*d.twist)];
        for (int t : twists)
            if (q.coset_of[static_cast<size_t>(t)] == want) twist = *d.twist;
        if (twist < 0)
            throw invalid_parameter("specified twist is not valid for " + d.str());
    } else {
        if (twists.empty())
            throw no_swap_extension("no valid swap twist for " + d.str());
        twist = twists.front();
    }

    BuiltQuad out;
    out.datum = d;
    out.datum.twist = twist;
    out.twist_used = twist;
    out.k_order = ctx.normal_subgroups()[static_cast<size_t>(d.k_index)].count();
    out.d_order = q.d.order();
    out.expected_order = 2 * out.k_order * out.k_order * out.d_order;

    // direct enumeration of G0 and the swap coset
    std::vector<QuadAut> elems;
    for (int a = 0; a < f.group.order(); ++a) {
        int target = phi[static_cast<size_t>(q.coset_of[static_cast<size_t>(a)])];
        for (int b : q.cosets[static_cast<size_t>(target)].elements())
            elems.push_back(QuadAut{f.mat(a), f.mat(b), false});
    }
    size_t g0_size = elems.size();
    QuadAut sigma{f.mat(twist), Mat::identity(2), true};
    for (size_t i = 0; i < g0_size; ++i) elems.push_back(quad_compose(sigma, elems[i]));

    QuadGroupElems grp;
    for (const auto& [a, b] : g0_generator_pairs(ctx, d))
        grp.gens.push_back(QuadAut{f.mat(a), f.mat(b), false});
    grp.gens.push_back(sigma);
    grp.elements = std::move(elems);
    if (static_cast<long>(grp.elements.size()) != out.expected_order)
        throw EngineError("InternalError", "built group order mismatch for " + d.str());
    out.group = std::move(grp);
    return out;
}

GoursatEnumeration enumerate_goursat(long max_n) {
    std::vector<KleinLabel> labels;
    for (long n = 2; n <= max_n; ++n) labels.push_back(KleinLabel::cyclic(n));
    labels.push_back(KleinLabel::dihedral(2));  // V4
    for (long n = 3; n <= max_n; ++n) labels.push_back(KleinLabel::dihedral(n));
    labels.push_back(KleinLabel::a4());
    labels.push_back(KleinLabel::s4());
    labels.push_back(KleinLabel::a5());

    GoursatEnumeration out;
    for (const auto& label : labels) {
        auto ctx = goursat_context(label);
        for (int k = 0; k < static_cast<int>(ctx->normal_subgroups().size()); ++k) {
            const auto& q = ctx->quotient(k);
            for (int p = 0; p < static_cast<int>(q.autos.size()); ++p) {
                GoursatDatum base{label, k, p, std::nullopt};
                auto twists = valid_twist_reps(*ctx, base);
                if (twists.empty()) {
                    out.no_swap_extension.push_back(base);
                    continue;
                }
                for (int t : twists) out.data.push_back(GoursatDatum{label, k, p, t});
            }
        }
    }
    return out;
}

QuadDecomposition decompose_quad(const QuadGroupElems& g) {
    QuadDecomposition out;
    std::vector<Mat> proj1;
    std::vector<Mat> k1 = quad_kernel_k1(g);
    std::map<std::string, Mat> p1set;
    for (const auto& e : g.elements) {
        if (e.swap) {
            out.has_swap = true;
            continue;
        }
        Mat c = e.a.proj_canonical();
        p1set.emplace(c.str(), c);
    }
    for (auto& [k, m] : p1set) proj1.push_back(m);

    auto mul = [](const Mat& a, const Mat& b) { return (a * b).proj_canonical(); };
    auto key = [](const Mat& m) { return m.str(); };
    auto f1 = materialize_group(Mat::identity(2), proj1, mul, key, 256);
    out.f1 = recognize(f1.group);
    out.f1_order = f1.group.order();
    if (k1.empty()) {
        out.k1 = recognize(cyclic_group(1));
        out.k1_order = 1;
    } else {
        auto k1g = materialize_group(Mat::identity(2), k1, mul, key, 256);
        out.k1 = recognize(k1g.group);
        out.k1_order = k1g.group.order();
    }
    return out;
}

}  // namespace sarkisov

#include "sarkisov/rigidity.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>

namespace sarkisov {

namespace {

// Small orbit of a plane point under the generated group, capped.
std::vector<ProjPoint> plane_orbit(const std::vector<Mat>& gens, const ProjPoint& p, size_t cap) {
    std::vector<ProjPoint> orbit = {p};
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& g : gens) {
            ProjPoint q = g.apply(orbit[i]);
            if (std::find(orbit.begin(), orbit.end(), q) == orbit.end()) {
                orbit.push_back(q);
                if (orbit.size() > cap) return orbit;
            }
        }
    }
    return orbit;
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    CycNum det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                 a[2] * (b[0] * c[1] - b[1] * c[0]);
    return det.is_zero();
}

// A degree-3 orbit of non-collinear points, searched among eigen-line
// candidates of the group elements.
std::optional<std::vector<ProjPoint>> find_degree3_orbit(const std::vector<Mat>& elements,
                                                         const std::vector<Mat>& gens) {
    for (const auto& m : elements) {
        if (m.is_scalar()) continue;
        for (const auto& el : eigen_lines(m)) {
            for (const auto& v : el.space) {
                ProjPoint p{std::vector<CycNum>(v)};
                auto orbit = plane_orbit(gens, p, 4);
                if (orbit.size() != 3) continue;
                if (!collinear(orbit[0], orbit[1], orbit[2])) {
                    std::sort(orbit.begin(), orbit.end());
                    return orbit;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

RigidityStatus decide_deg9(const std::vector<Mat>& gens, const EngineConfig& cfg) {
    for (const auto& g : gens)
        if (g.dim() != 3) throw invalid_parameter("decide_deg9: 3x3 generators expected");
    // materialize the projective group (errors out on infinite input)
    auto mul = [](const Mat& a, const Mat& b) { return a * b; };
    auto key = [](const Mat& m) { return m.str(); };
    std::vector<Mat> elements =
        close_elements(Mat::identity(3), gens, mul, key, static_cast<size_t>(cfg.max_order) + 1);
    if (static_cast<int>(elements.size()) > cfg.max_order)
        throw infinite_group("decide_deg9: closure exceeds the order cap");

    InvariantSubspace inv = common_invariant_subspace(gens);
    if (inv.kind != InvariantSubspace::Kind::None) {
        RigidityStatus s;
        s.kind = StatusKind::NotRigid;
        LinkWitness w;
        w.link_type = 1;
        w.centre_degree = 1;
        w.target = LinkTarget::ConicBundle;
        w.orbit = {inv.point.str()};
        s.witness = w;
        s.reason = inv.kind == InvariantSubspace::Kind::Dim1 ? "" : "invariant-line";
        s.citations = {
            "Sakovics: the plane is rigid only for transitive groups; an intransitive lift "
            "fixes a point or a line (Blichfeldt)"};
        return s;
    }

    // transitive: build the abstract group and test the two exceptions
    auto mat = materialize_group(Mat::identity(3), gens, [](const Mat& a, const Mat& b) {
        return (a * b).proj_canonical();
    }, key, cfg.max_order);
    IsoClass cls = recognize(mat.group);
    if (cls.is(IsoTag::A4) || cls.is(IsoTag::S4)) {
        RigidityStatus s;
        s.kind = StatusKind::NotRigid;
        LinkWitness w;
        w.link_type = 2;
        w.centre_degree = 3;
        w.target = LinkTarget::DP6;
        if (auto orbit = find_degree3_orbit(elements, gens)) {
            for (const auto& p : *orbit) w.orbit.push_back(p.str());
        }
        s.witness = w;
        s.citations = {"Sakovics: transitive A4 and S4 are the two non-rigid transitive cases"};
        return s;
    }
    RigidityStatus s;
    s.kind = StatusKind::Rigid;
    s.citations = {"Sakovics: transitive and not A4/S4 implies rigidity of the plane"};
    return s;
}

std::vector<std::pair<std::string, std::vector<Mat>>> stored_dp9_realizations() {
    CycNum w = CycNum::root_of_unity(3);
    Mat diag_c3 = Mat::diag({CycNum::one(), w, w.pow(2)});
    Mat cyc = Mat::of(3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    Mat d1 = Mat::of(3, {1, 0, 0, 0, -1, 0, 0, 0, -1});
    Mat d2 = Mat::of(3, {-1, 0, 0, 0, 1, 0, 0, 0, -1});
    Mat tr = Mat::of(3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    return {
        {"c3-diagonal", {diag_c3}},
        {"c3xc3", {diag_c3, cyc}},
        {"a4-standard", {d1, d2, cyc}},
        {"s4-standard", {d1, d2, cyc, tr}},
    };
}

}  // namespace sarkisov

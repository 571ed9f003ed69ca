#include "sarkisov/mobius.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>

namespace sarkisov {

long KleinLabel::group_order() const {
    switch (kind) {
        case Kind::Cyclic: return n;
        case Kind::Dihedral: return 2 * n;
        case Kind::A4: return 12;
        case Kind::S4: return 24;
        case Kind::A5: return 60;
    }
    return 0;
}

std::string KleinLabel::str() const {
    switch (kind) {
        case Kind::Cyclic: return "C" + std::to_string(n);
        case Kind::Dihedral: return "D" + std::to_string(n);
        case Kind::A4: return "A4";
        case Kind::S4: return "S4";
        case Kind::A5: return "A5";
    }
    return "?";
}

int KleinGroup::index_of(const Mat& m) const {
    Mat c = m.proj_canonical();
    for (size_t i = 0; i < mats.size(); ++i)
        if (mats[i].proj_canonical() == c) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<Mat> generator_matrices(const KleinLabel& label) {
    using K = KleinLabel::Kind;
    auto one = CycNum::one();
    auto minus_one = CycNum::from_rational(Rational(-1));
    switch (label.kind) {
        case K::Cyclic: {
            if (label.n < 1) throw invalid_parameter("realize: cyclic order must be >= 1");
            if (label.n == 1) return {Mat::identity(2)};
            return {Mat::diag({CycNum::root_of_unity(label.n), one})};
        }
        case K::Dihedral: {
            if (label.n < 1) throw invalid_parameter("realize: dihedral order must be >= 1");
            Mat s(2, {CycNum::zero(), one, one, CycNum::zero()});
            if (label.n == 1) return {s};
            return {Mat::diag({CycNum::root_of_unity(label.n), one}), s};
        }
        case K::A4: {
            CycNum i = CycNum::root_of_unity(4);
            Mat d1 = Mat::diag({one, minus_one});
            Mat d2(2, {CycNum::zero(), one, one, CycNum::zero()});
            Mat w(2, {one, i, one, -i});
            return {d1, d2, w};
        }
        case K::S4: {
            CycNum i = CycNum::root_of_unity(4);
            Mat d1 = Mat::diag({one, minus_one});
            Mat d2(2, {CycNum::zero(), one, one, CycNum::zero()});
            Mat w(2, {one, i, one, -i});
            Mat q = Mat::diag({one, i});
            return {d1, d2, w, q};
        }
        case K::A5: {
            CycNum e = CycNum::root_of_unity(5);
            Mat r = Mat::diag({e, one});
            Mat u(2, {CycNum::zero(), minus_one, one, CycNum::zero()});
            CycNum a = e - e.pow(4);
            CycNum b = e.pow(2) - e.pow(3);
            Mat t(2, {a, b, b, -a});
            return {r, u, t};
        }
    }
    throw invalid_parameter("realize: bad label");
}

IsoClass expected_class(const KleinLabel& label) {
    using K = KleinLabel::Kind;
    IsoClass c;
    switch (label.kind) {
        case K::Cyclic: c.tag = IsoTag::Cyclic; c.n = label.n; break;
        case K::Dihedral:
            if (label.n == 1) { c.tag = IsoTag::Cyclic; c.n = 2; }
            else if (label.n == 2) { c.tag = IsoTag::Klein4; }
            else { c.tag = IsoTag::Dihedral; c.n = label.n; }
            break;
        case K::A4: c.tag = IsoTag::A4; break;
        case K::S4: c.tag = IsoTag::S4; break;
        case K::A5: c.tag = IsoTag::A5; break;
    }
    return c;
}

}  // namespace

KleinGroup realize(const KleinLabel& label) {
    // Elements are stored as raw generator products: their determinants stay
    // rational times a root of unity, which the exact eigen solver needs.
    // Projective identification happens through the canonical-form key.
    auto gens = generator_matrices(label);
    auto mul = [](const Mat& a, const Mat& b) { return a * b; };
    auto key = [](const Mat& m) { return m.str(); };
    auto mat = materialize_group(Mat::identity(2), gens, mul, key, 256);

    KleinGroup k{label, std::move(gens), std::move(mat.group), std::move(mat.elements)};
    if (k.group.order() != label.group_order())
        throw EngineError("InternalError",
                          "realize(" + label.str() + "): got order " + std::to_string(k.group.order()));
    IsoClass expect = expected_class(label);
    IsoClass got = recognize(k.group);
    if (!(got.tag == expect.tag && (expect.tag != IsoTag::Cyclic || got.n == expect.n) &&
          (expect.tag != IsoTag::Dihedral || got.n == expect.n)))
        throw EngineError("InternalError", "realize(" + label.str() + "): recognized as " + got.str());
    return k;
}

FixedSet1D fixed_locus_on_P1(const Mat& g) { return eigen_fixed_points(g); }

P1FixedPoints group_fixed_points(const KleinGroup& k) {
    P1FixedPoints out;
    if (k.group.order() == 1) {
        out.whole = true;
        return out;
    }
    // Common fixed points of the generators; generators suffice for the group.
    bool seeded = false;
    for (const auto& g : k.gens) {
        FixedSet1D fs = eigen_fixed_points(g);
        if (fs.all) continue;
        if (!seeded) {
            out.points = fs.points;
            seeded = true;
            continue;
        }
        std::vector<ProjPoint> next;
        for (const auto& p : out.points)
            if (std::find(fs.points.begin(), fs.points.end(), p) != fs.points.end()) next.push_back(p);
        out.points = std::move(next);
        if (out.points.empty()) return out;
    }
    if (!seeded) out.whole = true;  // all generators scalar
    return out;
}

}  // namespace sarkisov

#include "sarkisov/rigidity.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sarkisov {

std::string status_kind_str(StatusKind k) {
    switch (k) {
        case StatusKind::Superrigid: return "Superrigid";
        case StatusKind::Rigid: return "Rigid";
        case StatusKind::NotRigid: return "NotRigid";
        case StatusKind::Unknown: return "Unknown";
    }
    return "?";
}

std::string link_target_str(LinkTarget t) {
    switch (t) {
        case LinkTarget::ConicBundle: return "ConicBundle";
        case LinkTarget::P2: return "P2";
        case LinkTarget::P1xP1: return "P1xP1";
        case LinkTarget::DP5: return "dP5";
        case LinkTarget::DP6: return "dP6";
        case LinkTarget::SelfBertini: return "SelfBertini";
        case LinkTarget::SelfGeiser: return "SelfGeiser";
    }
    return "?";
}

std::string RigidityStatus::str() const {
    std::ostringstream os;
    os << status_kind_str(kind);
    if (witness) {
        os << "(type " << (witness->link_type == 1 ? "I" : "II") << ", d=" << witness->centre_degree
           << ", -> " << link_target_str(witness->target) << ")";
    }
    if (!reason.empty()) os << "[" << reason << "]";
    return os.str();
}

namespace {

RigidityStatus make_status(StatusKind k, std::vector<std::string> citations,
                           std::optional<LinkWitness> w = std::nullopt, std::string reason = "") {
    RigidityStatus s;
    s.kind = k;
    s.witness = std::move(w);
    s.reason = std::move(reason);
    s.citations = std::move(citations);
    return s;
}

}  // namespace

RigidityStatus decide_low_degree(int degree, bool minimal) {
    if (degree < 1 || degree > 3) throw invalid_parameter("decide_low_degree: degree in 1..3");
    if (!minimal) throw not_minimal("decide_low_degree requires an established minimal action");
    if (degree == 1)
        return make_status(StatusKind::Superrigid,
                           {"Segre-Manin theorem: type II links on degree 1 are impossible"});
    return make_status(StatusKind::Rigid,
                       {"Segre-Manin theorem: only Bertini/Geiser self-links in degrees 2 and 3"});
}

RigidityStatus decide_deg4(FixedPointInfo info, const IsoClass& cls) {
    if (info == FixedPointInfo::Unknown) {
        auto deg = min_faithful_linear_degree(cls);
        if (deg && *deg > 2) {
            info = FixedPointInfo::No;  // no faithful 2-dim tangent representation
        } else if (cls.tag == IsoTag::Cyclic) {
            info = FixedPointInfo::Yes;  // holomorphic Lefschetz fixed-point formula
        }
    }
    if (info == FixedPointInfo::Yes) {
        LinkWitness w;
        w.link_type = 1;
        w.centre_degree = 1;
        w.target = LinkTarget::ConicBundle;
        return make_status(StatusKind::NotRigid,
                           {"Dolgachev-Iskovskikh link classification: a fixed point on a quartic "
                            "del Pezzo opens a type I link to a cubic-surface conic bundle"},
                           w);
    }
    if (info == FixedPointInfo::No)
        return make_status(StatusKind::Rigid,
                           {"no fixed point: only Bertini/Geiser self-links remain on degree 4"});
    return make_status(StatusKind::Unknown, {"degree-4 fixed-point oracle gap"}, std::nullopt,
                       "dp4-fixed-point-unknown");
}

RigidityStatus decide_deg5(const IsoClass& cls, const EngineConfig& cfg) {
    if (cls.is(IsoTag::A5) || cls.is(IsoTag::S5))
        return make_status(StatusKind::Superrigid,
                           {"A5/S5 have no faithful 2-dim representation and no index-3/4 "
                            "subgroups, so no link centre exists on the quintic del Pezzo"});
    if (cls.is(IsoTag::Cyclic, 5)) {
        LinkWitness w;
        w.link_type = 2;
        w.centre_degree = 1;
        w.target = LinkTarget::P2;
        return make_status(StatusKind::NotRigid,
                           {"C5 has exactly two fixed points off the (-1)-curves; the link "
                            "centred at one of them lands on the plane"},
                           w);
    }
    if (cls.is(IsoTag::Dihedral, 5)) {
        LinkWitness w;
        w.link_type = 2;
        w.centre_degree = 2;
        w.target = LinkTarget::P1xP1;
        return make_status(StatusKind::NotRigid,
                           {"the two C5-fixed points form a D5-orbit; the degree-2 link lands "
                            "on the quadric"},
                           w);
    }
    if (cls.is(IsoTag::GA1F5)) {
        if (cfg.ga1f5_not_rigid) {
            LinkWitness w;
            w.link_type = 2;
            w.centre_degree = 2;
            w.target = LinkTarget::P1xP1;
            return make_status(StatusKind::NotRigid,
                               {"policy: the C5 fixed-point pair is GA1(F5)-invariant"}, w);
        }
        return make_status(StatusKind::Unknown,
                           {"the quintic classification is silent on GA1(F5)"}, std::nullopt,
                           "ga1f5-policy-unknown");
    }
    throw not_minimal("degree-5 minimal groups are S5, A5, GA1F5, D5, C5 only");
}

RigidityStatus decide_deg6(const HexGroup& g) {
    if (!hex_minimal(g)) throw not_minimal("decide_deg6 requires a minimal hexagon action");
    TorusPart n = torus_part(g);
    auto fixed = hex_fixed_points(g);
    if (!n.trivial()) {
        if (!fixed.points.empty())
            throw witness_mismatch("degree 6: nontrivial torus part but a fixed point exists");
        return make_status(StatusKind::Rigid,
                           {"nontrivial torus part forces an empty fixed locus; all remaining "
                            "links are Bertini/Geiser or land on an isomorphic sextic"});
    }
    if (fixed.points.empty())
        throw witness_mismatch("degree 6: trivial torus part but no fixed point found");
    LinkWitness w;
    w.link_type = 2;
    w.centre_degree = 1;
    w.target = LinkTarget::P1xP1;
    for (const auto& p : fixed.points) w.orbit.push_back(p.str());
    return make_status(StatusKind::NotRigid,
                       {"trivial torus part fixes a point off the hexagon; the link centred "
                        "there lands on the quadric"},
                       w);
}

Dp4Embedding dp4_embedding_obstruction(const IsoClass& cls, long order) {
    static const long auto_orders[] = {16, 32, 64, 96, 160};
    bool divides_some = false;
    for (long a : auto_orders)
        if (order > 0 && a % order == 0) divides_some = true;
    if (!divides_some || order % 9 == 0) return Dp4Embedding::CannotEmbed;
    if (cls.is(IsoTag::Cyclic, 1) || cls.is(IsoTag::Cyclic, 2) || cls.is(IsoTag::Cyclic, 4) ||
        cls.tag == IsoTag::Klein4 ||
        (cls.tag == IsoTag::ElemAbelian2 && cls.n <= 4))
        return Dp4Embedding::CanEmbed;
    return Dp4Embedding::Unknown;
}

std::string deg8_row_str(Deg8Row r) {
    switch (r) {
        case Deg8Row::A: return "(a) cyclic";
        case Deg8Row::B: return "(b) dihedral/cyclic kernel";
        case Deg8Row::C: return "(c) V4 small kernel";
        case Deg8Row::RigidDihedral: return "rigid: dihedral kernel";
        case Deg8Row::RigidV4: return "rigid: V4 x V4";
        case Deg8Row::RigidExceptional: return "rigid: A4/S4";
        case Deg8Row::Superrigid: return "superrigid: A5";
    }
    return "?";
}

namespace {

bool iso_in_dp8_list(const IsoClass& c) {
    return c.is(IsoTag::Cyclic, 5) || c.is(IsoTag::Cyclic, 6) || c.is(IsoTag::Dihedral, 3) ||
           c.is(IsoTag::Dihedral, 5) || c.is(IsoTag::Dihedral, 6) || c.is(IsoTag::GA1F5) ||
           c.is(IsoTag::A5) || c.is(IsoTag::S5);
}

// Sample exact point from a fixed locus for witness output.
std::optional<QuadPoint> sample_fixed_point(const QuadGroupElems& g, const QuadLocus& locus) {
    std::vector<QuadPoint> pts;
    for (const auto& part : locus) {
        if (part.kind == QuadLocusPart::Kind::Point) pts.push_back(part.point);
    }
    std::sort(pts.begin(), pts.end());
    if (!pts.empty()) return pts.front();
    // curve components: any sampled point of a fixed curve is fixed
    for (const auto& part : locus) {
        if (part.kind == QuadLocusPart::Kind::Point) continue;
        for (int t = 0; t < 10; ++t) {
            QuadPoint p = [&] {
                switch (part.kind) {
                    case QuadLocusPart::Kind::Graph: {
                        ProjPoint s = t == 0 ? ProjPoint::of({0, 1})
                                             : ProjPoint({CycNum::one(),
                                                          CycNum::from_rational(Rational(t - 1))});
                        return QuadPoint{s, part.graph.apply(s)};
                    }
                    case QuadLocusPart::Kind::Fiber1: {
                        ProjPoint s = t == 0 ? ProjPoint::of({0, 1})
                                             : ProjPoint({CycNum::one(),
                                                          CycNum::from_rational(Rational(t - 1))});
                        return QuadPoint{part.base, s};
                    }
                    case QuadLocusPart::Kind::Fiber2: {
                        ProjPoint s = t == 0 ? ProjPoint::of({0, 1})
                                             : ProjPoint({CycNum::one(),
                                                          CycNum::from_rational(Rational(t - 1))});
                        return QuadPoint{s, part.base};
                    }
                    default: {
                        ProjPoint s = ProjPoint({CycNum::one(), CycNum::from_rational(Rational(t))});
                        return QuadPoint{s, s};
                    }
                }
            }();
            bool ok = true;
            for (const auto& gen : g.gens)
                if (!(quad_apply(gen, p) == p)) { ok = false; break; }
            if (ok) return p;
        }
    }
    return std::nullopt;
}

}  // namespace

Deg8Outcome decide_deg8(const QuadGroupElems& g, const EngineConfig& cfg) {
    if (!quad_is_minimal(g)) throw not_minimal("decide_deg8 requires a swap element");
    QuadDecomposition dec = decompose_quad(g);

    Deg8Outcome out;
    // table row from the Goursat shape
    if (dec.f1.tag == IsoTag::Cyclic) {
        out.row = Deg8Row::A;
    } else if (dec.f1.tag == IsoTag::Klein4) {
        out.row = dec.k1_order <= 2 ? Deg8Row::C : Deg8Row::RigidV4;
    } else if (dec.f1.tag == IsoTag::Dihedral) {
        bool cyclic_kernel = dec.k1.tag == IsoTag::Cyclic || dec.k1_order == 1;
        out.row = cyclic_kernel ? Deg8Row::B : Deg8Row::RigidDihedral;
    } else if (dec.f1.tag == IsoTag::A4 || dec.f1.tag == IsoTag::S4) {
        out.row = Deg8Row::RigidExceptional;
    } else if (dec.f1.tag == IsoTag::A5) {
        out.row = Deg8Row::Superrigid;
    } else {
        throw EngineError("InternalError", "decide_deg8: projection is not a Klein group");
    }
    out.table_expectation = (out.row == Deg8Row::A || out.row == Deg8Row::B || out.row == Deg8Row::C)
                                ? StatusKind::NotRigid
                                : (out.row == Deg8Row::Superrigid ? StatusKind::Superrigid
                                                                  : StatusKind::Rigid);

    // geometric side, all exact
    QuadLocus fixed = quad_fixed_locus(g);
    bool has_fixed = !locus_is_empty(fixed);
    auto orbit2 = find_degree2_orbit_general_position(g);

    std::ostringstream audit;
    audit << "fixed locus: " << locus_str(fixed) << "; degree-2 orbit: "
          << (orbit2 ? orbit2->first.str() + "&" + orbit2->second.str() : "none");

    StatusKind geom;
    std::optional<LinkWitness> witness;
    std::string unknown_reason;
    std::vector<std::string> citations;
    if (has_fixed) {
        geom = StatusKind::NotRigid;
        LinkWitness w;
        w.link_type = 2;
        w.centre_degree = 1;
        w.target = LinkTarget::P2;
        if (auto p = sample_fixed_point(g, fixed)) w.orbit = {p->str()};
        witness = w;
        citations.push_back("a fixed point on the quadric opens the degree-1 link to the plane");
    } else if (orbit2) {
        geom = StatusKind::NotRigid;
        LinkWitness w;
        w.link_type = 1;
        w.centre_degree = 2;
        w.target = LinkTarget::ConicBundle;
        w.orbit = {orbit2->first.str(), orbit2->second.str()};
        witness = w;
        citations.push_back(
            "a degree-2 orbit in general position opens the type I link to a conic bundle "
            "with two singular fibers");
    } else {
        // obstruction audit for a Rigid verdict
        bool list_ok;
        std::string list_note;
        if (g.order() > 120) {
            list_ok = true;
            list_note = "order " + std::to_string(g.order()) + " exceeds every listed group";
        } else {
            auto mat = quad_materialize(g, cfg.max_order);
            IsoClass cls = recognize(mat.group);
            list_ok = !iso_in_dp8_list(cls);
            list_note = "isomorphism type " + cls.str() + (list_ok ? " not in" : " IN") +
                        " the short-list";
        }
        // degree-4 centre obstruction
        bool dp4_ok;
        std::string dp4_note;
        IsoClass coarse;  // only used for the embedding table when materialized
        if (g.order() <= cfg.max_order) {
            auto mat = quad_materialize(g, cfg.max_order);
            coarse = recognize(mat.group);
        }
        Dp4Embedding emb = dp4_embedding_obstruction(coarse, g.order());
        if (emb == Dp4Embedding::CannotEmbed) {
            dp4_ok = true;
            dp4_note = "|G| obstruction against quartic automorphism groups";
        } else if (g.order() <= cfg.max_order) {
            dp4_ok = !exists_degree4_orbit_general_position(g);
            dp4_note = dp4_ok ? "no degree-4 orbit in general position"
                              : "a degree-4 orbit in general position exists";
        } else {
            dp4_ok = false;
            dp4_note = "degree-4 audit impossible above the materialization cap";
        }
        audit << "; list check: " << list_note << "; degree-4 check: " << dp4_note;

        if (list_ok && dp4_ok) {
            if (out.row == Deg8Row::Superrigid) {
                geom = StatusKind::Superrigid;
                citations.push_back(
                    "A5-type groups do not embed into automorphism groups of del Pezzo surfaces "
                    "of degree 1 or 2, so even Bertini/Geiser self-links are excluded");
            } else {
                geom = StatusKind::Rigid;
                citations.push_back(
                    "no fixed point, no degree-2 orbit in general position, no short-list "
                    "isomorphism, no degree-4 centre: only Bertini/Geiser self-links remain");
            }
        } else {
            geom = StatusKind::Unknown;
            unknown_reason = std::string("audit-inconclusive:") + (list_ok ? "" : "short-list ") +
                             (dp4_ok ? "" : "degree-4");
        }
    }

    out.audit = audit.str();
    bool table_notrigid = out.table_expectation == StatusKind::NotRigid;
    bool geom_notrigid = geom == StatusKind::NotRigid;
    if (table_notrigid != geom_notrigid) {
        out.witness_mismatch = true;
        std::ostringstream ms;
        ms << "table row " << deg8_row_str(out.row) << " expects "
           << status_kind_str(out.table_expectation) << " but the exact geometry gives "
           << status_kind_str(geom) << " (" << out.audit << ")";
        out.mismatch_detail = ms.str();
    }
    out.status = make_status(geom, std::move(citations), std::move(witness), unknown_reason);
    return out;
}

}  // namespace sarkisov

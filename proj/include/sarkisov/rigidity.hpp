#pragma once

#include "sarkisov/goursat.hpp"
#include "sarkisov/hex_surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sarkisov {

enum class StatusKind { Superrigid, Rigid, NotRigid, Unknown };

enum class LinkTarget { ConicBundle, P2, P1xP1, DP5, DP6, SelfBertini, SelfGeiser };

std::string status_kind_str(StatusKind k);
std::string link_target_str(LinkTarget t);

struct LinkWitness {
    int link_type = 2;  // 1 or 2 (Sarkisov type I / II)
    int centre_degree = 1;
    LinkTarget target = LinkTarget::P2;
    std::vector<std::string> orbit;  // exact printed points of the centre
};

struct RigidityStatus {
    StatusKind kind = StatusKind::Unknown;
    std::optional<LinkWitness> witness;  // present exactly when NotRigid
    std::string reason;                  // machine-readable tag for Unknown
    std::vector<std::string> citations;

    bool rigid_or_better() const {
        return kind == StatusKind::Rigid || kind == StatusKind::Superrigid;
    }
    std::string str() const;
};

struct EngineConfig {
    int max_order = kDefaultOrderCap;
    bool ga1f5_not_rigid = false;  // policy switch for the degree-5 GA1(F5) case
};

// --- degrees 1-5 -------------------------------------------------------------

// d in {1,2,3}: Superrigid for d = 1, Rigid otherwise; NotMinimal error when
// the caller has not established minimality.
RigidityStatus decide_low_degree(int degree, bool minimal);

enum class FixedPointInfo { Yes, No, Unknown };
RigidityStatus decide_deg4(FixedPointInfo info, const IsoClass& cls);

RigidityStatus decide_deg5(const IsoClass& cls, const EngineConfig& cfg = {});

// --- degree 6 ----------------------------------------------------------------

RigidityStatus decide_deg6(const HexGroup& g);

// --- degree 8 ----------------------------------------------------------------

enum class Dp4Embedding { CanEmbed, CannotEmbed, Unknown };
Dp4Embedding dp4_embedding_obstruction(const IsoClass& cls, long order);

// Table classes of the end-of-proof partition.
enum class Deg8Row { A, B, C, RigidDihedral, RigidV4, RigidExceptional, Superrigid };
std::string deg8_row_str(Deg8Row r);

struct Deg8Outcome {
    RigidityStatus status;
    Deg8Row row;                   // table expectation from the (F, K) shape
    StatusKind table_expectation;  // NotRigid / Rigid / Superrigid
    bool witness_mismatch = false; // table and geometric audit disagree
    std::string mismatch_detail;
    std::string audit;             // audit summary for reports
};

// Decides any minimal quadric group from its elements. The table verdict is
// keyed on the Goursat shape; every NotRigid answer carries an exactly
// verified witness and every Rigid answer passes the full obstruction audit.
// When the two routes disagree the outcome records a witness mismatch and the
// status follows the geometry.
Deg8Outcome decide_deg8(const QuadGroupElems& g, const EngineConfig& cfg = {});

// --- degree 9 ----------------------------------------------------------------

RigidityStatus decide_deg9(const std::vector<Mat>& gens, const EngineConfig& cfg = {});

// Stored plane realizations used by the verifier.
std::vector<std::pair<std::string, std::vector<Mat>>> stored_dp9_realizations();

}  // namespace sarkisov

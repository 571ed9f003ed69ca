#pragma once

#include "sarkisov/rigidity.hpp"

#include <string>
#include <vector>

namespace sarkisov {

struct UniverseOptions {
    bool deg5 = true;
    bool deg6 = true;
    bool deg8 = true;
    bool deg9 = true;
    long max_n = 12;     // Goursat factor bound for the quadric
    long torsion = 12;   // torus torsion bound for the sextic
    EngineConfig cfg;
};

// One enumerated minimal action (top level or subgroup).
struct ActionRecord {
    std::string id;      // deterministic descriptor
    StatusKind status = StatusKind::Unknown;
    std::string detail;  // witness / reason summary
};

struct VerificationReport {
    std::string universe;
    long groups_enumerated = 0;
    long pairs_checked = 0;

    std::vector<std::string> violations;           // main theorem: must stay empty
    std::vector<std::string> superrigidity_violations;
    std::vector<std::string> granularity_gaps;     // H superrigid, G only rigid
    std::vector<std::string> unknown_listings;
    std::vector<std::string> flagged_unknowns;     // could hide a violation
    std::vector<std::string> witness_mismatches;   // degree-8 table/geometry conflicts
    std::vector<std::string> kernel_violations;    // K1 monotonicity (degree 8)
    long kernel_pairs_checked = 0;
    std::vector<std::string> notes;

    double runtime_seconds = 0;

    bool ok() const { return violations.empty() && superrigidity_violations.empty(); }
    std::string text() const;
};

// Exhaustive verification over the enumerated universe: the subgroup
// monotonicity of rigidity, the superrigidity monotonicity, and the K1
// kernel monotonicity on the quadric. Deterministic output.
VerificationReport run_verification(const UniverseOptions& opts);

}  // namespace sarkisov

#pragma once

#include "sarkisov/mobius.hpp"
#include "sarkisov/quad_aut.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sarkisov {

// Fibred-product datum for a minimal quadric group: a Klein factor F, a
// normal subgroup K of F, an automorphism phi of D = F/K, and a swap twist
// (an element c of F; the swap coset is (c, id, swap) . G0). Kernels and
// automorphisms are referenced by their index in the canonical enumeration.
struct GoursatDatum {
    KleinLabel f;
    int k_index = 0;
    int phi_index = 0;
    std::optional<int> twist;  // element id in the realized F; nullopt = search

    std::string str() const;
};

// Realized datum with the ambient machinery resolved.
class GoursatContext {
public:
    explicit GoursatContext(const KleinLabel& f);

    const KleinGroup& f() const { return *f_; }
    const std::vector<ElemSet>& normal_subgroups() const { return normals_; }
    std::string kernel_name(int k_index) const;
    int kernel_index_by_name(const std::string& name) const;

    // quotient D = F/K and the canonical automorphism list of D
    struct Quotient {
        FiniteGroup d;
        std::vector<ElemSet> cosets;        // coset (as F-element set) of each D id
        std::vector<int> coset_of;          // F element -> D id
        std::vector<std::vector<int>> autos;  // automorphisms of D
    };
    const Quotient& quotient(int k_index) const;

    IsoClass kernel_class(int k_index) const;

private:
    std::shared_ptr<const KleinGroup> f_;
    std::vector<ElemSet> normals_;
    mutable std::vector<std::optional<Quotient>> quotients_;
};

std::shared_ptr<const GoursatContext> goursat_context(const KleinLabel& f);

// Twist validity: the swap coset normalizes G0 and its square lies in G0.
// Returns one representative per K-coset of F, in canonical element order.
std::vector<int> valid_twist_reps(const GoursatContext& ctx, const GoursatDatum& d);

struct BuiltQuad {
    GoursatDatum datum;
    int twist_used = 0;      // element id of F
    long k_order = 0, d_order = 0;
    long expected_order = 0; // 2 |K|^2 |D|
    QuadGroupElems group;
};

// Builds G = G0 + (c, id, swap) G0 with the first valid twist when the datum
// leaves it unspecified. Throws NoSwapExtension when no twist exists and
// InvalidParameter when a specified twist is invalid.
BuiltQuad build_quad_group(const GoursatDatum& d);

// All data over the acceptance universe F in {C_n, D_n : 2 <= n <= max_n},
// V4, A4, S4, A5, every normal K, every phi, every valid twist class. Data
// whose (F, K, phi) admit no twist are reported separately.
struct GoursatEnumeration {
    std::vector<GoursatDatum> data;                 // one per valid twist class
    std::vector<GoursatDatum> no_swap_extension;    // twist == nullopt entries
};
GoursatEnumeration enumerate_goursat(long max_n);

// Goursat shape of an arbitrary quadric group, recovered from its elements.
struct QuadDecomposition {
    bool has_swap = false;
    IsoClass f1;       // class of the first projection of G0
    IsoClass k1;       // class of K1 = {(a, id)}
    long f1_order = 0;
    long k1_order = 0;
};
QuadDecomposition decompose_quad(const QuadGroupElems& g);

}  // namespace sarkisov

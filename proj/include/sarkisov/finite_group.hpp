#pragma once

#include "sarkisov/errors.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sarkisov {

constexpr int kDefaultOrderCap = 240;
constexpr int kMaskWords = 4;  // 256 bits >= order cap

// Subset of element ids as a fixed-width bitmask.
struct ElemSet {
    std::array<uint64_t, kMaskWords> w{};

    void set(int i) { w[static_cast<size_t>(i) >> 6] |= (1ULL << (i & 63)); }
    bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    int count() const;
    bool operator==(const ElemSet& o) const { return w == o.w; }
    bool operator<(const ElemSet& o) const;
    bool contains(const ElemSet& o) const;  // o subset of *this
    ElemSet operator&(const ElemSet& o) const;
    ElemSet operator|(const ElemSet& o) const;
    std::vector<int> elements() const;
    size_t hash() const;
};

struct ElemSetHash {
    size_t operator()(const ElemSet& s) const { return s.hash(); }
};

// Isomorphism fingerprint: order, abelian invariants of the abelianization,
// element-order histogram, and conjugacy-class-size multiset.
struct Fingerprint {
    long order = 0;
    std::vector<long> abelianization;                 // invariant factors
    std::vector<std::pair<long, long>> order_hist;    // (element order, count)
    std::vector<std::pair<long, long>> class_sizes;   // (class size, count)

    bool operator==(const Fingerprint& o) const = default;
    std::string str() const;
};

enum class IsoTag { Cyclic, Dihedral, Klein4, A4, S4, A5, S5, GA1F5, ElemAbelian2, Other };

struct IsoClass {
    IsoTag tag = IsoTag::Other;
    long n = 0;  // Cyclic(n) / Dihedral(n) / ElemAbelian2 rank
    Fingerprint fp;

    bool is(IsoTag t) const { return tag == t; }
    bool is(IsoTag t, long m) const { return tag == t && n == m; }
    std::string str() const;
};

// Finite group as a dense multiplication table on ids 0..n-1 with id = 0.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(int n, std::vector<uint16_t> table, std::vector<int> generators);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    const std::vector<int>& generators() const { return gens_; }

    long element_order(int a) const;
    bool is_abelian() const;
    void validate() const;  // exhaustive associativity/identity/inverse check

    ElemSet full_set() const;
    ElemSet closure(const std::vector<int>& elems) const;
    bool is_subgroup(const ElemSet& s) const;
    bool is_normal(const ElemSet& s) const;

    // ALL subgroups, canonical order (by size, then mask).
    std::vector<ElemSet> subgroups() const;
    std::vector<ElemSet> normal_subgroups() const;
    std::vector<ElemSet> index2_subgroups() const;

    ElemSet commutator_subgroup() const;
    ElemSet center() const;

    // Group structure on a subgroup; map[i] = parent id of child element i.
    std::pair<FiniteGroup, std::vector<int>> subgroup_group(const ElemSet& s) const;
    // Quotient by a normal subgroup; cosets[i] = coset mask of quotient elt i.
    std::pair<FiniteGroup, std::vector<ElemSet>> quotient(const ElemSet& normal) const;

    // Invariant factors d1 | d2 | ... of an abelian group.
    std::vector<long> abelian_invariants() const;

    Fingerprint fingerprint() const;

private:
    int n_ = 0;
    std::vector<uint16_t> table_;
    std::vector<uint16_t> inv_;
    std::vector<int> gens_;
};

// --- catalog constructors -------------------------------------------------

FiniteGroup cyclic_group(long n);
FiniteGroup dihedral_group(long n);         // order 2n
FiniteGroup symmetric_group(int n);         // n <= 5
FiniteGroup alternating_group(int n);       // n <= 5
FiniteGroup ga1f5_group();                  // C5 : C4, order 20
FiniteGroup elem_abelian_2(int rank);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// C_n : C_m where the generator of C_m acts by x -> action * x mod n.
FiniteGroup semidirect_cyclic(long n, long m, long action);

// --- recognition -----------------------------------------------------------

IsoClass recognize(const FiniteGroup& g);
// Smallest degree of a faithful complex linear representation, from the
// stored catalog; nullopt for Other.
std::optional<long> min_faithful_linear_degree(const IsoClass& cls);

// All automorphisms, each as the image vector of every element; canonical
// order. Exponential in principle, fine for the catalog orders used here.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

// True iff some subgroup of index <= 2 is abelian with at most 2 invariant
// factors.
bool has_near_abelian_rank2_subgroup(const FiniteGroup& g);
// True iff some subgroup of index <= k has the property above.
bool index_le_k_fixing_subgroup_exists(const FiniteGroup& g, int k);

// --- generic materialization ----------------------------------------------

template <class Elem>
struct Materialized {
    FiniteGroup group;
    std::vector<Elem> elements;  // element i of group = elements[i]
};

// Closes the generators under multiplication and builds the dense table.
// identity must be the identity element; key() must be injective on values.
template <class Elem, class MulFn, class KeyFn>
Materialized<Elem> materialize_group(const Elem& identity, const std::vector<Elem>& gens,
                                     MulFn mul, KeyFn key, int cap = kDefaultOrderCap) {
    std::vector<Elem> elems = {identity};
    std::unordered_map<std::string, int> index{{key(identity), 0}};
    std::vector<int> gen_ids;
    for (const auto& g : gens) {
        auto k = key(g);
        auto it = index.find(k);
        if (it == index.end()) {
            index.emplace(k, static_cast<int>(elems.size()));
            gen_ids.push_back(static_cast<int>(elems.size()));
            elems.push_back(g);
        } else {
            gen_ids.push_back(it->second);
        }
    }
    for (size_t i = 0; i < elems.size(); ++i) {
        for (int gi : gen_ids) {
            Elem prod = mul(elems[i], elems[static_cast<size_t>(gi)]);
            auto k = key(prod);
            if (!index.count(k)) {
                if (static_cast<int>(elems.size()) >= cap)
                    throw order_bound_exceeded("group closure exceeds cap " + std::to_string(cap));
                index.emplace(k, static_cast<int>(elems.size()));
                elems.push_back(std::move(prod));
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<uint16_t> table(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Elem prod = mul(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
            auto it = index.find(key(prod));
            if (it == index.end()) throw EngineError("InternalError", "closure not closed");
            table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(it->second);
        }
    }
    return Materialized<Elem>{FiniteGroup(n, std::move(table), gen_ids), std::move(elems)};
}

// Element closure without the table, for groups above the materialization cap.
template <class Elem, class MulFn, class KeyFn>
std::vector<Elem> close_elements(const Elem& identity, const std::vector<Elem>& gens, MulFn mul,
                                 KeyFn key, size_t cap = 10000) {
    std::vector<Elem> elems = {identity};
    std::unordered_map<std::string, int> index{{key(identity), 0}};
    std::vector<Elem> gen_list;
    for (const auto& g : gens) {
        if (!index.count(key(g))) {
            index.emplace(key(g), static_cast<int>(elems.size()));
            elems.push_back(g);
        }
        gen_list.push_back(g);
    }
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gen_list) {
            Elem prod = mul(elems[i], g);
            auto k = key(prod);
            if (!index.count(k)) {
                if (elems.size() >= cap)
                    throw infinite_group("element closure exceeds cap " + std::to_string(cap));
                index.emplace(k, static_cast<int>(elems.size()));
                elems.push_back(std::move(prod));
            }
        }
    }
    return elems;
}

}  // namespace sarkisov

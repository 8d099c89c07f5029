// dynamics.hpp: orbit decomposition of J(P) under the reverse operator X,
// orbit statistics, and the closed-form evaluation of X on rank-level ideals
// of [m] x P and on the mixed signatures of [m] x K_{n-1}.
//
// The generic reverse operator is the source of truth; the closed forms are
// accelerators whose agreement with it is test-enforced, never assumed.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaone/poset.hpp"

namespace deltaone {

struct Orbit {
    const FinitePoset* poset = nullptr;
    std::vector<Bits> ideals;  // X-application order; ideals[0] = representative

    int size() const { return static_cast<int>(ideals.size()); }
    const Bits& representative() const { return ideals.front(); }
    std::vector<int> cardinality_cycle() const;  // |I| along the X-order
    std::vector<int> cardinalities() const;      // the same multiset, sorted
};

inline constexpr long long kDefaultOrbitCap = 1'000'000;

// Iterate X from the given lower ideal until it returns to the start, then
// rotate so the numerically smallest ideal comes first. Exceeding the cap
// signals a broken reverse operator.
Orbit orbit_of(const FinitePoset& p, const Bits& ideal, long long cap = kDefaultOrbitCap);

// All X-orbits of J(p), sorted by representative; sizes sum to |J(p)|.
std::vector<Orbit> orbit_decomposition(const FinitePoset& p, long long cap = kDefaultIdealCap);

// Number of orbit members with the given cardinality.
int lagrangian_count(const Orbit& o, int target);

// Type I: every member's profile consists of rank-level ideals of the base.
// Type II: no member's does. An orbit is never mixed; a mixed orbit throws.
enum class OrbitType { type_one, type_two };
OrbitType classify_orbit(const ChainProduct& cp, const Orbit& o);

// A run-length description of an ideal of [m] x P whose slices are rank-level
// ideals L_i (level blocks), optionally with one I_n / I_{n'} block for the
// K-poset case (mid block). Block order follows slice order, so levels are
// strictly decreasing.
struct SigBlock {
    enum class Kind { level, mid };
    Kind kind = Kind::level;
    int level = 0;        // level blocks: the i of L_i
    bool primed = false;  // mid blocks: I_{n'} instead of I_n
    int count = 1;

    static SigBlock L(int level, int count = 1) { return {Kind::level, level, false, count}; }
    static SigBlock I(bool primed = false, int count = 1) { return {Kind::mid, 0, primed, count}; }
    friend bool operator==(const SigBlock&, const SigBlock&) = default;
};

struct RankSignature {
    std::vector<SigBlock> blocks;

    int total() const;
    std::string to_string() const;  // e.g. "(L5, I4', L0^2)"
    friend bool operator==(const RankSignature&, const RankSignature&) = default;
};

// X on a rank-level signature of [m] x P with d rank levels:
// (L_d^{n0}, L_{i1}^{n1}, ..., L_{is}^{ns}) |->
// (L_{i1+1}^{n0+1}, L_{i2+1}^{n1}, ..., L_{is+1}^{n_{s-1}}, L_0^{ns-1}),
// with the all-full signature mapping to the all-empty one.
RankSignature rowmotion_product_closed_form(const RankSignature& sig, int d, int m);

// X on a mixed signature of [m] x K_{n-1}
// (L_{2n-1}^{n0}, L_{i1}^{n1}, ..., L_{is}^{ns}, I_n^{m0}, L_{j1}^{m1}, ..., L_{jt}^{mt}):
// the I/I' block flips and absorbs the shift when j1 < n-1 (or there is no
// lower block); when j1 = n-1 an L_n block is emitted in front of it instead.
// The I_{n'} variant is the mirror image (n <-> n').
RankSignature rowmotion_kposet_closed_form(const RankSignature& sig, int n, int m);

struct KChainProduct {
    KPoset k;
    ChainProduct prod;
};
KChainProduct k_chain_product(int m, int n);

// Signature <-> ideal conversion. signature_of_ideal returns nullopt when a
// slice is not rank-level (or, for the K variant, not I_n / I_{n'} either).
Bits assemble_signature(const ChainProduct& cp, const RankSignature& sig);
Bits assemble_signature(const KChainProduct& kp, const RankSignature& sig);
std::optional<RankSignature> signature_of_ideal(const ChainProduct& cp, const Bits& ideal);
std::optional<RankSignature> signature_of_ideal(const KChainProduct& kp, const Bits& ideal);

}  // namespace deltaone

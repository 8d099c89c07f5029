// poset.hpp: finite posets with canonical element labels, lower ideals,
// antichains, the reverse operator X and its inverse X', ideal enumeration,
// isomorphism testing and DOT export.
//
// Conventions used throughout:
//   * elements are 0-based indices into labels(); an ideal/antichain is a Bits
//     value over that index set;
//   * X(I) is the lower ideal generated by the minimal elements of the
//     complement of I; X'(I) inverts it (max of the complement of the upper
//     closure of the maximal elements of I);
//   * enumeration lists every lower ideal once, sorted by cardinality and then
//     by the numeric value of the bit-vector;
//   * a rank function, when one exists, gives minimal elements rank 1 and
//     increases by exactly 1 along covers. Rank-level ideals L_i collect the
//     elements of rank <= i.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltaone/bits.hpp"

namespace deltaone {

// Thrown when ideal enumeration or orbit iteration exceeds its cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class FinitePoset {
public:
    FinitePoset() = default;  // the empty poset

    // Build from an explicit cover list. Rejects duplicate labels, cycles and
    // transitively implied cover pairs.
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   std::vector<std::pair<int, int>> covers);

    // Build from a full order relation: below[y] = {x : x <= y} (reflexive).
    // Validates that the relation is a partial order, then reduces it to covers.
    static FinitePoset from_order(std::vector<std::string> labels,
                                  const std::vector<Bits>& below);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int x, int y) const { return below_[y].test(x); }
    const Bits& down_set(int x) const { return below_[x]; }  // {y : y <= x}
    const Bits& up_set(int x) const { return above_[x]; }    // {y : y >= x}
    const Bits& lower_cover_set(int x) const { return lower_covers_[x]; }
    const Bits& upper_cover_set(int x) const { return upper_covers_[x]; }
    Bits all() const { return Bits::full(n_); }

    // Rank data; present only when the poset is graded.
    bool graded() const { return n_ == 0 || !rank_.empty(); }
    int rank(int x) const { return rank_[x]; }
    int levels() const { return levels_; }       // d = number of rank levels
    Bits rank_level_ideal(int i) const;          // L_i for 0 <= i <= levels()

    bool is_ideal(const Bits& s) const;
    bool is_antichain(const Bits& s) const;

    Bits minimal_of(const Bits& s) const;
    Bits maximal_of(const Bits& s) const;
    Bits down_closure(const Bits& s) const;
    Bits up_closure(const Bits& s) const;

    // Indices in an order compatible with <= (used by the ideal enumerator).
    const std::vector<int>& linear_extension() const { return topo_; }

private:
    void finish();  // closure, cover validation, rank derivation, topo order

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bits> below_, above_;
    std::vector<Bits> lower_covers_, upper_covers_;
    std::vector<int> rank_;  // empty when not graded
    int levels_ = 0;
    std::vector<int> topo_;
};

// Standard constructions. Disjoint union and ordinal sum relabel their
// operands "a.<label>" / "b.<label>" so canonical labels stay unique.
FinitePoset chain(int m);
FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q);
FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q);
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

// K_{n-1} = [n-1] (+) ([1] | [1]) (+) [n-1]: a 2n-element chain with a doubled
// middle level, labeled 1..n-1, n, n', n+1..2n-1. ideal_n / ideal_np are the
// two n-element ideals I_n = {1..n} and I_{n'} = {1..n-1, n'}.
struct KPoset {
    int n = 0;
    FinitePoset poset;
    Bits ideal_n, ideal_np;
};
KPoset kposet(int n);

// Mutually inverse bijections between antichains and lower ideals.
Bits ideal_of_antichain(const FinitePoset& p, const Bits& antichain);
Bits antichain_of_ideal(const FinitePoset& p, const Bits& ideal);

// The reverse operator X(I) = ideal of min(P \ I) and its inverse X'.
Bits reverse_operator(const FinitePoset& p, const Bits& ideal);
Bits reverse_operator_prime(const FinitePoset& p, const Bits& ideal);

inline constexpr long long kDefaultIdealCap = 1'000'000;

// All lower ideals in canonical order. Throws CapExceeded past the cap.
std::vector<Bits> enumerate_lower_ideals(const FinitePoset& p,
                                         long long cap = kDefaultIdealCap);

// [m] x P with the chain as first factor; element (i,a), 1 <= i <= m, sits at
// index (i-1)*|P| + a. An ideal corresponds to the nested profile
// (I_1, ..., I_m), I_m <= ... <= I_1, with I_i = {a : (i,a) in ideal}.
struct ChainProduct {
    int m = 0;
    FinitePoset base;
    FinitePoset poset;

    Bits slice(const Bits& ideal, int i) const;          // I_i, 1-based
    std::vector<Bits> profile(const Bits& ideal) const;  // validated
    Bits assemble(const std::vector<Bits>& profile) const;
};
ChainProduct chain_product(int m, const FinitePoset& base);

// Order isomorphism p -> q as an index mapping, or nullopt. Deterministic.
std::optional<std::vector<int>> is_isomorphic(const FinitePoset& p,
                                              const FinitePoset& q);

// Hasse diagram as a DOT digraph; byte-stable for a fixed poset.
std::string to_dot(const FinitePoset& p, std::string_view graph_name = "hasse");

}  // namespace deltaone

// verify.hpp: per-type machine check of the orbit-structure clauses on the
// extra-special weight poset Delta(1) (orbit count, uniform orbit size,
// Lagrangian uniqueness, the size identity), plus the structural
// identifications and counting formulas. Reports are machine-readable first
// (JSON); the table rendering is derived from the same struct.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "deltaone/dynamics.hpp"
#include "deltaone/rootsys.hpp"

namespace deltaone {

enum class IsoClaim { pass, fail, not_applicable };

struct VerificationReport {
    SimpleType type{Family::A, 1};
    int h = 0, hstar = 0;
    int long_simple_count = 0;
    int delta1_size = 0;
    long long ideal_count = 0;
    int orbit_count = 0;
    std::vector<int> orbit_sizes;                       // canonical orbit order
    std::vector<int> lagrangian_per_orbit;              // members of size hstar-2
    std::vector<std::vector<int>> orbit_cardinalities;  // sorted, per orbit
    bool h_even = false;

    bool clause_orbit_count = false;    // orbit count == |Pi_l|
    bool clause_orbit_size = false;     // every orbit size == h-1
    bool clause_size_identity = false;  // |Delta(1)| == 2*hstar - 4
    std::optional<bool> clause_lagrangian;  // engaged only when h is even
    IsoClaim iso_claim = IsoClaim::not_applicable;

    bool asserted_pass() const;
};

VerificationReport verify_type(SimpleType t, long long cap = kDefaultIdealCap);

// Certify the classical product/chain identifications of Delta(1) (and the
// G_2 chain); E and F types have no claimed product form.
IsoClaim verify_iso_claims(SimpleType t);

// |Delta(1)| = 2*hstar - 4, plus the closed J-counts for the B and D families.
bool verify_counting_identities(SimpleType t, long long cap = kDefaultIdealCap);

// A_1..A_max, B_2..B_max, C_2..C_max, D_4..D_{max+1}, E6, E7, E8, F4, G2.
std::vector<SimpleType> sweep_types(int max_rank = 8);

nlohmann::ordered_json report_json(const VerificationReport& r);
std::string report_table(const std::vector<VerificationReport>& rs);
bool all_asserted_pass(const std::vector<VerificationReport>& rs);

}  // namespace deltaone

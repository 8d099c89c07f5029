#include "deltaone/verify.hpp"

#include <algorithm>
#include <sstream>

namespace deltaone {

bool VerificationReport::asserted_pass() const {
    if (!clause_orbit_count || !clause_orbit_size || !clause_size_identity) return false;
    if (clause_lagrangian.has_value() && !*clause_lagrangian) return false;
    if (iso_claim == IsoClaim::fail) return false;
    return true;
}

VerificationReport verify_type(SimpleType t, long long cap) {
    const RootSystem rs = RootSystem::build(t);
    const Delta1 d1 = rs.delta_one();
    const std::vector<Orbit> orbits = orbit_decomposition(d1.poset, cap);

    VerificationReport r;
    r.type = t;
    r.h = rs.h();
    r.hstar = rs.hstar();
    r.long_simple_count = rs.long_simple_count();
    r.delta1_size = d1.poset.size();
    r.orbit_count = static_cast<int>(orbits.size());
    long long total = 0;
    for (const Orbit& o : orbits) {
        r.orbit_sizes.push_back(o.size());
        r.lagrangian_per_orbit.push_back(lagrangian_count(o, rs.hstar() - 2));
        r.orbit_cardinalities.push_back(o.cardinalities());
        total += o.size();
    }
    r.ideal_count = total;
    r.h_even = r.h % 2 == 0;

    r.clause_orbit_count = r.orbit_count == r.long_simple_count;
    r.clause_orbit_size =
        std::all_of(r.orbit_sizes.begin(), r.orbit_sizes.end(),
                    [&](int s) { return s == r.h - 1; });
    r.clause_size_identity = r.delta1_size == 2 * r.hstar - 4;
    if (r.h_even)
        r.clause_lagrangian = std::all_of(r.lagrangian_per_orbit.begin(),
                                          r.lagrangian_per_orbit.end(),
                                          [](int c) { return c == 1; });
    r.iso_claim = verify_iso_claims(t);
    return r;
}

IsoClaim verify_iso_claims(SimpleType t) {
    const int n = t.rank;
    std::optional<FinitePoset> target;
    switch (t.family) {
        case Family::A:
            target = disjoint_union(chain(n - 1), chain(n - 1));
            break;
        case Family::B:
            target = product(chain(2), chain(2 * n - 3));
            break;
        case Family::C:
            target = chain(2 * n - 2);
            break;
        case Family::D:
            target = product(chain(2), kposet(n - 2).poset);
            break;
        case Family::G:
            target = chain(4);
            break;
        case Family::E:
        case Family::F:
            return IsoClaim::not_applicable;
    }
    const Delta1 d1 = RootSystem::build(t).delta_one();
    return is_isomorphic(d1.poset, *target) ? IsoClaim::pass : IsoClaim::fail;
}

bool verify_counting_identities(SimpleType t, long long cap) {
    const RootSystem rs = RootSystem::build(t);
    const Delta1 d1 = rs.delta_one();
    if (d1.poset.size() != 2 * rs.hstar() - 4) return false;
    const long long j = static_cast<long long>(enumerate_lower_ideals(d1.poset, cap).size());
    const int n = t.rank;
    if (t.family == Family::B) return j == static_cast<long long>(n - 1) * (2 * n - 1);
    if (t.family == Family::D) return j == static_cast<long long>(n) * (2 * n - 3);  // (n'+2)(2n'+1), n' = n-2
    return true;
}

std::vector<SimpleType> sweep_types(int max_rank) {
    if (max_rank < 1) throw std::invalid_argument("sweep: max rank must be >= 1");
    std::vector<SimpleType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back(make_simple_type(Family::A, n));
    for (int n = 2; n <= max_rank; ++n) types.push_back(make_simple_type(Family::B, n));
    for (int n = 2; n <= max_rank; ++n) types.push_back(make_simple_type(Family::C, n));
    for (int n = 4; n <= max_rank + 1; ++n) types.push_back(make_simple_type(Family::D, n));
    for (int n = 6; n <= 8; ++n) types.push_back(make_simple_type(Family::E, n));
    types.push_back(make_simple_type(Family::F, 4));
    types.push_back(make_simple_type(Family::G, 2));
    return types;
}

namespace {

const char* iso_claim_name(IsoClaim c) {
    switch (c) {
        case IsoClaim::pass: return "pass";
        case IsoClaim::fail: return "fail";
        case IsoClaim::not_applicable: return "not-applicable";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["type"] = r.type.to_string();
    j["family"] = std::string(1, static_cast<char>(r.type.family));
    j["rank"] = r.type.rank;
    j["h"] = r.h;
    j["hstar"] = r.hstar;
    j["longSimpleCount"] = r.long_simple_count;
    j["delta1Size"] = r.delta1_size;
    j["idealCount"] = r.ideal_count;
    j["orbitCount"] = r.orbit_count;
    j["orbitSizes"] = r.orbit_sizes;
    j["lagrangianPerOrbit"] = r.lagrangian_per_orbit;
    j["orbitCardinalities"] = r.orbit_cardinalities;
    j["hEven"] = r.h_even;
    nlohmann::ordered_json clauses;
    clauses["orbit-count"] = r.clause_orbit_count;
    clauses["orbit-size"] = r.clause_orbit_size;
    if (r.clause_lagrangian.has_value())
        clauses["lagrangian-uniqueness"] = *r.clause_lagrangian;
    else
        clauses["lagrangian-uniqueness"] = nullptr;
    clauses["size-identity"] = r.clause_size_identity;
    j["clauses"] = clauses;
    j["isoClaim"] = iso_claim_name(r.iso_claim);
    j["pass"] = r.asserted_pass();
    return j;
}

std::string report_table(const std::vector<VerificationReport>& rs) {
    std::ostringstream out;
    auto cell = [&](const std::string& s, int w) {
        out << s;
        for (int k = static_cast<int>(s.size()); k < w; ++k) out << ' ';
    };
    cell("type", 6);
    cell("h", 4);
    cell("h*", 4);
    cell("|Pi_l|", 8);
    cell("|D1|", 6);
    cell("|J|", 6);
    cell("orbits", 8);
    cell("size", 6);
    cell("lagr", 6);
    cell("iso", 16);
    out << "result\n";
    for (const VerificationReport& r : rs) {
        cell(r.type.to_string(), 6);
        cell(std::to_string(r.h), 4);
        cell(std::to_string(r.hstar), 4);
        cell(std::to_string(r.long_simple_count), 8);
        cell(std::to_string(r.delta1_size), 6);
        cell(std::to_string(r.ideal_count), 6);
        cell(std::to_string(r.orbit_count), 8);
        std::vector<int> sizes = r.orbit_sizes;
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        std::string size_s;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            size_s += (i ? "," : "") + std::to_string(sizes[i]);
        if (sizes.empty()) size_s = "-";
        cell(size_s, 6);
        std::string lag = "-";
        if (r.clause_lagrangian.has_value()) lag = *r.clause_lagrangian ? "1" : "!";
        cell(lag, 6);
        cell(iso_claim_name(r.iso_claim), 16);
        out << (r.asserted_pass() ? "ok" : "FAIL") << "\n";
    }
    return out.str();
}

bool all_asserted_pass(const std::vector<VerificationReport>& rs) {
    return std::all_of(rs.begin(), rs.end(),
                       [](const VerificationReport& r) { return r.asserted_pass(); });
}

}  // namespace deltaone

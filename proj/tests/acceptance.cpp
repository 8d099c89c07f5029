// Acceptance suite: runs every exit criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all criteria pass.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "deltaone/dynamics.hpp"
#include "deltaone/rootsys.hpp"
#include "deltaone/verify.hpp"
#include "test_util.hpp"

using namespace deltaone;
using testutil::level_pair_ideal;

namespace {

struct Gate {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

using B = SigBlock;

Bits k_ideal(const KChainProduct& kp, std::vector<SigBlock> slices) {
    RankSignature s;
    for (const SigBlock& b : slices) {
        if (!s.blocks.empty() && s.blocks.back() == b)
            s.blocks.back().count += 1;
        else
            s.blocks.push_back(b);
    }
    return assemble_signature(kp, s);
}

void criterion_1(Gate& g) {
    for (SimpleType t : sweep_types(8)) {
        VerificationReport r = verify_type(t);
        g.require(r.orbit_count == r.long_simple_count,
                  t.to_string() + ": orbit count " + std::to_string(r.orbit_count) +
                      " != |Pi_l| " + std::to_string(r.long_simple_count));
        for (int s : r.orbit_sizes)
            g.require(s == r.h - 1, t.to_string() + ": orbit size " + std::to_string(s) +
                                        " != h-1 = " + std::to_string(r.h - 1));
        if (r.h_even)
            for (int c : r.lagrangian_per_orbit)
                g.require(c == 1, t.to_string() + ": " + std::to_string(c) +
                                      " ideals of cardinality hstar-2 in an orbit");
    }
}

void criterion_2(Gate& g) {
    const std::vector<std::vector<int>> published = {
        {0, 1, 2, 4, 7, 10, 13, 16, 18, 19, 20}, {3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17},
        {3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17}, {7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13},
        {5, 6, 6, 8, 9, 10, 11, 12, 14, 14, 15}, {7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13}};
    VerificationReport r = verify_type(make_simple_type(Family::E, 6));
    std::vector<std::vector<int>> got = r.orbit_cardinalities, want = published;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    g.require(got == want, "E6 orbit cardinality multisets do not match the fixture");
    for (const auto& cards : got)
        g.require(std::count(cards.begin(), cards.end(), 10) == 1,
                  "an E6 orbit does not have exactly one ideal of cardinality 10");
}

void criterion_3(Gate& g) {
    for (SimpleType t : sweep_types(8)) {
        RootSystem rs = RootSystem::build(t);
        g.require(rs.delta_one().poset.size() == 2 * rs.hstar() - 4,
                  t.to_string() + ": |Delta(1)| != 2*hstar - 4");
    }
    for (int n = 2; n <= 8; ++n) {
        long long jb =
            static_cast<long long>(enumerate_lower_ideals(product(chain(2), chain(2 * n - 3))).size());
        g.require(jb == static_cast<long long>(n - 1) * (2 * n - 1),
                  "|J([2]x[" + std::to_string(2 * n - 3) + "])| != (n-1)(2n-1) at n=" +
                      std::to_string(n));
        long long jk =
            static_cast<long long>(enumerate_lower_ideals(product(chain(2), kposet(n).poset)).size());
        g.require(jk == static_cast<long long>(n + 2) * (2 * n + 1),
                  "|J([2]xK)| != (n+2)(2n+1) at n=" + std::to_string(n));
    }
}

std::vector<FinitePoset> criterion_4_posets() {
    std::vector<FinitePoset> ps;
    for (SimpleType t : sweep_types(8)) ps.push_back(RootSystem::build(t).delta_one().poset);
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 7; ++d) ps.push_back(product(chain(m), chain(d)));
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 5; ++n) ps.push_back(product(chain(m), kposet(n).poset));
    return ps;
}

void criterion_4(Gate& g) {
    for (const FinitePoset& p : criterion_4_posets())
        for (const Bits& ideal : enumerate_lower_ideals(p)) {
            g.require(reverse_operator_prime(p, reverse_operator(p, ideal)) == ideal,
                      "X'(X(I)) != I on a " + std::to_string(p.size()) + "-element poset");
            g.require(reverse_operator(p, reverse_operator_prime(p, ideal)) == ideal,
                      "X(X'(I)) != I on a " + std::to_string(p.size()) + "-element poset");
        }
}

void criterion_5(Gate& g) {
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 7; ++d) {
            ChainProduct cp = chain_product(m, chain(d));
            for (const Bits& ideal : enumerate_lower_ideals(cp.poset)) {
                auto s = signature_of_ideal(cp, ideal);
                g.require(s.has_value(), "chain-product ideal without a signature");
                if (!s) continue;
                Bits closed = assemble_signature(cp, rowmotion_product_closed_form(*s, d, m));
                g.require(closed == reverse_operator(cp.poset, ideal),
                          "rank-level closed form disagrees with X on " + s->to_string() +
                              " (m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")");
            }
            for (const Orbit& o : orbit_decomposition(cp.poset)) {
                try {
                    classify_orbit(cp, o);
                } catch (const std::exception&) {
                    g.require(false, "orbit type is not constant on [m]x[d]");
                }
            }
        }

    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 5; ++n) {
            KChainProduct kp = k_chain_product(m, n);
            for (const Bits& ideal : enumerate_lower_ideals(kp.prod.poset)) {
                auto s = signature_of_ideal(kp, ideal);
                g.require(s.has_value(), "K-product ideal without a signature");
                if (!s) continue;
                bool mid = std::any_of(s->blocks.begin(), s->blocks.end(), [](const SigBlock& b) {
                    return b.kind == SigBlock::Kind::mid;
                });
                RankSignature image = mid ? rowmotion_kposet_closed_form(*s, n, m)
                                          : rowmotion_product_closed_form(*s, 2 * n - 1, m);
                bool image_mid =
                    std::any_of(image.blocks.begin(), image.blocks.end(), [](const SigBlock& b) {
                        return b.kind == SigBlock::Kind::mid;
                    });
                Bits closed = image_mid ? assemble_signature(kp, image)
                                        : assemble_signature(kp.prod, image);
                g.require(closed == reverse_operator(kp.prod.poset, ideal),
                          "K closed form disagrees with X on " + s->to_string() +
                              " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
            }
            for (const Orbit& o : orbit_decomposition(kp.prod.poset)) {
                try {
                    classify_orbit(kp.prod, o);
                } catch (const std::exception&) {
                    g.require(false, "orbit type is not constant on [m]xK");
                }
            }
        }
}

void criterion_6(Gate& g) {
    for (int n = 3; n <= 8; ++n) {
        ChainProduct cp = chain_product(2, chain(2 * n - 3));
        for (int i = 1; i <= n - 2; ++i) {
            Bits cur = level_pair_ideal(cp, {i, i});
            auto check_at = [&](int lo, int hi, const char* tag) {
                g.require(cur == level_pair_ideal(cp, {lo, hi}),
                          std::string("chain waypoint ") + tag + " failed at n=" +
                              std::to_string(n) + ", i=" + std::to_string(i));
            };
            cur = reverse_operator(cp.poset, cur);
            check_at(i + 1, 0, "1");
            for (int k = 0; k < 2 * n - 4 - i; ++k) cur = reverse_operator(cp.poset, cur);
            check_at(2 * n - 3, 2 * n - 4 - i, "2");
            cur = reverse_operator(cp.poset, cur);
            check_at(2 * n - 3 - i, 2 * n - 3 - i, "3");
            cur = reverse_operator(cp.poset, cur);
            check_at(2 * n - 2 - i, 0, "4");
            for (int k = 0; k < i - 1; ++k) cur = reverse_operator(cp.poset, cur);
            check_at(2 * n - 3, i - 1, "5");
            cur = reverse_operator(cp.poset, cur);
            check_at(i, i, "6");
        }
    }

    for (int n = 2; n <= 7; ++n) {
        KChainProduct kp = k_chain_product(2, n);
        const FinitePoset& p = kp.prod.poset;
        Bits cur = k_ideal(kp, {B::I(), B::I()});
        auto fail = [&](const char* tag) {
            g.require(false, std::string("K chain waypoint ") + tag + " failed at n=" +
                                 std::to_string(n));
        };
        cur = reverse_operator(p, cur);
        if (!(cur == k_ideal(kp, {B::I(true), B::L(0)}))) fail("1");
        for (int k = 0; k < n - 1; ++k) cur = reverse_operator(p, cur);
        Bits want_mid = (n % 2 == 0) ? k_ideal(kp, {B::I(false), B::L(n - 1)})
                                     : k_ideal(kp, {B::I(true), B::L(n - 1)});
        if (!(cur == want_mid)) fail("2");
        cur = reverse_operator(p, cur);
        Bits want_ln = (n % 2 == 0) ? k_ideal(kp, {B::L(n), B::I(false)})
                                    : k_ideal(kp, {B::L(n), B::I(true)});
        if (!(cur == want_ln)) fail("3");
        for (int k = 0; k < n - 1; ++k) cur = reverse_operator(p, cur);
        if (!(cur == k_ideal(kp, {B::L(2 * n - 1), B::I(true)}))) fail("4");
        cur = reverse_operator(p, cur);
        if (!(cur == k_ideal(kp, {B::I(), B::I()}))) fail("5");
    }
}

void criterion_7(Gate& g) {
    auto certify = [&](SimpleType t, const FinitePoset& target, const char* what) {
        FinitePoset d1 = RootSystem::build(t).delta_one().poset;
        g.require(is_isomorphic(d1, target).has_value(),
                  t.to_string() + ": Delta(1) not isomorphic to " + what);
    };
    for (int n = 1; n <= 8; ++n)
        certify(make_simple_type(Family::A, n), disjoint_union(chain(n - 1), chain(n - 1)),
                "[n-1] | [n-1]");
    for (int n = 2; n <= 8; ++n)
        certify(make_simple_type(Family::B, n), product(chain(2), chain(2 * n - 3)),
                "[2] x [2n-3]");
    for (int n = 2; n <= 8; ++n)
        certify(make_simple_type(Family::C, n), chain(2 * n - 2), "[2n-2]");
    for (int n = 4; n <= 9; ++n)
        certify(make_simple_type(Family::D, n), product(chain(2), kposet(n - 2).poset),
                "[2] x K_{n-3}");
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<void(Gate&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {"orbit-structure sweep: orbit count = |Pi_l|, sizes = h-1, unique half-size ideal (h even)",
         criterion_1},
        {"E6 orbit cardinality distributions match the published lists", criterion_2},
        {"counting identities: |Delta(1)| = 2h*-4 and the B/D ideal counts", criterion_3},
        {"X' and X are mutually inverse on every lattice in the parameter box", criterion_4},
        {"closed forms agree with X on every signature; orbit type is constant", criterion_5},
        {"step-by-step trajectory regressions on [2]x[2n-3] and [2]xK_{n-1}", criterion_6},
        {"structural identifications of Delta(1) for the classical families", criterion_7},
    };

    const auto start = std::chrono::steady_clock::now();
    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Gate g;
        try {
            criteria[i].fn(g);
        } catch (const std::exception& e) {
            g.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (g.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].name << "\n";
        if (!g.ok) std::cout << "       first failure: " << g.why << "\n";
        if (g.ok) ++passed;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << "ACCEPTANCE: " << passed << "/" << criteria.size() << " criteria passed in "
              << elapsed.count() << " ms\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}

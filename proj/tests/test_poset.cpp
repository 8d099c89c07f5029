#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deltaone/poset.hpp"
#include "deltaone/rootsys.hpp"
#include "test_util.hpp"

using namespace deltaone;
using testutil::brute_force_ideals;
using testutil::level_pair_ideal;

TEST_CASE("bits basics") {
    Bits b(70);
    CHECK(b.none());
    b.set(0);
    b.set(69);
    CHECK(b.count() == 2);
    CHECK(b.test(69));
    CHECK(b.next(1) == 69);
    CHECK(b.next(70) == -1);
    Bits c = ~b;
    CHECK(c.count() == 68);
    CHECK(!c.test(0));
    CHECK((b & c).none());
    CHECK((b | c) == Bits::full(70));
    CHECK(b.subset_of(Bits::full(70)));
    CHECK(!Bits::full(70).subset_of(b));
    CHECK(b.elements() == std::vector<int>{0, 69});

    Bits x(4), y(4);
    x.set(0);
    x.set(1);  // {0,1} = value 3
    y.set(0);
    y.set(2);  // {0,2} = value 5
    CHECK(Bits::value_less(x, y));
    Bits z(4);
    z.set(3);  // smaller cardinality wins in canonical order
    CHECK(Bits::canonical_less(z, x));
    CHECK(Bits(0) == Bits(0));
}

TEST_CASE("chain construction and ideal counts") {
    FinitePoset c0 = chain(0);
    CHECK(c0.size() == 0);
    CHECK(enumerate_lower_ideals(c0).size() == 1);

    for (int m = 1; m <= 6; ++m) {
        FinitePoset c = chain(m);
        CHECK(c.size() == m);
        CHECK(static_cast<int>(enumerate_lower_ideals(c).size()) == m + 1);
        CHECK(c.graded());
        CHECK(c.levels() == m);
    }
    CHECK_THROWS_AS(chain(-1), std::invalid_argument);
}

TEST_CASE("enumerate_lower_ideals matches the brute-force oracle") {
    FinitePoset p23 = product(chain(2), chain(3));
    CHECK(p23.size() == 6);
    std::vector<Bits> fast = enumerate_lower_ideals(p23);
    CHECK(fast.size() == 10);
    CHECK(fast == brute_force_ideals(p23));

    for (int n = 2; n <= 5; ++n) {
        KPoset kp = kposet(n);
        std::vector<Bits> ideals = enumerate_lower_ideals(kp.poset);
        CHECK(static_cast<int>(ideals.size()) == 2 * n + 2);
        CHECK(ideals == brute_force_ideals(kp.poset));
    }

    FinitePoset k3prod = product(chain(2), kposet(3).poset);  // 12 elements
    CHECK(enumerate_lower_ideals(k3prod) == brute_force_ideals(k3prod));
}

TEST_CASE("canonical enumeration order and uniqueness") {
    FinitePoset p = product(chain(2), chain(4));
    std::vector<Bits> ideals = enumerate_lower_ideals(p);
    std::set<std::vector<int>> distinct;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        distinct.insert(ideals[i].elements());
        if (i > 0) CHECK(Bits::canonical_less(ideals[i - 1], ideals[i]));
    }
    CHECK(distinct.size() == ideals.size());
}

TEST_CASE("closed ideal counts for the product families") {
    // |J([m] x [d])| = C(m+d, m)
    for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 7; ++d) {
            FinitePoset p = product(chain(m), chain(d));
            CHECK(static_cast<long long>(enumerate_lower_ideals(p).size()) ==
                  testutil::binomial(m + d, m));
        }
    // |J([2] x [2n-3])| = (n-1)(2n-1)
    for (int n = 2; n <= 8; ++n) {
        FinitePoset p = product(chain(2), chain(2 * n - 3));
        CHECK(static_cast<long long>(enumerate_lower_ideals(p).size()) ==
              static_cast<long long>(n - 1) * (2 * n - 1));
    }
    // |J([2] x K_{n-1})| = (n+2)(2n+1)
    for (int n = 2; n <= 8; ++n) {
        FinitePoset p = product(chain(2), kposet(n).poset);
        CHECK(static_cast<long long>(enumerate_lower_ideals(p).size()) ==
              static_cast<long long>(n + 2) * (2 * n + 1));
    }
}

TEST_CASE("enumeration cap") {
    FinitePoset p = product(chain(2), chain(13));
    CHECK_THROWS_AS(enumerate_lower_ideals(p, 10), CapExceeded);
}

TEST_CASE("kposet structure") {
    KPoset k1 = kposet(2);  // K_1: 1 < {2,2'} < 3
    CHECK(k1.poset.size() == 4);
    CHECK(k1.poset.labels() == std::vector<std::string>{"1", "2", "2'", "3"});
    CHECK(k1.poset.covers() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    KPoset k3 = kposet(4);  // K_3, labels 1,2,3,4,4',5,6,7
    CHECK(k3.poset.size() == 8);
    CHECK(k3.poset.labels() ==
          std::vector<std::string>{"1", "2", "3", "4", "4'", "5", "6", "7"});
    int incomparable = 0;
    for (int x = 0; x < 8; ++x)
        for (int y = x + 1; y < 8; ++y)
            if (!k3.poset.leq(x, y) && !k3.poset.leq(y, x)) ++incomparable;
    CHECK(incomparable == 1);
    CHECK(!k3.poset.leq(3, 4));  // 4 and 4' are the incomparable pair
    CHECK(!k3.poset.leq(4, 3));

    // K_3 as an ordinal-sum composite
    FinitePoset composite = ordinal_sum(
        ordinal_sum(chain(3), disjoint_union(chain(1), chain(1))), chain(3));
    CHECK(composite.size() == 8);
    CHECK(is_isomorphic(composite, k3.poset).has_value());

    CHECK_THROWS_AS(kposet(1), std::invalid_argument);
}

TEST_CASE("kposet rank levels and the two middle ideals") {
    for (int n = 2; n <= 5; ++n) {
        KPoset kp = kposet(n);
        CHECK(kp.poset.graded());
        CHECK(kp.poset.levels() == 2 * n - 1);
        CHECK(kp.poset.is_ideal(kp.ideal_n));
        CHECK(kp.poset.is_ideal(kp.ideal_np));
        CHECK(kp.ideal_n.count() == n);
        CHECK(kp.ideal_np.count() == n);

        // L_n is the union of the two middle ideals
        CHECK(kp.poset.rank_level_ideal(n) == (kp.ideal_n | kp.ideal_np));
        CHECK(kp.poset.rank_level_ideal(0).none());
        CHECK(kp.poset.rank_level_ideal(2 * n - 1) == kp.poset.all());
    }
    CHECK_THROWS_AS(kposet(3).poset.rank_level_ideal(6), std::invalid_argument);
}

TEST_CASE("antichain/ideal bijection") {
    FinitePoset c4 = chain(4);
    Bits empty(4);
    CHECK(ideal_of_antichain(c4, empty) == empty);

    Bits a(4);
    a.set(2);  // element "3"
    Bits i123(4);
    i123.set(0);
    i123.set(1);
    i123.set(2);
    CHECK(ideal_of_antichain(c4, a) == i123);
    CHECK(antichain_of_ideal(c4, i123) == a);

    KPoset k3 = kposet(4);
    Bits mid(8);
    mid.set(3);
    mid.set(4);  // {4, 4'}
    CHECK(ideal_of_antichain(k3.poset, mid) == k3.poset.rank_level_ideal(4));

    // rejections
    Bits notanti(4);
    notanti.set(0);
    notanti.set(1);
    CHECK_THROWS_AS(ideal_of_antichain(c4, notanti), std::invalid_argument);
    Bits notideal(4);
    notideal.set(1);
    CHECK_THROWS_AS(antichain_of_ideal(c4, notideal), std::invalid_argument);

    // round trips over whole ideal lattices
    for (const FinitePoset& p :
         {product(chain(2), chain(3)), kposet(3).poset, disjoint_union(chain(2), chain(3))}) {
        std::vector<Bits> ideals = enumerate_lower_ideals(p);
        std::set<std::vector<int>> antichains;
        for (const Bits& ideal : ideals) {
            Bits anti = antichain_of_ideal(p, ideal);
            CHECK(p.is_antichain(anti));
            CHECK(ideal_of_antichain(p, anti) == ideal);
            antichains.insert(anti.elements());
        }
        CHECK(antichains.size() == ideals.size());  // the maps are bijections
    }
}

TEST_CASE("reverse operator examples") {
    FinitePoset c4 = chain(4);
    CHECK(reverse_operator(c4, Bits::full(4)) == Bits(4));

    Bits i12(4);
    i12.set(0);
    i12.set(1);
    Bits i123(4);
    i123.set(0);
    i123.set(1);
    i123.set(2);
    CHECK(reverse_operator(c4, i12) == i123);
    CHECK(reverse_operator_prime(c4, i123) == i12);

    CHECK(reverse_operator_prime(c4, Bits(4)) == Bits::full(4));

    ChainProduct cp = chain_product(2, chain(3));
    CHECK(reverse_operator(cp.poset, level_pair_ideal(cp, {3, 1})) ==
          level_pair_ideal(cp, {2, 2}));

    Bits notideal(4);
    notideal.set(3);
    CHECK_THROWS_AS(reverse_operator(c4, notideal), std::invalid_argument);
}

TEST_CASE("reverse operators are mutually inverse") {
    std::vector<FinitePoset> posets;
    posets.push_back(RootSystem::build(make_simple_type(Family::B, 4)).delta_one().poset);
    posets.push_back(product(chain(3), chain(4)));
    posets.push_back(product(chain(2), kposet(4).poset));
    posets.push_back(disjoint_union(chain(3), chain(3)));
    for (const FinitePoset& p : posets) {
        for (const Bits& ideal : enumerate_lower_ideals(p)) {
            CHECK(reverse_operator_prime(p, reverse_operator(p, ideal)) == ideal);
            CHECK(reverse_operator(p, reverse_operator_prime(p, ideal)) == ideal);
        }
    }
}

TEST_CASE("product ideal profile") {
    ChainProduct cp = chain_product(2, chain(3));
    Bits empty(6), full = Bits::full(6);
    for (const Bits& s : cp.profile(empty)) CHECK(s.none());
    for (const Bits& s : cp.profile(full)) CHECK(s == Bits::full(3));

    Bits four(6);  // slice 1 full, slice 2 = {1}
    four.set(0);
    four.set(1);
    four.set(2);
    four.set(3);
    std::vector<Bits> prof = cp.profile(four);
    CHECK(prof[0] == cp.base.rank_level_ideal(3));
    CHECK(prof[1] == cp.base.rank_level_ideal(1));

    Bits bad(6);
    bad.set(5);
    CHECK_THROWS_AS(cp.profile(bad), std::invalid_argument);

    // profile-then-assemble is the identity on J([2] x [3])
    std::vector<Bits> ideals = enumerate_lower_ideals(cp.poset);
    for (const Bits& ideal : ideals) CHECK(cp.assemble(cp.profile(ideal)) == ideal);

    // ...and every nested pair of base ideals assembles to an ideal
    std::vector<Bits> base_ideals = enumerate_lower_ideals(cp.base);
    int nested = 0;
    for (const Bits& i1 : base_ideals)
        for (const Bits& i2 : base_ideals) {
            if (!i2.subset_of(i1)) continue;
            Bits whole = cp.assemble({i1, i2});
            CHECK(cp.poset.is_ideal(whole));
            ++nested;
        }
    CHECK(nested == static_cast<int>(ideals.size()));

    std::vector<Bits> swapped = {base_ideals[1], Bits::full(3)};  // not nested
    CHECK_THROWS_AS(cp.assemble(swapped), std::invalid_argument);
}

TEST_CASE("poset isomorphism") {
    CHECK(is_isomorphic(product(chain(2), chain(3)), product(chain(3), chain(2))).has_value());
    CHECK(!is_isomorphic(kposet(4).poset, chain(8)).has_value());
    CHECK(!is_isomorphic(chain(3), disjoint_union(chain(2), chain(1))).has_value());
    CHECK(is_isomorphic(chain(0), chain(0)).has_value());
    CHECK(!is_isomorphic(product(chain(2), chain(2)), chain(4)).has_value());

    FinitePoset d6 = RootSystem::build(make_simple_type(Family::D, 6)).delta_one().poset;
    FinitePoset target = product(chain(2), kposet(4).poset);
    auto iso = is_isomorphic(d6, target);
    REQUIRE(iso.has_value());
    // independently confirm the mapping preserves order both ways
    for (int x = 0; x < d6.size(); ++x)
        for (int y = 0; y < d6.size(); ++y)
            CHECK(d6.leq(x, y) == target.leq((*iso)[x], (*iso)[y]));
}

TEST_CASE("DOT export") {
    std::string dot = to_dot(chain(2), "c2");
    CHECK(dot ==
          "digraph \"c2\" {\n"
          "  rankdir=BT;\n"
          "  \"1\";\n"
          "  \"2\";\n"
          "  \"1\" -> \"2\";\n"
          "}\n");
    CHECK(to_dot(kposet(2).poset) == to_dot(kposet(2).poset));  // byte-stable
    CHECK(to_dot(kposet(2).poset).find("\"2'\"") != std::string::npos);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(FinitePoset::from_covers({"x", "x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePoset::from_covers({"x", "y"}, {{0, 1}, {1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FinitePoset::from_covers({"x", "y"}, {{0, 1}, {0, 1}}),
                    std::invalid_argument);
    // 0->2 is implied by 0->1->2
    CHECK_THROWS_AS(FinitePoset::from_covers({"x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}}),
                    std::invalid_argument);

    // from_order: missing transitivity
    std::vector<Bits> below(3, Bits(3));
    below[0].set(0);
    below[1].set(0);
    below[1].set(1);
    below[2].set(1);
    below[2].set(2);  // 0 <= 1 <= 2 but not 0 <= 2
    CHECK_THROWS_AS(FinitePoset::from_order({"x", "y", "z"}, below), std::invalid_argument);
}

TEST_CASE("linear extension is order-compatible") {
    for (const FinitePoset& p : {product(chain(3), chain(3)), kposet(5).poset}) {
        std::vector<int> pos(p.size());
        for (int k = 0; k < p.size(); ++k) pos[p.linear_extension()[k]] = k;
        for (auto [l, u] : p.covers()) CHECK(pos[l] < pos[u]);
    }
}

TEST_CASE("ungraded posets carry no rank") {
    // one maximal chain of length 1, another of length 2, into a common top
    FinitePoset p = FinitePoset::from_covers({"a", "b", "c", "top"},
                                             {{0, 3}, {1, 2}, {2, 3}});
    CHECK(!p.graded());
    CHECK_THROWS_AS(p.rank_level_ideal(1), std::invalid_argument);
}

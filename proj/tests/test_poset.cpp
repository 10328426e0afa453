#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracle.hpp"
#include "strata/poset.hpp"

using namespace strata;

namespace {

Poset chain(int n) {  // 0 < 1 < ... < n-1
    std::vector<Id> elems;
    std::vector<std::pair<Id, Id>> rel;
    for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rel.emplace_back(std::to_string(i), std::to_string(j));
    return Poset::from_relations(elems, rel);
}

Poset antichain(int n) {
    std::vector<Id> elems;
    for (int i = 0; i < n; ++i) elems.push_back("a" + std::to_string(i));
    return Poset::from_relations(elems, {});
}

}  // namespace

TEST_CASE("validate_poset accepts a chain and reports broken axioms") {
    CHECK(validate_poset(chain(2)).ok());

    Poset broken_trans = Poset::from_relations({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    auto rep = validate_poset(broken_trans);
    REQUIRE(rep.transitivity.size() == 1);
    CHECK(rep.transitivity[0] == std::array<Id, 3>{"0", "1", "2"});

    Poset broken_anti = Poset::from_relations({"0", "1"}, {{"0", "1"}, {"1", "0"}});
    auto rep2 = validate_poset(broken_anti);
    REQUIRE(rep2.antisymmetry.size() == 1);
    CHECK(rep2.antisymmetry[0] == std::array<Id, 2>{"0", "1"});
}

TEST_CASE("product with a point is the identity up to relabeling") {
    Poset q = chain(3);
    Poset pt = Poset::from_relations({"*"}, {});
    Poset prod = product(pt, q);
    CHECK(prod.size() == 3);
    CHECK(poset_isomorphic(prod, q));
    CHECK(oracle::poset_isomorphic_bruteforce(prod, q));
}

TEST_CASE("product of two chains is the square with incomparable middles") {
    Poset sq = product(chain(2), chain(2));
    REQUIRE(sq.size() == 4);
    CHECK(validate_poset(sq).ok());
    int mid_a = sq.index_of("(0,1)");
    int mid_b = sq.index_of("(1,0)");
    CHECK_FALSE(sq.leq(mid_a, mid_b));
    CHECK_FALSE(sq.leq(mid_b, mid_a));
    CHECK(sq.leq("(0,0)", "(1,1)"));
}

TEST_CASE("product with the trivial poset preserves relations, exhaustively to 4 elements") {
    Poset pt = Poset::from_relations({"*"}, {});
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : oracle::all_posets(n)) {
            Poset prod = product(p, pt);
            REQUIRE(prod.size() == p.size());
            for (int a = 0; a < p.size(); ++a)
                for (int b = 0; b < p.size(); ++b)
                    CHECK(prod.leq(a, b) == p.leq(a, b));
        }
}

TEST_CASE("cone adjoins a minimum") {
    Poset empty = Poset::from_relations({}, {});
    Poset c0 = cone(empty);
    CHECK(c0.size() == 1);

    Poset c1 = cone(Poset::from_relations({"p"}, {}));
    CHECK(c1.size() == 2);
    CHECK(poset_isomorphic(c1, chain(2)));

    // cone over two incomparable points
    Poset two = antichain(2);
    Poset c2 = cone(two);
    REQUIRE(c2.size() == 3);
    CHECK(validate_poset(c2).ok());
    CHECK(c2.leq("*", "a0"));
    CHECK(c2.leq("*", "a1"));
    CHECK_FALSE(c2.leq("a0", "a1"));
    CHECK_FALSE(c2.leq("a1", "a0"));

    CHECK_THROWS_AS(cone(Poset::from_relations({"*"}, {})), ValidationError);
}

TEST_CASE("join with the empty poset is the identity") {
    Poset q = chain(3);
    Poset j = join_poset(Poset::from_relations({}, {}), q);
    CHECK(poset_isomorphic(j, q));
}

TEST_CASE("join of two points is two minima under one top") {
    Poset j = join_poset(Poset::from_relations({"p"}, {}), Poset::from_relations({"q"}, {}));
    REQUIRE(j.size() == 3);
    CHECK(validate_poset(j).ok());
    CHECK(j.leq("L:p", "(p,q)"));
    CHECK(j.leq("R:q", "(p,q)"));
    CHECK_FALSE(j.leq("L:p", "R:q"));
    CHECK_FALSE(j.leq("R:q", "L:p"));
}

TEST_CASE("cone-join law, exhaustively over posets with up to 3 elements") {
    std::vector<Poset> all;
    for (int n = 0; n <= 3; ++n)
        for (const auto& p : oracle::all_posets(n)) all.push_back(p);
    for (const auto& p : all)
        for (const auto& q : all) {
            Poset lhs = product(cone(p), cone(q));
            Poset rhs = cone(join_poset(p, q));
            CHECK(validate_poset(lhs).ok());
            CHECK(validate_poset(rhs).ok());
            REQUIRE(poset_isomorphic(lhs, rhs));
            if (p.size() + q.size() <= 4)  // keep the factorial oracle cheap
                CHECK(oracle::poset_isomorphic_bruteforce(lhs, rhs));
        }
}

TEST_CASE("constructor outputs validate, exhaustively over small posets") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : oracle::all_posets(n)) {
            CHECK(validate_poset(cone(p)).ok());
            CHECK(validate_poset(product(p, chain(2))).ok());
        }
}

TEST_CASE("consecutive_check classifies interval closure") {
    Poset c3 = chain(3);
    CHECK(consecutive_check({"0", "1"}, c3).verdict == Consecutive::consecutive);
    auto bad = consecutive_check({"0", "2"}, c3);
    CHECK(bad.verdict == Consecutive::not_interval);
    CHECK(bad.witness == std::array<Id, 3>{"0", "1", "2"});
    CHECK(consecutive_check({"0", "1", "2"}, c3).verdict == Consecutive::consecutive);
    CHECK_THROWS_AS(consecutive_check({"9"}, c3), ValidationError);
}

TEST_CASE("downward-closed and upward-closed subsets are consecutive") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : oracle::all_posets(n)) {
            for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
                std::vector<int> sel;
                std::vector<Id> ids;
                for (int i = 0; i < n; ++i)
                    if (mask & (size_t{1} << i)) {
                        sel.push_back(i);
                        ids.push_back(p.id_of(i));
                    }
                if (p.is_downward_closed(sel) || p.is_upward_closed(sel))
                    CHECK(consecutive_check(ids, p).verdict == Consecutive::consecutive);
            }
        }
}

TEST_CASE("open sets of the relation order are exactly the upward-closed ones") {
    Poset sq = product(chain(2), chain(2));
    std::vector<int> up = {sq.index_of("(1,1)")};
    CHECK(sq.is_upward_closed(up));
    std::vector<int> not_up = {sq.index_of("(0,1)")};
    CHECK_FALSE(sq.is_upward_closed(not_up));
}

TEST_CASE("depth-dimension pair poset") {
    Poset p0 = pp_make(-1);
    CHECK(p0.size() == 1);
    CHECK(p0.contains("(-1,-1)"));

    Poset p1 = pp_make(0);
    REQUIRE(p1.size() == 3);
    CHECK(p1.leq("(0,0)", "(-1,0)"));
    CHECK(p1.leq("(-1,0)", "(-1,-1)"));
    CHECK(validate_poset(p1).ok());

    // count pairs -1 <= k <= n <= 2 directly
    int count = 0;
    for (int n = -1; n <= 2; ++n)
        for (int k = -1; k <= n; ++k) ++count;
    Poset p2 = pp_make(2);
    CHECK(p2.size() == count);
    CHECK(validate_poset(p2).ok());
    CHECK_THROWS_AS(pp_make(-2), ValidationError);
}

TEST_CASE("linear extension is deterministic and order compatible") {
    Poset sq = product(chain(2), chain(2));
    auto ext = sq.linear_extension();
    REQUIRE(ext.size() == 4);
    for (size_t i = 0; i < ext.size(); ++i)
        for (size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(sq.lt(ext[j], ext[i]));
    // lexicographic tie-break puts (0,0) first, then (0,1) before (1,0)
    CHECK(sq.id_of(ext[0]) == "(0,0)");
    CHECK(sq.id_of(ext[1]) == "(0,1)");
}

TEST_CASE("isomorphism oracle agrees with brute force on all small pairs") {
    std::vector<Poset> all;
    for (int n = 0; n <= 3; ++n)
        for (const auto& p : oracle::all_posets(n)) all.push_back(p);
    for (const auto& p : all)
        for (const auto& q : all) {
            bool fast = poset_isomorphic(p, q);
            bool slow = oracle::poset_isomorphic_bruteforce(p, q);
            CHECK(fast == slow);
        }
}

TEST_CASE("chains enumeration matches a hand count on the square poset") {
    Poset sq = product(chain(2), chain(2));
    auto ch = sq.chains();
    int singles = 0, pairs = 0, triples = 0;
    for (const auto& c : ch) {
        if (c.size() == 1) ++singles;
        if (c.size() == 2) ++pairs;
        if (c.size() == 3) ++triples;
    }
    CHECK(singles == 4);
    CHECK(pairs == 5);
    CHECK(triples == 2);
    CHECK(ch.size() == 11);
}

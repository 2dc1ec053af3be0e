#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "schroeder/counting.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/text.hpp"

using namespace schroeder;

TEST_CASE("singletons at n = 1 and n = 2") {
    CHECK(all_well_weighted(1).size() == 1);
    CHECK(all_well_weighted(1)[0].is_leaf());

    auto ww2 = all_well_weighted(2);
    REQUIRE(ww2.size() == 1);  // weight 2 excluded: the right son is a leaf
    CHECK(serialize(ww2[0]) == "(1 * *)");

    auto b2 = all_binary(2);
    REQUIRE(b2.size() == 1);
    CHECK(serialize(b2[0]) == "(* *)");

    auto s1 = all_schroeder(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].is_leaf());
}

TEST_CASE("schroeder trees with 3 leaves") {
    std::set<std::string> got;
    for (const auto& t : all_schroeder(3)) got.insert(serialize(t));
    CHECK(got == std::set<std::string>{"{* * *}", "{{* *} *}", "{* {* *}}"});
}

TEST_CASE("stream sizes match the count tables") {
    CountTable s = schroeder_numbers_dp(8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(BigInt(static_cast<unsigned long>(all_schroeder(n).size())) == s.at(n));
        CHECK(BigInt(static_cast<unsigned long>(all_well_weighted(n).size())) == s.at(n));
        CHECK(BigInt(static_cast<unsigned long>(all_binary(n).size())) == catalan_closed_form(n));
    }
    CHECK(all_well_weighted(4).size() == 11);
    CHECK(all_binary(4).size() == 5);
}

TEST_CASE("every emitted weighted tree is well-weighted") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : all_well_weighted(n)) {
            CHECK(is_well_weighted(t));
            CHECK(t.leaf_count() == n);
        }
}

TEST_CASE("emission is strictly increasing and duplicate-free") {
    for (int n = 1; n <= 8; ++n) {
        auto ww = all_well_weighted(n);
        for (std::size_t i = 0; i + 1 < ww.size(); ++i)
            CHECK(canonical_compare(ww[i], ww[i + 1]) < 0);

        auto bin = all_binary(n);
        for (std::size_t i = 0; i + 1 < bin.size(); ++i)
            CHECK(canonical_compare(bin[i], bin[i + 1]) < 0);

        auto sch = all_schroeder(n);
        for (std::size_t i = 0; i + 1 < sch.size(); ++i)
            CHECK(canonical_compare(sch[i], sch[i + 1]) < 0);

        std::set<std::string> sch_set, ww_set, bin_set;
        for (const auto& t : sch) sch_set.insert(serialize(t));
        for (const auto& t : ww) ww_set.insert(serialize(t));
        for (const auto& t : bin) bin_set.insert(serialize(t));
        CHECK(sch_set.size() == sch.size());
        CHECK(ww_set.size() == ww.size());
        CHECK(bin_set.size() == bin.size());
    }
}

TEST_CASE("pointed enumeration") {
    auto p2 = all_pointed(2, NodeFilter::All);
    REQUIRE(p2.size() == 3);  // one tree, three nodes
    CHECK(serialize(p2[0]) == "(1' * *)");
    CHECK(serialize(p2[1]) == "(1 *' *)");
    CHECK(serialize(p2[2]) == "(1 * *')");

    CHECK(all_pointed(1, NodeFilter::InteriorOnly).empty());
    CHECK(all_pointed(4, NodeFilter::All).size() == 77);
    CHECK(all_pointed(5, NodeFilter::LeavesOnly).size() == 5 * 45);
    CHECK(all_pointed(5, NodeFilter::InteriorOnly).size() == 4 * 45);
}

TEST_CASE("pointed order is tree-major, preorder-minor") {
    auto pts = all_pointed(3, NodeFilter::All);
    REQUIRE(pts.size() == 15);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        auto c = canonical_compare(pts[i].tree(), pts[i + 1].tree());
        CHECK(c <= 0);
    }
    // within the first tree, addresses appear in preorder
    auto first_tree = pts[0].tree();
    auto addrs = list_addresses(first_tree, NodeFilter::All);
    for (std::size_t i = 0; i < addrs.size(); ++i) {
        CHECK(pts[i].tree() == first_tree);
        CHECK(pts[i].point() == addrs[i]);
    }
}

TEST_CASE("streams reject n < 1") {
    CHECK_THROWS_AS(WellWeightedStream(0), Error);
    CHECK_THROWS_AS(BinaryStream(0), Error);
    CHECK_THROWS_AS(SchroederStream(0), Error);
}

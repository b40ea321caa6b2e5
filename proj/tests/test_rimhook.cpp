#include <doctest.h>

#include <set>

#include "chromsym/error.hpp"
#include "chromsym/oracle.hpp"
#include "chromsym/rimhook.hpp"

using namespace chromsym;

TEST_SUITE("rimhook") {

TEST_CASE("small families") {
    const auto f21 = enumerate_srht({2, 1});
    REQUIRE(f21.tabloids.size() == 2);
    std::multiset<int> heights;
    for (const auto& t : f21.tabloids) heights.insert(t.height());
    CHECK(heights == std::multiset<int>{0, 1});

    for (int n = 1; n <= 6; ++n) {
        const auto row = enumerate_srht(Partition{n});
        REQUIRE(row.tabloids.size() == 1);
        CHECK(row.tabloids[0].height() == 0);
        CHECK(row.tabloids[0].content() == Partition{n});
    }
    const auto col = enumerate_srht({1, 1});
    bool found_domino = false;
    for (const auto& t : col.tabloids)
        if (t.hooks.size() == 1) {
            found_domino = true;
            CHECK(t.height() == 1);
            CHECK(hook_height(t.hooks[0]) == 1);
        }
    CHECK(found_domino);
}

TEST_CASE("a tabloid of shape 5,3,2,1 with content 6,3,2") {
    const auto fam = enumerate_srht({5, 3, 2, 1}, Partition{6, 3, 2});
    REQUIRE_FALSE(fam.tabloids.empty());
    bool height_two = false;
    for (const auto& t : fam.tabloids) {
        CHECK(t.content() == Partition{6, 3, 2});
        height_two = height_two || t.height() == 2;
    }
    CHECK(height_two);
}

TEST_CASE("the six tabloids behind the rho shape") {
    const Partition rho{13, 11, 9, 3, 2, 2};
    std::set<Partition> contents;
    std::size_t kept = 0;
    for (const auto& t : enumerate_srht(rho).tabloids) {
        const auto c = t.content();
        if (c[0] == 13 && c[1] == 11 && c[2] == 9) {
            ++kept;
            contents.insert(c);
        }
    }
    CHECK(kept == 6);
    CHECK(contents.size() == 6);
}

TEST_CASE("every enumerated tabloid is valid and families have no duplicates") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto fam = enumerate_srht(shape);
            std::set<std::vector<std::vector<Cell>>> seen;
            std::vector<int> prev;
            for (const auto& t : fam.tabloids) {
                CHECK(is_valid_tabloid(t));
                CHECK(dominance_leq(shape, t.content()));
                CHECK(t.hooks.front().front().row >= 1);
                CHECK(seen.insert(t.hooks).second);
                CHECK(prev <= t.hook_sizes());
                prev = t.hook_sizes();
            }
        }
}

TEST_CASE("content filter agrees with filtering afterwards") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                std::vector<std::vector<int>> direct;
                for (const auto& t : enumerate_srht(shape, mu).tabloids) direct.push_back(t.hook_sizes());
                std::vector<std::vector<int>> after;
                for (const auto& t : enumerate_srht(shape).tabloids)
                    if (t.content() == mu) after.push_back(t.hook_sizes());
                CHECK(direct == after);
            }
    CHECK_THROWS_AS(enumerate_srht({2, 1}, Partition{2}), Error);
}

TEST_CASE("invalid tabloids are rejected by the checker") {
    auto t = enumerate_srht({3, 2}).tabloids.front();
    CHECK(is_valid_tabloid(t));
    auto broken = t;
    broken.hooks.front().pop_back();
    CHECK_FALSE(is_valid_tabloid(broken));
    // Two single cells in row 1 are not a tiling by hooks that meet column 1.
    SpecialRimHookTabloid off{{2}, {{{1, 1}}, {{1, 2}}}};
    CHECK_FALSE(is_valid_tabloid(off));
}

TEST_CASE("inverse kostka examples") {
    CHECK(inverse_kostka({2, 1}, {3}) == -1);
    CHECK(inverse_kostka({1, 1}, {2}) == -1);
    CHECK(inverse_kostka({3, 1}, {2, 2}) == 0);
    CHECK_THROWS_AS(inverse_kostka({2}, {1}), Error);
}

TEST_CASE("kostka examples") {
    CHECK(kostka_number({2, 1}, {1, 1, 1}) == 2);
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(kostka_number(mu, mu) == 1);
            CHECK(kostka_number(Partition{n}, mu) == 1);
        }
    CHECK_THROWS_AS(kostka_number({2}, {1}), Error);
}

TEST_CASE("signed tabloid counts invert the kostka matrix") {
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        const auto k = oracle::kostka_matrix(n);
        const auto inv = oracle::invert_unitriangular(k);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                CHECK(kostka_number(parts[i], parts[j]) == k[i][j]);
                // coefficient of s_lambda in m_mu is entry (mu, lambda) of K^{-1}
                CHECK(inverse_kostka(parts[j], parts[i]) == inv[i][j]);
            }
        for (const auto& lambda : parts) CHECK(inverse_kostka(lambda, lambda) == 1);
    }
}

TEST_CASE("rendering") {
    const auto fam = enumerate_srht({2, 1}, Partition{3});
    REQUIRE(fam.tabloids.size() == 1);
    CHECK(fam.tabloids[0].render() == "1 1\n1\n");
}

}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "chromsym/error.hpp"
#include "chromsym/nice.hpp"
#include "chromsym/schur.hpp"

using namespace chromsym;

namespace {

std::set<std::string> block_labels(const Poset& p, const std::vector<int>& block) {
    std::set<std::string> out;
    for (int e : block) out.insert(p.label(e));
    return out;
}

std::set<GridPoint> cells_of(const ChainFamily& f) {
    std::set<GridPoint> s;
    for (const auto& c : f.chains) s.insert(c.begin(), c.end());
    return s;
}

}  // namespace

TEST_SUITE("nice") {

TEST_CASE("certificate validation") {
    const Poset c = build_poset("chain:3");
    ChainPartitionCertificate good{{2, 1}, {{0, 1}, {2}}};
    CHECK(validate_certificate(c, good));
    std::string why;
    ChainPartitionCertificate dup{{2, 1}, {{0, 1}, {1}}};
    CHECK_FALSE(validate_certificate(c, dup, &why));
    CHECK_FALSE(why.empty());
    ChainPartitionCertificate wrong_type{{3}, {{0, 1}, {2}}};
    CHECK_FALSE(validate_certificate(c, wrong_type));
    const Poset sq = build_poset("prod:2x2");
    ChainPartitionCertificate anti{{2, 2}, {{sq.index_of("(1,2)"), sq.index_of("(2,1)")},
                                            {sq.index_of("(1,1)"), sq.index_of("(2,2)")}}};
    CHECK_FALSE(validate_certificate(sq, anti));
}

TEST_CASE("the b3 counterexample") {
    const Poset b3 = build_poset("b3:6");
    auto cert = chain_partition_exists(b3, {9, 7, 2});
    REQUIRE(cert.has_value());
    CHECK(validate_certificate(b3, *cert));
    CHECK(cert->type == Partition{9, 7, 2});
    CHECK_FALSE(chain_partition_exists(b3, {6, 6, 6}).has_value());

    // The hand-built partition from the non-niceness argument also validates.
    ChainPartitionCertificate by_hand{{9, 7, 2}, {}};
    std::vector<std::string> labels[3] = {{"a", "d", "f"}, {"c"}, {"b", "e"}};
    for (int i = 1; i <= 6; ++i) {
        labels[0].push_back(std::to_string(i) + "'");
        labels[1].push_back(std::to_string(i));
    }
    for (auto& l : labels) {
        auto& block = by_hand.blocks.emplace_back();
        for (auto& s : l) block.push_back(b3.index_of(s));
    }
    CHECK(validate_certificate(b3, by_hand));

    const auto v = is_nice(b3);
    CHECK_FALSE(v.nice);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first == Partition{9, 7, 2});
    CHECK(v.witness->second == Partition{6, 6, 6});
    REQUIRE(v.witness_certificate.has_value());
    CHECK(validate_certificate(b3, *v.witness_certificate));
    NiceOptions wide;
    wide.max_elements = 24;
    for (int n = 7; n <= 9; ++n) CHECK_FALSE(is_nice(build_poset("b3:" + std::to_string(n)), wide).nice);
}

TEST_CASE("small b3 lattices and products are nice") {
    for (int n = 1; n <= 5; ++n) CHECK(is_nice(build_poset("b3:" + std::to_string(n))).nice);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= a && a * b <= 18; ++b)
            CHECK(is_nice(build_poset(PosetSpec::product({a, b}))).nice);
    CHECK(is_nice(build_poset("prod:2x2x2")).nice);
    CHECK(is_nice(build_poset("prod:3x2x2")).nice);
    CHECK_THROWS_AS(is_nice(build_poset("prod:7x3")), Error);
}

TEST_CASE("chains have every type") {
    const Poset c = build_poset("chain:5");
    for (const auto& t : partitions_of(5)) {
        auto cert = chain_partition_exists(c, t);
        REQUIRE(cert.has_value());
        CHECK(validate_certificate(c, *cert));
    }
}

TEST_CASE("achieved types are exactly the brute force ones") {
    for (std::string s : {"b3:2", "prod:3x3", "bool:3", "sum:1+prod:2x2+1"}) {
        const Poset p = build_poset(s);
        const auto v = is_nice(p);
        std::vector<Partition> brute;
        for (const auto& t : partitions_of(p.size()))
            if (count_scp(p, t) != 0) brute.push_back(t);
        CHECK(v.achieved_types == brute);
    }
}

TEST_CASE("Schur positive small posets are nice") {
    for (std::string s : {"chain:4", "prod:2x2", "prod:3x2", "prod:4x2", "prod:2x2x2", "bool:3", "b3:1",
                          "sum:1+prod:2x2+1", "sum:1+prod:3x2+1"}) {
        const Poset p = build_poset(s);
        if (schur_expansion(p).nonnegative()) CHECK_MESSAGE(is_nice(p).nice, s);
    }
}

TEST_CASE("staircase types") {
    CHECK(staircase_type(4, 2) == Partition{5, 3});
    CHECK(staircase_type(8, 3) == Partition{10, 8, 6});
    CHECK(staircase_type(16, 4) == Partition{19, 17, 15, 13});
    CHECK(staircase_type(8, 3).size() == 24);
    CHECK(chain_partition_exists(build_poset("prod:8x3"), {10, 8, 6}).has_value());
    CHECK_THROWS_AS(staircase_type(2, 3), Error);
}

TEST_CASE("grid chain types are those below the staircase") {
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m * n <= 20; ++m) {
            const Poset g = build_poset(PosetSpec::product({m, n}));
            const Partition top = staircase_type(m, n);
            ChainPartitionSearch search(g);
            for (const auto& d : partitions_of(m * n)) {
                const auto cert = search.find(d);
                CHECK_MESSAGE(cert.has_value() == dominance_leq(d, top), m << "x" << n << " " << d.to_string());
            }
        }
}

TEST_CASE("chain family for two rows") {
    for (int r = 1; r <= 8; ++r) {
        const auto f = parameterized_chain_family({8, 2, {1}, {r}});
        REQUIRE(f.chains.size() == 1);
        CHECK(f.chains[0].size() == 9);
        CHECK(std::count(f.chains[0].begin(), f.chains[0].end(), GridPoint{r, 1}) == 1);
        CHECK(std::count(f.chains[0].begin(), f.chains[0].end(), GridPoint{r, 2}) == 1);
    }
}

TEST_CASE("chain family assignment of rank elements") {
    const std::vector<int> sigma = {3, 1, 6, 5, 2, 7, 4};
    const auto f = parameterized_chain_family({10, 8, sigma, {1, 2, 3, 4, 5, 6, 7}});
    REQUIRE(f.chains.size() == 7);
    // Elements of rank 6 (x + y = 8), left to right.
    std::vector<int> owner;
    for (int x = 1; x <= 10; ++x)
        for (int y = 1; y <= 8; ++y)
            if (x + y == 8)
                for (std::size_t i = 0; i < f.chains.size(); ++i)
                    if (std::count(f.chains[i].begin(), f.chains[i].end(), GridPoint{x, y}))
                        owner.push_back(static_cast<int>(i) + 1);
    CHECK(owner == sigma);
}

TEST_CASE("chain families are valid and distinct") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= std::min(m, 3); ++n) {
            std::vector<int> sigma(static_cast<std::size_t>(n - 1));
            for (int i = 0; i < n - 1; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
            std::set<std::vector<std::vector<GridPoint>>> families;
            int made = 0;
            do {
                std::vector<int> mask(static_cast<std::size_t>(m), 0);
                std::fill(mask.end() - (n - 1), mask.end(), 1);
                do {
                    std::vector<int> upsilon;
                    for (int i = 0; i < m; ++i)
                        if (mask[static_cast<std::size_t>(i)]) upsilon.push_back(i + 1);
                    const auto f = parameterized_chain_family({m, n, sigma, upsilon});
                    ++made;
                    families.insert(f.chains);
                    std::size_t covered = cells_of(f).size();
                    for (const auto& r : f.leftovers) covered += r.size();
                    CHECK(covered == static_cast<std::size_t>(m * n));
                } while (std::next_permutation(mask.begin(), mask.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            CHECK(families.size() == static_cast<std::size_t>(made));
            if (m == 4 && n == 3) CHECK(made == 2 * 6);
        }
    CHECK_THROWS_AS(parameterized_chain_family({4, 3, {1, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(parameterized_chain_family({4, 3, {1, 2}, {1, 9}}), Error);
}

TEST_CASE("ordinal sum examples") {
    const auto a = ordinal_sum_chain_partition(1, 1, 2, 2, {4, 2});
    CHECK(a.t == std::vector<int>{1, 1});
    CHECK(a.nu == Partition{3, 1});
    CHECK(validate_certificate(a.poset, a.certificate));
    CHECK(chain_partition_exists(build_poset("sum:1+prod:2x2+1"), {4, 2}).has_value());

    const auto b = ordinal_sum_chain_partition(1, 1, 3, 2, {4, 4});
    CHECK(b.t == std::vector<int>{0, 2});
    CHECK(b.nu == Partition{4, 2});
    CHECK(b.certificate.type == Partition{4, 4});
    CHECK(validate_certificate(b.poset, b.certificate));

    const auto top = ordinal_sum_chain_partition(2, 1, 4, 3, {9, 4, 2});
    CHECK(top.t == std::vector<int>{3, 0, 0});
    CHECK(top.nu == staircase_type(4, 3));

    CHECK_THROWS_AS(ordinal_sum_chain_partition(1, 1, 2, 2, {6}), Error);
    CHECK_THROWS_AS(ordinal_sum_chain_partition(1, 1, 2, 2, {3, 2}), Error);
}

TEST_CASE("ordinal sums of grids are nice") {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int n = 1; n <= 3; ++n)
                for (int m = n; m * n <= 12; ++m) {
                    const Poset sum = build_poset(PosetSpec::ordinal_sum(p, PosetSpec::product({m, n}), q));
                    std::vector<int> shifted = staircase_type(m, n).parts();
                    shifted[0] += p + q;
                    const Partition top(shifted);
                    ChainPartitionSearch search(sum);
                    for (const auto& mu : partitions_of(sum.size())) {
                        if (dominance_leq(mu, top)) {
                            const auto r = ordinal_sum_chain_partition(p, q, m, n, mu);
                            CHECK(r.certificate.type == mu);
                            CHECK(validate_certificate(r.poset, r.certificate));
                        } else if (m * n + p + q <= 12) {
                            CHECK_FALSE(search.find(mu).has_value());
                        }
                    }
                }
}

TEST_CASE("labeled certificates") {
    const Poset p = build_poset("sum:1+chain:2+1");
    auto cert = chain_partition_exists(p, {4});
    REQUIRE(cert.has_value());
    CHECK(cert->labeled(p) == std::vector<std::vector<std::string>>{{"lo1", "1", "2", "hi1"}});
    CHECK(block_labels(p, cert->blocks[0]).size() == 4);
}

}

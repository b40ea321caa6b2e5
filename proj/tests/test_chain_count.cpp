#include <doctest.h>

#include <functional>

#include "chromsym/chain_count.hpp"
#include "chromsym/error.hpp"

using namespace chromsym;

namespace {

// Assigns every element a block index in 0..len-1 and checks block sizes and
// the block predicate; counts ordered tuples directly.
BigInt tuple_count(int n, const Partition& type, const std::function<bool(int, int)>& compatible) {
    const std::size_t len = type.length();
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    std::vector<int> room(type.begin(), type.end());
    BigInt total = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            total += 1;
            return;
        }
        for (std::size_t b = 0; b < len; ++b) {
            if (room[b] == 0) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (block[static_cast<std::size_t>(u)] == static_cast<int>(b)) ok = compatible(u, v);
            if (!ok) continue;
            --room[b];
            block[static_cast<std::size_t>(v)] = static_cast<int>(b);
            place(v + 1);
            ++room[b];
        }
        block[static_cast<std::size_t>(v)] = -1;
    };
    place(0);
    return total;
}

BigInt chain_tuples(const Poset& p, const Partition& type) {
    return tuple_count(p.size(), type, [&](int a, int b) { return p.comparable(a, b); });
}

BigInt alpha_factorials(const Partition& type) {
    BigInt f = 1;
    for (auto [part, mult] : multiplicity_profile(type).counts) f *= factorial(mult);
    return f;
}

}  // namespace

TEST_SUITE("chain_count") {

TEST_CASE("stable partition examples") {
    CHECK(count_semiordered_stable_partitions(Graph::edgeless(3), {2, 1}) == 3);
    for (int n = 1; n <= 6; ++n) {
        const Graph k = Graph::complete(n);
        CHECK(count_semiordered_stable_partitions(k, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
              factorial(n));
        if (n >= 2) {
            std::vector<int> t(static_cast<std::size_t>(n - 1), 1);
            t[0] = 2;
            CHECK(count_semiordered_stable_partitions(k, Partition(t)) == 0);
        }
    }
    CHECK_THROWS_AS(count_semiordered_stable_partitions(Graph::edgeless(3), {2}), Error);
}

TEST_CASE("chain partition examples") {
    CHECK(count_scp(build_poset("chain:4"), {2, 1, 1}) == 12);
    for (int n = 1; n <= 7; ++n)
        CHECK(count_scp(build_poset("chain:" + std::to_string(n)),
                        Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == factorial(n));
    CHECK(count_scp(build_poset("prod:2x2"), {2, 2}) == 4);
    CHECK_THROWS_AS(count_scp(build_poset("chain:3"), {2}), Error);
}

TEST_CASE("both engines agree with direct tuple counting") {
    for (std::string s : {"chain:5", "prod:2x2", "prod:3x2", "prod:4x2", "prod:3x3", "prod:2x2x2", "b3:1", "b3:2",
                          "bool:3", "sum:1+prod:2x2+1", "sum:2+prod:3x2+0"}) {
        const Poset p = build_poset(s);
        const Graph g = incomparability_graph(p);
        ScpCounter counter(p);
        for (const auto& type : partitions_of(p.size())) {
            const BigInt oracle = chain_tuples(p, type);
            CHECK_MESSAGE(count_scp(p, type) == oracle, s << " " << type.to_string());
            CHECK_MESSAGE(counter.count(type) == oracle, s << " " << type.to_string());
            CHECK_MESSAGE(count_semiordered_stable_partitions(g, type) == oracle, s << " " << type.to_string());
        }
    }
}

TEST_CASE("chains give multinomials and counts carry the ordering factor") {
    for (int n = 1; n <= 10; ++n) {
        const Poset c = build_poset("chain:" + std::to_string(n));
        for (const auto& type : partitions_of(n)) CHECK(count_scp(c, type) == multinomial(n, type.parts()));
    }
    for (std::string s : {"prod:4x3", "b3:3", "bool:3"}) {
        const Poset p = build_poset(s);
        const int longest = max_chain_size(p);
        for (const auto& type : partitions_of(p.size())) {
            const BigInt c = count_scp(p, type);
            CHECK(mpz_divisible_p(c.get_mpz_t(), alpha_factorials(type).get_mpz_t()) != 0);
            if (type[0] > longest) CHECK(c == 0);
        }
    }
}

TEST_CASE("budgets") {
    SearchLimits tight{5};
    CHECK_THROWS_AS(count_scp(build_poset("prod:4x4"), {4, 4, 4, 4}, nullptr, tight), Error);
    SearchStats stats;
    count_scp(build_poset("prod:3x3"), {5, 3, 1}, &stats);
    CHECK(stats.nodes > 0);
}

TEST_CASE("closed form examples") {
    CHECK(scp_closed_form(StaircaseContext::make(4, 2), {5, 2, 1}) == 8);
    CHECK(scp_closed_form(StaircaseContext::make(3, 1), {1, 1, 1}) == 6);
    CHECK(scp_closed_form(StaircaseContext::make(8, 3), {10, 8, 4, 2}) == 102);
    CHECK_THROWS_AS(scp_closed_form(StaircaseContext::make(4, 2), {4, 4}), Error);
    CHECK_THROWS_AS(scp_closed_form(StaircaseContext::make(4, 2), {5, 2}), Error);
}

TEST_CASE("staircase context") {
    const auto ctx = StaircaseContext::make(8, 3);
    CHECK(ctx.staircase == Partition{10, 8});
    CHECK(ctx.applies_to({10, 8, 4, 2}));
    CHECK_FALSE(ctx.applies_to({10, 7, 5, 2}));
    CHECK(ctx.tail_profile({10, 8, 4, 2}).size() == 6);
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= m; ++n) {
            const auto c = StaircaseContext::make(m, n);
            CHECK(c.staircase.size() == (n - 1) * (m + 1));
        }
}

TEST_CASE("closed form equals brute count wherever it applies") {
    for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3}, {4, 4}}) {
        const auto ctx = StaircaseContext::make(m, n);
        ScpCounter counter(build_poset(PosetSpec::product({m, n})));
        int applicable = 0;
        for (const auto& type : partitions_of(m * n)) {
            if (!ctx.applies_to(type)) continue;
            ++applicable;
            CHECK_MESSAGE(scp_closed_form(ctx, type) == counter.count(type), m << "x" << n << " " << type.to_string());
        }
        CHECK(applicable > 0);
    }
}

TEST_CASE("forced content prefix") {
    CHECK(forced_content_prefix({10, 8, 2, 2, 2}, 8, 3) == Partition{10, 8});
    CHECK(forced_content_prefix({7}, 7, 1) == Partition{});
    CHECK_FALSE(forced_content_prefix({4, 4}, 4, 2).has_value());
    CHECK_THROWS_AS(forced_content_prefix({4, 3}, 4, 2), Error);
}

TEST_CASE("proof case contents and values") {
    const auto contents = proof_case_contents(3, 5);
    CHECK(contents[0] == Partition{10, 8, 4, 2});
    CHECK(contents[5] == Partition{10, 8, 2, 2, 2});
    const auto v35 = proof_case_closed_forms(3, 5);
    CHECK(v35[0] == 102);
    CHECK(v35[2] == 132);
    CHECK(proof_case_closed_forms(4, 6)[4] == 5520);
    CHECK_THROWS_AS(proof_case_closed_forms(3, 4), Error);

    for (int k = 5; k <= 8; ++k)
        for (int n = 2; n <= 4; ++n) {
            const auto ctx = StaircaseContext::make(n + k, n);
            const auto cs = proof_case_contents(n, k);
            const auto vs = proof_case_closed_forms(n, k);
            for (std::size_t i = 0; i < 6; ++i)
                CHECK_MESSAGE(vs[i] == scp_closed_form(ctx, cs[i]), "n=" << n << " k=" << k << " T" << i + 1);
        }
}

}

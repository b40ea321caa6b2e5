#include <doctest.h>

#include "chromsym/error.hpp"
#include "chromsym/poset.hpp"

using namespace chromsym;

namespace {

// Reflexive-transitive closure of the cover relation, by repeated squaring.
BitMatrix closure_of_covers(const Poset& p) {
    const auto n = static_cast<std::size_t>(p.size());
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    for (auto [a, b] : p.cover_pairs()) m.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m.test(i, k))
                for (std::size_t j = 0; j < n; ++j)
                    if (m.test(k, j)) m.set(i, j);
    return m;
}

int idx(const Poset& p, const std::string& label) { return p.index_of(label); }

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("dsl parsing and printing") {
    for (std::string s : {"chain:4", "prod:8x3", "prod:2x2x2", "bool:3", "b3:6", "sum:1+prod:8x3+2",
                          "sum:0+sum:1+chain:2+1+0"})
        CHECK(PosetSpec::parse(s).to_dsl() == s);
    auto offset_of = [](std::string_view text) {
        try {
            PosetSpec::parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("chain:") == 6);
    CHECK(offset_of("prod:3y2") == 6);
    CHECK(offset_of("tree:3") == 0);
    CHECK(offset_of("sum:1+chain:2") == 13);
    CHECK(offset_of("chain:3 ") == 7);
}

TEST_CASE("builder sizes") {
    CHECK(build_poset("prod:6x3").size() == 18);
    CHECK(build_poset("b3:1").size() == 8);
    CHECK(build_poset("b3:6").size() == 18);
    CHECK(build_poset("bool:4").size() == 16);
    CHECK(build_poset("sum:1+prod:8x3+2").size() == 27);
    CHECK(max_chain_size(build_poset("prod:6x3")) == 8);  // rank 7
}

TEST_CASE("comparability equals the closure of covers for every builder") {
    for (std::string s : {"chain:1", "chain:5", "prod:3x2", "prod:4x3", "prod:2x2x2", "bool:3", "b3:1", "b3:2",
                          "b3:6", "sum:2+prod:3x2+1", "sum:0+chain:3+0"}) {
        const Poset p = build_poset(s);
        CHECK_MESSAGE(closure_of_covers(p) == p.leq_matrix(), s);
    }
}

TEST_CASE("linear extension respects the order") {
    const Poset p = build_poset("b3:4");
    const auto& lin = p.linear_extension();
    std::vector<int> pos(static_cast<std::size_t>(p.size()));
    for (std::size_t i = 0; i < lin.size(); ++i) pos[static_cast<std::size_t>(lin[i])] = static_cast<int>(i);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b)) CHECK(pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]);
}

TEST_CASE("incomparability graphs") {
    CHECK(incomparability_graph(build_poset("chain:3")).edge_count() == 0);
    CHECK(incomparability_graph(Poset::antichain(3)).edge_count() == 3);
    const Poset sq = build_poset("prod:2x2");
    const Graph g = incomparability_graph(sq);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.adjacent(idx(sq, "(1,2)"), idx(sq, "(2,1)")));
    CHECK(incomparability_graph(Poset::antichain(6)).edge_count() == 15);
    CHECK(incomparability_graph(build_poset("chain:9")).edge_count() == 0);
}

TEST_CASE("chain subsets") {
    const Poset b3 = build_poset("b3:6");
    std::vector<std::string> first = {"a", "d", "f", "1'", "2'", "3'", "4'", "5'", "6'"};
    CHECK(is_chain_subset(b3, std::span<const std::string>(first)));
    std::vector<std::string> anti = {"e", "f", "1"};
    CHECK_FALSE(is_chain_subset(b3, std::span<const std::string>(anti)));
    std::vector<std::string> single = {"c"};
    CHECK(is_chain_subset(b3, std::span<const std::string>(single)));
    std::vector<std::string> bad = {"zz"};
    CHECK_THROWS_AS(is_chain_subset(b3, std::span<const std::string>(bad)), Error);
}

TEST_CASE("longest chains") {
    CHECK(max_chain_size(build_poset("prod:8x2")) == 9);
    CHECK(max_chain_size(build_poset("prod:8x3")) == 10);
    for (int n = 1; n <= 7; ++n) CHECK(max_chain_size(build_poset("chain:" + std::to_string(n))) == n);
    CHECK(max_chain_size(build_poset("sum:2+prod:3x3+1")) == 8);
}

TEST_CASE("distributive lattices") {
    for (int n = 1; n <= 4; ++n) CHECK(verify_distributive_lattice(build_poset("b3:" + std::to_string(n))));
    CHECK_FALSE(verify_distributive_lattice(Poset::antichain(3)));
    CHECK(verify_distributive_lattice(build_poset("prod:3x2x2")));
    // N5 is a lattice but not distributive.
    std::vector<std::pair<int, int>> n5 = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    CHECK_FALSE(verify_distributive_lattice(Poset::from_relations({"0", "a", "b", "c", "1"}, n5)));
}

TEST_CASE("b3 structure used by the non-niceness argument") {
    for (int n = 1; n <= 6; ++n) {
        const Poset p = build_poset("b3:" + std::to_string(n));
        CHECK(p.size() == 2 * n + 6);
        auto chain = [&](std::vector<std::string> labels) {
            return is_chain_subset(p, std::span<const std::string>(labels));
        };
        std::vector<std::string> long_chain = {"a", "d", "f"};
        std::vector<std::string> mid_chain = {"c"};
        for (int i = 1; i <= n; ++i) {
            long_chain.push_back(std::to_string(i) + "'");
            mid_chain.push_back(std::to_string(i));
        }
        CHECK(chain(long_chain));
        CHECK(chain(mid_chain));
        CHECK(chain({"b", "e"}));
        CHECK(long_chain.size() + mid_chain.size() + 2 == static_cast<std::size_t>(p.size()));
        CHECK(p.less(idx(p, "e"), idx(p, "b")));
        for (auto [x, y] : {std::pair{"b", "c"}, {"b", "d"}, {"c", "d"}, {"e", "f"}, {"e", "1"}, {"f", "1"}})
            CHECK_FALSE(p.comparable(idx(p, x), idx(p, y)));
        for (int i = 1; i <= n; ++i) {
            const int v = idx(p, std::to_string(i));
            CHECK_FALSE(p.comparable(idx(p, "d"), v));
            CHECK_FALSE(p.comparable(idx(p, "e"), v));
            CHECK_FALSE(p.comparable(idx(p, "f"), v));
            if (i < n) CHECK(p.less(idx(p, std::to_string(i + 1)), v));
        }
    }
}

TEST_CASE("b3 embeds as a sublattice of a product of chains") {
    for (int n = 1; n <= 6; ++n) {
        const auto coords = b3_coordinates(n);
        REQUIRE(coords.size() == static_cast<std::size_t>(2 * n + 6));
        const Poset p = build_poset("b3:" + std::to_string(n));
        auto find = [&](const std::vector<int>& c) {
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (coords[i] == c) return static_cast<int>(i);
            return -1;
        };
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < coords.size(); ++j) {
                std::vector<int> lo(3), hi(3);
                bool le = true;
                for (int k = 0; k < 3; ++k) {
                    lo[k] = std::min(coords[i][k], coords[j][k]);
                    hi[k] = std::max(coords[i][k], coords[j][k]);
                    le = le && coords[i][k] <= coords[j][k];
                }
                CHECK(find(lo) >= 0);
                CHECK(find(hi) >= 0);
                CHECK(le == p.leq(static_cast<int>(i), static_cast<int>(j)));
            }
    }
    CHECK(verify_distributive_lattice(build_poset("b3:1")));
    CHECK(max_chain_size(build_poset("b3:1")) == 4);
}

TEST_CASE("joins and meets") {
    const Poset p = build_poset("prod:3x2");
    CHECK(join(p, idx(p, "(1,2)"), idx(p, "(3,1)")) == idx(p, "(3,2)"));
    CHECK(meet(p, idx(p, "(1,2)"), idx(p, "(3,1)")) == idx(p, "(1,1)"));
    const Poset a = Poset::antichain(2);
    CHECK_FALSE(join(a, 0, 1).has_value());
}

TEST_CASE("invalid orders are rejected") {
    BitMatrix m(2);
    m.set(0, 0);
    m.set(1, 1);
    m.set(0, 1);
    m.set(1, 0);
    CHECK_THROWS_AS(Poset({"x", "y"}, m), Error);
    BitMatrix ok(2);
    ok.set(0, 0);
    ok.set(1, 1);
    CHECK_THROWS_AS(Poset({"x", "x"}, ok), Error);
    CHECK_THROWS_AS(build_poset("chain:2").index_of("9"), Error);
}

}

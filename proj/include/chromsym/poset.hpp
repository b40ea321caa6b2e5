#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chromsym {

/// Dense square boolean matrix, one bit per entry.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
        auto& word = bits_[i * words_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        word = value ? (word | bit) : (word & ~bit);
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Abstract syntax of the poset builder language:
/// `chain:N`, `prod:N1xN2x...`, `bool:R`, `b3:N`, `sum:P+<spec>+Q`.
struct PosetSpec {
    enum class Kind { Chain, Product, Boolean, B3, OrdinalSum };

    Kind kind = Kind::Chain;
    // Chain {n}; Product {n1..nr}; Boolean {r}; B3 {n}; OrdinalSum {p, q}.
    std::vector<int> params;
    std::shared_ptr<const PosetSpec> inner;

    static PosetSpec chain(int n);
    static PosetSpec product(std::vector<int> dims);
    static PosetSpec boolean(int r);
    static PosetSpec b3(int n);
    static PosetSpec ordinal_sum(int p, PosetSpec inner, int q);

    // Throws ParseError carrying the byte offset of the first bad character.
    static PosetSpec parse(std::string_view text);
    std::string to_dsl() const;

    // (m, n) with m >= n when this spec is a product of exactly two chains.
    std::optional<std::pair<int, int>> two_chain_dims() const;
};

/// A finite poset with a materialized comparability matrix and Hasse covers.
/// Element order is the builder's construction order.
class Poset {
public:
    Poset() = default;
    // `leq` must be a partial order; it is validated here.
    Poset(std::vector<std::string> labels, BitMatrix leq, std::optional<PosetSpec> origin = {});

    // Builds the order as the reflexive-transitive closure of `relations`
    // (pairs (lower, upper)).
    static Poset from_relations(std::vector<std::string> labels,
                                std::span<const std::pair<int, int>> relations);
    static Poset antichain(int n);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    int index_of(std::string_view label) const;

    bool leq(int a, int b) const noexcept { return leq_.test(a, b); }
    bool less(int a, int b) const noexcept { return a != b && leq_.test(a, b); }
    bool comparable(int a, int b) const noexcept { return leq_.test(a, b) || leq_.test(b, a); }

    const BitMatrix& leq_matrix() const noexcept { return leq_; }
    // upper_covers(i): elements covering i.
    const std::vector<int>& upper_covers(int i) const { return covers_.at(static_cast<std::size_t>(i)); }
    std::vector<std::pair<int, int>> cover_pairs() const;

    // Elements sorted so that every element precedes those above it; ties
    // keep construction order.
    const std::vector<int>& linear_extension() const noexcept { return linear_; }

    const std::optional<PosetSpec>& origin() const noexcept { return origin_; }

private:
    std::vector<std::string> labels_;
    BitMatrix leq_;
    std::vector<std::vector<int>> covers_;
    std::vector<int> linear_;
    std::unordered_map<std::string, int> index_;
    std::optional<PosetSpec> origin_;
};

/// Simple undirected graph without loops.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, std::span<const std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph edgeless(int n);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const noexcept { return adj_.test(u, v); }
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

private:
    std::vector<std::string> labels_;
    BitMatrix adj_;
};

Poset build_poset(const PosetSpec& spec);
inline Poset build_poset(std::string_view dsl) { return build_poset(PosetSpec::parse(dsl)); }

Graph incomparability_graph(const Poset& poset);

bool is_chain_subset(const Poset& poset, std::span<const int> elements);
bool is_chain_subset(const Poset& poset, std::span<const std::string> labels);

// Element count of a longest chain (0 for the empty poset).
int max_chain_size(const Poset& poset);

std::optional<int> join(const Poset& poset, int a, int b);
std::optional<int> meet(const Poset& poset, int a, int b);
bool verify_distributive_lattice(const Poset& poset);

// Coordinates of the B3(n) elements inside the product of chains n+1, 2, 2,
// in construction order a, b, c, d, e, f, 1', 1, 2', 2, ..., n', n.
std::vector<std::vector<int>> b3_coordinates(int n);

}  // namespace chromsym

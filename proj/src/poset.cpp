#include "chromsym/poset.hpp"

#include <algorithm>
#include <numeric>

#include "chromsym/error.hpp"

namespace chromsym {

namespace {

std::string coordinate_label(std::span<const int> coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

bool componentwise_leq(std::span<const int> a, std::span<const int> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// All coordinate vectors of the product of chains, lexicographic order.
std::vector<std::vector<int>> product_coordinates(const std::vector<int>& dims) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dims.size(), 1);
    if (dims.empty()) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = dims.size();
        while (i > 0) {
            --i;
            if (cur[i] < dims[i]) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 1);
                break;
            }
            if (i == 0) return out;
        }
    }
}

Poset poset_from_coordinates(std::vector<std::string> labels,
                             const std::vector<std::vector<int>>& coords, PosetSpec origin) {
    const std::size_t n = coords.size();
    BitMatrix leq(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (componentwise_leq(coords[i], coords[j])) leq.set(i, j);
    return Poset(std::move(labels), std::move(leq), std::move(origin));
}

Poset build_ordinal_sum(int p, const Poset& inner, int q, PosetSpec origin) {
    const int n = p + inner.size() + q;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= p; ++i) labels.push_back("lo" + std::to_string(i));
    for (const auto& l : inner.labels()) labels.push_back(l);
    for (int i = 1; i <= q; ++i) labels.push_back("hi" + std::to_string(i));

    // Block of an index: 0 = bottom chain, 1 = inner, 2 = top chain.
    auto block = [&](int i) { return i < p ? 0 : (i < p + inner.size() ? 1 : 2); };
    BitMatrix leq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int bi = block(i);
            const int bj = block(j);
            bool rel = false;
            if (bi != bj)
                rel = bi < bj;
            else if (bi == 1)
                rel = inner.leq(i - p, j - p);
            else
                rel = i <= j;
            if (rel) leq.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return Poset(std::move(labels), std::move(leq), std::move(origin));
}

}  // namespace

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(std::vector<std::string> labels, BitMatrix leq, std::optional<PosetSpec> origin)
    : labels_(std::move(labels)), leq_(std::move(leq)), origin_(std::move(origin)) {
    const int n = size();
    if (leq_.size() != labels_.size())
        throw Error(ErrorKind::InvalidSpec, "relation matrix does not match the element count");
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[static_cast<std::size_t>(i)], i).second)
            throw Error(ErrorKind::InvalidSpec, "duplicate element label '" + labels_[static_cast<std::size_t>(i)] + "'");
        if (!leq_.test(i, i)) throw Error(ErrorKind::InvalidSpec, "relation is not reflexive");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_.test(i, j) && leq_.test(j, i))
                throw Error(ErrorKind::InvalidSpec, "relation is not antisymmetric");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!leq_.test(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (leq_.test(j, k) && !leq_.test(i, k))
                    throw Error(ErrorKind::InvalidSpec, "relation is not transitive");
        }

    // |down-set| strictly increases along the order, so sorting by it gives
    // a linear extension.
    std::vector<int> down(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_.test(j, i)) ++down[static_cast<std::size_t>(i)];
    linear_.resize(static_cast<std::size_t>(n));
    std::iota(linear_.begin(), linear_.end(), 0);
    std::stable_sort(linear_.begin(), linear_.end(), [&](int a, int b) {
        return down[static_cast<std::size_t>(a)] < down[static_cast<std::size_t>(b)];
    });

    // Transitive reduction: b covers a iff a < b with nothing strictly between.
    covers_.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) covers_[static_cast<std::size_t>(a)].push_back(b);
        }
    }
}

Poset Poset::from_relations(std::vector<std::string> labels,
                            std::span<const std::pair<int, int>> relations) {
    const std::size_t n = labels.size();
    BitMatrix leq(n);
    for (std::size_t i = 0; i < n; ++i) leq.set(i, i);
    for (auto [lo, hi] : relations) {
        if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n)
            throw Error(ErrorKind::UnknownElement, "relation refers to a missing element");
        leq.set(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq.test(i, k))
                for (std::size_t j = 0; j < n; ++j)
                    if (leq.test(k, j)) leq.set(i, j);
    return Poset(std::move(labels), std::move(leq));
}

Poset Poset::antichain(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return from_relations(std::move(labels), {});
}

int Poset::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "no element labeled '" + std::string(label) + "'");
    return it->second;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b : covers_[static_cast<std::size_t>(a)]) out.emplace_back(a, b);
    return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<std::string> labels, std::span<const std::pair<int, int>> edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw Error(ErrorKind::UnknownElement, "edge refers to a missing vertex");
        if (u == v) throw Error(ErrorKind::InvalidSpec, "self-loops are not allowed");
        adj_.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        adj_.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
    }
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(std::move(labels), edges);
}

Graph Graph::edgeless(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return Graph(std::move(labels), {});
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

// ---------------------------------------------------------------------------
// Builders and queries

std::vector<std::vector<int>> b3_coordinates(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "b3 parameter must be >= 1");
    std::vector<std::vector<int>> c = {
        {n + 1, 2, 2},  // a
        {n + 1, 1, 2},  // b
        {n, 2, 2},      // c
        {n + 1, 2, 1},  // d
        {n + 1, 1, 1},  // e
        {n, 2, 1},      // f
    };
    for (int i = 1; i <= n; ++i) {
        c.push_back({n + 1 - i, 1, 1});  // i'
        c.push_back({n + 1 - i, 1, 2});  // i
    }
    return c;
}

Poset build_poset(const PosetSpec& spec) {
    switch (spec.kind) {
        case PosetSpec::Kind::Chain: {
            const int n = spec.params.at(0);
            if (n < 1) throw Error(ErrorKind::InvalidSpec, "chain length must be >= 1");
            std::vector<std::string> labels;
            std::vector<std::vector<int>> coords;
            for (int i = 1; i <= n; ++i) {
                labels.push_back(std::to_string(i));
                coords.push_back({i});
            }
            return poset_from_coordinates(std::move(labels), coords, spec);
        }
        case PosetSpec::Kind::Product:
        case PosetSpec::Kind::Boolean: {
            std::vector<int> dims = spec.params;
            if (spec.kind == PosetSpec::Kind::Boolean) {
                if (spec.params.at(0) < 1) throw Error(ErrorKind::InvalidSpec, "boolean rank must be >= 1");
                dims.assign(static_cast<std::size_t>(spec.params[0]), 2);
            }
            if (dims.empty()) throw Error(ErrorKind::InvalidSpec, "product needs at least one factor");
            for (int d : dims)
                if (d < 1) throw Error(ErrorKind::InvalidSpec, "chain length must be >= 1");
            auto coords = product_coordinates(dims);
            std::vector<std::string> labels;
            for (const auto& c : coords) labels.push_back(coordinate_label(c));
            return poset_from_coordinates(std::move(labels), coords, spec);
        }
        case PosetSpec::Kind::B3: {
            const int n = spec.params.at(0);
            auto coords = b3_coordinates(n);
            std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
            for (int i = 1; i <= n; ++i) {
                labels.push_back(std::to_string(i) + "'");
                labels.push_back(std::to_string(i));
            }
            return poset_from_coordinates(std::move(labels), coords, spec);
        }
        case PosetSpec::Kind::OrdinalSum: {
            int p = spec.params.at(0);
            int q = spec.params.at(1);
            if (p < 0 || q < 0) throw Error(ErrorKind::InvalidSpec, "ordinal sum chains must be >= 0");
            if (!spec.inner) throw Error(ErrorKind::InvalidSpec, "ordinal sum without an inner poset");
            // Nested sums collapse: p1+(p2+L+q2)+q1 = (p1+p2)+L+(q2+q1).
            const PosetSpec* inner = spec.inner.get();
            while (inner->kind == PosetSpec::Kind::OrdinalSum) {
                p += inner->params.at(0);
                q += inner->params.at(1);
                inner = inner->inner.get();
            }
            return build_ordinal_sum(p, build_poset(*inner), q, spec);
        }
    }
    throw Error(ErrorKind::InvalidSpec, "unknown poset kind");
}

Graph incomparability_graph(const Poset& poset) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < poset.size(); ++u)
        for (int v = u + 1; v < poset.size(); ++v)
            if (!poset.comparable(u, v)) edges.emplace_back(u, v);
    return Graph(poset.labels(), edges);
}

bool is_chain_subset(const Poset& poset, std::span<const int> elements) {
    for (int e : elements)
        if (e < 0 || e >= poset.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (!poset.comparable(elements[i], elements[j])) return false;
    return true;
}

bool is_chain_subset(const Poset& poset, std::span<const std::string> labels) {
    std::vector<int> idx;
    for (const auto& l : labels) idx.push_back(poset.index_of(l));
    return is_chain_subset(poset, idx);
}

int max_chain_size(const Poset& poset) {
    std::vector<int> longest(static_cast<std::size_t>(poset.size()), 1);
    int best = 0;
    for (int v : poset.linear_extension()) {
        const int here = longest[static_cast<std::size_t>(v)];
        best = std::max(best, here);
        for (int w : poset.upper_covers(v))
            longest[static_cast<std::size_t>(w)] = std::max(longest[static_cast<std::size_t>(w)], here + 1);
    }
    return best;
}

std::optional<int> join(const Poset& poset, int a, int b) {
    for (int j = 0; j < poset.size(); ++j) {
        if (!poset.leq(a, j) || !poset.leq(b, j)) continue;
        bool least = true;
        for (int u = 0; u < poset.size() && least; ++u)
            if (poset.leq(a, u) && poset.leq(b, u) && !poset.leq(j, u)) least = false;
        if (least) return j;
    }
    return std::nullopt;
}

std::optional<int> meet(const Poset& poset, int a, int b) {
    for (int m = 0; m < poset.size(); ++m) {
        if (!poset.leq(m, a) || !poset.leq(m, b)) continue;
        bool greatest = true;
        for (int l = 0; l < poset.size() && greatest; ++l)
            if (poset.leq(l, a) && poset.leq(l, b) && !poset.leq(l, m)) greatest = false;
        if (greatest) return m;
    }
    return std::nullopt;
}

bool verify_distributive_lattice(const Poset& poset) {
    const int n = poset.size();
    if (n == 0) return false;
    std::vector<int> joins(static_cast<std::size_t>(n * n));
    std::vector<int> meets(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto j = join(poset, a, b);
            auto m = meet(poset, a, b);
            if (!j || !m) return false;
            joins[static_cast<std::size_t>(a * n + b)] = *j;
            meets[static_cast<std::size_t>(a * n + b)] = *m;
        }
    }
    auto J = [&](int x, int y) { return joins[static_cast<std::size_t>(x * n + y)]; };
    auto M = [&](int x, int y) { return meets[static_cast<std::size_t>(x * n + y)]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (M(a, J(b, c)) != J(M(a, b), M(a, c))) return false;
                if (J(a, M(b, c)) != M(J(a, b), J(a, c))) return false;
            }
    return true;
}

}  // namespace chromsym

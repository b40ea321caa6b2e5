#include "chromsym/chain_count.hpp"

#include <algorithm>

#include "chain_search.hpp"
#include "chromsym/error.hpp"

namespace chromsym {

using detail::Mask;
using detail::SizeCounts;
using detail::StateKey;

// ---------------------------------------------------------------------------
// Chain partitions of a poset

struct ScpCounter::Impl {
    detail::OrderMasks order;
    SearchLimits limits;
    SearchStats stats;
    std::unordered_map<StateKey, BigInt, detail::StateKeyHash> memo;

    Impl(const Poset& poset, SearchLimits lim) : order(poset), limits(lim) {}

    // Unordered chain partitions of `mask` with block sizes `counts`.
    BigInt unordered(Mask mask, SizeCounts& counts) {
        if (mask == 0) return 1;
        StateKey key{mask, counts};
        if (auto it = memo.find(key); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        detail::charge(stats, limits);
        BigInt total = 0;
        if (!detail::prune(order, mask, counts)) {
            // The lowest remaining element is minimal, so it is the bottom of
            // its block; enumerate that block by size, largest first.
            const int start = detail::lowest(mask);
            for (std::size_t s = counts.size(); s-- > 1;) {
                if (!counts[s]) continue;
                --counts[s];
                order.for_each_chain(start, static_cast<int>(s), mask, [&](Mask chain) {
                    total += unordered(mask & ~chain, counts);
                    return false;
                });
                ++counts[s];
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

ScpCounter::ScpCounter(const Poset& poset, SearchLimits limits)
    : impl_(std::make_unique<Impl>(poset, limits)) {}
ScpCounter::~ScpCounter() = default;
ScpCounter::ScpCounter(ScpCounter&&) noexcept = default;
ScpCounter& ScpCounter::operator=(ScpCounter&&) noexcept = default;

const SearchStats& ScpCounter::stats() const noexcept { return impl_->stats; }

BigInt ScpCounter::count(const Partition& type) {
    const int n = impl_->order.size();
    if (type.size() != n) throw Error(ErrorKind::SizeMismatch, "type must be a partition of the element count");
    SizeCounts counts = detail::size_counts(type, n);
    if (counts.empty()) return 0;
    return impl_->unordered(impl_->order.full(), counts) * detail::ordering_factor(type);
}

BigInt count_scp(const Poset& poset, const Partition& type, SearchStats* stats, SearchLimits limits) {
    if (type.size() != poset.size())
        throw Error(ErrorKind::SizeMismatch, "type must be a partition of the element count");
    if (!type.empty() && type[0] > max_chain_size(poset)) return 0;
    ScpCounter counter(poset, limits);
    BigInt result = counter.count(type);
    if (stats) *stats = counter.stats();
    return result;
}

// ---------------------------------------------------------------------------
// Stable partitions of a graph

namespace {

struct StableCounter {
    int n = 0;
    std::vector<Mask> non_adjacent;  // excluding the vertex itself
    SearchLimits limits;
    SearchStats stats;
    std::unordered_map<StateKey, BigInt, detail::StateKeyHash> memo;

    BigInt unordered(Mask mask, SizeCounts& counts) {
        if (mask == 0) return 1;
        StateKey key{mask, counts};
        if (auto it = memo.find(key); it != memo.end()) {
            ++stats.memo_hits;
            return it->second;
        }
        detail::charge(stats, limits);
        BigInt total = 0;
        const int start = detail::lowest(mask);
        for (std::size_t s = counts.size(); s-- > 1;) {
            if (!counts[s]) continue;
            --counts[s];
            const Mask cand = non_adjacent[static_cast<std::size_t>(start)] & mask & ~((Mask{2} << start) - 1);
            grow(Mask{1} << start, cand, static_cast<int>(s) - 1, mask, counts, total);
            ++counts[s];
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    // Independent sets: add vertices in increasing index order from `cand`.
    void grow(Mask block, Mask cand, int left, Mask mask, SizeCounts& counts, BigInt& total) {
        if (left == 0) {
            total += unordered(mask & ~block, counts);
            return;
        }
        if (detail::popcount(cand) < left) return;
        for (Mask c = cand; c; c &= c - 1) {
            const int v = detail::lowest(c);
            const Mask later = c & ~((Mask{2} << v) - 1);
            grow(block | (Mask{1} << v), later & non_adjacent[static_cast<std::size_t>(v)], left - 1, mask,
                 counts, total);
        }
    }
};

}  // namespace

BigInt count_semiordered_stable_partitions(const Graph& graph, const Partition& type, SearchStats* stats,
                                           SearchLimits limits) {
    const int n = graph.size();
    if (type.size() != n) throw Error(ErrorKind::SizeMismatch, "type must be a partition of the vertex count");
    if (n > 64) throw Error(ErrorKind::TooLarge, "exhaustive stable partition search supports at most 64 vertices");
    StableCounter counter;
    counter.n = n;
    counter.limits = limits;
    counter.non_adjacent.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !graph.adjacent(u, v)) counter.non_adjacent[static_cast<std::size_t>(u)] |= Mask{1} << v;
    SizeCounts counts = detail::size_counts(type, n);
    BigInt result = 0;
    if (!counts.empty()) {
        const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        result = counter.unordered(full, counts) * detail::ordering_factor(type);
    }
    if (stats) *stats = counter.stats;
    return result;
}

// ---------------------------------------------------------------------------
// Closed form for products of two chains

StaircaseContext StaircaseContext::make(int m, int n) {
    if (n < 1 || m < n) throw Error(ErrorKind::PreconditionViolated, "staircase needs m >= n >= 1");
    std::vector<int> prefix;
    for (int i = 1; i <= n - 1; ++i) prefix.push_back(m + n - 2 * i + 1);
    return {m, n, Partition(std::move(prefix))};
}

bool StaircaseContext::applies_to(const Partition& type) const {
    if (type.size() != m * n) return false;
    for (std::size_t i = 0; i < staircase.length(); ++i)
        if (type[i] != staircase[i]) return false;
    return type.length() >= staircase.length() + 1;
}

MultiplicityProfile StaircaseContext::tail_profile(const Partition& type) const {
    return multiplicity_profile(suffix(type, n));
}

namespace {

// Cartesian product over the part sizes of the tail: for part size k with
// multiplicity α_k choose how many blocks of size k each of the n leftover
// chains receives.
struct ClosedFormSum {
    int n;
    std::vector<std::pair<int, int>> profile;
    std::vector<std::vector<WeakComposition>> choices;
    std::vector<BigInt> fact;
    std::vector<int> load;        // elements assigned to each leftover chain
    std::vector<std::vector<int>> blocks;  // block sizes assigned to each leftover chain
    BigInt total = 0;

    void run(std::size_t k_index, const BigInt& weight) {
        if (k_index == profile.size()) {
            BigInt term = weight;
            for (int j = 0; j < n; ++j) {
                // s_j! / ∏ (k!)^{a_kj}: ordered chain partitions of a chain
                // of s_j elements into the assigned block sizes.
                BigInt denom = 1;
                for (int b : blocks[static_cast<std::size_t>(j)]) denom *= fact[static_cast<std::size_t>(b)];
                const BigInt& numer = fact[static_cast<std::size_t>(load[static_cast<std::size_t>(j)])];
                CHROMSYM_ENSURE(mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()),
                                "closed form: factorial quotient is not integral");
                BigInt q;
                mpz_divexact(q.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
                term *= q;
            }
            total += term;
            return;
        }
        const auto [part, alpha] = profile[k_index];
        for (const WeakComposition& a : choices[k_index]) {
            for (int j = 0; j < n; ++j) {
                load[static_cast<std::size_t>(j)] += part * a[static_cast<std::size_t>(j)];
                blocks[static_cast<std::size_t>(j)].insert(blocks[static_cast<std::size_t>(j)].end(),
                                                           static_cast<std::size_t>(a[static_cast<std::size_t>(j)]), part);
            }
            run(k_index + 1, weight * multinomial(alpha, a));
            for (int j = 0; j < n; ++j) {
                load[static_cast<std::size_t>(j)] -= part * a[static_cast<std::size_t>(j)];
                auto& b = blocks[static_cast<std::size_t>(j)];
                b.resize(b.size() - static_cast<std::size_t>(a[static_cast<std::size_t>(j)]));
            }
        }
    }
};

}  // namespace

BigInt scp_closed_form(const StaircaseContext& ctx, const Partition& type) {
    if (type.size() != ctx.m * ctx.n)
        throw Error(ErrorKind::SizeMismatch, "type must be a partition of m*n");
    if (!ctx.applies_to(type))
        throw Error(ErrorKind::PreconditionViolated,
                    "type " + type.to_string() + " does not start with the staircase prefix of " +
                        std::to_string(ctx.m) + "x" + std::to_string(ctx.n));
    const MultiplicityProfile tail = ctx.tail_profile(type);
    CHROMSYM_ENSURE(tail.size() == ctx.m - ctx.n + 1, "staircase tail must sum to m-n+1");

    ClosedFormSum sum{ctx.n, tail.counts, {}, {}, std::vector<int>(static_cast<std::size_t>(ctx.n), 0),
                      std::vector<std::vector<int>>(static_cast<std::size_t>(ctx.n)), 0};
    for (auto [part, alpha] : tail.counts) sum.choices.push_back(weak_compositions(alpha, ctx.n));
    const int top = ctx.m - ctx.n + 1;
    sum.fact.reserve(static_cast<std::size_t>(top) + 1);
    sum.fact.emplace_back(1);
    for (int i = 1; i <= top; ++i) sum.fact.push_back(sum.fact.back() * i);
    sum.run(0, 1);
    return factorial(ctx.n - 1) * sum.total;
}

std::optional<Partition> forced_content_prefix(const Partition& shape, int m, int n) {
    if (shape.size() != m * n) throw Error(ErrorKind::SizeMismatch, "shape must be a partition of m*n");
    if (n < 1 || m < n) return std::nullopt;
    std::vector<int> prefix;
    for (int i = 1; i <= n - 1; ++i) {
        const int want = m + n - 2 * i + 1;
        if (shape[static_cast<std::size_t>(i - 1)] != want) return std::nullopt;
        prefix.push_back(want);
    }
    return Partition(std::move(prefix));
}

// ---------------------------------------------------------------------------
// The six surviving tabloids of rho(n,k)

namespace {

void require_proof_range(int n, int k) {
    if (k < 5 || n < 2) throw Error(ErrorKind::PreconditionViolated, "needs k >= 5 and n >= 2");
}

std::vector<int> delta(int n, int k) {
    std::vector<int> d;
    for (int i = 1; i <= n - 1; ++i) d.push_back(2 * n + k - 2 * i + 1);
    return d;
}

BigInt exact_div(const BigInt& a, long d) {
    BigInt q;
    CHROMSYM_ENSURE(mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d)) != 0,
                    "closed-form polynomial is not integral");
    mpz_divexact_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(d));
    return q;
}

}  // namespace

std::array<Partition, 6> proof_case_contents(int n, int k) {
    require_proof_range(n, k);
    auto with_tail = [&](std::initializer_list<int> tail) {
        std::vector<int> parts = delta(n, k);
        parts.insert(parts.end(), tail);
        return Partition::sorted(std::move(parts));
    };
    return {with_tail({k - 1, 2}), with_tail({k - 1, 1, 1}), with_tail({k - 2, 3}),
            with_tail({k - 2, 2, 1}), with_tail({k - 3, 3, 1}), with_tail({k - 3, 2, 2})};
}

std::array<BigInt, 6> proof_case_closed_forms(int n_int, int k_int) {
    require_proof_range(n_int, k_int);
    const BigInt n = n_int;
    const BigInt k = k_int;
    const BigInt nf = factorial(n_int);
    std::array<BigInt, 6> v;
    v[0] = nf * (n + exact_div(k * k + k - 2, 2));
    v[1] = nf * (n * n + (2 * k - 1) * n + (k * k - k));
    if (k_int == 5)
        v[2] = nf * (n + 19);
    else
        v[2] = nf * (n + exact_div(k * k * k - k - 6, 6));
    v[3] = nf * (n * n + exact_div(k * k + k - 2, 2) * n + exact_div(k * k * k - k * k - 2 * k, 2));
    if (k_int == 6)
        v[4] = nf * (n * n + 25 * n + 114);
    else
        v[4] = nf * (n * n + exact_div(k * k * k - 3 * k * k + 8 * k - 6, 6) * n +
                     exact_div(k * k * k * k - 3 * k * k * k + 2 * k * k - 6 * k, 6));
    if (k_int == 5)
        v[5] = nf * (n * n + 15 * n + 74);
    else
        v[5] = nf * (n * n + (k * k - 3 * k + 5) * n + exact_div(k * k * k * k - 2 * k * k * k - 5 * k * k + 14 * k - 24, 4));
    return v;
}

}  // namespace chromsym

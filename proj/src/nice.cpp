#include "chromsym/nice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "chain_search.hpp"
#include "chromsym/error.hpp"

namespace chromsym {

using detail::Mask;
using detail::SizeCounts;
using detail::StateKey;

struct ChainPartitionSearch::Impl {
    detail::OrderMasks order;
    SearchLimits limits;
    SearchStats stats;
    std::unordered_set<StateKey, detail::StateKeyHash> failures;
    std::vector<Mask> chosen;

    Impl(const Poset& poset, SearchLimits lim) : order(poset), limits(lim) {}

    bool search(Mask mask, SizeCounts& counts) {
        if (mask == 0) return true;
        StateKey key{mask, counts};
        if (failures.count(key)) {
            ++stats.memo_hits;
            return false;
        }
        detail::charge(stats, limits);
        if (!detail::prune(order, mask, counts)) {
            const int start = detail::lowest(mask);
            for (std::size_t s = counts.size(); s-- > 1;) {
                if (!counts[s]) continue;
                --counts[s];
                const bool found = order.for_each_chain(start, static_cast<int>(s), mask, [&](Mask chain) {
                    chosen.push_back(chain);
                    if (search(mask & ~chain, counts)) return true;
                    chosen.pop_back();
                    return false;
                });
                ++counts[s];
                if (found) return true;
            }
        }
        failures.insert(std::move(key));
        return false;
    }
};

ChainPartitionSearch::ChainPartitionSearch(const Poset& poset, SearchLimits limits)
    : impl_(std::make_unique<Impl>(poset, limits)) {}
ChainPartitionSearch::~ChainPartitionSearch() = default;
ChainPartitionSearch::ChainPartitionSearch(ChainPartitionSearch&&) noexcept = default;
ChainPartitionSearch& ChainPartitionSearch::operator=(ChainPartitionSearch&&) noexcept = default;

const SearchStats& ChainPartitionSearch::stats() const noexcept { return impl_->stats; }

std::optional<ChainPartitionCertificate> ChainPartitionSearch::find(const Partition& type) {
    const int n = impl_->order.size();
    if (type.size() != n) throw Error(ErrorKind::SizeMismatch, "type must be a partition of the element count");
    SizeCounts counts = detail::size_counts(type, n);
    if (counts.empty()) return std::nullopt;
    impl_->chosen.clear();
    if (!impl_->search(impl_->order.full(), counts)) return std::nullopt;

    ChainPartitionCertificate cert{type, {}};
    for (Mask chain : impl_->chosen) {
        auto& block = cert.blocks.emplace_back();
        // Internal positions follow a linear extension: bottom to top.
        for (Mask m = chain; m; m &= m - 1) block.push_back(impl_->order.element(detail::lowest(m)));
    }
    std::stable_sort(cert.blocks.begin(), cert.blocks.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return cert;
}

std::optional<ChainPartitionCertificate> chain_partition_exists(const Poset& poset, const Partition& type,
                                                                SearchLimits limits, SearchStats* stats) {
    ChainPartitionSearch search(poset, limits);
    auto cert = search.find(type);
    if (stats) *stats = search.stats();
    if (cert) CHROMSYM_ENSURE(validate_certificate(poset, *cert), "search produced an invalid certificate");
    return cert;
}

NiceVerdict is_nice(const Poset& poset, const NiceOptions& options) {
    if (poset.size() > options.max_elements)
        throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(poset.size()) +
                                             " elements; the niceness limit is " + std::to_string(options.max_elements));
    ChainPartitionSearch search(poset, options.limits);
    NiceVerdict verdict;
    const auto types = partitions_of(poset.size());
    std::vector<std::optional<ChainPartitionCertificate>> certs;
    certs.reserve(types.size());
    for (const Partition& type : types) {
        certs.push_back(search.find(type));
        if (certs.back()) verdict.achieved_types.push_back(type);
    }
    verdict.stats = search.stats();

    // Witness: the lexicographically first unachievable mu lying below an
    // achieved type, paired with the lexicographically first achieved lambda
    // above it, where "first" follows reverse-lexicographic enumeration.
    for (std::size_t j = 0; j < types.size() && verdict.nice; ++j) {
        if (certs[j]) continue;
        for (std::size_t i = 0; i < types.size(); ++i) {
            if (certs[i] && dominance_leq(types[j], types[i])) {
                verdict.nice = false;
                verdict.witness = std::pair{types[i], types[j]};
                verdict.witness_certificate = certs[i];
                break;
            }
        }
    }
    return verdict;
}

Partition staircase_type(int m, int n) {
    if (n < 1 || m < n) throw Error(ErrorKind::PreconditionViolated, "staircase type needs m >= n >= 1");
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(m + n - 2 * i + 1);
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Chain family determined by (sigma, upsilon)

ChainFamily parameterized_chain_family(const ChainFamilyParams& params) {
    const int m = params.m;
    const int n = params.n;
    if (n < 1 || m < n) throw Error(ErrorKind::InvalidParams, "chain family needs m >= n >= 1");
    const auto chains_count = static_cast<std::size_t>(n - 1);
    if (params.sigma.size() != chains_count) throw Error(ErrorKind::InvalidParams, "sigma must have n-1 entries");
    {
        std::vector<int> s = params.sigma;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != static_cast<int>(i) + 1) throw Error(ErrorKind::InvalidParams, "sigma is not a permutation of 1..n-1");
    }
    std::vector<int> r = params.upsilon;
    std::sort(r.begin(), r.end());
    if (r.size() != chains_count || std::adjacent_find(r.begin(), r.end()) != r.end() ||
        (!r.empty() && (r.front() < 1 || r.back() > m)))
        throw Error(ErrorKind::InvalidParams, "upsilon must be an (n-1)-subset of 1..m");

    ChainFamily family;
    family.chains.assign(chains_count, {});
    auto chain = [&](int label) -> std::vector<GridPoint>& { return family.chains[static_cast<std::size_t>(label - 1)]; };

    // Ranks n-2 .. m: the chain at position i runs along row n-i up to r_i,
    // then along row n-i+1.
    for (int i = 1; i <= n - 1; ++i) {
        const int ri = r[static_cast<std::size_t>(i - 1)];
        auto& c = chain(params.sigma[static_cast<std::size_t>(i - 1)]);
        for (int x = i; x <= ri; ++x) c.emplace_back(x, n - i);
        for (int x = ri; x <= m - n + 1 + i; ++x) c.emplace_back(x, n - i + 1);
    }
    // Ranks i-1 and m+n-i-1 for i < n-1: the k-th element from the left goes
    // to the chain sigma^(i)_k (sigma restricted to values <= i).
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<int> restricted;
        for (int v : params.sigma)
            if (v <= i) restricted.push_back(v);
        for (int k = 1; k <= i; ++k) {
            auto& c = chain(restricted[static_cast<std::size_t>(k - 1)]);
            c.emplace_back(k, i + 1 - k);
            c.emplace_back(m - i + k, n + 1 - k);
        }
    }

    std::vector<int> owner(static_cast<std::size_t>(m * n), 0);
    auto cell = [&](GridPoint p) -> int& {
        return owner[static_cast<std::size_t>((p.first - 1) * n + (p.second - 1))];
    };
    for (std::size_t j = 0; j < family.chains.size(); ++j) {
        auto& c = family.chains[j];
        std::sort(c.begin(), c.end(), [](GridPoint a, GridPoint b) {
            return a.first + a.second < b.first + b.second;
        });
        CHROMSYM_ENSURE(static_cast<int>(c.size()) == m + n - 2 * static_cast<int>(j) - 1,
                        "chain family: wrong chain size");
        for (std::size_t t = 0; t < c.size(); ++t) {
            CHROMSYM_ENSURE(c[t].first >= 1 && c[t].first <= m && c[t].second >= 1 && c[t].second <= n,
                            "chain family: point outside the grid");
            CHROMSYM_ENSURE(cell(c[t])++ == 0, "chain family: chains overlap");
            if (t > 0) {
                const auto [x0, y0] = c[t - 1];
                const auto [x1, y1] = c[t];
                CHROMSYM_ENSURE(x0 <= x1 && y0 <= y1 && x1 + y1 == x0 + y0 + 1, "chain family: not a saturated chain");
            }
        }
    }

    std::vector<int> bounds = {0};
    bounds.insert(bounds.end(), r.begin(), r.end());
    bounds.push_back(m + 1);
    for (int i = 1; i <= n; ++i) {
        auto& leftover = family.leftovers.emplace_back();
        for (int x = bounds[static_cast<std::size_t>(i - 1)] + 1; x <= bounds[static_cast<std::size_t>(i)] - 1; ++x) {
            leftover.emplace_back(x, n + 1 - i);
            CHROMSYM_ENSURE(cell(leftover.back())++ == 0, "chain family: leftover overlaps a chain");
        }
    }
    CHROMSYM_ENSURE(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }),
                    "chain family: chains and leftovers do not cover the grid");
    // Leftover rows are pairwise incomparable: R_i sits strictly right of and
    // below R_{i-1}.
    for (std::size_t a = 0; a < family.leftovers.size(); ++a)
        for (std::size_t b = a + 1; b < family.leftovers.size(); ++b)
            for (auto [x0, y0] : family.leftovers[a])
                for (auto [x1, y1] : family.leftovers[b])
                    CHROMSYM_ENSURE(!((x0 <= x1 && y0 <= y1) || (x1 <= x0 && y1 <= y0)),
                                    "chain family: leftover rows are comparable");
    return family;
}

// ---------------------------------------------------------------------------
// Ordinal sums p + (m x n) + q

OrdinalSumPartition ordinal_sum_chain_partition(int p, int q, int m, int n, const Partition& mu) {
    if (p < 0 || q < 0 || m < 1 || n < 1) throw Error(ErrorKind::PreconditionViolated, "needs p, q >= 0 and m, n >= 1");
    const Partition lambda = staircase_type(std::max(m, n), std::min(m, n));
    std::vector<int> shifted = lambda.parts();
    shifted[0] += p + q;
    OrdinalSumPartition out{build_poset(PosetSpec::ordinal_sum(p, PosetSpec::product({m, n}), q)),
                            Partition(std::move(shifted)), {}, {}, {}};
    if (mu.size() != m * n + p + q) throw Error(ErrorKind::SizeMismatch, "mu must be a partition of mn+p+q");
    if (!dominance_leq(mu, out.staircase_shifted))
        throw Error(ErrorKind::PreconditionViolated,
                    "mu " + mu.to_string() + " is not dominated by " + out.staircase_shifted.to_string());

    // t_j = max(0, sum_{i<=j} mu_i - sum_{i<=j} lambda_i - sum_{i<j} t_i)
    const std::size_t len = mu.length();
    int mu_sum = 0;
    int lambda_sum = 0;
    int t_sum = 0;
    std::vector<int> nu(len);
    for (std::size_t j = 0; j < len; ++j) {
        mu_sum += mu[j];
        lambda_sum += lambda[j];
        const int t = std::max(0, mu_sum - lambda_sum - t_sum);
        out.t.push_back(t);
        t_sum += t;
        nu[j] = mu[j] - t;
        CHROMSYM_ENSURE(mu_sum - t_sum <= lambda_sum, "ordinal sum: prefix bound violated");
    }
    CHROMSYM_ENSURE(t_sum == p + q, "ordinal sum: pieces do not use the whole (p+q)-chain");
    for (std::size_t j = 0; j < len; ++j) {
        CHROMSYM_ENSURE(nu[j] >= 0, "ordinal sum: negative block");
        CHROMSYM_ENSURE(j == 0 || nu[j] <= nu[j - 1], "ordinal sum: nu is not weakly decreasing");
    }
    out.nu = Partition::sorted(nu);
    CHROMSYM_ENSURE(dominance_leq(out.nu, lambda), "ordinal sum: nu is not dominated by the staircase");

    const Poset inner = build_poset(PosetSpec::product({m, n}));
    auto inner_cert = chain_partition_exists(inner, out.nu);
    CHROMSYM_ENSURE(inner_cert.has_value(), "ordinal sum: no chain partition of the inner product");

    // The (p+q)-chain in order: lo1..lop (indices 0..p-1), then hi1..hiq.
    std::vector<int> outer_chain;
    for (int i = 0; i < p; ++i) outer_chain.push_back(i);
    for (int i = 0; i < q; ++i) outer_chain.push_back(p + m * n + i);

    out.certificate.type = mu;
    std::size_t next = 0;
    for (std::size_t j = 0; j < len; ++j) {
        std::vector<int> below;
        std::vector<int> above;
        for (int c = 0; c < out.t[j]; ++c) {
            const int e = outer_chain[next++];
            (e < p ? below : above).push_back(e);
        }
        auto& block = out.certificate.blocks.emplace_back(below);
        if (nu[j] > 0)
            for (int e : inner_cert->blocks[j]) block.push_back(e + p);
        block.insert(block.end(), above.begin(), above.end());
    }
    std::string why;
    CHROMSYM_ENSURE(validate_certificate(out.poset, out.certificate, &why), "ordinal sum: invalid certificate: " + why);
    return out;
}

}  // namespace chromsym

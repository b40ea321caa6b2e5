#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>

#include "chromsym/partition.hpp"
#include "chromsym/poset.hpp"

namespace chromsym {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

struct SearchLimits {
    // Zero means unlimited; exceeding it throws BudgetExceeded.
    std::uint64_t max_nodes = 0;
};

/// Number of ordered tuples of disjoint independent sets covering V(G) whose
/// sizes read `type` (equal sizes are distinguished by position).
BigInt count_semiordered_stable_partitions(const Graph& graph, const Partition& type,
                                           SearchStats* stats = nullptr, SearchLimits limits = {});

/// |SCP_{P,type}|: semi-ordered chain partitions of P of the given type,
/// counted by backtracking directly on the order.
BigInt count_scp(const Poset& poset, const Partition& type, SearchStats* stats = nullptr,
                 SearchLimits limits = {});

/// Reusable counter for many types on one poset; the memo table is shared
/// between calls. Not thread-safe.
class ScpCounter {
public:
    explicit ScpCounter(const Poset& poset, SearchLimits limits = {});
    ~ScpCounter();
    ScpCounter(ScpCounter&&) noexcept;
    ScpCounter& operator=(ScpCounter&&) noexcept;

    BigInt count(const Partition& type);
    const SearchStats& stats() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// The product of chains m x n (m >= n >= 1) together with its staircase
/// prefix (m+n-1, m+n-3, ..., m-n+3).
struct StaircaseContext {
    int m = 0;
    int n = 0;
    Partition staircase;

    static StaircaseContext make(int m, int n);

    // True when type has the staircase as its first n-1 parts and sums to m*n.
    bool applies_to(const Partition& type) const;
    // Profile of the parts after the staircase prefix; sums to m-n+1.
    MultiplicityProfile tail_profile(const Partition& type) const;
};

/// Closed-form |SCP_{m x n, type}| for types whose first n-1 parts are the
/// staircase prefix. All arithmetic is exact integer arithmetic.
BigInt scp_closed_form(const StaircaseContext& ctx, const Partition& type);

/// When shape starts with the staircase prefix of m x n, every content with
/// a nonzero chain-partition count must start with the same prefix; returns
/// that prefix. Absent when the shape does not start with it.
std::optional<Partition> forced_content_prefix(const Partition& shape, int m, int n);

/// The six tabloids of shape rho(n,k) whose contents survive the forced
/// prefix, in the order T1..T6.
std::array<Partition, 6> proof_case_contents(int n, int k);
inline constexpr std::array<int, 6> kProofCaseHeights = {3, 2, 2, 1, 1, 0};

/// Polynomial closed forms for |SCP_{(n+k) x n, cont(T_i)}|, i = 1..6.
std::array<BigInt, 6> proof_case_closed_forms(int n, int k);

}  // namespace chromsym

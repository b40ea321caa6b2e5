#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromsym/chain_count.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/poset.hpp"

namespace chromsym {

/// Blocks of a chain partition, each listed bottom to top, largest block first.
struct ChainPartitionCertificate {
    Partition type;
    std::vector<std::vector<int>> blocks;

    std::vector<std::vector<std::string>> labeled(const Poset& poset) const;
};

/// Re-checks a certificate from scratch: blocks are disjoint chains covering
/// the poset and their sizes, sorted, equal the claimed type.
bool validate_certificate(const Poset& poset, const ChainPartitionCertificate& cert, std::string* why = nullptr);

/// Exhaustive existence search with a failure memo shared across queries.
class ChainPartitionSearch {
public:
    explicit ChainPartitionSearch(const Poset& poset, SearchLimits limits = {});
    ~ChainPartitionSearch();
    ChainPartitionSearch(ChainPartitionSearch&&) noexcept;
    ChainPartitionSearch& operator=(ChainPartitionSearch&&) noexcept;

    std::optional<ChainPartitionCertificate> find(const Partition& type);
    const SearchStats& stats() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::optional<ChainPartitionCertificate> chain_partition_exists(const Poset& poset, const Partition& type,
                                                                SearchLimits limits = {},
                                                                SearchStats* stats = nullptr);

struct NiceOptions {
    int max_elements = 20;
    SearchLimits limits;
};

struct NiceVerdict {
    bool nice = true;
    // (achieved lambda, unachievable mu) with mu below lambda in dominance.
    std::optional<std::pair<Partition, Partition>> witness;
    std::optional<ChainPartitionCertificate> witness_certificate;
    // Every achievable chain-partition type, in reverse-lexicographic order.
    std::vector<Partition> achieved_types;
    SearchStats stats;
};

NiceVerdict is_nice(const Poset& poset, const NiceOptions& options = {});

/// (m+n-1, m+n-3, ..., m-n+1), the dominance-largest chain-partition type of m x n.
Partition staircase_type(int m, int n);

/// Parameters of the chain family inside m x n: sigma is a permutation of
/// 1..n-1 (sigma[k-1] is the chain through the k-th rank n-2 element from the
/// left) and upsilon an (n-1)-subset of 1..m.
struct ChainFamilyParams {
    int m = 0;
    int n = 0;
    std::vector<int> sigma;
    std::vector<int> upsilon;
};

using GridPoint = std::pair<int, int>;  // (x, y) with 1 <= x <= m, 1 <= y <= n

struct ChainFamily {
    // chains[i] is C_{i+1}, of size m+n-2i-1, bottom to top.
    std::vector<std::vector<GridPoint>> chains;
    // leftovers[i] is R_{i+1}; each is a chain along a row, possibly empty.
    std::vector<std::vector<GridPoint>> leftovers;
};

ChainFamily parameterized_chain_family(const ChainFamilyParams& params);

struct OrdinalSumPartition {
    Poset poset;  // p + (m x n) + q
    Partition staircase_shifted;  // (lambda_1 + p + q, lambda_2, ..., lambda_n)
    std::vector<int> t;  // pieces of the (p+q)-chain attached to each block
    Partition nu;        // type used inside m x n
    ChainPartitionCertificate certificate;
};

/// Constructive chain partition of p + (m x n) + q of any type dominated by
/// the shifted staircase.
OrdinalSumPartition ordinal_sum_chain_partition(int p, int q, int m, int n, const Partition& mu);

}  // namespace chromsym

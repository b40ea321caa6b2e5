#pragma once

#include <map>
#include <string>

#include "chromsym/chain_count.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/poset.hpp"

namespace chromsym {

/// Coefficients of X in the Schur basis; partitions with coefficient zero
/// are absent.
struct SchurExpansion {
    int degree = 0;
    std::map<Partition, BigInt, std::greater<>> coeffs;

    BigInt coefficient(const Partition& shape) const;
    bool nonnegative() const;
};

/// Coefficients of X_G in the monomial basis; every partition of |V| is present.
struct MonomialExpansion {
    int degree = 0;
    std::map<Partition, BigInt, std::greater<>> coeffs;

    BigInt coefficient(const Partition& shape) const;
};

enum class SchurMethod { TabloidBrute, TabloidClosed, Auto };

const char* to_string(SchurMethod method) noexcept;
SchurMethod parse_schur_method(std::string_view text);

struct SchurOptions {
    // Largest poset for which schur_expansion enumerates every shape.
    int max_elements = 12;
    // Worker cap for per-content counting; 0 uses default_thread_count().
    int threads = 0;
    SearchLimits limits;
};

int default_thread_count();

MonomialExpansion monomial_expansion(const Graph& graph, SearchLimits limits = {});

struct CoefficientResult {
    BigInt value;
    SchurMethod method_used = SchurMethod::TabloidBrute;
    std::size_t tabloids = 0;  // tabloids whose count entered the sum
    SearchStats stats;
};

/// [s_shape] X_inc(P) as a signed sum over special rim hook tabloids of the
/// shape, each weighted by the chain-partition count of its content.
CoefficientResult schur_coefficient_detailed(const Poset& poset, const Partition& shape,
                                             SchurMethod method = SchurMethod::Auto,
                                             SearchLimits limits = {});
BigInt schur_coefficient(const Poset& poset, const Partition& shape, SchurMethod method = SchurMethod::Auto);

/// The closed fast path for the product of chains m x n, without building
/// the poset. Throws FastPathInapplicable unless the shape starts with the
/// staircase prefix.
BigInt schur_coefficient_two_chain(int m, int n, const Partition& shape, std::size_t* tabloids = nullptr);

SchurExpansion schur_expansion(const Poset& poset, const SchurOptions& options = {});

/// (2n+k-1, 2n+k-3, ..., k+3, k-3, 2, 2), a partition of n(n+k).
Partition rho_shape(int n, int k);

/// Closed-form value of [s_rho(n,k)] X_inc((n+k) x n).
BigInt theorem41_coefficient(int n, int k);

/// [s_shape_tilde] X_inc(p + (m x n) + q), which equals [s_rho] X_inc(m x n)
/// where rho is shape_tilde with p+q removed from its first part.
BigInt pieri_shift_coefficient(int p, int q, int m, int n, const Partition& shape_tilde);

}  // namespace chromsym

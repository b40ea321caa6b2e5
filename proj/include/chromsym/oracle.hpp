#pragma once

#include <map>
#include <vector>

#include "chromsym/partition.hpp"
#include "chromsym/poset.hpp"

// Slow reference computations that share no code with the counting engines.
// Used by the acceptance suite and the unit tests as cross-checks.
namespace chromsym::oracle {

/// Proper colorings using color i exactly lambda_i times, for every
/// partition lambda of |V|. This is the monomial coefficient vector of X_G.
std::map<Partition, BigInt, std::greater<>> coloring_monomial_vector(const Graph& graph);

/// Proper colorings of the graph with at most `colors` colors.
BigInt proper_coloring_count(const Graph& graph, int colors);

/// m_lambda evaluated at N ones: the number of distinct arrangements of
/// lambda padded with zeros to length N.
BigInt monomial_at_ones(const Partition& lambda, int colors);

/// Square matrix indexed by partitions_of(n) in that order.
using Matrix = std::vector<std::vector<BigInt>>;

/// Kostka numbers by enumerating semistandard tableaux cell by cell.
Matrix kostka_matrix(int n);

/// Inverse of a unitriangular integer matrix by back substitution.
Matrix invert_unitriangular(const Matrix& upper);

/// Schur coefficients from monomial coefficients through the inverted
/// Kostka matrix.
std::map<Partition, BigInt, std::greater<>> schur_from_monomials(
    int n, const std::map<Partition, BigInt, std::greater<>>& monomial);

}  // namespace chromsym::oracle

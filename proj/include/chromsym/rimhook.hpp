#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromsym/partition.hpp"

namespace chromsym {

// Rows and columns are 1-based; row 1 is the longest row.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using RimHook = std::vector<Cell>;

/// A tiling of a Ferrers shape by rim hooks that each meet the first column.
///
/// `hooks` is ordered by the row of the hook's first-column cells starting
/// from row 1, so hooks.front() always contains cell (1,1) and hooks.back()
/// contains the first cell of the last row. Peeling hooks from the back
/// leaves a Ferrers shape at every step.
struct SpecialRimHookTabloid {
    Partition shape;
    std::vector<RimHook> hooks;

    Partition content() const;
    int height() const;
    // Hook sizes in `hooks` order.
    std::vector<int> hook_sizes() const;

    std::string render() const;
};

int height(const SpecialRimHookTabloid& t);

// Number of rows the hook spans, minus one.
int hook_height(const RimHook& hook);

struct TabloidFamily {
    Partition shape;
    std::vector<SpecialRimHookTabloid> tabloids;
};

/// All special rim hook tabloids of `shape`, optionally only those whose
/// content equals `content_filter`. Ordered lexicographically by hook_sizes().
TabloidFamily enumerate_srht(const Partition& shape,
                             const std::optional<Partition>& content_filter = std::nullopt);

/// Tabloids using at most quota[s] hooks of size s; sizes past the end of
/// `quota` are not allowed. An empty quota means no bound.
TabloidFamily enumerate_srht_bounded(const Partition& shape, std::vector<int> quota);

// Every tabloid invariant: hooks are connected ribbons meeting column 1, tile
// the shape, peel off to Ferrers shapes, and sh <= cont in dominance.
bool is_valid_tabloid(const SpecialRimHookTabloid& t);

/// Signed count of tabloids of shape `lambda` and content `mu`; this is the
/// coefficient of s_lambda in m_mu.
BigInt inverse_kostka(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
BigInt kostka_number(const Partition& lambda, const Partition& mu);

}  // namespace chromsym

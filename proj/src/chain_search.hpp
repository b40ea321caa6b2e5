#pragma once

// Backtracking over chain partitions of a poset with at most 64 elements.
// Elements are renumbered along a linear extension so that the lowest set
// bit of any subset is a minimal element of that subset.

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chromsym/chain_count.hpp"
#include "chromsym/error.hpp"
#include "chromsym/poset.hpp"

namespace chromsym::detail {

using Mask = std::uint64_t;

inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

// Remaining block sizes as a multiplicity vector indexed by size.
using SizeCounts = std::vector<std::uint8_t>;

struct StateKey {
    Mask mask;
    SizeCounts counts;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::size_t h = std::hash<Mask>{}(k.mask);
        for (auto c : k.counts) h = h * 1099511628211ULL + c;
        return h;
    }
};

class OrderMasks {
public:
    explicit OrderMasks(const Poset& poset) {
        if (poset.size() > 64)
            throw Error(ErrorKind::TooLarge, "exhaustive chain search supports at most 64 elements");
        n_ = poset.size();
        order_ = poset.linear_extension();
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        up_.assign(static_cast<std::size_t>(n_), 0);
        down_.assign(static_cast<std::size_t>(n_), 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (poset.less(a, b)) {
                    const auto pa = static_cast<std::size_t>(pos[static_cast<std::size_t>(a)]);
                    const auto pb = static_cast<std::size_t>(pos[static_cast<std::size_t>(b)]);
                    up_[pa] |= Mask{1} << pb;
                    down_[pb] |= Mask{1} << pa;
                }
    }

    int size() const noexcept { return n_; }
    Mask full() const noexcept { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
    Mask up(int i) const noexcept { return up_[static_cast<std::size_t>(i)]; }
    Mask down(int i) const noexcept { return down_[static_cast<std::size_t>(i)]; }
    // Original element index of internal position i.
    int element(int i) const noexcept { return order_[static_cast<std::size_t>(i)]; }

    // Lower bound on the width of `mask`: the larger of its minimal elements,
    // its maximal elements and a greedy antichain.
    int width_lower_bound(Mask mask) const noexcept {
        int minimal = 0;
        int maximal = 0;
        Mask greedy = 0;
        for (Mask m = mask; m; m &= m - 1) {
            const int i = lowest(m);
            if (!(down(i) & mask)) ++minimal;
            if (!(up(i) & mask)) ++maximal;
            if (!((up(i) | down(i)) & greedy)) greedy |= Mask{1} << i;
        }
        return std::max({minimal, maximal, popcount(greedy)});
    }

    int longest_chain(Mask mask) const {
        int best = 0;
        int len[64];
        for (Mask m = mask; m; m &= m - 1) {
            const int i = lowest(m);
            int here = 1;
            for (Mask d = down(i) & mask; d; d &= d - 1) here = std::max(here, len[lowest(d)] + 1);
            len[i] = here;
            best = std::max(best, here);
        }
        return best;
    }

    // Calls visit(chain_mask) for every chain of `size` elements inside `mask`
    // whose minimum is `start`. Chains are produced in increasing order of
    // their element sequences.
    template <class Visit>
    bool for_each_chain(int start, int size, Mask mask, Visit&& visit) const {
        return extend(start, Mask{1} << start, size - 1, mask, visit);
    }

private:
    template <class Visit>
    bool extend(int last, Mask chain, int left, Mask mask, Visit& visit) const {
        if (left == 0) return visit(chain);
        Mask cand = up(last) & mask;
        // A candidate must leave room for `left - 1` more elements above it.
        for (; cand; cand &= cand - 1) {
            const int y = lowest(cand);
            if (popcount(up(y) & mask) < left - 1) continue;
            if (extend(y, chain | (Mask{1} << y), left - 1, mask, visit)) return true;
        }
        return false;
    }

    int n_ = 0;
    std::vector<int> order_;
    std::vector<Mask> up_;
    std::vector<Mask> down_;
};

inline bool prune(const OrderMasks& om, Mask mask, const SizeCounts& counts) {
    int blocks = 0;
    int largest = 0;
    for (std::size_t s = 1; s < counts.size(); ++s)
        if (counts[s]) {
            blocks += counts[s];
            largest = static_cast<int>(s);
        }
    if (om.width_lower_bound(mask) > blocks) return true;
    if (om.longest_chain(mask) < largest) return true;
    return false;
}

inline void charge(SearchStats& stats, const SearchLimits& limits) {
    ++stats.nodes;
    if (limits.max_nodes && stats.nodes > limits.max_nodes)
        throw Error(ErrorKind::BudgetExceeded, "search node budget exhausted");
}

inline SizeCounts size_counts(const Partition& type, int universe) {
    SizeCounts counts(static_cast<std::size_t>(universe) + 1, 0);
    for (int p : type) {
        if (p > universe) return {};
        if (counts[static_cast<std::size_t>(p)] == 255)
            throw Error(ErrorKind::TooLarge, "too many blocks of one size");
        ++counts[static_cast<std::size_t>(p)];
    }
    return counts;
}

// ∏ α_k! turns unordered partitions into semi-ordered ones.
inline BigInt ordering_factor(const Partition& type) {
    BigInt f = 1;
    for (auto [part, count] : multiplicity_profile(type).counts) f *= factorial(count);
    return f;
}

}  // namespace chromsym::detail

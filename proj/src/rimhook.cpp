#include "chromsym/rimhook.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chromsym/error.hpp"

namespace chromsym {

namespace {

// Rim hook removal from the current shape `rows` (trailing zeros trimmed):
// the hook must contain the first cell of the last row, and it is fixed by
// the row r where it ends. It has size rows[r] + (len - 1 - r) and spans
// len - r rows; the shape left behind has rows[i] = old[i+1] - 1 for i >= r.
struct Enumerator {
    std::vector<int> remaining_content;  // uses left per hook size, empty = unfiltered
    std::vector<RimHook> stack;          // removal order
    std::vector<std::vector<RimHook>> results;

    void run(std::vector<int> rows) {
        if (rows.empty()) {
            results.push_back(stack);
            return;
        }
        const int len = static_cast<int>(rows.size());
        for (int r = 0; r < len; ++r) {
            const int hook_size = rows[static_cast<std::size_t>(r)] + (len - 1 - r);
            if (!remaining_content.empty()) {
                if (hook_size >= static_cast<int>(remaining_content.size()) ||
                    remaining_content[static_cast<std::size_t>(hook_size)] == 0)
                    continue;
            }
            std::vector<int> next(rows.begin(), rows.begin() + r);
            RimHook hook;
            for (int i = r; i < len; ++i) {
                const int keep = i + 1 < len ? rows[static_cast<std::size_t>(i + 1)] - 1 : 0;
                for (int c = keep + 1; c <= rows[static_cast<std::size_t>(i)]; ++c) hook.push_back({i + 1, c});
                if (keep > 0) next.push_back(keep);
            }
            if (!remaining_content.empty()) --remaining_content[static_cast<std::size_t>(hook_size)];
            stack.push_back(std::move(hook));
            run(std::move(next));
            stack.pop_back();
            if (!remaining_content.empty()) ++remaining_content[static_cast<std::size_t>(hook_size)];
        }
    }
};

bool is_ferrers(const std::set<Cell>& cells) {
    for (const Cell& c : cells) {
        if (c.col > 1 && !cells.count({c.row, c.col - 1})) return false;
        if (c.row > 1 && !cells.count({c.row - 1, c.col})) return false;
    }
    return true;
}

bool is_ribbon(const RimHook& hook) {
    if (hook.empty()) return false;
    std::set<Cell> cells(hook.begin(), hook.end());
    if (cells.size() != hook.size()) return false;
    for (const Cell& c : cells)
        if (cells.count({c.row + 1, c.col}) && cells.count({c.row, c.col + 1}) &&
            cells.count({c.row + 1, c.col + 1}))
            return false;
    // Connectivity by flood fill.
    std::set<Cell> seen = {*cells.begin()};
    std::vector<Cell> todo = {*cells.begin()};
    while (!todo.empty()) {
        Cell c = todo.back();
        todo.pop_back();
        for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                       Cell{c.row, c.col - 1}})
            if (cells.count(n) && seen.insert(n).second) todo.push_back(n);
    }
    return seen.size() == cells.size();
}

}  // namespace

int hook_height(const RimHook& hook) {
    if (hook.empty()) return 0;
    auto [lo, hi] = std::minmax_element(hook.begin(), hook.end(),
                                        [](const Cell& a, const Cell& b) { return a.row < b.row; });
    return hi->row - lo->row;
}

Partition SpecialRimHookTabloid::content() const {
    std::vector<int> sizes;
    for (const auto& h : hooks) sizes.push_back(static_cast<int>(h.size()));
    return Partition::sorted(std::move(sizes));
}

int SpecialRimHookTabloid::height() const {
    int total = 0;
    for (const auto& h : hooks) total += hook_height(h);
    return total;
}

int height(const SpecialRimHookTabloid& t) { return t.height(); }

std::vector<int> SpecialRimHookTabloid::hook_sizes() const {
    std::vector<int> sizes;
    for (const auto& h : hooks) sizes.push_back(static_cast<int>(h.size()));
    return sizes;
}

std::string SpecialRimHookTabloid::render() const {
    std::map<Cell, std::size_t> owner;
    for (std::size_t k = 0; k < hooks.size(); ++k)
        for (const Cell& c : hooks[k]) owner[c] = k + 1;
    std::size_t width = std::to_string(hooks.size()).size();
    std::string out;
    for (std::size_t r = 0; r < shape.length(); ++r) {
        for (int c = 1; c <= shape[r]; ++c) {
            std::string label = std::to_string(owner[{static_cast<int>(r) + 1, c}]);
            if (c > 1) out += ' ';
            out += std::string(width - label.size(), ' ') + label;
        }
        out += '\n';
    }
    return out;
}

TabloidFamily enumerate_srht(const Partition& shape, const std::optional<Partition>& content_filter) {
    if (!content_filter) return enumerate_srht_bounded(shape, {});
    if (content_filter->size() != shape.size())
        throw Error(ErrorKind::SizeMismatch, "content filter must have the size of the shape");
    std::vector<int> quota(static_cast<std::size_t>(shape.size()) + 1, 0);
    for (int p : *content_filter) ++quota[static_cast<std::size_t>(p)];
    auto family = enumerate_srht_bounded(shape, std::move(quota));
    std::erase_if(family.tabloids, [&](const auto& t) { return t.content() != *content_filter; });
    return family;
}

TabloidFamily enumerate_srht_bounded(const Partition& shape, std::vector<int> quota) {
    Enumerator e;
    if (!quota.empty()) {
        quota.resize(static_cast<std::size_t>(shape.size()) + 1, 0);
        e.remaining_content = std::move(quota);
    }
    e.run(shape.parts());

    TabloidFamily family{shape, {}};
    for (auto& removal_order : e.results) {
        std::reverse(removal_order.begin(), removal_order.end());
        family.tabloids.push_back({shape, std::move(removal_order)});
    }
    std::sort(family.tabloids.begin(), family.tabloids.end(),
              [](const auto& a, const auto& b) { return a.hook_sizes() < b.hook_sizes(); });
    return family;
}

bool is_valid_tabloid(const SpecialRimHookTabloid& t) {
    std::set<Cell> remaining;
    for (std::size_t r = 0; r < t.shape.length(); ++r)
        for (int c = 1; c <= t.shape[r]; ++c) remaining.insert({static_cast<int>(r) + 1, c});
    std::size_t covered = 0;
    for (const auto& hook : t.hooks) {
        if (!is_ribbon(hook)) return false;
        if (std::none_of(hook.begin(), hook.end(), [](const Cell& c) { return c.col == 1; })) return false;
        covered += hook.size();
    }
    if (covered != remaining.size()) return false;
    for (auto it = t.hooks.rbegin(); it != t.hooks.rend(); ++it) {
        for (const Cell& c : *it)
            if (remaining.erase(c) != 1) return false;
        if (!is_ferrers(remaining)) return false;
    }
    if (!remaining.empty()) return false;
    return dominance_leq(t.shape, t.content());
}

BigInt inverse_kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch, "inverse Kostka needs partitions of the same integer");
    if (!dominance_leq(lambda, mu)) return 0;
    BigInt total = 0;
    for (const auto& t : enumerate_srht(lambda, mu).tabloids) total += (t.height() % 2 == 0) ? 1 : -1;
    return total;
}

namespace {

// Number of ways to extend `inner` to shapes inside `outer` by horizontal
// strips of sizes content[k], content[k+1], ...
struct KostkaCounter {
    const Partition& outer;
    const Partition& content;
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;

    BigInt count(std::size_t k, const std::vector<int>& inner) {
        if (k == content.length()) return 1;
        auto key = std::make_pair(k, inner);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<int> next(inner);
        BigInt total = 0;
        strips(k, inner, next, 0, content[k], total);
        memo.emplace(std::move(key), total);
        return total;
    }

    void strips(std::size_t k, const std::vector<int>& inner, std::vector<int>& next, std::size_t row,
                int left, BigInt& total) {
        if (row == outer.length()) {
            if (left == 0) total += count(k + 1, next);
            return;
        }
        // Horizontal strip: row r may grow up to the old length of row r-1.
        const int cap = row == 0 ? outer[0] : std::min(outer[row], inner[row - 1]);
        for (int add = 0; add <= left && inner[row] + add <= cap; ++add) {
            next[row] = inner[row] + add;
            strips(k, inner, next, row + 1, left - add, total);
        }
        next[row] = inner[row];
    }
};

}  // namespace

BigInt kostka_number(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw Error(ErrorKind::SizeMismatch, "Kostka number needs partitions of the same integer");
    KostkaCounter counter{lambda, mu, {}};
    return counter.count(0, std::vector<int>(lambda.length(), 0));
}

}  // namespace chromsym

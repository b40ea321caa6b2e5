#include "chromsym/oracle.hpp"

#include <functional>

#include "chromsym/error.hpp"

namespace chromsym::oracle {

namespace {

// Fills colors vertex by vertex; quota[c] is how many more times color c may be used.
BigInt count_with_quota(const Graph& graph, std::vector<int>& quota) {
    const int n = graph.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    BigInt total = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            total += 1;
            return;
        }
        for (std::size_t c = 0; c < quota.size(); ++c) {
            if (quota[c] == 0) continue;
            bool clash = false;
            for (int u = 0; u < v && !clash; ++u)
                clash = color[static_cast<std::size_t>(u)] == static_cast<int>(c) && graph.adjacent(u, v);
            if (clash) continue;
            --quota[c];
            color[static_cast<std::size_t>(v)] = static_cast<int>(c);
            place(v + 1);
            color[static_cast<std::size_t>(v)] = -1;
            ++quota[c];
        }
    };
    place(0);
    return total;
}

}  // namespace

std::map<Partition, BigInt, std::greater<>> coloring_monomial_vector(const Graph& graph) {
    std::map<Partition, BigInt, std::greater<>> out;
    for (const Partition& lambda : partitions_of(graph.size())) {
        std::vector<int> quota = lambda.parts();
        out.emplace(lambda, count_with_quota(graph, quota));
    }
    return out;
}

BigInt proper_coloring_count(const Graph& graph, int colors) {
    std::vector<int> quota(static_cast<std::size_t>(std::max(colors, 0)), graph.size());
    return count_with_quota(graph, quota);
}

BigInt monomial_at_ones(const Partition& lambda, int colors) {
    const int len = static_cast<int>(lambda.length());
    if (len > colors) return 0;
    std::map<int, int> mult;
    for (int p : lambda) ++mult[p];
    mult[0] += colors - len;
    BigInt value = factorial(colors);
    for (const auto& [part, k] : mult) value /= factorial(k);
    return value;
}

namespace {

// Semistandard fillings of shape with content mu, filled row by row.
BigInt count_ssyt(const Partition& shape, const Partition& mu) {
    const int rows = static_cast<int>(shape.length());
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> left = mu.parts();
    const int letters = static_cast<int>(left.size());
    BigInt total = 0;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            total += 1;
            return;
        }
        if (c == shape[r]) {
            fill(r + 1, 0);
            return;
        }
        auto& row = grid[static_cast<std::size_t>(r)];
        const int lo = std::max(c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1,
                                r > 0 ? grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1);
        for (int v = lo; v <= letters; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            --left[static_cast<std::size_t>(v - 1)];
            row[static_cast<std::size_t>(c)] = v;
            fill(r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        row[static_cast<std::size_t>(c)] = 0;
    };
    fill(0, 0);
    return total;
}

}  // namespace

Matrix kostka_matrix(int n) {
    const auto parts = partitions_of(n);
    Matrix k(parts.size(), std::vector<BigInt>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) k[i][j] = count_ssyt(parts[i], parts[j]);
    return k;
}

Matrix invert_unitriangular(const Matrix& upper) {
    const std::size_t n = upper.size();
    Matrix inv(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        CHROMSYM_ENSURE(upper[i][i] == 1, "matrix is not unitriangular");
        for (std::size_t j = 0; j < i; ++j) CHROMSYM_ENSURE(upper[i][j] == 0, "matrix is not upper triangular");
    }
    // Column by column: solve upper * x = e_col from the bottom row up.
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t r = n; r-- > 0;) {
            BigInt acc = r == col ? 1 : 0;
            for (std::size_t j = r + 1; j < n; ++j) acc -= upper[r][j] * inv[j][col];
            inv[r][col] = acc;
        }
    }
    return inv;
}

std::map<Partition, BigInt, std::greater<>> schur_from_monomials(
    int n, const std::map<Partition, BigInt, std::greater<>>& monomial) {
    const auto parts = partitions_of(n);
    const Matrix inv = invert_unitriangular(kostka_matrix(n));
    std::map<Partition, BigInt, std::greater<>> out;
    // m_mu = sum_lambda inv[mu][lambda] s_lambda
    for (std::size_t l = 0; l < parts.size(); ++l) {
        BigInt c = 0;
        for (std::size_t u = 0; u < parts.size(); ++u) {
            auto it = monomial.find(parts[u]);
            if (it != monomial.end()) c += it->second * inv[u][l];
        }
        if (c != 0) out.emplace(parts[l], std::move(c));
    }
    return out;
}

}  // namespace chromsym::oracle

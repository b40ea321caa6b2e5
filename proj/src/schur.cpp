#include "chromsym/schur.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "chromsym/error.hpp"
#include "chromsym/rimhook.hpp"

namespace chromsym {

BigInt SchurExpansion::coefficient(const Partition& shape) const {
    auto it = coeffs.find(shape);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

bool SchurExpansion::nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

BigInt MonomialExpansion::coefficient(const Partition& shape) const {
    auto it = coeffs.find(shape);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

const char* to_string(SchurMethod method) noexcept {
    switch (method) {
        case SchurMethod::TabloidBrute: return "tabloid_brute";
        case SchurMethod::TabloidClosed: return "tabloid_closed";
        case SchurMethod::Auto: return "auto";
    }
    return "auto";
}

SchurMethod parse_schur_method(std::string_view text) {
    if (text == "auto") return SchurMethod::Auto;
    if (text == "brute" || text == "tabloid_brute") return SchurMethod::TabloidBrute;
    if (text == "closed" || text == "tabloid_closed") return SchurMethod::TabloidClosed;
    throw ParseError(0, "unknown method '" + std::string(text) + "'");
}

int default_thread_count() {
    if (const char* env = std::getenv("CHROMSYM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

MonomialExpansion monomial_expansion(const Graph& graph, SearchLimits limits) {
    MonomialExpansion out;
    out.degree = graph.size();
    for (const Partition& lambda : partitions_of(graph.size()))
        out.coeffs.emplace(lambda, count_semiordered_stable_partitions(graph, lambda, nullptr, limits));
    return out;
}

namespace {

int sign_of(const SpecialRimHookTabloid& t) { return t.height() % 2 == 0 ? 1 : -1; }

bool starts_with(const Partition& p, const Partition& prefix) {
    for (std::size_t i = 0; i < prefix.length(); ++i)
        if (p[i] != prefix[i]) return false;
    return true;
}

}  // namespace

BigInt schur_coefficient_two_chain(int m, int n, const Partition& shape, std::size_t* tabloids) {
    if (m < n) std::swap(m, n);
    if (shape.size() != m * n) throw Error(ErrorKind::SizeMismatch, "shape must be a partition of m*n");
    if (n < 1) throw Error(ErrorKind::FastPathInapplicable, "product of chains needs positive lengths");
    auto prefix = forced_content_prefix(shape, m, n);
    if (!prefix)
        throw Error(ErrorKind::FastPathInapplicable,
                    "shape " + shape.to_string() + " does not start with the staircase prefix");
    const auto ctx = StaircaseContext::make(m, n);
    BigInt total = 0;
    std::size_t used = 0;
    // Tail parts sum to m-n+1, and every prefix part is larger than that.
    std::vector<int> quota(static_cast<std::size_t>(shape.size()) + 1, 0);
    for (int s = 1; s <= m - n + 1; ++s) quota[static_cast<std::size_t>(s)] = shape.size();
    for (int p : *prefix) quota[static_cast<std::size_t>(p)] = 1;
    for (const auto& t : enumerate_srht_bounded(shape, std::move(quota)).tabloids) {
        const Partition content = t.content();
        if (!starts_with(content, *prefix) || !ctx.applies_to(content)) continue;
        ++used;
        total += sign_of(t) * scp_closed_form(ctx, content);
    }
    if (tabloids) *tabloids = used;
    return total;
}

CoefficientResult schur_coefficient_detailed(const Poset& poset, const Partition& shape, SchurMethod method,
                                             SearchLimits limits) {
    if (shape.size() != poset.size()) throw Error(ErrorKind::SizeMismatch, "shape must be a partition of |P|");
    CoefficientResult result;

    std::optional<std::pair<int, int>> dims;
    if (poset.origin()) dims = poset.origin()->two_chain_dims();
    const bool closed_ok = dims && forced_content_prefix(shape, dims->first, dims->second).has_value();

    if (method == SchurMethod::TabloidClosed && !closed_ok)
        throw Error(ErrorKind::FastPathInapplicable,
                    "closed fast path needs a product of two chains and a staircase-prefix shape");
    if (method == SchurMethod::TabloidClosed || (method == SchurMethod::Auto && closed_ok)) {
        result.value = schur_coefficient_two_chain(dims->first, dims->second, shape, &result.tabloids);
        result.method_used = SchurMethod::TabloidClosed;
        return result;
    }

    result.method_used = SchurMethod::TabloidBrute;
    const int longest = max_chain_size(poset);
    ScpCounter counter(poset, limits);
    std::map<Partition, BigInt> cache;
    for (const auto& t : enumerate_srht(shape).tabloids) {
        const Partition content = t.content();
        if (content[0] > longest) continue;
        auto it = cache.find(content);
        if (it == cache.end()) it = cache.emplace(content, counter.count(content)).first;
        ++result.tabloids;
        result.value += sign_of(t) * it->second;
    }
    result.stats = counter.stats();
    return result;
}

BigInt schur_coefficient(const Poset& poset, const Partition& shape, SchurMethod method) {
    return schur_coefficient_detailed(poset, shape, method).value;
}

SchurExpansion schur_expansion(const Poset& poset, const SchurOptions& options) {
    const int n = poset.size();
    if (n > options.max_elements)
        throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(n) + " elements; the expansion limit is " +
                                             std::to_string(options.max_elements));
    SchurExpansion out;
    out.degree = n;
    if (n == 0) {
        out.coeffs.emplace(Partition{}, 1);
        return out;
    }
    const int longest = max_chain_size(poset);

    std::vector<std::pair<Partition, TabloidFamily>> families;
    std::set<Partition, std::greater<>> needed;
    for (const Partition& shape : partitions_of(n)) {
        if (shape[0] > longest) continue;
        auto family = enumerate_srht(shape);
        for (const auto& t : family.tabloids) {
            Partition c = t.content();
            if (c[0] <= longest) needed.insert(std::move(c));
        }
        families.emplace_back(shape, std::move(family));
    }

    // Contents are split round-robin; each worker owns its counter.
    const std::vector<Partition> contents(needed.begin(), needed.end());
    std::vector<BigInt> counts(contents.size());
    const int threads = std::clamp(options.threads > 0 ? options.threads : default_thread_count(), 1,
                                   std::max<int>(1, static_cast<int>(contents.size())));
    auto work = [&](int worker) {
        ScpCounter counter(poset, options.limits);
        for (std::size_t i = static_cast<std::size_t>(worker); i < contents.size();
             i += static_cast<std::size_t>(threads))
            counts[i] = counter.count(contents[i]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < threads; ++w)
                pool.emplace_back([&, w] {
                    try {
                        work(w);
                    } catch (...) {
                        errors[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::map<Partition, const BigInt*> lookup;
    for (std::size_t i = 0; i < contents.size(); ++i) lookup.emplace(contents[i], &counts[i]);

    for (const auto& [shape, family] : families) {
        BigInt total = 0;
        for (const auto& t : family.tabloids) {
            auto it = lookup.find(t.content());
            if (it != lookup.end()) total += sign_of(t) * *it->second;
        }
        if (total != 0) out.coeffs.emplace(shape, std::move(total));
    }
    return out;
}

Partition rho_shape(int n, int k) {
    if (k < 5 || n < 2) throw Error(ErrorKind::PreconditionViolated, "rho needs k >= 5 and n >= 2");
    std::vector<int> parts;
    for (int i = 1; i <= n - 1; ++i) parts.push_back(2 * n + k - 2 * i + 1);
    parts.insert(parts.end(), {k - 3, 2, 2});
    return Partition(std::move(parts));
}

BigInt theorem41_coefficient(int n_int, int k_int) {
    if (k_int < 5 || n_int < 2) throw Error(ErrorKind::PreconditionViolated, "needs k >= 5 and n >= 2");
    const BigInt n = n_int;
    const BigInt k = k_int;
    const BigInt nf = factorial(n_int);
    if (k_int == 5) return nf * (-4 * n + 9);
    if (k_int == 6) return nf * (-11 * n + 32);
    BigInt numer = nf * (k - 4) * ((-2 * k * k + 4 * k - 18) * n + (k * k * k - 7 * k + 18));
    CHROMSYM_ENSURE(mpz_divisible_ui_p(numer.get_mpz_t(), 12) != 0, "rho coefficient polynomial: division by 12 is not exact");
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), numer.get_mpz_t(), 12);
    return q;
}

BigInt pieri_shift_coefficient(int p, int q, int m, int n, const Partition& shape_tilde) {
    if (p < 0 || q < 0 || m < 1 || n < 1) throw Error(ErrorKind::PreconditionViolated, "needs p, q >= 0 and m, n >= 1");
    if (m < n) std::swap(m, n);
    const int top = m + n - 1;
    if (shape_tilde.empty() || shape_tilde[0] != top + p + q || shape_tilde[1] > top ||
        shape_tilde.size() != m * n + p + q)
        throw Error(ErrorKind::PreconditionViolated,
                    "shape " + shape_tilde.to_string() + " is not a first-row shift of a shape with first part " +
                        std::to_string(top));
    std::vector<int> parts = shape_tilde.parts();
    parts[0] = top;
    const Partition rho(std::move(parts));
    return schur_coefficient(build_poset(PosetSpec::product({m, n})), rho, SchurMethod::Auto);
}

}  // namespace chromsym

#include "chromsym/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

#include "chromsym/chain_count.hpp"
#include "chromsym/nice.hpp"
#include "chromsym/oracle.hpp"
#include "chromsym/rimhook.hpp"
#include "chromsym/schur.hpp"

namespace chromsym {

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    // Records a failed sub-check; the first few are kept in the detail text.
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail << "FAILED: ";
        else detail << "; ";
        detail << what;
        pass = false;
    }
};

Outcome c1_rho_8x3() {
    Outcome o;
    auto r = schur_coefficient_detailed(build_poset("prod:8x3"), {10, 8, 2, 2, 2});
    o.detail << "value=" << to_decimal(r.value) << " method=" << to_string(r.method_used) << ' ';
    o.expect(r.value == -18, "expected -18");
    o.expect(r.value == theorem41_coefficient(3, 5), "differs from n!(-4n+9)");
    o.expect(r.method_used == SchurMethod::TabloidClosed, "fast path not used");
    return o;
}

Outcome c2_rho_10x4() {
    Outcome o;
    auto r = schur_coefficient_detailed(build_poset("prod:10x4"), {13, 11, 9, 3, 2, 2});
    o.detail << "value=" << to_decimal(r.value) << " method=" << to_string(r.method_used) << ' ';
    o.expect(r.value == -288, "expected -288");
    o.expect(r.value == theorem41_coefficient(4, 6), "differs from n!(-11n+32)");
    o.expect(r.method_used == SchurMethod::TabloidClosed, "fast path not used");
    return o;
}

Outcome c3_general_k() {
    Outcome o;
    const int n = 5;
    const int k = 7;
    const BigInt formula = theorem41_coefficient(n, k);
    const auto cases = proof_case_closed_forms(n, k);
    BigInt composed = 0;
    for (std::size_t i = 0; i < cases.size(); ++i)
        composed += (kProofCaseHeights[i] % 2 == 0 ? 1 : -1) * cases[i];
    const BigInt fast = schur_coefficient_two_chain(n + k, n, rho_shape(n, k));
    o.detail << "formula=" << to_decimal(formula) << " cases=" << to_decimal(composed)
             << " fast=" << to_decimal(fast) << ' ';
    o.expect(formula == -3840, "formula is not -3840");
    o.expect(composed == formula, "case sum differs");
    o.expect(fast == formula, "fast path differs");
    return o;
}

Outcome c4_scp_chain4() {
    Outcome o;
    const BigInt v = count_scp(build_poset("chain:4"), {2, 1, 1});
    o.detail << "value=" << to_decimal(v) << ' ';
    o.expect(v == 12, "expected 12");
    return o;
}

Outcome c5_chain3_expansion() {
    Outcome o;
    auto x = schur_expansion(build_poset("chain:3"));
    const std::map<Partition, BigInt, std::greater<>> want = {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}};
    for (const auto& [shape, c] : x.coeffs) o.detail << shape.to_string() << ':' << to_decimal(c) << ' ';
    o.expect(x.coeffs == want, "expected {3:1, 2,1:2, 1,1,1:1}");
    return o;
}

Outcome c6_b3_6() {
    Outcome o;
    const Poset b3 = build_poset("b3:6");
    auto cert = chain_partition_exists(b3, {9, 7, 2});
    std::string why;
    o.expect(cert && validate_certificate(b3, *cert, &why), "no validated (9,7,2) certificate " + why);
    o.expect(!chain_partition_exists(b3, {6, 6, 6}), "(6,6,6) unexpectedly achievable");
    auto v = is_nice(b3);
    o.expect(!v.nice, "reported nice");
    if (v.witness)
        o.detail << "witness=(" << v.witness->first.to_string() << ")/(" << v.witness->second.to_string() << ") ";
    o.expect(v.witness && v.witness->first == Partition{9, 7, 2} && v.witness->second == Partition{6, 6, 6},
             "witness is not (9,7,2)/(6,6,6)");
    return o;
}

Outcome c7_b3_small() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        auto v = is_nice(build_poset("b3:" + std::to_string(n)));
        o.detail << "b3:" << n << (v.nice ? " nice " : " not-nice ");
        o.expect(v.nice, "b3:" + std::to_string(n) + " not nice");
    }
    auto x = schur_expansion(build_poset("b3:1"));
    o.detail << "b3:1 terms=" << x.coeffs.size() << ' ';
    o.expect(x.nonnegative(), "b3:1 has a negative Schur coefficient");
    return o;
}

Outcome c8_closed_vs_brute() {
    Outcome o;
    int checked = 0;
    for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {5, 2}, {4, 3}, {5, 3}}) {
        const auto ctx = StaircaseContext::make(m, n);
        ScpCounter counter(build_poset(PosetSpec::product({m, n})));
        for (const Partition& type : partitions_of(m * n)) {
            if (!ctx.applies_to(type)) continue;
            ++checked;
            const BigInt closed = scp_closed_form(ctx, type);
            const BigInt brute = counter.count(type);
            o.expect(closed == brute, std::to_string(m) + "x" + std::to_string(n) + " type " + type.to_string() +
                                          ": closed " + to_decimal(closed) + " brute " + to_decimal(brute));
        }
    }
    o.detail << "types=" << checked << ' ';
    o.expect(checked > 0, "no applicable types");
    return o;
}

Outcome c9_kostka_identity() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (const Partition& lambda : parts) {
            std::vector<BigInt> row;
            for (const Partition& mu : parts) row.push_back(inverse_kostka(lambda, mu));
            for (const Partition& nu : parts) {
                BigInt sum = 0;
                for (std::size_t j = 0; j < parts.size(); ++j)
                    if (row[j] != 0) sum += row[j] * kostka_number(nu, parts[j]);
                o.expect(sum == (lambda == nu ? 1 : 0),
                         "n=" + std::to_string(n) + " entry (" + lambda.to_string() + ";" + nu.to_string() + ")");
            }
        }
    }
    o.detail << "n<=8 ";
    return o;
}

const std::vector<std::string>& oracle_posets() {
    static const std::vector<std::string> specs = {"chain:1", "chain:2", "chain:3",  "chain:4", "chain:5",
                                                   "chain:6", "prod:2x2", "prod:3x2", "prod:2x2x2", "b3:1"};
    return specs;
}

Outcome c10_three_paths() {
    Outcome o;
    for (const auto& spec : oracle_posets()) {
        const Poset p = build_poset(spec);
        const Graph g = incomparability_graph(p);
        const auto tabloid = schur_expansion(p).coeffs;
        const auto mono = monomial_expansion(g).coeffs;
        const auto colorings = oracle::coloring_monomial_vector(g);
        o.expect(mono == colorings, spec + ": monomial vector differs from coloring count");
        o.expect(tabloid == oracle::schur_from_monomials(p.size(), mono),
                 spec + ": tabloid sum differs from inverse Kostka times monomials");
    }
    o.detail << "posets=" << oracle_posets().size() << ' ';
    return o;
}

Outcome c11_two_chain_sweep() {
    Outcome o;
    for (int m = 8; m <= 12; ++m) {
        const Partition shape = Partition::sorted({m + 1, m - 8, 2, 2, 2, 1});
        const BigInt v = schur_coefficient_two_chain(m, 2, shape);
        o.detail << "m=" << m << ':' << to_decimal(v) << ' ';
        o.expect(v < 0, "m=" + std::to_string(m) + " not negative");
    }
    return o;
}

Outcome c12_ordinal_sums() {
    Outcome o;
    int certified = 0;
    int refused = 0;
    for (auto [p, q, m, n] : {std::array{1, 1, 2, 2}, {2, 0, 3, 2}, {1, 2, 3, 3}}) {
        const std::string tag = std::to_string(p) + "+" + std::to_string(m) + "x" + std::to_string(n) + "+" +
                                std::to_string(q);
        const Poset sum = build_poset(PosetSpec::ordinal_sum(p, PosetSpec::product({m, n}), q));
        std::vector<int> shifted = staircase_type(m, n).parts();
        shifted[0] += p + q;
        const Partition top(shifted);
        ChainPartitionSearch search(sum);
        for (const Partition& mu : partitions_of(sum.size())) {
            if (dominance_leq(mu, top)) {
                auto r = ordinal_sum_chain_partition(p, q, m, n, mu);
                std::string why;
                const bool ok = r.certificate.type == mu && validate_certificate(r.poset, r.certificate, &why);
                o.expect(ok, tag + " " + mu.to_string() + " " + why);
                certified += ok;
            } else {
                const bool absent = !search.find(mu).has_value();
                o.expect(absent, tag + " " + mu.to_string() + " achievable above the staircase");
                refused += absent;
            }
        }
    }
    o.detail << "certified=" << certified << " refused=" << refused << ' ';
    return o;
}

Outcome c13_lonc_elzobi() {
    Outcome o;
    int instances = 0;
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m * n <= 16; ++m) {
            const Poset grid = build_poset(PosetSpec::product({m, n}));
            const Partition top = staircase_type(m, n);
            ChainPartitionSearch search(grid);
            for (const Partition& delta : partitions_of(m * n)) {
                auto cert = search.find(delta);
                const bool below = dominance_leq(delta, top);
                o.expect(cert.has_value() == below,
                         std::to_string(m) + "x" + std::to_string(n) + " type " + delta.to_string());
                if (cert) o.expect(validate_certificate(grid, *cert), "invalid certificate " + delta.to_string());
                ++instances;
            }
        }
    o.detail << "types=" << instances << ' ';
    return o;
}

Outcome c14_chromatic_polynomial() {
    Outcome o;
    for (const auto& spec : oracle_posets()) {
        const Graph g = incomparability_graph(build_poset(spec));
        const auto mono = monomial_expansion(g).coeffs;
        for (int colors = 1; colors <= 3; ++colors) {
            BigInt via_mono = 0;
            for (const auto& [lambda, c] : mono) via_mono += c * oracle::monomial_at_ones(lambda, colors);
            const BigInt direct = oracle::proper_coloring_count(g, colors);
            o.expect(via_mono == direct, spec + " N=" + std::to_string(colors) + ": " + to_decimal(via_mono) +
                                             " vs " + to_decimal(direct));
        }
    }
    o.detail << "posets=" << oracle_posets().size() << " N=1..3 ";
    return o;
}

Outcome x_b3_5() {
    Outcome o;
    auto v = is_nice(build_poset("b3:5"));
    o.detail << (v.nice ? "b3:5 nice " : "b3:5 not nice ");
    o.expect(v.nice, "b3:5 not nice");
    return o;
}

// Eight shape families (m+1, m-1-2a-b, 2^a, 1^b) with the ranges where their
// coefficient in m x 2 is reported negative.
Outcome x_two_chain_ranges() {
    Outcome o;
    struct Range {
        int twos, ones, lo, hi;
    };
    const Range ranges[] = {{3, 1, 8, 21},   {4, 0, 9, 45},   {4, 1, 13, 70},   {5, 0, 20, 142},
                            {5, 1, 25, 227}, {6, 0, 47, 424}, {6, 1, 64, 667}, {7, 0, 117, 1199}};
    int checked = 0;
    for (const Range& r : ranges) {
        const int offset = 1 + 2 * r.twos + r.ones;
        for (int m = r.lo; m <= r.hi; ++m) {
            std::vector<int> parts = {m + 1, m - offset};
            parts.insert(parts.end(), static_cast<std::size_t>(r.twos), 2);
            parts.insert(parts.end(), static_cast<std::size_t>(r.ones), 1);
            const Partition shape = Partition::sorted(parts);
            o.expect(schur_coefficient_two_chain(m, 2, shape) < 0, "m=" + std::to_string(m) + " " + shape.to_string());
            ++checked;
        }
    }
    o.detail << "instances=" << checked << ' ';
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    Outcome (*run)();
    bool gating;
};

const Criterion kCriteria[] = {
    {1, "rho coefficient of prod:8x3 is -18", 1, c1_rho_8x3, true},
    {2, "rho coefficient of prod:10x4 is -288", 5, c2_rho_10x4, true},
    {3, "general-k polynomial at (5,7) is -3840 by three routes", 10, c3_general_k, true},
    {4, "count_scp chain:4 type 2,1,1 is 12", 0.1, c4_scp_chain4, true},
    {5, "schur expansion of chain:3", 0.1, c5_chain3_expansion, true},
    {6, "b3:6 is not nice with witness (9,7,2)/(6,6,6)", 60, c6_b3_6, true},
    {7, "b3:1..4 nice and b3:1 Schur nonnegative", 600, c7_b3_small, true},
    {8, "closed form equals brute count on small grids", 300, c8_closed_vs_brute, true},
    {9, "inverse Kostka times Kostka is the identity, n<=8", 60, c9_kostka_identity, true},
    {10, "three-path Schur oracle", 300, c10_three_paths, true},
    {11, "two-chain sign sweep m=8..12", 60, c11_two_chain_sweep, true},
    {12, "ordinal sums are nice with certificates", 300, c12_ordinal_sums, true},
    {13, "grid chain types are exactly those below the staircase", 300, c13_lonc_elzobi, true},
    {14, "monomial expansion specializes to proper colorings", 60, c14_chromatic_polynomial, true},
    {101, "extended: b3:5 nice", 600, x_b3_5, false},
    {102, "extended: eight m x 2 sign families over their full ranges", 1800, x_two_chain_ranges, false},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) {
        if (!c.gating && !options.extended) continue;
        if (!options.only.empty() && !options.only.contains(c.id)) continue;
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.limit_seconds = c.limit;
        r.gating = c.gating;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run();
            r.pass = o.pass;
            r.detail = o.detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.limit_seconds) {
            r.pass = false;
            r.detail += " time limit exceeded";
        }
        while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.3f s / %g s)", r.seconds, r.limit_seconds);
    std::string line = r.pass ? "PASS" : "FAIL";
    line += "  " + std::to_string(r.id) + "  " + r.name + "  " + timing;
    if (!r.gating) line += "  [non-gating]";
    if (!r.detail.empty()) line += "  " + r.detail;
    return line;
}

}  // namespace chromsym

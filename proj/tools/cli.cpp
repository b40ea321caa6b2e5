#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

#include "chromsym/acceptance.hpp"
#include "chromsym/error.hpp"
#include "chromsym/nice.hpp"
#include "chromsym/rimhook.hpp"
#include "chromsym/schur.hpp"

namespace chromsym::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
    bool json = false;
    int threads = 0;
    std::uint64_t max_nodes = 0;
    int max_elements = 0;  // 0 keeps the per-command default

    std::string poset;
    std::string shape;
    std::string type;
    std::string content;
    std::string method = "auto";
    std::size_t limit = 0;

    bool witness = false;
    bool all_types = false;

    int n = 0;
    int k = 0;
    bool check = false;

    std::string family;
    int from = 0;
    int to = 0;
    int twos = 3;
    int ones = 1;
    int max_product = 12;
    int max_factors = 2;

    bool extended = false;
    std::vector<int> only;
};

// Result of one command: payload plus the exit code it implies.
struct Report {
    Json result = Json::object();
    std::string text;
    std::string method;
    int code = kOk;
};

SearchLimits limits_of(const Flags& f) { return SearchLimits{f.max_nodes}; }

Json labeled_blocks(const Poset& p, const ChainPartitionCertificate& cert) {
    Json blocks = Json::array();
    for (const auto& b : cert.labeled(p)) blocks.push_back(b);
    return blocks;
}

std::string blocks_text(const Poset& p, const ChainPartitionCertificate& cert) {
    std::string s;
    for (const auto& b : cert.labeled(p)) {
        s += "  {";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + b[i];
        s += "}\n";
    }
    return s;
}

Report cmd_poset(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Poset p = build_poset(spec);
    const int longest = p.size() ? max_chain_size(p) : 0;
    const bool distributive = p.size() > 0 && verify_distributive_lattice(p);
    Json covers = Json::array();
    for (auto [a, b] : p.cover_pairs()) covers.push_back({p.label(a), p.label(b)});
    r.result = {{"poset", spec.to_dsl()},
                {"size", p.size()},
                {"longest_chain", longest},
                {"distributive_lattice", distributive},
                {"incomparable_pairs", incomparability_graph(p).edge_count()},
                {"labels", p.labels()},
                {"covers", covers}};
    std::ostringstream t;
    t << spec.to_dsl() << ": " << p.size() << " elements, longest chain " << longest
      << (distributive ? ", distributive lattice" : "") << "\ncovers:\n";
    for (auto [a, b] : p.cover_pairs()) t << "  " << p.label(a) << " < " << p.label(b) << '\n';
    r.text = t.str();
    r.method = "build";
    return r;
}

Report cmd_tabloid(const Flags& f) {
    Report r;
    const Partition shape = Partition::parse(f.shape);
    std::optional<Partition> content;
    if (!f.content.empty()) content = Partition::parse(f.content);
    const auto family = enumerate_srht(shape, content);
    Json list = Json::array();
    std::ostringstream t;
    BigInt signed_sum = 0;
    std::size_t shown = 0;
    for (const auto& tab : family.tabloids) {
        signed_sum += tab.height() % 2 ? -1 : 1;
        if (f.limit && shown >= f.limit) continue;
        ++shown;
        Json hooks = Json::array();
        for (const auto& h : tab.hooks) {
            Json cells = Json::array();
            for (const Cell& c : h) cells.push_back({c.row, c.col});
            hooks.push_back(cells);
        }
        list.push_back({{"shape", shape.to_string()},
                        {"hooks", hooks},
                        {"height", tab.height()},
                        {"content", tab.content().to_string()}});
        t << "content " << tab.content().to_string() << ", height " << tab.height() << '\n' << tab.render() << '\n';
    }
    r.result = {{"shape", shape.to_string()}, {"count", family.tabloids.size()}, {"tabloids", list}};
    t << family.tabloids.size() << " tabloid(s)";
    if (content) {
        r.result["inverse_kostka"] = to_decimal(signed_sum);
        t << ", signed count " << to_decimal(signed_sum);
    }
    r.text = t.str() + '\n';
    r.method = "enumerate";
    return r;
}

Report cmd_scp(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Partition type = Partition::parse(f.type);
    const SchurMethod method = parse_schur_method(f.method);
    const Poset p = build_poset(spec);
    if (type.size() != p.size()) throw Error(ErrorKind::SizeMismatch, "type must be a partition of |P|");

    std::optional<StaircaseContext> ctx;
    if (auto dims = spec.two_chain_dims()) {
        auto c = StaircaseContext::make(dims->first, dims->second);
        if (c.applies_to(type)) ctx = c;
    }
    if (method == SchurMethod::TabloidClosed && !ctx)
        throw Error(ErrorKind::FastPathInapplicable,
                    "closed form needs a product of two chains and a type with the staircase prefix");
    BigInt count;
    SearchStats stats;
    if (ctx && method != SchurMethod::TabloidBrute) {
        count = scp_closed_form(*ctx, type);
        r.method = "closed";
    } else {
        count = count_scp(p, type, &stats, limits_of(f));
        r.method = "brute";
    }
    r.result = {{"poset", spec.to_dsl()},
                {"type", type.to_string()},
                {"count", to_decimal(count)},
                {"nodes", stats.nodes},
                {"memo_hits", stats.memo_hits}};
    r.text = to_decimal(count) + "\nmethod: " + r.method + '\n';
    return r;
}

Json coeffs_json(const std::map<Partition, BigInt, std::greater<>>& coeffs) {
    Json j = Json::object();
    for (const auto& [shape, c] : coeffs) j[shape.to_string()] = to_decimal(c);
    return j;
}

Report cmd_schur(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Poset p = build_poset(spec);
    SchurOptions opt;
    if (f.max_elements) opt.max_elements = f.max_elements;
    opt.threads = f.threads;
    opt.limits = limits_of(f);
    const auto x = schur_expansion(p, opt);
    r.result = {{"poset", spec.to_dsl()}, {"degree", x.degree}, {"coeffs", coeffs_json(x.coeffs)}};
    std::ostringstream t;
    for (const auto& [shape, c] : x.coeffs) t << (shape.empty() ? "()" : shape.to_string()) << ": " << c << '\n';
    r.text = t.str();
    r.method = "tabloid_brute";
    if (!x.nonnegative()) r.code = kNegativeCoefficient;
    return r;
}

Report cmd_schur_coeff(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Partition shape = Partition::parse(f.shape);
    const SchurMethod method = parse_schur_method(f.method);
    const Poset p = build_poset(spec);
    const auto res = schur_coefficient_detailed(p, shape, method, limits_of(f));
    Json coeffs = Json::object();
    coeffs[shape.to_string()] = to_decimal(res.value);
    r.result = {{"poset", spec.to_dsl()},
                {"degree", p.size()},
                {"coeffs", coeffs},
                {"tabloids", res.tabloids},
                {"nodes", res.stats.nodes}};
    r.method = to_string(res.method_used);
    r.text = to_decimal(res.value) + "\nmethod: " + r.method + '\n';
    if (res.value < 0) r.code = kNegativeCoefficient;
    return r;
}

Report cmd_nice(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Poset p = build_poset(spec);
    NiceOptions opt;
    if (f.max_elements) opt.max_elements = f.max_elements;
    opt.limits = limits_of(f);
    const auto v = is_nice(p, opt);
    r.result = {{"poset", spec.to_dsl()}, {"nice", v.nice}, {"nodes", v.stats.nodes}};
    std::ostringstream t;
    t << spec.to_dsl() << (v.nice ? " is nice\n" : " is not nice\n");
    if (f.witness && v.witness) {
        r.result["witness"] = {{"achieved", v.witness->first.to_string()},
                               {"unachievable", v.witness->second.to_string()}};
        if (v.witness_certificate) r.result["witness"]["certificate"] = labeled_blocks(p, *v.witness_certificate);
        t << "type " << v.witness->first.to_string() << " is achieved:\n";
        if (v.witness_certificate) t << blocks_text(p, *v.witness_certificate);
        t << "type " << v.witness->second.to_string() << " is below it and has no chain partition\n";
    }
    if (f.all_types) {
        Json types = Json::array();
        for (const auto& a : v.achieved_types) types.push_back(a.to_string());
        r.result["achieved_types"] = types;
        t << "achieved types:";
        for (const auto& a : v.achieved_types) t << ' ' << a.to_string();
        t << '\n';
    }
    r.text = t.str();
    r.method = "search";
    if (!v.nice) r.code = kNotNice;
    return r;
}

Report cmd_chain_partition(const Flags& f) {
    Report r;
    const PosetSpec spec = PosetSpec::parse(f.poset);
    const Partition type = Partition::parse(f.type);
    const Poset p = build_poset(spec);
    SearchStats stats;
    const auto cert = chain_partition_exists(p, type, limits_of(f), &stats);
    r.result = {{"poset", spec.to_dsl()}, {"type", type.to_string()}, {"found", cert.has_value()}};
    if (cert) r.result["blocks"] = labeled_blocks(p, *cert);
    r.result["nodes"] = stats.nodes;
    r.text = cert ? "chain partition of type " + type.to_string() + ":\n" + blocks_text(p, *cert)
                  : "no chain partition of type " + type.to_string() + '\n';
    r.method = "search";
    return r;
}

Report cmd_theorem41(const Flags& f) {
    Report r;
    const BigInt value = theorem41_coefficient(f.n, f.k);
    const Partition rho = rho_shape(f.n, f.k);
    r.result = {{"n", f.n},
                {"k", f.k},
                {"poset", PosetSpec::product({f.n + f.k, f.n}).to_dsl()},
                {"shape", rho.to_string()},
                {"value", to_decimal(value)}};
    std::ostringstream t;
    t << "[s_" << rho.to_string() << "] X_inc(" << f.n + f.k << "x" << f.n << ") = " << value << '\n';
    r.method = "polynomial";
    if (f.check) {
        const auto cases = proof_case_closed_forms(f.n, f.k);
        const auto contents = proof_case_contents(f.n, f.k);
        BigInt composed = 0;
        Json terms = Json::array();
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const int sign = kProofCaseHeights[i] % 2 ? -1 : 1;
            composed += sign * cases[i];
            terms.push_back({{"content", contents[i].to_string()},
                             {"height", kProofCaseHeights[i]},
                             {"count", to_decimal(cases[i])}});
        }
        const BigInt fast = schur_coefficient_two_chain(f.n + f.k, f.n, rho);
        r.result["cases"] = terms;
        r.result["case_sum"] = to_decimal(composed);
        r.result["fast_path"] = to_decimal(fast);
        r.result["consistent"] = composed == value && fast == value;
        t << "case sum " << composed << ", fast path " << fast
          << (composed == value && fast == value ? " (consistent)\n" : " (MISMATCH)\n");
        if (composed != value || fast != value) r.code = kDomainError;
    }
    r.text = t.str();
    return r;
}

Report sweep_two_chain(const Flags& f) {
    Report r;
    if (f.twos < 0 || f.ones < 0) throw Error(ErrorKind::InvalidParams, "--twos and --ones must be nonnegative");
    const int offset = 1 + 2 * f.twos + f.ones;
    const int from = f.from ? f.from : offset;
    const int to = f.to ? f.to : from;
    if (from > to) throw Error(ErrorKind::InvalidParams, "empty range");
    Json rows = Json::array();
    std::ostringstream t;
    std::string tmpl = "(m+1,m-" + std::to_string(offset);
    for (int i = 0; i < f.twos; ++i) tmpl += ",2";
    for (int i = 0; i < f.ones; ++i) tmpl += ",1";
    tmpl += ")";
    t << "shape " << tmpl << " in m x 2\n";
    int negatives = 0;
    for (int m = from; m <= to; ++m) {
        if (m - offset < 0) throw Error(ErrorKind::InvalidParams, "m must be at least " + std::to_string(offset));
        std::vector<int> parts = {m + 1, m - offset};
        parts.insert(parts.end(), static_cast<std::size_t>(f.twos), 2);
        parts.insert(parts.end(), static_cast<std::size_t>(f.ones), 1);
        const Partition shape = Partition::sorted(parts);
        const BigInt v = schur_coefficient_two_chain(m, 2, shape);
        const int sign = sgn(v);
        negatives += sign < 0;
        rows.push_back({{"m", m}, {"shape", shape.to_string()}, {"value", to_decimal(v)}, {"sign", sign}});
        t << "m=" << m << "  " << shape.to_string() << "  " << v << '\n';
    }
    r.result = {{"family", "two_chain_negativity"}, {"template", tmpl}, {"rows", rows}, {"negative", negatives}};
    t << negatives << " of " << to - from + 1 << " negative\n";
    r.text = t.str();
    r.method = "tabloid_closed";
    if (negatives) r.code = kNegativeCoefficient;
    return r;
}

Report sweep_niceness(const Flags& f, const std::vector<PosetSpec>& specs, const char* family) {
    Report r;
    NiceOptions opt;
    opt.max_elements = f.max_elements ? f.max_elements : 40;
    opt.limits = limits_of(f);
    Json rows = Json::array();
    std::ostringstream t;
    int not_nice = 0;
    for (const auto& spec : specs) {
        const Poset p = build_poset(spec);
        const auto v = is_nice(p, opt);
        Json row = {{"poset", spec.to_dsl()}, {"size", p.size()}, {"nice", v.nice}};
        t << spec.to_dsl() << "  " << (v.nice ? "nice" : "not nice");
        if (v.witness) {
            row["witness"] = {v.witness->first.to_string(), v.witness->second.to_string()};
            t << "  witness " << v.witness->first.to_string() << " / " << v.witness->second.to_string();
        }
        t << '\n';
        not_nice += !v.nice;
        rows.push_back(row);
    }
    r.result = {{"family", family}, {"rows", rows}, {"not_nice", not_nice}};
    r.text = t.str();
    r.method = "search";
    if (not_nice) r.code = kNotNice;
    return r;
}

// Factor lists n1 >= n2 >= ... >= 2 with at least two factors.
void product_specs(int max_product, int max_factors, std::vector<int>& cur, std::vector<PosetSpec>& out) {
    int prod = 1;
    for (int d : cur) prod *= d;
    if (cur.size() >= 2) out.push_back(PosetSpec::product(cur));
    if (static_cast<int>(cur.size()) == max_factors) return;
    const int hi = cur.empty() ? max_product / 2 : cur.back();
    for (int d = 2; d <= hi && prod * d <= max_product; ++d) {
        cur.push_back(d);
        product_specs(max_product, max_factors, cur, out);
        cur.pop_back();
    }
}

Report cmd_sweep(const Flags& f) {
    if (f.family == "two_chain_negativity") return sweep_two_chain(f);
    std::vector<PosetSpec> specs;
    if (f.family == "b3_niceness") {
        const int from = f.from ? f.from : 1;
        const int to = f.to ? f.to : 4;
        for (int n = from; n <= to; ++n) specs.push_back(PosetSpec::b3(n));
        return sweep_niceness(f, specs, "b3_niceness");
    }
    std::vector<int> cur;
    product_specs(f.max_product, f.max_factors, cur, specs);
    std::sort(specs.begin(), specs.end(),
              [](const PosetSpec& a, const PosetSpec& b) { return a.params < b.params; });
    return sweep_niceness(f, specs, "product_niceness");
}

Report cmd_verify(const Flags& f, std::ostream& out) {
    Report r;
    AcceptanceOptions opt;
    opt.extended = f.extended;
    opt.only.insert(f.only.begin(), f.only.end());
    Json rows = Json::array();
    int failed = 0;
    const auto results = run_acceptance(opt, [&](const CriterionResult& c) {
        if (!f.json) out << format_result(c) << std::endl;
    });
    for (const auto& c : results) {
        failed += c.gating && !c.pass;
        rows.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"gating", c.gating},
                        {"seconds", c.seconds},
                        {"limit_seconds", c.limit_seconds},
                        {"detail", c.detail}});
    }
    r.result = {{"criteria", rows}, {"failed", failed}};
    r.text = failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n";
    r.method = "acceptance";
    if (failed) r.code = kDomainError;
    return r;
}

Json request_json(const std::string& command, const Flags& f) {
    Json j = Json::object();
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) j[key] = v;
    };
    put("poset", f.poset);
    put("shape", f.shape);
    put("type", f.type);
    put("content", f.content);
    if (command == "scp" || command == "schur-coeff") j["method"] = f.method;
    if (command == "theorem41") j.update({{"n", f.n}, {"k", f.k}, {"check", f.check}});
    if (command == "sweep") {
        j["family"] = f.family;
        if (f.from) j["from"] = f.from;
        if (f.to) j["to"] = f.to;
    }
    if (f.max_nodes) j["max_nodes"] = f.max_nodes;
    if (f.max_elements) j["max_elements"] = f.max_elements;
    return j;
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::ParseError ? kParseError : kDomainError; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic symmetric functions of poset incomparability graphs", "chromsym"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Flags f;
    app.add_flag("--json", f.json, "Emit a JSON envelope");
    app.add_option("--threads", f.threads, "Worker cap (default: CHROMSYM_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-nodes", f.max_nodes, "Search node budget, 0 for none");

    const auto poset_opt = [&](CLI::App* sub) {
        sub->add_option("--poset", f.poset, "Poset DSL, e.g. prod:8x3 or sum:1+b3:2+1")->required();
    };
    auto* poset = app.add_subcommand("poset", "Describe a poset");
    poset_opt(poset);

    auto* tabloid = app.add_subcommand("tabloid", "List special rim hook tabloids of a shape");
    tabloid->add_option("--shape", f.shape, "Partition, e.g. 5,3,2,1")->required();
    tabloid->add_option("--content", f.content, "Only tabloids of this content");
    tabloid->add_option("--limit", f.limit, "Show at most this many");

    auto* scp = app.add_subcommand("scp", "Count semi-ordered chain partitions");
    poset_opt(scp);
    scp->add_option("--type", f.type, "Partition of |P|")->required();
    scp->add_option("--method", f.method, "auto, brute or closed");

    auto* schur = app.add_subcommand("schur", "Full Schur expansion");
    poset_opt(schur);
    schur->add_option("--max-elements", f.max_elements, "Refuse larger posets (default 12)");

    auto* coeff = app.add_subcommand("schur-coeff", "One Schur coefficient");
    poset_opt(coeff);
    coeff->add_option("--shape", f.shape, "Partition of |P|")->required();
    coeff->add_option("--method", f.method, "auto, brute or closed");

    auto* nice = app.add_subcommand("nice", "Decide whether the poset is nice");
    poset_opt(nice);
    nice->add_flag("--witness", f.witness, "Show a failing pair with a certificate");
    nice->add_flag("--all-types", f.all_types, "List every achievable type");
    nice->add_option("--max-elements", f.max_elements, "Refuse larger posets (default 20)");

    auto* chain = app.add_subcommand("chain-partition", "Find a chain partition of a given type");
    poset_opt(chain);
    chain->add_option("--type", f.type, "Partition of |P|")->required();

    auto* t41 = app.add_subcommand("theorem41", "Closed-form rho coefficient for (n+k) x n");
    t41->add_option("-n,--n", f.n, "n >= 2")->required();
    t41->add_option("-k,--k", f.k, "k >= 5")->required();
    t41->add_flag("--check", f.check, "Also evaluate the six-case sum and the fast path");

    auto* sweep = app.add_subcommand("sweep", "Scan a family of instances");
    sweep->add_option("--family", f.family, "two_chain_negativity, b3_niceness or product_niceness")
        ->required()
        ->check(CLI::IsMember({"two_chain_negativity", "b3_niceness", "product_niceness"}));
    sweep->add_option("--from", f.from, "First m (or n for b3)");
    sweep->add_option("--to", f.to, "Last m (or n for b3)");
    sweep->add_option("--twos", f.twos, "Number of parts equal to 2 in the shape template (default 3)");
    sweep->add_option("--ones", f.ones, "Number of parts equal to 1 in the shape template (default 1)");
    sweep->add_option("--max-product", f.max_product, "Largest product of chain lengths (default 12)");
    sweep->add_option("--max-factors", f.max_factors, "Most chains in a product (default 2)");
    sweep->add_option("--max-elements", f.max_elements, "Niceness size limit (default 40)");

    auto* verify = app.add_subcommand("verify", "Run the reproduction suite");
    verify->add_flag("--extended", f.extended, "Include non-gating extended checks");
    verify->add_option("--only", f.only, "Criterion ids to run");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (command == "poset") report = cmd_poset(f);
        else if (command == "tabloid") report = cmd_tabloid(f);
        else if (command == "scp") report = cmd_scp(f);
        else if (command == "schur") report = cmd_schur(f);
        else if (command == "schur-coeff") report = cmd_schur_coeff(f);
        else if (command == "nice") report = cmd_nice(f);
        else if (command == "chain-partition") report = cmd_chain_partition(f);
        else if (command == "theorem41") report = cmd_theorem41(f);
        else if (command == "sweep") report = cmd_sweep(f);
        else report = cmd_verify(f, out);
    } catch (const Error& e) {
        if (f.json) {
            Json error = {{"kind", to_string(e.kind())}, {"message", e.what()}};
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) error["offset"] = pe->offset();
            out << Json{{"command", command}, {"request", request_json(command, f)}, {"error", error},
                        {"version", kVersion}}
                       .dump(2)
                << '\n';
        }
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (f.json) {
        out << Json{{"command", command},
                    {"request", request_json(command, f)},
                    {"result", report.result},
                    {"method", report.method},
                    {"wall_time_ms", ms},
                    {"version", kVersion}}
                   .dump(2)
            << '\n';
    } else {
        out << report.text;
    }
    return report.code;
}

}  // namespace chromsym::cli

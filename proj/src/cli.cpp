#include "nilclean/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilclean/census.hpp"
#include "nilclean/expr.hpp"
#include "nilclean/nilclean.hpp"
#include "nilclean/radical.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20250811;
constexpr std::size_t kAxiomSampleTriples = 1000;

struct CommonOpts {
    std::uint64_t max_order = kDefaultOrderCap;
    std::string format = "tsv";
    std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--max-order", opts.max_order, "Order cap for ring construction")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Seed for the sampled ring-axiom self-check")
        ->capture_default_str();
}

// Parses, constructs, and runs the sampled axiom self-check. On failure
// prints a message and stores the exit code.
RingPtr build_ring(const std::string& spec_text, const CommonOpts& opts,
                   std::ostream& err, int& exit_code) {
    auto parsed = parse_ring_spec(spec_text);
    if (!parsed.ok()) {
        const auto& e = parsed.error();
        err << "error: cannot parse '" << spec_text << "' at offset " << e.offset << ": "
            << e.message << "\n";
        exit_code = kExitUsage;
        return nullptr;
    }
    RingPtr ring;
    try {
        ring = construct_ring(parsed.spec(), opts.max_order);
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        exit_code = kExitUsage;
        return nullptr;
    }
    if (auto failure = check_ring_axioms(*ring, kAxiomSampleTriples, opts.seed)) {
        err << "violation: sampled ring axiom failed in " << ring->name() << ": "
            << failure->law << " on (" << failure->x << ", " << failure->y << ", "
            << failure->z << ")\n";
        exit_code = kExitViolation;
        return nullptr;
    }
    return ring;
}

std::string join_indices(const std::vector<std::uint32_t>& indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices[i]);
    }
    return out;
}

const char* sign_text(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

// ---- classify ----

int cmd_classify(const std::string& spec_text, const CommonOpts& opts,
                 std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    RingPtr ring = build_ring(spec_text, opts, err, code);
    if (!ring) return code;

    const CensusRecord record = classify_record(spec_text, ring);
    if (opts.format == "json") {
        out << census_json(record).dump() << "\n";
    } else {
        out << census_tsv_header() << "\n" << census_tsv_row(record) << "\n";
    }
    if (!record.theorem_agrees) {
        err << "violation: oracle and structural classification disagree on "
            << ring->name() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---- census ----

int cmd_census(const std::string& family, std::uint32_t max_n, const std::string& out_path,
               const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    if (max_n > opts.max_order) {
        err << "error: census bound " << max_n << " exceeds the order cap "
            << opts.max_order << "\n";
        return kExitUsage;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open output file '" << out_path << "'\n";
            return kExitUsage;
        }
        sink = &file;
    }

    // only the Zn family exists; the CLI option validator enforces it
    (void)family;
    bool all_agree = true;
    if (opts.format == "tsv") *sink << census_tsv_header() << "\n";
    for (std::uint32_t n = 2; n <= max_n; ++n) {
        const RingSpec spec = RingSpec::zn(n);
        int code = kExitOk;
        RingPtr ring = build_ring(format_ring_spec(spec), opts, err, code);
        if (!ring) return code;
        const CensusRecord record = classify_record(format_ring_spec(spec), ring);
        all_agree = all_agree && record.theorem_agrees;
        if (opts.format == "json")
            *sink << census_json(record).dump() << "\n";
        else
            *sink << census_tsv_row(record) << "\n";
    }
    if (sink == &file) {
        file.close();
        if (!file) {
            err << "error: failed writing '" << out_path << "'\n";
            return kExitUsage;
        }
    }
    if (!all_agree) {
        err << "violation: oracle and structural classification disagree within the census\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---- verify ----

void emit_kv_or_json(std::ostream& out, const std::string& format, const json& j) {
    if (format == "json") {
        out << j.dump() << "\n";
        return;
    }
    // flat key\tvalue lines in insertion order
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << '\t';
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << "\n";
    }
}

int cmd_verify(const std::string& kind, const std::string& spec_text,
               long long scalar_bound, const CommonOpts& opts, std::ostream& out,
               std::ostream& err) {
    int code = kExitOk;
    RingPtr ring = build_ring(spec_text, opts, err, code);
    if (!ring) return code;

    json j = json::object();
    j["kind"] = kind;
    j["spec"] = spec_text;

    if (kind == "prop1") {
        const Prop1Report report = verify_prop1(ring);
        j["involutions"] = report.involutions.size();
        j["decompositions"] = report.decomposition_count;
        j["violations"] = json::array();
        for (const auto& v : report.violations)
            j["violations"].push_back({{"a", v.a}, {"e", v.e}, {"q", v.q}});
        j["status"] = report.violations.empty() ? "ok" : "violations";
        emit_kv_or_json(out, opts.format, j);
        return report.violations.empty() ? kExitOk : kExitViolation;
    }

    if (kind == "lemma2") {
        if (auto reason = lemma2_precondition_failure(ring)) {
            j["status"] = "skipped";
            j["reason"] = *reason;
            emit_kv_or_json(out, opts.format, j);
            return kExitOk;
        }
        const Lemma2Report report = verify_lemma2(ring);
        j["trivial_idempotents"] = report.trivial_idempotents;
        j["nil_shift_cover"] = report.nil_shift_cover;
        j["nil_is_ideal"] = report.nil_is_ideal;
        j["quotient_is_z3"] = report.quotient_is_z3;
        j["quotient_order"] = report.quotient_order;
        j["status"] = report.all_passed() ? "ok" : "violations";
        emit_kv_or_json(out, opts.format, j);
        return report.all_passed() ? kExitOk : kExitViolation;
    }

    if (kind == "theorem") {
        const TheoremReport report = verify_theorem(ring);
        j["oracle_weakly_nil_clean"] = report.oracle.holds;
        j["oracle_witness"] =
            report.oracle.witness ? json(*report.oracle.witness) : json();
        j["structural"] = verdict_tag(report.structural.verdict);
        if (report.structural.verdict == Classification::Verdict::WeaklyNilCleanOnly)
            j["factorization"] = {{"e_nil", *report.structural.e_nil},
                                  {"e_z3", *report.structural.e_z3}};
        else
            j["factorization"] = nullptr;
        j["agree"] = report.agree;
        j["status"] = report.agree ? "ok" : "violations";
        emit_kv_or_json(out, opts.format, j);
        return report.agree ? kExitOk : kExitViolation;
    }

    // remark
    const RemarkScanReport report = remark_scan(ring, scalar_bound);
    j["scalar_bound"] = scalar_bound;
    j["instances"] = report.instances;
    j["reduction_instances"] = report.reduction_instances;
    j["violations"] = report.violations.size() + report.reduction_violations.size();
    j["status"] = report.clean() ? "ok" : "violations";
    emit_kv_or_json(out, opts.format, j);
    return report.clean() ? kExitOk : kExitViolation;
}

// ---- radical ----

int cmd_radical(const std::string& spec_text, const CommonOpts& opts, std::ostream& out,
                std::ostream& err) {
    int code = kExitOk;
    RingPtr ring = build_ring(spec_text, opts, err, code);
    if (!ring) return code;

    const Ideal radical = upper_nilradical(ring);
    const std::uint32_t quotient_order =
        ring->order() / static_cast<std::uint32_t>(radical.size());
    if (opts.format == "json") {
        json j;
        j["spec"] = spec_text;
        j["order"] = ring->order();
        j["members"] = radical.members;
        j["quotient_order"] = quotient_order;
        out << j.dump() << "\n";
    } else {
        out << "spec\torder\tmembers\tquotient_order\n";
        out << spec_text << '\t' << ring->order() << '\t' << join_indices(radical.members)
            << '\t' << quotient_order << "\n";
    }
    return kExitOk;
}

// ---- decompose ----

int cmd_decompose(const std::string& spec_text, std::uint64_t element_index,
                  const std::string& signs, const CommonOpts& opts, std::ostream& out,
                  std::ostream& err) {
    int code = kExitOk;
    RingPtr ring = build_ring(spec_text, opts, err, code);
    if (!ring) return code;
    if (element_index >= ring->order()) {
        err << "error: element index " << element_index << " out of range (order "
            << ring->order() << ")\n";
        return kExitUsage;
    }

    const DecompSigns mode =
        (signs == "plus") ? DecompSigns::PlusOnly : DecompSigns::Both;
    const auto decomps =
        decompositions(ring->elem(static_cast<std::uint32_t>(element_index)), mode);

    if (opts.format == "json") {
        json j;
        j["spec"] = spec_text;
        j["element"] = element_index;
        j["decompositions"] = json::array();
        for (const auto& d : decomps)
            j["decompositions"].push_back(
                {{"e", d.e.index()}, {"q", d.q.index()}, {"sign", sign_text(d.sign)}});
        out << j.dump() << "\n";
    } else {
        out << "e\tq\tsign\n";
        for (const auto& d : decomps)
            out << d.e.index() << '\t' << d.q.index() << '\t' << sign_text(d.sign) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-ring nil-clean structure toolkit"};
    app.require_subcommand(1);

    std::string spec_text, family, verify_kind, out_path;
    std::string signs = "both";
    std::uint32_t max_n = 0;
    std::uint64_t element_index = 0;
    long long scalar_bound = 2;

    CommonOpts classify_opts, census_opts, verify_opts, radical_opts, decompose_opts;

    CLI::App* classify = app.add_subcommand(
        "classify", "Classify one ring (oracle and structural routes must agree)");
    classify->add_option("spec", spec_text, "Ring expression, e.g. \"Z12\"")->required();
    add_common(classify, classify_opts);

    CLI::App* census = app.add_subcommand(
        "census", "Classify a whole family and stream one record per ring");
    census->add_option("family", family, "Ring family")
        ->required()
        ->check(CLI::IsMember({"Zn"}));
    census->add_option("max_n", max_n, "Largest modulus; records cover 2..max_n")
        ->required();
    census->add_option("--out", out_path, "Output file (default: standard output)");
    add_common(census, census_opts);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check one of the verified statements on a ring");
    verify->add_option("kind", verify_kind, "prop1 | lemma2 | theorem | remark")
        ->required()
        ->check(CLI::IsMember({"prop1", "lemma2", "theorem", "remark"}));
    verify->add_option("spec", spec_text, "Ring expression")->required();
    verify->add_option("--scalar-bound", scalar_bound,
                       "Scalar range for the remark scan")
        ->capture_default_str();
    add_common(verify, verify_opts);

    CLI::App* radical = app.add_subcommand(
        "radical", "Print the upper nilradical and the quotient order");
    radical->add_option("spec", spec_text, "Ring expression")->required();
    add_common(radical, radical_opts);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "List idempotent-plus-nilpotent decompositions of one element");
    decompose->add_option("spec", spec_text, "Ring expression")->required();
    decompose->add_option("index", element_index, "Canonical element index")->required();
    decompose->add_option("--signs", signs, "plus | both")
        ->check(CLI::IsMember({"plus", "both"}))
        ->capture_default_str();
    add_common(decompose, decompose_opts);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("nilclean");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(classify))
            return cmd_classify(spec_text, classify_opts, out, err);
        if (app.got_subcommand(census))
            return cmd_census(family, max_n, out_path, census_opts, out, err);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_kind, spec_text, scalar_bound, verify_opts, out, err);
        if (app.got_subcommand(radical))
            return cmd_radical(spec_text, radical_opts, out, err);
        if (app.got_subcommand(decompose))
            return cmd_decompose(spec_text, element_index, signs, decompose_opts, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace nilclean

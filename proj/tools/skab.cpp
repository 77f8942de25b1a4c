#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "skab/report.hpp"

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, internal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned parse_unsigned(std::string_view text, const char* what) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return v;
}

// "3" or "1..2"
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned s = parse_unsigned(text, "s");
        return {s, s};
    }
    return {parse_unsigned(std::string_view(text).substr(0, dots), "range start"),
            parse_unsigned(std::string_view(text).substr(dots + 2), "range end")};
}

unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SKAB_THREADS")) {
        const unsigned cap = parse_unsigned(env, "SKAB_THREADS");
        if (cap == 0) throw UsageError("SKAB_THREADS must be a positive integer");
        n = std::min(n, cap);
    }
    return n;
}

int exit_for(skab::Errc code) {
    switch (code) {
    case skab::Errc::unsupported_s:
    case skab::Errc::unsupported_combination:
    case skab::Errc::out_of_domain:
    case skab::Errc::empty_input:
    case skab::Errc::non_coprime:
        return usage;
    case skab::Errc::table_mismatch:
    case skab::Errc::not_closed:
    case skab::Errc::no_witness:
    case skab::Errc::duplicate_gap:
    case skab::Errc::sum_mismatch:
    case skab::Errc::duplicate_residue:
        return verification_failed;
    default:
        return internal;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass semigroups on the Skabelund curve"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    unsigned s = 1;
    auto* params = app.add_subcommand("params", "Curve parameters for one s");
    params->add_option("--s", s, "Parameter s (q0 = 2^s)")->required();

    std::string point, emit;
    auto* semigroup = app.add_subcommand("semigroup", "Dump one Weierstrass semigroup");
    semigroup->add_option("--s", s, "Parameter s")->required();
    semigroup->add_option("--point", point, "Point class")
        ->required()
        ->check(CLI::IsMember({"rational", "quartic", "generic"}));
    semigroup->add_option("--emit", emit, "Payload")
        ->required()
        ->check(CLI::IsMember({"generators", "apery", "gaps", "stats", "witnesses"}));
    bool sampled = false;
    semigroup->add_flag("--sampled", sampled, "Sampled closure check for generic points");

    unsigned max_s = 2;
    auto* table1 = app.add_subcommand("table1", "Generic gap family sizes");
    table1->add_option("--max-s", max_s, "Largest s to tabulate")->default_val(2);

    std::string range = "1..2";
    bool witnesses = false, corrupt = false;
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--s", range, "Single s or range lo..hi")->default_val("1..2");
    verify->add_flag("--sampled", sampled, "Sampled pairwise closure check at s = 3");
    verify->add_flag("--witnesses", witnesses, "Retain records and check witnesses at s = 3");
    verify->add_flag("--corrupt-generator", corrupt, "Perturb one rational generator (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        skab::RunOptions opts;
        opts.threads = thread_budget();
        opts.sampled = sampled;
        opts.witnesses = witnesses;
        opts.corrupt_rational_generator = corrupt;

        skab::Report report;
        if (*params) {
            report = skab::cmd_params(s);
        } else if (*semigroup) {
            static const std::map<std::string, skab::PointClass> points{
                {"rational", skab::PointClass::rational},
                {"quartic", skab::PointClass::quartic},
                {"generic", skab::PointClass::generic}};
            static const std::map<std::string, skab::Emit> emits{{"generators", skab::Emit::generators},
                                                                 {"apery", skab::Emit::apery},
                                                                 {"gaps", skab::Emit::gaps},
                                                                 {"stats", skab::Emit::stats},
                                                                 {"witnesses", skab::Emit::witnesses}};
            report = skab::cmd_semigroup(s, points.at(point), emits.at(emit), opts);
        } else if (*table1) {
            report = skab::cmd_table1(max_s, opts);
        } else {
            const auto [lo, hi] = parse_range(range);
            report = skab::cmd_verify(lo, hi, opts);
        }

        const std::string text = format == "json"  ? skab::render_json(report)
                                 : format == "csv" ? skab::render_csv(report)
                                                   : skab::render_text(report);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open " << out_path << '\n';
                return internal;
            }
            file << text;
        }
        return report.passed ? ok : verification_failed;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const skab::Error& e) {
        std::cerr << "error [" << skab::errc_name(e.code()) << "]: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
}

#pragma once

// Report values produced by the command-line front end, and their JSON, CSV
// and plain-text renderings. Every builder is deterministic: arrays are
// sorted ascending and fields appear in a fixed order.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skab/generic_gaps.hpp"

namespace skab {

enum class PointClass { rational, quartic, generic };
enum class Emit { generators, apery, gaps, stats, witnesses };

std::string_view point_class_name(PointClass pc) noexcept;
std::string_view emit_name(Emit e) noexcept;

struct ParamsEcho {
    unsigned s = 0;
    u64 q0 = 0, q = 0, genus = 0;

    bool operator==(const ParamsEcho&) const = default;
};

struct SemigroupStats {
    u64 multiplicity = 0, genus = 0, conductor = 0;
    std::int64_t frobenius = -1;
    bool symmetric = false;

    bool operator==(const SemigroupStats&) const = default;
};

struct WitnessRow {
    u64 value = 0;
    std::string family;
    u64 pole_order = 0;
    std::vector<u64> exponents;  // a1 a2 a3 a4 f b1.. c d e0..

    bool operator==(const WitnessRow&) const = default;
};

struct TableRow {
    unsigned s = 0;
    std::array<u64, 6> families{};
    u64 total = 0;
    u64 genus = 0;
    std::optional<bool> matches_reference;  // set where reference values exist

    bool operator==(const TableRow&) const = default;
};

struct CheckResult {
    unsigned s = 0;
    std::string name;
    bool passed = false;
    bool informational = false;  // reported, never fails the run
    std::string observed;
    std::string expected;

    bool operator==(const CheckResult&) const = default;
};

struct Report {
    std::string command;
    std::vector<ParamsEcho> params;
    std::optional<std::string> point;
    std::optional<std::string> emit;
    std::vector<u64> values;
    std::optional<SemigroupStats> stats;
    std::vector<WitnessRow> witnesses;
    std::vector<TableRow> table;
    std::vector<CheckResult> checks;
    bool passed = true;

    bool operator==(const Report&) const = default;
};

/// Published family sizes for s = 1 and s = 2: F1..F6, |F|, genus.
std::optional<std::array<u64, 8>> reference_table_row(unsigned s);

ParamsEcho echo(const CurveParams& p);
SemigroupStats stats_of(const SemigroupProfile& p);

Report cmd_params(unsigned s);

struct RunOptions {
    unsigned threads = 1;
    bool sampled = false;    // sampled closure check at s = 3
    bool witnesses = false;  // witness checks at s = 3
    bool corrupt_rational_generator = false;  // fault injection for tests
};

/// Throws unsupported_s (generic needs s ≤ 3, the rest s ≤ 6) and
/// unsupported_combination (witnesses are generic-only).
Report cmd_semigroup(unsigned s, PointClass pc, Emit emit, const RunOptions& opts = {});

/// Rows for s = 1..max_s (max_s ≤ 3); passed is false on any mismatch.
Report cmd_table1(unsigned max_s, const RunOptions& opts = {});

inline constexpr unsigned kMaxVerifyS = 4;

/// Runs every check for s in [s_lo, s_hi]; passed is false if any
/// non-informational check fails.
Report cmd_verify(unsigned s_lo, unsigned s_hi, const RunOptions& opts = {});

std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);
Report parse_report_json(std::string_view text);

} // namespace skab

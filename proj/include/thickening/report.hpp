#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thickening/numeric.hpp"

// Table, decomposition and verification reports behind the command-line tool.
namespace thickening::report {

struct TableRow {
  std::int64_t m;
  std::int64_t t;
  BigInt layer;
  BigInt cumulative;
};

/// One row per (m, t), m ascending then t ascending. Cells are computed in
/// parallel; order is deterministic. Throws std::invalid_argument on an empty
/// range or m_min < 3 or t_min < 1.
std::vector<TableRow> table_rows(std::int64_t m_min, std::int64_t m_max, std::int64_t t_min,
                                 std::int64_t t_max);

/// Header "m,t,layer,cumulative", LF line endings, no trailing delimiter.
std::string render_csv(const std::vector<TableRow>& rows);
/// Array of {"m", "t", "layer", "cumulative"} objects in that key order.
std::string render_json(const std::vector<TableRow>& rows);

/// Parses render_csv output. Throws std::runtime_error on malformed input.
std::vector<TableRow> parse_csv(const std::string& text);

/// Human-readable listing of layer_summands(m, t) followed by a summary line
/// comparing the total with layer_length_closed.
std::string render_decomposition_text(std::int64_t m, std::int64_t t);
/// {"m", "t", "summands": [...], "total", "closed_form", "match"}.
std::string render_decomposition_json(std::int64_t m, std::int64_t t);

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> first_failures;  // capped sample for diagnostics
};

/// Optional grid limits. Unset fields fall back to each suite's default:
/// schur N <= 6 with |shape| <= 8; zset t <= 20; decomposition m <= 8, t <= 12;
/// identities b <= 40 plus the telescoping grid m <= 10, T <= 30; catalan m <= 20.
struct VerifyBounds {
  std::optional<std::int64_t> max_m;
  std::optional<std::int64_t> max_t;
  std::optional<std::int64_t> max_b;
};

enum class Suite { Schur, Zset, Decomposition, Identities, Catalan, All };

/// Parses a suite name; std::nullopt for unknown names.
std::optional<Suite> parse_suite(const std::string& name);

/// Runs the checks of a suite (all suites for Suite::All) and returns one
/// result per check, in a fixed order.
std::vector<CheckResult> run_suite(Suite suite, const VerifyBounds& bounds);

/// One line per check: "PASS|FAIL <name>: <cases> cases, <failures> failures".
std::string render_checks(const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

/// Writes contents to path through a temporary sibling file and a rename.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace thickening::report

// Command-line front end: lengths, tables, layer decompositions and
// verification suites for thickenings of 2x2 minors of a 2 x m matrix.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thickening/cohomology.hpp"
#include "thickening/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string out;

  std::int64_t m = 0;
  std::int64_t t = 0;
  std::int64_t j = 3;

  std::int64_t m_min = 3, m_max = 3, t_min = 1, t_max = 1;
  std::string format = "csv";
  std::string decompose_format = "text";

  std::string suite;
  std::optional<std::int64_t> max_m, max_t, max_b;
};

CLI::Validator at_least(std::int64_t lo) {
  return CLI::Validator(
      [lo](std::string& input) -> std::string {
        std::int64_t v = 0;
        if (!CLI::detail::lexical_cast(input, v) || v < lo) return "value " + input + " is not >= " + std::to_string(lo);
        return {};
      },
      ">=" + std::to_string(lo));
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    thickening::report::write_file_atomically(opt.out, text);
  }
}

int run_length(const Options& opt) {
  emit(opt, thickening::local_cohomology_length(opt.m, opt.t, opt.j).to_string() + "\n");
  return kExitOk;
}

int run_table(const Options& opt) {
  const auto rows = thickening::report::table_rows(opt.m_min, opt.m_max, opt.t_min, opt.t_max);
  emit(opt, opt.format == "json" ? thickening::report::render_json(rows) : thickening::report::render_csv(rows));
  return kExitOk;
}

int run_decompose(const Options& opt) {
  emit(opt, opt.decompose_format == "json" ? thickening::report::render_decomposition_json(opt.m, opt.t)
                                           : thickening::report::render_decomposition_text(opt.m, opt.t));
  return kExitOk;
}

int run_verify(const Options& opt) {
  const auto suite = thickening::report::parse_suite(opt.suite);
  if (!suite) {
    std::cerr << "unknown suite '" << opt.suite << "' (schur, zset, decomposition, identities, catalan, all)\n";
    return kExitUsage;
  }
  const auto checks = thickening::report::run_suite(*suite, {opt.max_m, opt.max_t, opt.max_b});
  emit(opt, thickening::report::render_checks(checks));
  return thickening::report::all_passed(checks) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lengths of local cohomology of thickenings of 2x2 minors of a 2 x m matrix"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out", opt.out, "Write output to this file (atomically) instead of stdout");

  auto* length = app.add_subcommand("length", "Length of H^j_m(R/I^t)");
  length->add_option("--m", opt.m, "Number of columns (>= 3)")->required()->check(at_least(3));
  length->add_option("--t", opt.t, "Power of the ideal (>= 1)")->required()->check(at_least(1));
  length->add_option("--j", opt.j, "Cohomological index, 0 <= j <= 2m")->capture_default_str();

  auto* table = app.add_subcommand("table", "Layer and cumulative lengths over an (m, t) grid");
  table->add_option("--m-min", opt.m_min)->required();
  table->add_option("--m-max", opt.m_max)->required();
  table->add_option("--t-min", opt.t_min)->required();
  table->add_option("--t-max", opt.t_max)->required();
  table->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Schur functor summands of the layer at power t");
  decompose->add_option("--m", opt.m)->required()->check(at_least(3));
  decompose->add_option("--t", opt.t)->required()->check(at_least(1));
  decompose->add_option("--format", opt.decompose_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite against brute-force oracles");
  verify->add_option("--suite", opt.suite, "schur | zset | decomposition | identities | catalan | all")->required();
  verify->add_option("--max-m", opt.max_m, "Upper bound on m (on N for the schur suite)");
  verify->add_option("--max-t", opt.max_t, "Upper bound on t");
  verify->add_option("--max-b", opt.max_b, "Upper bound on b for the binomial identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*length) return run_length(opt);
    if (*table) return run_table(opt);
    if (*decompose) return run_decompose(opt);
    if (*verify) return run_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

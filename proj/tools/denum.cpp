#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "denum/direct_count.hpp"
#include "denum/errors.hpp"
#include "denum/oracle.hpp"
#include "denum/residue_table.hpp"

namespace {

using denum::Count;
using denum::Int;

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIo = 5;

std::vector<Int> parse_coefficient_list(const std::string& csv) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string field =
        comma == std::string::npos ? csv.substr(start)
                                   : csv.substr(start, comma - start);
    out.push_back(denum::parse_unsigned_decimal(field));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

Int parse_positive(const std::string& text, const char* what) {
  Int value = denum::parse_unsigned_decimal(text);
  if (value < 1) {
    throw denum::InvalidInputError(std::string(what) + " must be positive");
  }
  return value;
}

struct CommonArgs {
  std::string coeffs_csv;
  std::string b_text;
  std::string b_max_text = "100";
  std::string b_list_csv;
  std::string modulus_text;
  std::string budget_text;
  std::string oracle_cap_text;
  std::string build_cap_text;
  std::string table_path;
  std::string output_path;
};

denum::EquationSpec make_spec(const CommonArgs& args) {
  std::optional<Int> override;
  if (!args.modulus_text.empty()) {
    override = parse_positive(args.modulus_text, "--modulus");
  }
  return denum::EquationSpec::make(parse_coefficient_list(args.coeffs_csv),
                                   std::move(override));
}

denum::DirectOptions direct_options(const CommonArgs& args) {
  denum::DirectOptions options;
  if (!args.budget_text.empty()) {
    options.budget = parse_positive(args.budget_text, "--budget");
  }
  return options;
}

denum::OracleOptions oracle_options(const CommonArgs& args) {
  denum::OracleOptions options;
  if (!args.oracle_cap_text.empty()) {
    options.value_cap = parse_positive(args.oracle_cap_text, "--oracle-cap");
  }
  return options;
}

denum::TableBuildOptions build_options(const CommonArgs& args) {
  denum::TableBuildOptions options;
  if (!args.build_cap_text.empty()) {
    options.modulus_cap = parse_positive(args.build_cap_text, "--build-cap");
  }
  return options;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int run_count(const CommonArgs& args) {
  const Int b = denum::parse_unsigned_decimal(args.b_text);
  if (!args.table_path.empty()) {
    if (!args.modulus_text.empty() || !args.budget_text.empty()) {
      throw denum::InvalidInputError(
          "count: --modulus and --budget apply to the direct route only, "
          "not with -t");
    }
    const denum::ResidueTable table = denum::load_table(args.table_path);
    if (!args.coeffs_csv.empty() &&
        parse_coefficient_list(args.coeffs_csv) != table.coefficients) {
      throw denum::InvalidInputError(
          "count: -a does not match the coefficients stored in " +
          args.table_path);
    }
    std::cout << denum::query_table(table, b).get_str() << "\n";
    return kExitOk;
  }
  if (args.coeffs_csv.empty()) {
    throw denum::InvalidInputError("count: need -a/--coeffs or -t/--table");
  }
  const denum::EquationSpec spec = make_spec(args);
  std::cout << denum::count_eq_direct(spec, b, direct_options(args)).get_str()
            << "\n";
  return kExitOk;
}

int run_count_leq(const CommonArgs& args) {
  const Int b = denum::parse_unsigned_decimal(args.b_text);
  const denum::EquationSpec spec = make_spec(args);
  std::cout << denum::count_leq_direct(spec, b, direct_options(args)).get_str()
            << "\n";
  return kExitOk;
}

int run_build_table(const CommonArgs& args) {
  const denum::EquationSpec spec = make_spec(args);
  const denum::ResidueTable table =
      denum::build_table(spec, build_options(args));
  denum::save_table(table, std::filesystem::path(args.output_path));
  std::size_t support = 0;
  for (const auto& row : table.rows) {
    for (const Count& v : row) {
      if (v != 0) {
        ++support;
      }
    }
  }
  std::cout << "M=" << spec.modulus().get_str() << " n=" << spec.n()
            << " terms=" << spec.term_count().get_str()
            << " support=" << support << "\n";
  return kExitOk;
}

int run_query(const CommonArgs& args) {
  const Int b = denum::parse_unsigned_decimal(args.b_text);
  const denum::ResidueTable table = denum::load_table(args.table_path);
  std::cout << denum::query_table(table, b).get_str() << "\n";
  return kExitOk;
}

int run_verify(const CommonArgs& args) {
  const denum::EquationSpec spec = make_spec(args);
  const Int b_max = denum::parse_unsigned_decimal(args.b_max_text);
  const denum::OracleOptions oracle_opts = oracle_options(args);
  if (b_max > oracle_opts.value_cap) {
    throw denum::ResourceError("verify: --b-max " + b_max.get_str() +
                               " exceeds the oracle cap of " +
                               oracle_opts.value_cap.get_str());
  }
  const denum::DirectOptions direct_opts = direct_options(args);
  const denum::TableBuildOptions table_opts = build_options(args);

  std::optional<denum::ResidueTable> table;
  if (spec.modulus() <= table_opts.modulus_cap) {
    table = denum::build_table(spec, table_opts);
  } else {
    std::cerr << "note: modulus over the build cap, table route skipped\n";
  }

  std::optional<denum::ResidueTable> stored_table;
  if (!args.table_path.empty()) {
    stored_table = denum::load_table(args.table_path);
    if (stored_table->coefficients != spec.coefficients()) {
      throw denum::InvalidInputError(
          "verify: -t coefficients do not match -a");
    }
  }

  const Count term_count = spec.term_count();
  const bool walk_route = term_count <= 1000000;
  const bool leq_route =
      !direct_opts.budget || term_count * spec.modulus() <= *direct_opts.budget;
  if (!leq_route) {
    std::cerr << "note: slack term count over the budget, "
                 "inequality route skipped\n";
  }

  unsigned long checks = 0;
  for (Int b = 0; b <= b_max; b += 1) {
    const Count reference = denum::count_dp(spec.coefficients(), b,
                                            oracle_opts);
    const auto diverged = [&](const char* route, const Count& got,
                              const Count& expected) {
      std::cout << "DIVERGENCE b=" << b.get_str() << " route=" << route
                << " expected=" << expected.get_str()
                << " got=" << got.get_str() << "\n";
    };
    const Count direct = denum::count_eq_direct(spec, b, direct_opts);
    if (direct != reference) {
      diverged("direct", direct, reference);
      return kExitDivergence;
    }
    ++checks;
    if (walk_route) {
      const Count walked =
          denum::count_eq_enumerated(spec, b, 0, term_count);
      if (walked != reference) {
        diverged("enumerated", walked, reference);
        return kExitDivergence;
      }
      ++checks;
    }
    if (table) {
      const Count queried = denum::query_table(*table, b);
      if (queried != reference) {
        diverged("table", queried, reference);
        return kExitDivergence;
      }
      ++checks;
    }
    if (stored_table) {
      const Count queried = denum::query_table(*stored_table, b);
      if (queried != reference) {
        diverged("table-file", queried, reference);
        return kExitDivergence;
      }
      ++checks;
    }
    if (leq_route) {
      const Count leq_reference =
          denum::count_leq_dp(spec.coefficients(), b, oracle_opts);
      const Count leq = denum::count_leq_direct(spec, b, direct_opts);
      if (leq != leq_reference) {
        diverged("leq-direct", leq, leq_reference);
        return kExitDivergence;
      }
      ++checks;
    }
  }
  std::cout << "OK " << checks << "\n";
  return kExitOk;
}

int run_bench(const CommonArgs& args) {
  const denum::EquationSpec spec = make_spec(args);
  const denum::DirectOptions direct_opts = direct_options(args);
  const denum::OracleOptions oracle_opts = oracle_options(args);
  const denum::TableBuildOptions table_opts = build_options(args);
  const Count term_count = spec.term_count();

  std::vector<Int> b_values;
  for (const Int& b : parse_coefficient_list(args.b_list_csv)) {
    b_values.push_back(b);
  }

  std::ofstream file;
  if (!args.output_path.empty()) {
    file.open(args.output_path);
    if (!file) {
      throw denum::IoError("cannot open " + args.output_path +
                           " for writing");
    }
  }
  std::ostream& out = args.output_path.empty() ? std::cout : file;

  std::optional<denum::ResidueTable> table;
  if (spec.modulus() <= table_opts.modulus_cap) {
    const auto start = std::chrono::steady_clock::now();
    table = denum::build_table(spec, table_opts);
    std::cerr << "note: table built in " << seconds_since(start) << " s\n";
  } else {
    std::cerr << "note: modulus over the build cap, table route skipped\n";
  }

  out << "route\tb\twall_time_s\tterm_count\n";
  const auto row = [&](const char* route, const Int& b, double secs,
                       const Count& terms) {
    out << route << "\t" << b.get_str() << "\t" << secs << "\t"
        << terms.get_str() << "\n";
  };
  for (const Int& b : b_values) {
    if (!direct_opts.budget || term_count <= *direct_opts.budget) {
      const auto start = std::chrono::steady_clock::now();
      const Count value = denum::count_eq_direct(spec, b, direct_opts);
      row("direct", b, seconds_since(start), term_count);
      static_cast<void>(value);
    } else {
      std::cerr << "note: b=" << b.get_str()
                << ": term count over the budget, direct route skipped\n";
    }
    if (table) {
      const auto start = std::chrono::steady_clock::now();
      const Count value = denum::query_table(*table, b);
      row("table", b, seconds_since(start),
          Count(static_cast<unsigned long>(spec.n())));
      static_cast<void>(value);
    }
    if (b <= oracle_opts.value_cap) {
      const auto start = std::chrono::steady_clock::now();
      const Count value =
          denum::count_dp(spec.coefficients(), b, oracle_opts);
      row("oracle", b, seconds_since(start),
          Count((b + 1) * static_cast<unsigned long>(spec.n())));
      static_cast<void>(value);
    } else {
      std::cerr << "note: b=" << b.get_str()
                << " exceeds the oracle cap, oracle route skipped\n";
    }
  }
  if (!args.output_path.empty()) {
    file.flush();
    if (!file.good()) {
      throw denum::IoError("write failed for " + args.output_path);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solution counting for linear Diophantine equations "
               "and inequalities"};
  app.require_subcommand(1);

  CommonArgs args;

  CLI::App* count = app.add_subcommand(
      "count", "count non-negative solutions of sum(a_i x_i) = b");
  count->add_option("-a,--coeffs", args.coeffs_csv,
                    "comma-separated positive coefficients");
  count->add_option("-b", args.b_text, "right-hand side (decimal)")
      ->required();
  count->add_option("-t,--table", args.table_path,
                    "residue table file; when given, answers from the table");
  count->add_option("--modulus", args.modulus_text,
                    "common-multiple override for the direct route");
  count->add_option("--budget", args.budget_text,
                    "term budget for the direct route (default 100000000)");

  CLI::App* count_leq = app.add_subcommand(
      "count-leq", "count non-negative solutions of sum(a_i x_i) <= b");
  count_leq
      ->add_option("-a,--coeffs", args.coeffs_csv,
                   "comma-separated positive coefficients")
      ->required();
  count_leq->add_option("-b", args.b_text, "right-hand side (decimal)")
      ->required();
  count_leq->add_option("--modulus", args.modulus_text,
                        "common-multiple override");
  count_leq->add_option("--budget", args.budget_text, "term budget");

  CLI::App* build_table = app.add_subcommand(
      "build-table", "precompute the residue table for a coefficient list");
  build_table
      ->add_option("-a,--coeffs", args.coeffs_csv,
                   "comma-separated positive coefficients")
      ->required();
  build_table
      ->add_option("-o,--output", args.output_path, "table file to write")
      ->required();
  build_table->add_option("--modulus", args.modulus_text,
                          "common-multiple override");
  build_table->add_option("--build-cap", args.build_cap_text,
                          "largest modulus to accept (default 10000000)");

  CLI::App* query = app.add_subcommand(
      "query", "answer a count from a residue table file");
  query->add_option("-t,--table", args.table_path, "residue table file")
      ->required();
  query->add_option("-b", args.b_text, "right-hand side (decimal)")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check every counting route against the DP oracle");
  verify
      ->add_option("-a,--coeffs", args.coeffs_csv,
                   "comma-separated positive coefficients")
      ->required();
  verify->add_option("--b-max", args.b_max_text,
                     "check every b in [0, b-max] (default 100)");
  verify->add_option("--modulus", args.modulus_text,
                     "common-multiple override");
  verify->add_option("--budget", args.budget_text, "term budget");
  verify->add_option("--oracle-cap", args.oracle_cap_text,
                     "largest b the oracle accepts (default 1000000)");
  verify->add_option("--build-cap", args.build_cap_text,
                     "largest modulus for the table route");
  verify->add_option("-t,--table", args.table_path,
                     "also cross-check a stored table file");

  CLI::App* bench = app.add_subcommand(
      "bench", "time each route; emits a tab-separated table");
  bench
      ->add_option("-a,--coeffs", args.coeffs_csv,
                   "comma-separated positive coefficients")
      ->required();
  bench->add_option("-b", args.b_list_csv, "comma-separated list of b values")
      ->required();
  bench->add_option("--modulus", args.modulus_text,
                    "common-multiple override");
  bench->add_option("--budget", args.budget_text, "term budget");
  bench->add_option("--oracle-cap", args.oracle_cap_text,
                    "largest b the oracle accepts");
  bench->add_option("--build-cap", args.build_cap_text,
                    "largest modulus for the table route");
  bench->add_option("-o,--output", args.output_path,
                    "write the timing table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(count)) {
      return run_count(args);
    }
    if (app.got_subcommand(count_leq)) {
      return run_count_leq(args);
    }
    if (app.got_subcommand(build_table)) {
      return run_build_table(args);
    }
    if (app.got_subcommand(query)) {
      return run_query(args);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(args);
    }
    if (app.got_subcommand(bench)) {
      return run_bench(args);
    }
    std::cerr << "error: no subcommand\n";
    return kExitInput;
  } catch (const denum::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const denum::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const denum::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "secinv/errors.hpp"
#include "secinv/molien.hpp"
#include "secinv/problem.hpp"
#include "secinv/report.hpp"
#include "secinv/secondary.hpp"

using namespace secinv;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

struct Options {
  std::string file;
  std::optional<int> example;
  std::string algorithm = "improved";
  std::optional<unsigned> max_degree;
  std::string out = "text";
  std::size_t threads = 1;
  std::size_t batch_size = 1000;
  bool invariants = false;
};

struct Input {
  ProblemFile file;
  std::string source;
  std::vector<std::string> notes;
};

Input read_input(const Options& opt) {
  if (opt.example && !opt.file.empty()) throw ParseError("give either a problem file or --example, not both", 0);
  if (opt.example) {
    const BuiltinExample& ex = builtin_example(*opt.example);
    Input in{ex.problem, "example " + std::to_string(ex.number) + ": " + ex.description, {}};
    if (!ex.has_primaries)
      throw ValidationError("example " + std::to_string(ex.number) +
                            ": primary invariants are not published; only the group is available");
    if (ex.stretch) in.notes.push_back("stretch: may exceed desk-scale resources");
    return in;
  }
  if (opt.file.empty()) throw ParseError("no problem file given (use a path or --example N)", 0);
  return {load_problem(opt.file), opt.file, {}};
}

void emit(const Options& opt, RunReport report) {
  if (opt.out == "structured")
    write_structured(std::cout, report);
  else
    write_text(std::cout, report);
}

int cmd_molien(const Options& opt) {
  Input in = read_input(opt);
  Problem problem = build_problem(in.file);
  unsigned bound = secondary_degree_bound(problem.primaries.degrees);
  unsigned D = opt.max_degree.value_or(bound);
  auto series = molien_series(problem.group, D);
  auto counts = secondary_counts(series, problem.primaries.degrees, D, problem.group.order());
  RunReport report = molien_report(problem, series, counts);
  report.source = in.source;
  report.notes = in.notes;
  emit(opt, std::move(report));
  return 0;
}

int run_search(const Options& opt, Algorithm algorithm, const std::string& command) {
  Input in = read_input(opt);
  Problem problem = build_problem(in.file);
  SearchOptions search_options;
  search_options.threads = std::max<std::size_t>(opt.threads, 1);
  search_options.batch_size = std::max<std::size_t>(opt.batch_size, 1);

  auto start = std::chrono::steady_clock::now();
  SecondarySearch search(problem.group, problem.primaries, search_options);
  const unsigned bound = search.result().molien.degree_bound;
  const unsigned last = opt.max_degree ? std::min(*opt.max_degree, bound) : bound;
  for (unsigned d = 1; d <= last && !search.result().complete(); ++d) {
    switch (algorithm) {
      case Algorithm::kBasic:
        search.basic_degree(d);
        break;
      case Algorithm::kRefined:
        search.refined_degree(d);
        break;
      case Algorithm::kNew:
        search.new_degree(d);
        break;
      case Algorithm::kImproved:
        search.improved_degree(d);
        break;
      case Algorithm::kIrreducibleOnly:
        search.irreducible_only_degree(d);
        break;
    }
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  SecondaryResult result = search.result();
  result.algorithm = algorithm;
  RunReport report = secondary_report(problem, result, opt.invariants);
  report.command = command;
  report.source = in.source;
  report.notes = in.notes;
  report.elapsed_seconds = elapsed;
  const bool complete = result.complete();
  if (!complete) report.notes.push_back("degree cap " + std::to_string(last) + " reached before completion");
  emit(opt, std::move(report));
  if (complete) return 0;
  // Stopping at the natural bound with secondaries missing means the input is inconsistent.
  return last < bound ? kExitResource : kExitValidation;
}

int cmd_verify(const Options& opt) {
  Input in = read_input(opt);
  Problem problem = build_problem(in.file);
  unsigned bound = secondary_degree_bound(problem.primaries.degrees);
  auto series = molien_series(problem.group, bound);
  auto counts = secondary_counts(series, problem.primaries.degrees, bound, problem.group.order());
  if (opt.out == "structured") {
    RunReport report = molien_report(problem, series, counts);
    report.command = "verify";
    report.source = in.source;
    report.notes = in.notes;
    write_structured(std::cout, report);
  } else {
    std::cout << "valid: " << problem.variables.size() << " variables, |G| = " << problem.group.order()
              << ", primary degrees";
    for (unsigned d : problem.primaries.degrees) std::cout << " " << d;
    std::cout << ", " << counts.total << " secondary invariants expected\n";
  }
  return 0;
}

int fail(const Options& opt, const std::string& kind, const std::string& message, int code) {
  if (opt.out == "structured")
    std::cout << nlohmann::json{{"record", "error"}, {"schema", kRunSchema}, {"kind", kind}, {"message", message}}.dump()
              << "\n";
  std::cerr << kind << " error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secondary invariants of finite matrix groups over the rationals"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Problem file");
    sub->add_option("--example", opt.example, "Built-in example 1-9")->check(CLI::Range(1, 9));
    sub->add_option("--out", opt.out, "Output format")->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-degree", opt.max_degree, "Highest degree to process");
    sub->add_option("--threads", opt.threads, "Worker threads for candidate reduction");
    sub->add_option("--batch-size", opt.batch_size, "Reynolds images generated per batch");
    sub->add_flag("--invariants", opt.invariants, "Print the invariants themselves");
  };
  auto add_algorithm = [&](CLI::App* sub) {
    sub->add_option("--algorithm", opt.algorithm, "basic, refined, new or improved")
        ->check(CLI::IsMember({"basic", "refined", "new", "improved"}));
  };

  auto* molien = app.add_subcommand("molien", "Molien series and secondary counts per degree");
  add_input(molien);
  molien->add_option("--max-degree", opt.max_degree, "Highest degree of the series");
  auto* secondary = app.add_subcommand("secondary", "Secondary invariants");
  add_input(secondary);
  add_search(secondary);
  add_algorithm(secondary);
  auto* irred = app.add_subcommand("irred", "Irreducible secondary invariants only");
  add_input(irred);
  add_search(irred);
  auto* verify = app.add_subcommand("verify", "Validate a problem file");
  add_input(verify);
  auto* bench = app.add_subcommand("bench", "Run a built-in example with counters");
  bench->add_option("--example", opt.example, "Built-in example 1-9")->required()->check(CLI::Range(1, 9));
  bench->add_option("--out", opt.out, "Output format")->check(CLI::IsMember({"text", "structured"}));
  add_search(bench);
  bench->add_option("--algorithm", opt.algorithm, "basic, refined, new, improved or irred")
      ->check(CLI::IsMember({"basic", "refined", "new", "improved", "irred"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*molien) return cmd_molien(opt);
    if (*secondary) return run_search(opt, parse_algorithm(opt.algorithm), "secondary");
    if (*irred) return run_search(opt, Algorithm::kIrreducibleOnly, "irred");
    if (*verify) return cmd_verify(opt);
    if (*bench) return run_search(opt, parse_algorithm(opt.algorithm), "bench");
  } catch (const ParseError& e) {
    return fail(opt, "parse", e.what(), kExitParse);
  } catch (const ResourceError& e) {
    return fail(opt, "resource", e.what(), kExitResource);
  } catch (const ValidationError& e) {
    return fail(opt, "validation", e.what(), kExitValidation);
  } catch (const DimensionError& e) {
    return fail(opt, "validation", e.what(), kExitValidation);
  } catch (const DomainError& e) {
    return fail(opt, "validation", e.what(), kExitValidation);
  } catch (const std::exception& e) {
    return fail(opt, "internal", e.what(), 1);
  }
  return 0;
}

// Copyright 2026 The symmix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symmix/characters.h"
#include "symmix/errors.h"
#include "symmix/exactmath.h"
#include "symmix/mixing.h"
#include "symmix/partition.h"
#include "symmix/simulate.h"
#include "symmix/tensor.h"

namespace symmix::cli {
namespace {

using Json = nlohmann::ordered_json;

// Exact integers become JSON numbers when they fit in a long, strings
// otherwise.
Json ExactInteger(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json DecimalNumber(const std::string& decimal) { return Json(std::stod(decimal)); }

// One output table plus envelope metadata. Each row is kept twice: as CSV
// cells in column order and as a JSON object that also carries exact
// numerator/denominator fields.
struct Report {
  std::string subcommand;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> csv_rows;
  Json rows = Json::array();
  Json summary = Json::object();
  std::vector<std::string> warnings;

  // Stores a rational as <name>_num, <name>_den and the decimal <name>.
  static void PutRatio(Json& row, const std::string& name, const Ratio& value) {
    row[name + "_num"] = ExactInteger(value.get_num());
    row[name + "_den"] = ExactInteger(value.get_den());
    row[name] = DecimalNumber(to_decimal(value));
  }
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string SummaryValue(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void WriteCsv(const Report& report, std::ostream& out, std::ostream& err) {
  for (size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << CsvField(report.columns[i]);
  }
  out << "\n";
  for (const auto& row : report.csv_rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << CsvField(row[i]);
    }
    out << "\n";
  }
  for (const auto& [key, value] : report.summary.items()) {
    err << "# " << key << "=" << SummaryValue(value) << "\n";
  }
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
}

void WriteJson(const Report& report, std::ostream& out) {
  Json envelope;
  envelope["tool"] = kToolName;
  envelope["version"] = kToolVersion;
  envelope["subcommand"] = report.subcommand;
  envelope["parameters"] = report.parameters;
  envelope["rows"] = report.rows;
  if (!report.summary.empty()) envelope["summary"] = report.summary;
  envelope["warnings"] = report.warnings;
  out << envelope.dump(2) << "\n";
}

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  int exact_ceiling = kDefaultExactCeiling;
};

void AddCommon(CLI::App* sub, CommonOptions& common, bool with_ceiling) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", common.output,
                  "Write data to this path instead of standard output");
  if (with_ceiling) {
    sub->add_option("--exact-ceiling", common.exact_ceiling,
                    "Largest n for exact chain computations")
        ->capture_default_str();
  }
}

void RequireAtLeast(const char* name, long value, long minimum) {
  if (value < minimum) {
    throw DomainError(std::string(name) + " must be >= " +
                      std::to_string(minimum));
  }
}

// ---------------------------------------------------------------- decompose

struct DecomposeOptions {
  int n = 0;
  int r = 0;
  std::string rep = "defining";
  bool diagnose = false;
};

Report Decompose(const DecomposeOptions& o) {
  Report report;
  report.subcommand = "decompose";
  report.parameters = {{"n", o.n}, {"r", o.r}, {"rep", o.rep}};
  report.columns = {"lambda", "multiplicity", "method", "dim", "mult_times_dim"};

  const Rep rep = parse_rep(o.rep);
  const DecompositionTable table = decompose(o.n, o.r, rep);
  int oracle_rows = 0;
  for (const auto& e : table.entries) {
    const Natural product = e.multiplicity * e.dimension;
    report.csv_rows.push_back({e.lambda.ToString(), e.multiplicity.get_str(),
                               std::string(to_string(e.method)),
                               e.dimension.get_str(), product.get_str()});
    report.rows.push_back({{"lambda", e.lambda.ToString()},
                           {"multiplicity", ExactInteger(e.multiplicity)},
                           {"method", to_string(e.method)},
                           {"dim", ExactInteger(e.dimension)},
                           {"mult_times_dim", ExactInteger(product)}});
    if (e.method == Method::kOracle) ++oracle_rows;
  }
  report.summary["dimension_sum"] = ExactInteger(table.dimension_sum());
  if (oracle_rows > 0) {
    report.warnings.push_back(
        "oracle fallback used for " + std::to_string(oracle_rows) +
        " partition(s) with r > n - lambda_2");
  }
  if (o.diagnose) {
    const auto divergences = closed_form_divergences(o.n, o.r, rep);
    if (divergences.empty()) {
      report.warnings.push_back(
          "diagnose: closed form matches the oracle on every out-of-range row");
    }
    for (const auto& d : divergences) {
      report.warnings.push_back("diagnose: closed form diverges at " +
                                d.lambda.ToString() + ": closed_form=" +
                                d.closed_form.get_str() +
                                " oracle=" + d.oracle.get_str());
    }
  }
  return report;
}

// ----------------------------------------------------------------- chartab

Report Chartab(int n) {
  Report report;
  report.subcommand = "chartab";
  report.parameters = {{"n", n}};
  report.columns = {"lambda", "gamma", "chi", "class_size", "dim"};

  auto table = character_table(n);
  for (size_t l = 0; l < table->size(); ++l) {
    for (size_t g = 0; g < table->size(); ++g) {
      const Integer& chi = table->value(l, g);
      report.csv_rows.push_back({table->partitions()[l].ToString(),
                                 table->partitions()[g].ToString(),
                                 chi.get_str(), table->class_size(g).get_str(),
                                 table->dimension(l).get_str()});
      report.rows.push_back({{"lambda", table->partitions()[l].ToString()},
                             {"gamma", table->partitions()[g].ToString()},
                             {"chi", ExactInteger(chi)},
                             {"class_size", ExactInteger(table->class_size(g))},
                             {"dim", ExactInteger(table->dimension(l))}});
    }
  }
  return report;
}

// ------------------------------------------------------------------- chain

void CheckExactCeiling(int n, int ceiling, const char* hint) {
  if (n > ceiling) {
    throw ResourceLimitError("n = " + std::to_string(n) +
                             " exceeds --exact-ceiling " +
                             std::to_string(ceiling) + "; " + hint);
  }
}

Report Chain(int n, int k, int ceiling) {
  Report report;
  report.subcommand = "chain";
  report.parameters = {{"n", n}, {"k", k}, {"exact_ceiling", ceiling}};
  report.columns = {"gamma", "mass_num", "mass_den", "fixed_points", "mass"};

  const ChainSpec spec{n, k};
  spec.Validate();
  CheckExactCeiling(n, ceiling, "use `simulate` for larger decks");
  const ClassDistribution law = chain_distribution(spec);
  const ClassDistribution reference = reference_measure(n, spec.parity());
  for (size_t g = 0; g < law.classes().size(); ++g) {
    const Partition& gamma = law.classes()[g];
    const Ratio& mass = law.masses()[g];
    report.csv_rows.push_back({gamma.ToString(), mass.get_num().get_str(),
                               mass.get_den().get_str(),
                               std::to_string(fixed_points(gamma)),
                               to_decimal(mass)});
    Json row = {{"gamma", gamma.ToString()}};
    Report::PutRatio(row, "mass", mass);
    row["fixed_points"] = fixed_points(gamma);
    report.rows.push_back(row);
  }

  const Ratio tv = total_variation(law, reference);
  const Ratio lower = finite_lower_bound(spec);
  const Ratio rhs = ds_bound_rhs(spec);
  report.summary["parity"] = to_string(spec.parity());
  Report::PutRatio(report.summary, "tv_exact", tv);
  Report::PutRatio(report.summary, "lower_bound", lower);
  Report::PutRatio(report.summary, "ds_rhs", rhs);
  report.summary["ds_bound"] = DecimalNumber(to_decimal(ds_upper_bound(spec)));
  return report;
}

// ------------------------------------------------------------------ bounds

struct BoundsOptions {
  double c = 0;
  int nmin = 0;
  int nmax = 0;
  int step = 1;
};

Report Bounds(const BoundsOptions& o, int ceiling) {
  Report report;
  report.subcommand = "bounds";
  report.parameters = {{"c", o.c},
                       {"nmin", o.nmin},
                       {"nmax", o.nmax},
                       {"step", o.step},
                       {"exact_ceiling", ceiling}};
  report.columns = {"n",      "k",        "tv_exact",         "lower_bound",
                    "ds_bound", "asymptotic_lower", "asymptotic_upper"};
  if (!(o.c > 0)) throw DomainError("--c must be positive");
  RequireAtLeast("--nmin", o.nmin, 3);
  RequireAtLeast("--nmax", o.nmax, o.nmin);
  RequireAtLeast("--step", o.step, 1);

  const AsymptoticBounds asymptotic = asymptotic_bounds(o.c);
  const std::string lo = to_decimal(asymptotic.lower);
  const std::string hi = to_decimal(asymptotic.upper);
  bool skipped = false;
  for (int n = o.nmin; n <= o.nmax; n += o.step) {
    const int k = static_cast<int>(std::lround(o.c * n));
    const ChainSpec spec{n, k};
    const std::string ds = to_decimal(ds_upper_bound(spec));
    Json row = {{"n", n}, {"k", k}};
    std::string tv_cell, lower_cell;
    if (n <= ceiling) {
      const ClassDistribution law = chain_distribution(spec);
      const Ratio tv = total_variation(law, reference_measure(n, spec.parity()));
      const Ratio lower = finite_lower_bound(spec);
      tv_cell = to_decimal(tv);
      lower_cell = to_decimal(lower);
      Report::PutRatio(row, "tv_exact", tv);
      Report::PutRatio(row, "lower_bound", lower);
    } else {
      skipped = true;
      row["tv_exact"] = nullptr;
      row["lower_bound"] = nullptr;
    }
    row["ds_bound"] = DecimalNumber(ds);
    row["asymptotic_lower"] = DecimalNumber(lo);
    row["asymptotic_upper"] = DecimalNumber(hi);
    report.rows.push_back(row);
    report.csv_rows.push_back({std::to_string(n), std::to_string(k), tv_cell,
                               lower_cell, ds, lo, hi});
  }
  report.warnings.push_back(
      "k = round(c * n); asymptotic columns are n -> infinity limits, compare "
      "as trends only");
  if (skipped) {
    report.warnings.push_back("exact columns left empty for n above --exact-ceiling");
  }
  return report;
}

// ----------------------------------------------------------------- moments

Report Moments(int n, int k, int rmax, int ceiling) {
  Report report;
  report.subcommand = "moments";
  report.parameters = {{"n", n}, {"k", k}, {"rmax", rmax}, {"exact_ceiling", ceiling}};
  report.columns = {"r", "moment_exact_num", "moment_exact_den", "moment_exact",
                    "poisson_moment"};
  const ChainSpec spec{n, k};
  spec.Validate();
  RequireAtLeast("--rmax", rmax, 1);
  CheckExactCeiling(n, ceiling, "exact moments are gated like `chain`");

  const double nu = 1 - std::exp(-2.0 * k / n);
  report.parameters["poisson_mean"] = DecimalNumber(to_decimal(nu));
  for (int r = 1; r <= rmax; ++r) {
    const Ratio moment = moment_via_decomposition(spec, r);
    const std::string poisson = to_decimal(poisson_moment(nu, r));
    report.csv_rows.push_back({std::to_string(r), moment.get_num().get_str(),
                               moment.get_den().get_str(), to_decimal(moment),
                               poisson});
    Json row = {{"r", r}};
    Report::PutRatio(row, "moment_exact", moment);
    row["poisson_moment"] = DecimalNumber(poisson);
    report.rows.push_back(row);
  }
  if (rmax >= n) {
    report.warnings.push_back("oracle multiplicities used for r >= n");
  }
  return report;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  int n = 0;
  int k = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
};

Report Simulate(const SimulateOptions& o, int ceiling) {
  Report report;
  report.subcommand = "simulate";
  report.parameters = {{"n", o.n},
                       {"k", o.k},
                       {"trials", o.trials},
                       {"seed", o.seed},
                       {"exact_ceiling", ceiling}};
  report.columns = {"gamma", "count", "frequency", "exact_mass"};

  const ChainSpec spec{o.n, o.k};
  spec.Validate();
  RequireAtLeast("--trials", static_cast<long>(o.trials), 1);
  const SimulationReport sim = run_chain(spec, o.trials, o.seed);
  const Integer trials(static_cast<unsigned long>(o.trials));

  std::optional<ClassDistribution> exact;
  if (o.n <= ceiling) exact = chain_distribution(spec);

  std::vector<Partition> classes;
  if (exact) {
    for (size_t g = 0; g < exact->classes().size(); ++g) {
      const Partition& gamma = exact->classes()[g];
      if (exact->masses()[g] != 0 || sim.class_counts.count(gamma)) {
        classes.push_back(gamma);
      }
    }
  } else {
    for (auto it = sim.class_counts.rbegin(); it != sim.class_counts.rend(); ++it) {
      classes.push_back(it->first);
    }
  }

  for (const Partition& gamma : classes) {
    auto it = sim.class_counts.find(gamma);
    const uint64_t count = it == sim.class_counts.end() ? 0 : it->second;
    const Ratio frequency = make_ratio(Integer(static_cast<unsigned long>(count)), trials);
    Json row = {{"gamma", gamma.ToString()}, {"count", count}};
    row["frequency"] = DecimalNumber(to_decimal(frequency));
    std::string exact_cell;
    if (exact) {
      const Ratio& mass = exact->mass(gamma);
      exact_cell = to_decimal(mass);
      Report::PutRatio(row, "exact_mass", mass);
    } else {
      row["exact_mass"] = nullptr;
    }
    report.rows.push_back(row);
    report.csv_rows.push_back({gamma.ToString(), std::to_string(count),
                               to_decimal(frequency), exact_cell});
  }

  report.summary["generator"] = sim.generator;
  if (exact) {
    report.summary["empirical_tv"] = DecimalNumber(to_decimal(empirical_tv(sim, *exact)));
  } else {
    report.warnings.push_back("n above --exact-ceiling: no exact masses");
  }
  Json moments = Json::array();
  for (double m : sim.empirical_moments) moments.push_back(DecimalNumber(to_decimal(m)));
  report.summary["empirical_moments"] = moments;
  Json histogram = Json::object();
  for (const auto& [fix, count] : sim.fixed_point_histogram) {
    histogram[std::to_string(fix)] = count;
  }
  report.summary["fixed_point_histogram"] = histogram;
  return report;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact tensor-power decompositions and n-cycle/random-transposition "
      "mixing analysis for the symmetric group"};
  app.name(args.empty() ? kToolName : args[0]);
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommonOptions common;
  std::function<Report()> action;

  DecomposeOptions decompose_opts;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Multiplicities of irreducibles in a tensor power");
  decompose_cmd->add_option("--n", decompose_opts.n, "Degree n >= 3")->required();
  decompose_cmd->add_option("--r", decompose_opts.r, "Tensor power r >= 1")->required();
  decompose_cmd->add_option("--rep", decompose_opts.rep, "defining | standard")
      ->check(CLI::IsMember({"defining", "standard"}))
      ->required();
  decompose_cmd->add_flag("--diagnose", decompose_opts.diagnose,
                          "Compare the closed form with the oracle outside its range");
  AddCommon(decompose_cmd, common, false);
  decompose_cmd->callback([&] { action = [&] { return Decompose(decompose_opts); }; });

  int chartab_n = 0;
  auto* chartab_cmd = app.add_subcommand("chartab", "Full character table of S_n");
  chartab_cmd->add_option("--n", chartab_n, "Degree n >= 1")->required();
  AddCommon(chartab_cmd, common, false);
  chartab_cmd->callback([&] { action = [&] { return Chartab(chartab_n); }; });

  int chain_n = 0, chain_k = 0;
  auto* chain_cmd = app.add_subcommand(
      "chain", "Exact class law after one n-cycle and k transpositions");
  chain_cmd->add_option("--n", chain_n, "Deck size n >= 3")->required();
  chain_cmd->add_option("--k", chain_k, "Transpositions k >= 0")->required();
  AddCommon(chain_cmd, common, true);
  chain_cmd->callback([&] {
    action = [&] { return Chain(chain_n, chain_k, common.exact_ceiling); };
  });

  BoundsOptions bounds_opts;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Exact TV against finite and asymptotic bounds");
  bounds_cmd->add_option("--c", bounds_opts.c, "Transpositions per card c > 0")->required();
  bounds_cmd->add_option("--nmin", bounds_opts.nmin, "Smallest n")->required();
  bounds_cmd->add_option("--nmax", bounds_opts.nmax, "Largest n")->required();
  bounds_cmd->add_option("--step", bounds_opts.step, "Step in n")->capture_default_str();
  AddCommon(bounds_cmd, common, true);
  bounds_cmd->callback([&] {
    action = [&] { return Bounds(bounds_opts, common.exact_ceiling); };
  });

  int moments_n = 0, moments_k = 0, moments_rmax = 0;
  auto* moments_cmd =
      app.add_subcommand("moments", "Exact fixed-point moments versus the Poisson limit");
  moments_cmd->add_option("--n", moments_n, "Deck size n >= 3")->required();
  moments_cmd->add_option("--k", moments_k, "Transpositions k >= 0")->required();
  moments_cmd->add_option("--rmax", moments_rmax, "Highest moment")->required();
  AddCommon(moments_cmd, common, true);
  moments_cmd->callback([&] {
    action = [&] {
      return Moments(moments_n, moments_k, moments_rmax, common.exact_ceiling);
    };
  });

  SimulateOptions simulate_opts;
  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo of the chain");
  simulate_cmd->add_option("--n", simulate_opts.n, "Deck size n >= 3")->required();
  simulate_cmd->add_option("--k", simulate_opts.k, "Transpositions k >= 0")->required();
  simulate_cmd->add_option("--trials", simulate_opts.trials, "Trajectories")->required();
  simulate_cmd->add_option("--seed", simulate_opts.seed, "64-bit seed")->required();
  AddCommon(simulate_cmd, common, true);
  simulate_cmd->callback([&] {
    action = [&] { return Simulate(simulate_opts, common.exact_ceiling); };
  });

  if (args.size() <= 1) {
    err << app.help();
    return 2;
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Report report = action();
    std::ofstream file;
    if (!common.output.empty()) {
      file.open(common.output, std::ios::binary);
      if (!file) throw Error("cannot open " + common.output + " for writing");
    }
    std::ostream& sink = common.output.empty() ? out : file;
    if (common.format == "json") {
      WriteJson(report, sink);
    } else {
      WriteCsv(report, sink, err);
    }
    if (common.output.empty()) return 0;
    file.close();
    if (!file) throw Error("failed writing " + common.output);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace symmix::cli

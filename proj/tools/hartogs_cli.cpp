// hartogs: command-line front end for the D_{n,m} Bergman kernel library.
//
// Exit codes: 0 success, 2 invalid input, 3 numeric failure, 4 I/O failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hartogs/combinatorics.hpp"
#include "hartogs/error.hpp"
#include "hartogs/format.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/luqikeng.hpp"
#include "hartogs/polylog.hpp"

namespace {

using namespace hartogs;

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double tol = 1e-12;
  std::string output;
  std::string format = "json";
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::LengthMismatch:
    case ErrorKind::InvalidPoint:
      return kExitInvalid;
    default:
      return kExitNumeric;
  }
}

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.output.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(global.output);
  if (!out) throw IoError("cannot open '" + global.output + "' for writing");
  out << text << '\n';
  if (!out) throw IoError("write to '" + global.output + "' failed");
}

void emit(const GlobalOptions& global, const Json& j) { emit(global, j.dump(2)); }

void require_json(const GlobalOptions& global, const char* command) {
  if (global.format != "json")
    throw Error(ErrorKind::InvalidArgument, std::string(command) + " only supports --format json");
}

double relative_difference(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

int negative_order(int order) {
  if (order > -1) throw Error(ErrorKind::InvalidArgument, "--order must be a negative integer, got " + std::to_string(order));
  return -order;
}

// ---- polylog / polylog-deriv ---------------------------------------------

struct PolylogArgs {
  int order = -1;
  int derivative = 0;
  std::string at;
  bool series = false;
};

void run_polylog(const GlobalOptions& global, const PolylogArgs& args, bool derivative) {
  require_json(global, "polylog");
  const int n = negative_order(args.order);
  const Complex t = parse_complex(args.at);

  OutputRecord record;
  record.command = derivative ? "polylog-deriv" : "polylog";
  record.inputs["order"] = args.order;
  if (derivative) record.inputs["m"] = args.derivative;
  record.inputs["at"] = complex_to_json(t);
  record.inputs["series"] = args.series;
  record.inputs["tol"] = global.tol;

  const Complex closed = derivative ? polylog_deriv_closed(n, args.derivative, t) : polylog_neg_closed(n, t);
  record.result["closed"] = complex_to_json(closed);
  if (args.series) {
    const Complex series =
        derivative ? polylog_deriv_series(n, args.derivative, t, global.tol) : polylog_series(-n, t, global.tol);
    record.result["series"] = complex_to_json(series);
    record.result["difference"] = std::abs(closed - series);
  }
  emit(global, record.to_json());
}

// ---- tables ----------------------------------------------------------------

struct TablesArgs {
  std::string kind;
  int n_max = 0;
};

void run_tables(const GlobalOptions& global, const TablesArgs& args) {
  const bool eulerian = args.kind == "eulerian";
  if (!eulerian && args.kind != "stirling")
    throw Error(ErrorKind::InvalidArgument, "tables kind must be 'eulerian' or 'stirling'");
  const int first = eulerian ? 1 : 0;
  if (args.n_max < first || args.n_max > 200)
    throw Error(ErrorKind::InvalidArgument, "n-max must lie in [" + std::to_string(first) + ", 200]");

  std::vector<std::vector<ExactInt>> rows;
  for (int n = first; n <= args.n_max; ++n) rows.push_back(eulerian ? eulerian_row(n) : stirling2_row(n));

  if (global.format == "csv") {
    // Eulerian rows are indexed k = 1..n, Stirling rows k = 0..n.
    std::ostringstream os;
    os << "n,k,value";
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < rows[r].size(); ++k)
        os << '\n' << (first + static_cast<int>(r)) << ',' << (k + first) << ',' << rows[r][k];
    emit(global, os.str());
    return;
  }
  require_json(global, "tables");

  OutputRecord record;
  record.command = "tables";
  record.inputs["kind"] = args.kind;
  record.inputs["n_max"] = args.n_max;
  Json table = Json::array();
  for (const auto& row : rows) {
    Json out = Json::array();
    for (const auto& x : row) out.push_back(exact_to_json(x));
    table.push_back(std::move(out));
  }
  record.result["first_row"] = first;
  record.result["rows"] = std::move(table);
  emit(global, record.to_json());
}

// ---- kernel ----------------------------------------------------------------

struct KernelArgs {
  int n = 1;
  int m = 1;
  double mu = 1.0;
  std::string p_z, p_zeta, q_z, q_zeta;
  std::string pairs;
  std::string method = "eq3";
};

ComplexVector vector_or_zero(const std::string& text, int length) {
  return text.empty() ? ComplexVector(length) : parse_complex_vector(text);
}

DomainPoint point_from_json(const KernelParams& params, const Json& j) {
  if (!j.is_object() || !j.contains("z") || !j.contains("zeta"))
    throw Error(ErrorKind::InvalidArgument, "each point needs 'z' and 'zeta' arrays");
  return DomainPoint::make(params, vector_from_json(j["z"]), vector_from_json(j["zeta"]));
}

std::vector<std::pair<DomainPoint, DomainPoint>> load_pairs(const KernelParams& params, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pairs file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, "pairs file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw Error(ErrorKind::InvalidArgument, "pairs file must hold a JSON array");
  std::vector<std::pair<DomainPoint, DomainPoint>> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("p") || !item.contains("q"))
      throw Error(ErrorKind::InvalidArgument, "each pair needs 'p' and 'q'");
    out.emplace_back(point_from_json(params, item["p"]), point_from_json(params, item["q"]));
  }
  return out;
}

OutputRecord kernel_record(const GlobalOptions& global, const KernelArgs& args, const KernelParams& params,
                           const DomainPoint& p, const DomainPoint& q, bool oracle) {
  OutputRecord record;
  record.command = oracle ? "kernel oracle" : "kernel eval";
  record.inputs["n"] = params.n();
  record.inputs["m"] = params.m();
  record.inputs["mu"] = params.mu();
  record.inputs["p"] = point_to_json(p);
  record.inputs["q"] = point_to_json(q);
  record.result["argument"] = complex_to_json(argument_map(params, p, q));

  if (oracle) {
    record.inputs["tol"] = global.tol;
    const Complex series = bergman_series(params, p, q, global.tol);
    const Complex closed = bergman_eq3(params, p, q);
    record.result["series"] = complex_to_json(series);
    record.result["eq3"] = complex_to_json(closed);
    record.result["relative_difference"] = relative_difference(series, closed);
    return record;
  }

  record.inputs["method"] = args.method;
  const bool all = args.method == "all";
  std::optional<Complex> eq3, eq4, series;
  if (all || args.method == "eq3") eq3 = bergman_eq3(params, p, q);
  if (all || args.method == "eq4") eq4 = bergman_eq4(params, p, q);
  if (all || args.method == "series") {
    record.inputs["tol"] = global.tol;
    series = bergman_series(params, p, q, global.tol);
  }
  if (eq3) record.result["eq3"] = complex_to_json(*eq3);
  if (eq4) record.result["eq4"] = complex_to_json(*eq4);
  if (series) record.result["series"] = complex_to_json(*series);
  if (all) {
    Json diffs = Json::object();
    diffs["eq3_eq4"] = relative_difference(*eq3, *eq4);
    diffs["eq3_series"] = relative_difference(*eq3, *series);
    diffs["eq4_series"] = relative_difference(*eq4, *series);
    record.result["relative_differences"] = std::move(diffs);
  }
  return record;
}

void run_kernel(const GlobalOptions& global, const KernelArgs& args, bool oracle) {
  require_json(global, "kernel");
  if (args.method != "eq3" && args.method != "eq4" && args.method != "series" && args.method != "all")
    throw Error(ErrorKind::InvalidArgument, "--method must be eq3, eq4, series or all");
  const KernelParams params(args.n, args.m, args.mu);

  if (!args.pairs.empty()) {
    const auto pairs = load_pairs(params, args.pairs);
    Json out = Json::array();
    for (const auto& [p, q] : pairs) out.push_back(kernel_record(global, args, params, p, q, oracle).to_json());
    emit(global, out);
    return;
  }
  const auto p = DomainPoint::make(params, vector_or_zero(args.p_z, args.n), vector_or_zero(args.p_zeta, args.m));
  const auto q = DomainPoint::make(params, vector_or_zero(args.q_z, args.n), vector_or_zero(args.q_zeta, args.m));
  emit(global, kernel_record(global, args, params, p, q, oracle).to_json());
}

// ---- luqikeng --------------------------------------------------------------

struct LuQiKengArgs {
  int n = 1;
  int m = 1;
  bool witness = false;
  bool numeric = false;
  double mu = 1.0;
};

void run_luqikeng(const GlobalOptions& global, const LuQiKengArgs& args) {
  require_json(global, "luqikeng");
  if (args.n < 1 || args.m < 1) throw Error(ErrorKind::InvalidArgument, "n and m must be >= 1");

  OutputRecord record;
  record.command = "luqikeng";
  record.inputs["n"] = args.n;
  record.inputs["m"] = args.m;
  record.inputs["witness"] = args.witness;
  record.inputs["mu"] = args.mu;
  record.inputs["numeric"] = args.numeric;

  ClassifyOptions options;
  options.force_numeric = args.numeric;
  const LuQiKengVerdict verdict = classify(args.n, args.m, options);
  record.result["verdict"] = verdict_to_json(verdict);
  if (args.n > kConditioningWarningDegree) record.diagnostics.push_back("numerator degree above 30; roots may be inaccurate");

  if (args.witness) {
    if (verdict.status == ZeroStatus::HasZero) {
      const KernelParams params(args.n, args.m, args.mu);
      const Witness witness = construct_witness(params, *verdict.witness_root);
      const Complex diagonal = bergman_eq3(params, witness.point_a, witness.point_a);
      Json w = witness_to_json(witness);
      w["diagonal_value"] = complex_to_json(diagonal);
      w["relative_residual"] = std::abs(witness.kernel_value) / std::abs(diagonal);
      record.result["witness"] = std::move(w);
    } else {
      record.result["witness"] = nullptr;
      record.diagnostics.push_back("no witness: verdict is " + std::string(to_string(verdict.status)));
    }
  }
  emit(global, record.to_json());
}

// ---- zeros locus -----------------------------------------------------------

struct LocusArgs {
  int n = 1;
  int m = 1;
  int resolution = 64;
  std::string path;
};

void run_locus(const GlobalOptions& global, const LocusArgs& args) {
  if (args.resolution < 8 || args.resolution > 1024)
    throw Error(ErrorKind::InvalidArgument, "resolution must lie in [8, 1024]");
  if (args.n < 1 || args.m < 0) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and m >= 0");
  const auto grid = zero_locus_grid(args.n, args.m, args.resolution);

  {
    std::ofstream out(args.path);
    if (!out) throw IoError("cannot open '" + args.path + "' for writing");
    out << "re,im,modulus\n";
    for (const auto& s : grid)
      out << format_double(s.t.real()) << ',' << format_double(s.t.imag()) << ',' << format_double(s.modulus) << '\n';
    if (!out) throw IoError("write to '" + args.path + "' failed");
  }

  const auto smallest = std::min_element(grid.begin(), grid.end(),
                                         [](const LocusSample& a, const LocusSample& b) { return a.modulus < b.modulus; });
  OutputRecord record;
  record.command = "zeros locus";
  record.inputs["n"] = args.n;
  record.inputs["m"] = args.m;
  record.inputs["resolution"] = args.resolution;
  record.inputs["path"] = args.path;
  record.result["rows"] = grid.size();
  record.result["minimum"] = {{"t", complex_to_json(smallest->t)}, {"modulus", smallest->modulus}};
  emit(global, record.to_json());
}

void report_error(std::string_view kind, const std::string& message) {
  Json j = Json::object();
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernel of the Hartogs domain |zeta|^2 < exp(-mu |z|^2)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Series tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", global.output, "Write the result here instead of stdout");
  app.add_option("--format", global.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  PolylogArgs polylog_args;
  auto* polylog = app.add_subcommand("polylog", "Li_{-n}(z) by closed form, optionally against the series");
  polylog->add_option("--order", polylog_args.order, "Negative order -n")->required();
  polylog->add_option("--at", polylog_args.at, "Argument, a+bi or (a,b)")->required();
  polylog->add_flag("--series", polylog_args.series, "Also sum the defining series");

  PolylogArgs deriv_args;
  auto* deriv = app.add_subcommand("polylog-deriv", "d^m/dt^m Li_{-n}(t)");
  deriv->add_option("--order", deriv_args.order, "Negative order -n")->required();
  deriv->add_option("--m", deriv_args.derivative, "Derivative order")->required()->check(CLI::NonNegativeNumber);
  deriv->add_option("--at", deriv_args.at, "Argument, a+bi or (a,b)")->required();
  deriv->add_flag("--series", deriv_args.series, "Also sum the termwise-differentiated series");

  TablesArgs tables_args;
  auto* tables = app.add_subcommand("tables", "Eulerian or Stirling triangles as decimal strings");
  tables->add_option("kind", tables_args.kind, "eulerian or stirling")->required();
  tables->add_option("n-max", tables_args.n_max, "Last row")->required();

  KernelArgs kernel_args;
  auto* kernel = app.add_subcommand("kernel", "Bergman kernel of D_{n,m}");
  kernel->require_subcommand(1);
  for (auto* sub : {kernel->add_subcommand("eval", "Closed-form and series values"),
                    kernel->add_subcommand("oracle", "Series oracle against the closed form")}) {
    sub->add_option("--n", kernel_args.n, "Base dimension")->required();
    sub->add_option("--m", kernel_args.m, "Fiber dimension")->required();
    sub->add_option("--mu", kernel_args.mu, "Weight parameter")->required();
    sub->add_option("--p-z", kernel_args.p_z, "z of the first point, ';'-separated");
    sub->add_option("--p-zeta", kernel_args.p_zeta, "zeta of the first point");
    sub->add_option("--q-z", kernel_args.q_z, "z of the second point");
    sub->add_option("--q-zeta", kernel_args.q_zeta, "zeta of the second point");
    sub->add_option("--pairs", kernel_args.pairs, "JSON file with [{\"p\":{...},\"q\":{...}}, ...]");
    if (sub->get_name() == "eval") sub->add_option("--method", kernel_args.method, "eq3, eq4, series or all");
  }

  LuQiKengArgs lqk_args;
  auto* lqk = app.add_subcommand("luqikeng", "Decide whether the kernel has zeros");
  lqk->add_option("n", lqk_args.n)->required();
  lqk->add_option("m", lqk_args.m)->required();
  lqk->add_flag("--witness", lqk_args.witness, "Construct witness points when a zero exists");
  lqk->add_flag("--numeric", lqk_args.numeric, "Force numeric root analysis");
  lqk->add_option("--mu", lqk_args.mu, "Weight parameter for the witness")->check(CLI::PositiveNumber);

  LocusArgs locus_args;
  auto* zeros = app.add_subcommand("zeros", "Zero-locus data export");
  zeros->require_subcommand(1);
  auto* locus = zeros->add_subcommand("locus", "|d^m Li_{-n}| on a polar grid, written as CSV");
  locus->add_option("n", locus_args.n)->required();
  locus->add_option("m", locus_args.m)->required();
  locus->add_option("resolution", locus_args.resolution)->required();
  locus->add_option("out", locus_args.path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (polylog->parsed()) run_polylog(global, polylog_args, false);
    else if (deriv->parsed()) run_polylog(global, deriv_args, true);
    else if (tables->parsed()) run_tables(global, tables_args);
    else if (kernel->parsed()) run_kernel(global, kernel_args, kernel->get_subcommand("oracle")->parsed());
    else if (lqk->parsed()) run_luqikeng(global, lqk_args);
    else if (locus->parsed()) run_locus(global, locus_args);
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const IoError& e) {
    report_error("IoError", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return kExitNumeric;
  }
  return 0;
}

// cubulate: build and certify the cube complex of a finite wall space.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubulate/action.hpp"
#include "cubulate/cubing.hpp"
#include "cubulate/examples.hpp"
#include "cubulate/homotopy.hpp"
#include "cubulate/wallspace.hpp"
#include "report.hpp"

namespace {

using namespace cubulate;
using cli::kExitCertificate;
using cli::kExitOk;
using ordered = nlohmann::ordered_json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string &text, const std::string &path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot write " + path);
  }
  out << text;
}

std::size_t default_max_vertices() {
  if (const char *env = std::getenv("CUBULATE_MAX_VERTICES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw Error(ErrorCode::ParseError, "CUBULATE_MAX_VERTICES must be a positive integer");
    }
  }
  return kDefaultMaxVertices;
}

class Stopwatch {
public:
  void lap(const std::string &name) {
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const ordered &laps() const { return laps_; }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  ordered laps_ = ordered::object();
};

struct Input {
  std::string digest;
  WallSpace space;
};

Input load_space(const std::string &path) {
  const std::string text = read_file(path);
  return {cli::digest(text), WallSpace::from_json(parse_json(text, path))};
}

struct CommonOptions {
  std::string file;
  Point base = 0;
  std::optional<std::size_t> max_vertices;
  bool timings = false;

  std::size_t cap() const { return max_vertices.value_or(default_max_vertices()); }
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("file", opts.file, "wall space JSON")->required();
  cmd->add_option("--base", opts.base, "base point p for the component of sigma_p");
  cmd->add_option("--max-vertices", opts.max_vertices,
                  "vertex budget (default 2^20, or CUBULATE_MAX_VERTICES)");
  cmd->add_flag("--timings", opts.timings, "include wall-clock timings in the report");
}

ordered header(const std::string &command, const Input &input, const CommonOptions &opts) {
  ordered report;
  report["command"] = command;
  report["input_digest"] = input.digest;
  report["base"] = opts.base;
  return report;
}

int run_validate(const std::string &file) {
  const Input input = load_space(file);
  ordered out;
  out["valid"] = true;
  out["input_digest"] = input.digest;
  out["points"] = input.space.point_count();
  out["walls"] = input.space.wall_count();
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_build(const CommonOptions &opts, const std::string &out_path) {
  Stopwatch clock;
  const Input input = load_space(opts.file);
  clock.lap("parse_ms");
  const CubeComplex complex = cubulate::cubulate(input.space, opts.base, opts.cap());
  clock.lap("build_ms");
  const auto dim = check_dimension_equals_intersection_number(input.space, complex);
  clock.lap("intersection_number_ms");

  ordered report = header("build", input, opts);
  report["counts"] = cli::counts(input.space, complex);
  report["intersection_number"] = dim.intersection_number;
  report["dimension"] = dim.dimension;
  report["dimension_equals_intersection_number"] = dim.equal();
  if (opts.timings) {
    report["timings"] = clock.laps();
  }
  if (!out_path.empty()) {
    write_output(out_path, complex.to_json().dump(2) + "\n");
  }
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int run_check(const CommonOptions &opts, std::size_t loops, std::uint64_t seed,
              const std::string &complex_in) {
  Stopwatch clock;
  const Input input = load_space(opts.file);
  const CubeComplex complex =
      complex_in.empty()
          ? cubulate::cubulate(input.space, opts.base, opts.cap())
          : CubeComplex::from_json(parse_json(read_file(complex_in), complex_in));
  if (complex.wall_count() != input.space.wall_count()) {
    throw Error(ErrorCode::MalformedComplex, "complex and wall space disagree on wall count");
  }
  clock.lap("build_ms");

  ordered report = header("check", input, opts);
  report["seed"] = seed;
  report["loops"] = loops;
  report["complex_source"] = complex_in.empty() ? "built" : "file";
  report["counts"] = cli::counts(input.space, complex);
  const auto dim = check_dimension_equals_intersection_number(input.space, complex);
  report["intersection_number"] = dim.intersection_number;
  report["dimension"] = dim.dimension;
  report["dimension_equals_intersection_number"] = dim.equal();

  ordered certs;
  const FlagReport flag = check_flag(complex);
  certs["flag"] = cli::flag_status(flag);
  clock.lap("flag_ms");
  const MetricReport metric = check_metric_correspondence(input.space, complex);
  certs["metric_correspondence"] = cli::metric_status(metric);
  clock.lap("metric_ms");

  const LoopSuiteResult suite = run_loop_suite(complex, loops, seed);
  auto parity = cli::status(suite.parity_failures == 0, suite.first_failure);
  parity["loops"] = suite.loops;
  parity["failures"] = suite.parity_failures;
  parity["longest_loop"] = suite.longest_loop;
  certs["parity"] = parity;
  auto contraction = cli::status(suite.contraction_failures == 0, suite.first_failure);
  contraction["loops"] = suite.loops;
  contraction["failures"] = suite.contraction_failures;
  contraction["square_moves"] = suite.square_moves;
  contraction["backtrack_moves"] = suite.backtrack_moves;
  certs["contraction"] = contraction;
  certs["equivariance"] = cli::skipped("no generators; use the act command");
  clock.lap("loops_ms");
  report["certificates"] = certs;
  if (opts.timings) {
    report["timings"] = clock.laps();
  }
  std::cout << report.dump(2) << "\n";
  return flag.flag() && metric.ok() && suite.ok() ? kExitOk : kExitCertificate;
}

int run_export(const CommonOptions &opts, const std::string &format, const std::string &out_path) {
  const Input input = load_space(opts.file);
  const CubeComplex complex = cubulate::cubulate(input.space, opts.base, opts.cap());
  write_output(out_path, format == "dot" ? complex.to_dot() : complex.to_json().dump(2) + "\n");
  return kExitOk;
}

int run_generate(const std::string &family, const std::string &param, const std::string &out_path) {
  std::vector<long> params;
  std::stringstream in(param);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      params.push_back(std::stol(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception &) {
      throw Error(ErrorCode::ParseError, "--param expects integers like 3 or 2,3");
    }
  }
  write_output(out_path, examples::generate(family, params).to_json().dump() + "\n");
  return kExitOk;
}

int run_act(const CommonOptions &opts, const std::string &generators_file,
            std::size_t max_word_length) {
  const Input input = load_space(opts.file);
  const auto generators = generators_from_json(
      input.space, parse_json(read_file(generators_file), generators_file));
  const CubeComplex complex = cubulate::cubulate(input.space, opts.base, opts.cap());

  ordered report = header("act", input, opts);
  report["counts"] = cli::counts(input.space, complex);
  bool all_passed = true;
  auto per_generator = ordered::array();
  for (const auto &g : generators) {
    const auto eq = check_equivariance(input.space, complex, g);
    all_passed = all_passed && eq.passed();
    per_generator.push_back(eq.to_json());
  }
  report["equivariance"] = per_generator;

  const auto orbit = orbit_and_stabilizer(input.space, complex, generators, complex.base(),
                                          max_word_length);
  ordered orbit_json;
  orbit_json["vertex"] = complex.base();
  orbit_json["orbit_size"] = orbit.orbit.size();
  orbit_json["orbit"] = orbit.orbit;
  orbit_json["max_word_length"] = max_word_length;
  orbit_json["elements_explored"] = orbit.elements_explored;
  orbit_json["stabilizer_words"] = orbit.stabilizer_words;
  report["orbit"] = orbit_json;
  report["note"] = "isometry and simpliciality are certified on this finite space; metric "
                   "properness of an infinite action is not decidable from it";
  std::cout << report.dump(2) << "\n";
  return all_passed ? kExitOk : kExitCertificate;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Build and certify the CAT(0) cube complex of a finite space with walls"};
  app.require_subcommand(1);

  std::string validate_file;
  auto *validate = app.add_subcommand("validate", "check a wall-space file");
  validate->add_option("file", validate_file, "wall space JSON")->required();

  CommonOptions build_opts;
  std::string build_out;
  auto *build = app.add_subcommand("build", "build the cube complex and report its counts");
  add_common(build, build_opts);
  build->add_option("--out", build_out, "write the complex JSON here");

  CommonOptions check_opts;
  std::size_t loops = 100;
  std::uint64_t seed = 1;
  std::string complex_in;
  auto *check = app.add_subcommand("check", "run the flag, metric, parity and contraction checks");
  add_common(check, check_opts);
  check->add_option("--loops", loops, "number of random loops")->capture_default_str();
  check->add_option("--seed", seed, "random seed")->capture_default_str();
  check->add_option("--complex-in", complex_in, "check this complex JSON instead of building");

  CommonOptions export_opts;
  std::string format = "json";
  std::string export_out;
  auto *exporter = app.add_subcommand("export", "export the complex as JSON or DOT");
  add_common(exporter, export_opts);
  exporter->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  exporter->add_option("--out", export_out, "output file (default stdout)");

  std::string family;
  std::string param;
  std::string generate_out;
  auto *generate = app.add_subcommand("generate", "emit an example wall space");
  generate->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"crossing", "nested", "tree", "triangle-lattice"}));
  generate->add_option("--param", param, "n, or arity,depth for tree")->required();
  generate->add_option("--out", generate_out, "output file (default stdout)");

  CommonOptions act_opts;
  std::string generators_file;
  std::size_t max_word_length = 6;
  auto *act = app.add_subcommand("act", "check a group action given by generators");
  add_common(act, act_opts);
  act->add_option("--generators", generators_file, "generators JSON")->required();
  act->add_option("--max-word-length", max_word_length, "stabilizer search depth")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  try {
    if (*validate) {
      return run_validate(validate_file);
    }
    if (*build) {
      return run_build(build_opts, build_out);
    }
    if (*check) {
      return run_check(check_opts, loops, seed, complex_in);
    }
    if (*exporter) {
      return run_export(export_opts, format, export_out);
    }
    if (*generate) {
      return run_generate(family, param, generate_out);
    }
    if (*act) {
      return run_act(act_opts, generators_file, max_word_length);
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInput;
  }
  return cli::kExitInput;
}

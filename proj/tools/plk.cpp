#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "plk/error.hpp"
#include "plk/input.hpp"
#include "plk/poisson.hpp"
#include "plk/report.hpp"
#include "plk/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) plk::raise(plk::ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value, const plk::InputDocument& doc) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("POISSON_LIE_KIT_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    plk::raise(plk::ErrorKind::InvalidArgument, std::string("POISSON_LIE_KIT_SEED is not an integer: ") + env);
  }
  return doc.seed.value_or(plk::kDefaultSeed);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) plk::raise(plk::ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks for quadratic Poisson brackets on Lie coalgebras"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite on an input file");
  std::string suite;
  std::string file;
  std::string format = "human";
  std::string out_path;
  std::uint64_t seed = plk::kDefaultSeed;
  std::size_t samples = 100;
  double tol_scale = 1.0;
  verify->add_option("suite", suite, "algebra | cybe | bracket | pair | group | gl-cross | all")->required();
  verify->add_option("file", file, "input document (JSON)")->required();
  verify->add_option("--format", format, "human | machine")->check(CLI::IsMember({"human", "machine"}));
  auto* seed_flag = verify->add_option("--seed", seed, "sampling seed (else POISSON_LIE_KIT_SEED, else the file's seed)");
  verify->add_option("--samples", samples, "group-suite sample count")->check(CLI::PositiveNumber);
  verify->add_option("--tol-scale", tol_scale, "multiplies every floating tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  auto* kernel = app.add_subcommand("kernel", "exact rank and kernel dimension of the CYBE kernel map");
  std::string kernel_file;
  std::size_t max_dim = 4;
  kernel->add_option("file", kernel_file, "input document (JSON)")->required();
  kernel->add_option("--max-dim", max_dim, "refuse algebras above this dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const std::string text = read_file(file);
      const plk::InputDocument doc = plk::parse_input(text);
      plk::SuiteOptions options;
      options.seed = resolve_seed(seed_flag, seed, doc);
      options.samples = samples;
      options.tol_scale = tol_scale;
      const plk::VerificationReport report = plk::run_suite(doc, suite, options);
      write_output(plk::emit_report(report, plk::parse_report_format(format)), out_path);
      return report.overall() ? kExitPass : kExitFail;
    }
    const plk::InputDocument doc = plk::parse_input(read_file(kernel_file));
    const plk::LieAlgebra algebra = doc.algebra();
    const auto forward = plk::kernel_map_matrix(algebra, max_dim, plk::EliminationOrder::RowsForward);
    const std::size_t other = plk::exact_rank(forward.matrix, plk::EliminationOrder::TransposedReversed);
    std::cout << "algebra " << algebra.name() << " dim " << algebra.dim() << '\n'
              << "map " << forward.matrix.rows() << " x " << forward.matrix.cols() << '\n'
              << "rank " << forward.rank << " (rows forward), " << other << " (transposed, reversed)\n"
              << "kernel dimension " << forward.kernel_dimension << '\n';
    return forward.rank == other ? kExitPass : kExitFail;
  } catch (const plk::Error& e) {
    std::cerr << "plk: " << e.what() << '\n';
    return kExitInput;
  }
}

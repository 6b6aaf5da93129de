#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plk/input.hpp"
#include "plk/report.hpp"

namespace plk {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 100;  // group suite only
  double tol_scale = 1.0;     // multiplies every floating tolerance
};

/// "algebra", "cybe", "bracket", "pair", "group", "gl-cross", "all".
const std::vector<std::string>& suite_names();

/// The fixed, ordered check identifiers a suite may report. "all" is the
/// union of the others in suite order. Throws UnknownSuite.
std::vector<std::string> suite_checks(std::string_view suite);

/// Runs the checks of `suite` on `doc`. A library error inside a check is
/// reported as a failure of that check; errors about the input itself
/// (MissingField for group without matrix_basis, AlgebraMismatch for
/// gl-cross on a non-gl algebra, invalid structure constants) propagate.
/// Under "all", group and gl-cross are skipped when not applicable.
VerificationReport run_suite(const InputDocument& doc, std::string_view suite, const SuiteOptions& options = {});

/// n with doc's algebra equal to gl(n) in the matrix-unit basis, or 0.
std::size_t detect_gl(const LieAlgebra& algebra);

}  // namespace plk

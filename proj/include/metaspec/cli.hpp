#ifndef METASPEC_CLI_HPP_
#define METASPEC_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metaspec/linalg.hpp"
#include "metaspec/rational.hpp"

namespace metaspec::cli {

struct MatrixProblem {
  std::size_t d = 0;
  linalg::RealMatrix B;
  linalg::RealMatrix C;
};

struct UnitaryProblem {
  std::optional<linalg::ComplexMatrix> entries;
  std::optional<std::vector<Rational>> angles;  // reduced fractions p_j/q_j
};

struct Options {
  std::optional<Rational> cutoff;
  std::optional<Rational> hbar;
  std::optional<Rational> r;
  std::optional<Rational> lambda;
  std::optional<int> k_max;
  std::optional<int> k;
  std::optional<int> n_max;
  std::optional<Integer> max_denominator;
  std::optional<Integer> q;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> branch;
  std::optional<std::string> filter;
};

// One problem variant must be present; see docs/schema/problem.schema.json.
struct ProblemFile {
  std::string version = "1";
  std::optional<MatrixProblem> matrix;
  std::optional<std::vector<Rational>> frequencies;
  std::optional<UnitaryProblem> unitary;
  Options options;
};

ProblemFile parse_problem(const std::string& json_text);

// Canonical serialization; parse-then-serialize is a fixed point.
std::string serialize_problem(const ProblemFile& problem);

// Exit codes: 0 success, 2 input validation, 3 mathematical precondition,
// 4 numerical non-convergence. Errors go to `err` as a JSON object.
int run(const std::string& command, const ProblemFile& input, std::ostream& out,
        std::ostream& err);

// Convenience wrapper: reads the input file, runs, writes output file or stdout.
int run_files(const std::string& command, const std::string& input_path,
              const std::string& output_path, const Options& overrides, std::ostream& console_out,
              std::ostream& err);

const std::vector<std::string>& known_commands();

}  // namespace metaspec::cli

#endif  // METASPEC_CLI_HPP_

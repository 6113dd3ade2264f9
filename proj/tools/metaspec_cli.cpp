#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "metaspec/cli.hpp"

namespace {

struct FlagValues {
  std::string input;
  std::string output;
  std::string cutoff, hbar, r, lambda, max_denominator, q;
  int k_max = -1, k = -1, n_max = -1;
  double tol = -1.0;
  long long seed = -1;
  std::string branch, filter;
};

metaspec::cli::Options to_overrides(const FlagValues& f) {
  metaspec::cli::Options o;
  if (!f.cutoff.empty()) o.cutoff = metaspec::rational_from_string(f.cutoff);
  if (!f.hbar.empty()) o.hbar = metaspec::rational_from_string(f.hbar);
  if (!f.r.empty()) o.r = metaspec::rational_from_string(f.r);
  if (!f.lambda.empty()) o.lambda = metaspec::rational_from_string(f.lambda);
  if (!f.max_denominator.empty()) o.max_denominator = metaspec::Integer(f.max_denominator);
  if (!f.q.empty()) o.q = metaspec::Integer(f.q);
  if (f.k_max >= 0) o.k_max = f.k_max;
  if (f.k >= 0) o.k = f.k;
  if (f.n_max >= 0) o.n_max = f.n_max;
  if (f.tol >= 0.0) o.tol = f.tol;
  if (f.seed >= 0) o.seed = static_cast<std::uint64_t>(f.seed);
  if (!f.branch.empty()) o.branch = f.branch;
  if (!f.filter.empty()) o.filter = f.filter;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of quadratic Hamiltonians and their Fock-block unitaries"};
  app.require_subcommand(1);

  FlagValues flags;
  std::string command;
  for (const std::string& name : metaspec::cli::known_commands()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name != "selftest") {
      sub->add_option("--input", flags.input, "problem file (JSON)")->required();
    }
    sub->add_option("--output", flags.output, "output path (default: stdout)");
    sub->add_option("--cutoff", flags.cutoff, "spectrum cutoff, rational");
    sub->add_option("--hbar", flags.hbar, "Planck scale, rational");
    sub->add_option("--r", flags.r, "counting threshold, rational");
    sub->add_option("--lambda", flags.lambda, "eigenvalue to query, rational");
    sub->add_option("--k-max", flags.k_max, "scan length");
    sub->add_option("--k", flags.k, "block degree");
    sub->add_option("--n-max", flags.n_max, "window bound for incomplete listings");
    sub->add_option("--max-denominator", flags.max_denominator, "reconstruction cap");
    sub->add_option("--q", flags.q, "dilation denominator override");
    sub->add_option("--tol", flags.tol, "numeric tolerance");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--branch", flags.branch, "phase branch: principal|other");
    sub->add_option("--filter", flags.filter, "selftest criterion filter");
    sub->callback([&command, name]() { command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  return metaspec::cli::run_files(command, flags.input, flags.output, to_overrides(flags),
                                  std::cout, std::cerr);
}

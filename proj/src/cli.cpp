#include "metaspec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "metaspec/acceptance.hpp"
#include "metaspec/asymptotics.hpp"
#include "metaspec/combinatorics.hpp"
#include "metaspec/fock.hpp"
#include "metaspec/spectrum.hpp"
#include "metaspec/symbols.hpp"

namespace metaspec::cli {

namespace {

using json = nlohmann::json;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::RealMatrix;
using spectrum::RationalFrequencies;
using symbols::LieAlgebraElement;

std::string fmt17(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

Rational parse_rational_value(const json& value, const std::string& where) {
  if (value.is_string()) return rational_from_string(value.get<std::string>());
  if (value.is_number_integer()) return Rational(Integer(value.get<long long>()));
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  throw ValidationError(where + ": expected a rational (string or number)");
}

double parse_real_value(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return to_double(rational_from_string(value.get<std::string>()));
  throw ValidationError(where + ": expected a real number");
}

RealMatrix parse_real_matrix(const json& value, std::size_t d, const std::string& where) {
  if (!value.is_array() || value.size() != d)
    throw ValidationError(where + ": expected a " + std::to_string(d) + "-row matrix");
  RealMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = value[i];
    if (!row.is_array() || row.size() != d)
      throw ValidationError(where + ": row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = parse_real_value(row[j], where);
  }
  return m;
}

ComplexMatrix parse_complex_matrix(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw ValidationError(where + ": expected a matrix");
  const std::size_t d = value.size();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = value[i];
    if (!row.is_array() || row.size() != d)
      throw ValidationError(where + ": row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      const json& cell = row[j];
      if (cell.is_array() && cell.size() == 2) {
        m(i, j) = Complex(parse_real_value(cell[0], where), parse_real_value(cell[1], where));
      } else if (cell.is_number() || cell.is_string()) {
        m(i, j) = Complex(parse_real_value(cell, where), 0.0);
      } else {
        throw ValidationError(where + ": entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

std::vector<Rational> parse_angles(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw ValidationError(where + ": expected angle pairs");
  std::vector<Rational> angles;
  for (const json& pair : value) {
    if (!pair.is_array() || pair.size() != 2)
      throw ValidationError(where + ": angles must be [numerator, denominator] pairs");
    Integer num, den;
    const auto parse_int = [&](const json& v) -> Integer {
      if (v.is_string()) return Integer(v.get<std::string>());
      if (v.is_number_integer()) return Integer(v.get<long long>());
      throw ValidationError(where + ": angle parts must be integers");
    };
    num = parse_int(pair[0]);
    den = parse_int(pair[1]);
    if (den <= 0) throw ValidationError(where + ": angle denominators must be positive");
    angles.emplace_back(num, den);
  }
  return angles;
}

void parse_options(const json& value, Options& options) {
  if (!value.is_object()) throw ValidationError("options: expected an object");
  for (const auto& [key, v] : value.items()) {
    if (key == "cutoff")
      options.cutoff = parse_rational_value(v, "options.cutoff");
    else if (key == "hbar")
      options.hbar = parse_rational_value(v, "options.hbar");
    else if (key == "r")
      options.r = parse_rational_value(v, "options.r");
    else if (key == "lambda")
      options.lambda = parse_rational_value(v, "options.lambda");
    else if (key == "k_max")
      options.k_max = v.get<int>();
    else if (key == "k")
      options.k = v.get<int>();
    else if (key == "n_max")
      options.n_max = v.get<int>();
    else if (key == "max_denominator")
      options.max_denominator = Integer(v.is_string() ? v.get<std::string>()
                                                      : std::to_string(v.get<long long>()));
    else if (key == "q")
      options.q = Integer(v.is_string() ? v.get<std::string>()
                                        : std::to_string(v.get<long long>()));
    else if (key == "tol")
      options.tol = v.get<double>();
    else if (key == "seed")
      options.seed = v.get<std::uint64_t>();
    else if (key == "branch")
      options.branch = v.get<std::string>();
    else if (key == "filter")
      options.filter = v.get<std::string>();
    else
      throw ValidationError("options: unknown key '" + key + "'");
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("input: expected a JSON object");

  ProblemFile pf;
  pf.version = j.value("version", "1");
  if (pf.version != "1") throw ValidationError("unrecognized version '" + pf.version + "'");

  if (!j.contains("problem") || !j["problem"].is_object())
    throw ValidationError("input: missing 'problem' object");
  const json& prob = j["problem"];

  int variants = 0;
  if (prob.contains("matrix")) {
    const json& m = prob["matrix"];
    if (!m.is_object() || !m.contains("d") || !m.contains("B") || !m.contains("C"))
      throw ValidationError("problem.matrix: need fields d, B, C");
    MatrixProblem mp;
    mp.d = m["d"].get<std::size_t>();
    if (mp.d == 0) throw ValidationError("problem.matrix: d must be positive");
    mp.B = parse_real_matrix(m["B"], mp.d, "problem.matrix.B");
    mp.C = parse_real_matrix(m["C"], mp.d, "problem.matrix.C");
    pf.matrix = std::move(mp);
    ++variants;
  }
  if (prob.contains("frequencies")) {
    const json& fr = prob["frequencies"];
    if (!fr.is_array() || fr.empty())
      throw ValidationError("problem.frequencies: expected a nonempty array");
    std::vector<Rational> s;
    for (const json& v : fr) s.push_back(parse_rational_value(v, "problem.frequencies"));
    pf.frequencies = std::move(s);
    ++variants;
  }
  if (prob.contains("unitary")) {
    const json& u = prob["unitary"];
    if (!u.is_object()) throw ValidationError("problem.unitary: expected an object");
    UnitaryProblem up;
    if (u.contains("entries")) up.entries = parse_complex_matrix(u["entries"], "problem.unitary.entries");
    if (u.contains("angles")) up.angles = parse_angles(u["angles"], "problem.unitary.angles");
    if (!up.entries && !up.angles)
      throw ValidationError("problem.unitary: need 'entries' or 'angles'");
    if (up.entries && up.angles && up.entries->dim() != up.angles->size())
      throw ValidationError("problem.unitary: entries and angles disagree in dimension");
    pf.unitary = std::move(up);
    ++variants;
  }
  if (variants != 1)
    throw ValidationError("problem: exactly one of matrix/frequencies/unitary must be present");

  if (j.contains("options")) parse_options(j["options"], pf.options);
  for (const auto& [key, _] : j.items()) {
    if (key != "version" && key != "problem" && key != "options")
      throw ValidationError("input: unknown key '" + key + "'");
  }
  return pf;
}

std::string serialize_problem(const ProblemFile& pf) {
  json j;
  j["version"] = pf.version;
  json prob;
  if (pf.matrix) {
    json m;
    m["d"] = pf.matrix->d;
    json bb = json::array();
    json cc = json::array();
    for (std::size_t i = 0; i < pf.matrix->d; ++i) {
      json brow = json::array();
      json crow = json::array();
      for (std::size_t jx = 0; jx < pf.matrix->d; ++jx) {
        brow.push_back(pf.matrix->B(i, jx));
        crow.push_back(pf.matrix->C(i, jx));
      }
      bb.push_back(std::move(brow));
      cc.push_back(std::move(crow));
    }
    m["B"] = std::move(bb);
    m["C"] = std::move(cc);
    prob["matrix"] = std::move(m);
  }
  if (pf.frequencies) {
    json fr = json::array();
    for (const Rational& v : *pf.frequencies) fr.push_back(rational_to_string(v));
    prob["frequencies"] = std::move(fr);
  }
  if (pf.unitary) {
    json u;
    if (pf.unitary->entries) {
      const ComplexMatrix& m = *pf.unitary->entries;
      json rows = json::array();
      for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < m.dim(); ++jx)
          row.push_back(json::array({m(i, jx).real(), m(i, jx).imag()}));
        rows.push_back(std::move(row));
      }
      u["entries"] = std::move(rows);
    }
    if (pf.unitary->angles) {
      json rows = json::array();
      for (const Rational& a : *pf.unitary->angles)
        rows.push_back(json::array(
            {rational_num(a).str(), rational_den(a).str()}));
      u["angles"] = std::move(rows);
    }
    prob["unitary"] = std::move(u);
  }
  j["problem"] = std::move(prob);

  json opts = json::object();
  const Options& o = pf.options;
  if (o.cutoff) opts["cutoff"] = rational_to_string(*o.cutoff);
  if (o.hbar) opts["hbar"] = rational_to_string(*o.hbar);
  if (o.r) opts["r"] = rational_to_string(*o.r);
  if (o.lambda) opts["lambda"] = rational_to_string(*o.lambda);
  if (o.k_max) opts["k_max"] = *o.k_max;
  if (o.k) opts["k"] = *o.k;
  if (o.n_max) opts["n_max"] = *o.n_max;
  if (o.max_denominator) opts["max_denominator"] = o.max_denominator->str();
  if (o.q) opts["q"] = o.q->str();
  if (o.tol) opts["tol"] = *o.tol;
  if (o.seed) opts["seed"] = *o.seed;
  if (o.branch) opts["branch"] = *o.branch;
  if (o.filter) opts["filter"] = *o.filter;
  if (!opts.empty()) j["options"] = std::move(opts);

  return j.dump() + "\n";
}

namespace {

struct Resolved {
  LieAlgebraElement A;
  RationalFrequencies rf;
  bool heuristic = false;
};

LieAlgebraElement element_from_frequencies(const std::vector<Rational>& s) {
  // Diagonal realization: A_c = i diag(s), i.e. B = 0, C = -diag(s).
  const std::size_t d = s.size();
  RealMatrix B(d);
  RealMatrix C(d);
  for (std::size_t j = 0; j < d; ++j) C(j, j) = -to_double(s[j]);
  return symbols::from_blocks(B, C);
}

Resolved resolve_frequencies(const ProblemFile& input) {
  Resolved out;
  if (input.frequencies) {
    out.rf = RationalFrequencies::from_exact(*input.frequencies);
    out.A = element_from_frequencies(*input.frequencies);
    out.heuristic = false;
    return out;
  }
  if (input.matrix) {
    out.A = symbols::from_blocks(input.matrix->B, input.matrix->C);
    const Integer max_den = input.options.max_denominator.value_or(Integer(1000000));
    const double tol = input.options.tol.value_or(1e-10);
    out.rf = spectrum::rationalize(out.A.frequencies, max_den, tol);
    out.heuristic = true;
    return out;
  }
  throw ValidationError("this command needs a matrix or frequencies problem");
}

json multiplicity_json(const combinatorics::MultiplicityResult& m) {
  switch (m.kind) {
    case combinatorics::MultiplicityResult::Kind::Finite:
      return m.count.str();
    case combinatorics::MultiplicityResult::Kind::Infinite:
      return "Infinite";
    default:
      return "NotAnEigenvalue";
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

int run_command(const std::string& command, const ProblemFile& input, std::ostream& out,
                std::ostream& err) {
  if (command == "classify") {
    json doc;
    if (input.matrix) {
      auto A = symbols::from_blocks(input.matrix->B, input.matrix->C);
      spectrum::NumericMode mode;
      mode.max_denominator = input.options.max_denominator.value_or(Integer(1000000));
      mode.tol = input.options.tol.value_or(1e-10);
      auto cls = spectrum::classify(A, mode);
      doc["kind"] = cls.kind == spectrum::SpectrumKind::UniformlyDiscrete ? "UniformlyDiscrete"
                                                                          : "Dense";
      if (cls.generator) doc["generator"] = rational_to_string(*cls.generator);
      doc["heuristic"] = cls.heuristic;
    } else if (input.frequencies) {
      auto rf = RationalFrequencies::from_exact(*input.frequencies);
      doc["kind"] = "UniformlyDiscrete";
      doc["generator"] = rational_to_string(Rational(rf.g) * rf.x);
      doc["heuristic"] = false;
    } else {
      throw ValidationError("classify needs a matrix or frequencies problem");
    }
    emit(out, doc);
    return 0;
  }

  if (command == "spectrum") {
    if (!input.options.cutoff) throw ValidationError("spectrum needs options.cutoff");
    Resolved res = resolve_frequencies(input);
    const int n_max = input.options.n_max.value_or(50);
    auto sp = spectrum::enumerate_point_spectrum(res.A, res.rf, to_double(*input.options.cutoff),
                                                 n_max);
    json doc;
    doc["kind"] = "UniformlyDiscrete";
    doc["generator"] = rational_to_string(Rational(res.rf.g) * res.rf.x);
    doc["complete"] = sp.complete;
    json values = json::array();
    for (const auto& e : sp.eigenvalues) {
      json entry;
      entry["value"] = rational_to_string(e.value);
      entry["multiplicity"] = e.infinite_multiplicity ? json("Infinite")
                                                      : json(e.multiplicity.str());
      values.push_back(std::move(entry));
    }
    doc["eigenvalues"] = std::move(values);
    emit(out, doc);
    return 0;
  }

  if (command == "multiplicity") {
    if (!input.options.lambda) throw ValidationError("multiplicity needs options.lambda");
    Resolved res = resolve_frequencies(input);
    auto m = combinatorics::multiplicity(res.rf, *input.options.lambda);
    json doc;
    doc["multiplicity"] = multiplicity_json(m);
    emit(out, doc);
    return 0;
  }

  if (command == "count") {
    if (!input.options.r) throw ValidationError("count needs options.r");
    Resolved res = resolve_frequencies(input);
    const Rational hbar = input.options.hbar.value_or(Rational(1));
    if (!(hbar > 0)) throw ValidationError("count: hbar must be positive");
    const Integer n =
        combinatorics::counting_function(res.rf, res.rf.ground_shift(), *input.options.r / hbar);
    json doc;
    doc["N"] = n.str();
    emit(out, doc);
    return 0;
  }

  if (command == "ehrhart") {
    Resolved res = resolve_frequencies(input);
    if (!res.rf.all_negative())
      throw NotDiscreteBelow("ehrhart needs negative frequencies");
    const Integer q = input.options.q.value_or(res.rf.q_lcm);
    auto eh = combinatorics::ehrhart_polynomial(res.rf.p, q);
    json doc;
    json coeffs = json::array();
    for (const Rational& c : eh.coefficients) coeffs.push_back(rational_to_string(c));
    doc["coefficients"] = std::move(coeffs);
    json facets = json::array();
    for (const Rational& v : eh.facet_lattice_volumes) facets.push_back(rational_to_string(v));
    doc["facet_lattice_volumes"] = std::move(facets);
    doc["slant_facet_euclidean_volume"] = fmt17(eh.slant_facet_euclidean_volume);
    json parts = json::array();
    for (const Integer& v : eh.p) parts.push_back(v.str());
    doc["p"] = std::move(parts);
    doc["q"] = q.str();
    emit(out, doc);
    return 0;
  }

  if (command == "weyl") {
    Resolved res = resolve_frequencies(input);
    const Rational hbar = input.options.hbar.value_or(Rational(1));
    const int k_max = input.options.k_max.value_or(200);
    auto scan = asymptotics::remainder_scan(res.rf, hbar, k_max);
    asymptotics::write_csv(out, scan);
    return 0;
  }

  if (command == "verify-block") {
    if (!input.matrix) throw ValidationError("verify-block needs a matrix problem");
    if (!input.options.k) throw ValidationError("verify-block needs options.k");
    if (*input.options.k < 0) throw ValidationError("verify-block: k must be nonnegative");
    auto A = symbols::from_blocks(input.matrix->B, input.matrix->C);
    const double tol = input.options.tol.value_or(1e-8);
    auto report =
        fock::cross_validate_block(A, static_cast<std::size_t>(*input.options.k), tol);
    json doc;
    doc["d"] = report.d;
    doc["k"] = report.k;
    doc["dim"] = report.dim;
    doc["matched"] = report.matched;
    doc["max_error"] = fmt17(report.max_pairing_error);
    emit(out, doc);
    return 0;
  }

  if (command == "mu-spectrum") {
    if (!input.unitary) throw ValidationError("mu-spectrum needs a unitary problem");
    const UnitaryProblem& up = *input.unitary;
    spectrum::MuSpectrum mu;
    if (up.angles && up.entries) {
      mu = spectrum::mu_point_spectrum(*up.entries, *up.angles,
                                       input.options.tol.value_or(1e-8));
    } else if (up.angles) {
      mu = spectrum::mu_spectrum_from_angles(*up.angles);
    } else {
      spectrum::NumericMode mode;
      mode.max_denominator = input.options.max_denominator.value_or(Integer(1000000));
      mode.tol = input.options.tol.value_or(1e-10);
      mu = spectrum::mu_point_spectrum(*up.entries, mode);
    }
    const std::string branch = input.options.branch.value_or("principal");
    if (branch != "principal" && branch != "other")
      throw ValidationError("branch must be 'principal' or 'other'");
    const bool flip = branch == "other";

    json doc;
    const Complex phase = flip ? mu.phase_branches.second : mu.phase_branches.first;
    const Complex other = flip ? mu.phase_branches.first : mu.phase_branches.second;
    doc["phase"] = json::array({fmt17(phase.real()), fmt17(phase.imag())});
    doc["phase_other"] = json::array({fmt17(other.real()), fmt17(other.imag())});
    if (mu.kind == spectrum::MuKind::FullCircle) {
      doc["kind"] = "FullCircle";
    } else {
      doc["kind"] = "FiniteGroup";
      doc["q"] = mu.q.str();
      doc["p"] = mu.p.str();
      json elements = json::array();
      for (const Complex& e : *mu.elements) {
        const Complex value = flip ? -e : e;
        elements.push_back(json::array({fmt17(value.real()), fmt17(value.imag())}));
      }
      doc["elements"] = std::move(elements);
    }
    emit(out, doc);
    return 0;
  }

  if (command == "selftest") {
    const int failures = acceptance::run_and_print(out, input.options.filter.value_or(""));
    return failures == 0 ? 0 : 1;
  }

  (void)err;
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands = {
      "spectrum", "classify", "multiplicity", "count",
      "ehrhart",  "weyl",     "verify-block", "mu-spectrum",
      "selftest"};
  return commands;
}

int run(const std::string& command, const ProblemFile& input, std::ostream& out,
        std::ostream& err) {
  const auto report = [&err](int code, const char* type, const std::string& message) {
    json doc;
    doc["error"] = {{"code", code}, {"type", type}, {"message", message}};
    err << doc.dump() << "\n";
    return code;
  };
  try {
    return run_command(command, input, out, err);
  } catch (const ValidationError& e) {
    return report(2, "validation", e.what());
  } catch (const PreconditionError& e) {
    return report(3, "precondition", e.what());
  } catch (const ReconstructionFailed& e) {
    return report(3, "precondition", e.what());
  } catch (const ConvergenceError& e) {
    return report(4, "convergence", e.what());
  } catch (const Error& e) {
    return report(4, "internal", e.what());
  } catch (const std::exception& e) {
    return report(2, "validation", e.what());
  }
}

int run_files(const std::string& command, const std::string& input_path,
              const std::string& output_path, const Options& overrides,
              std::ostream& console_out, std::ostream& err) {
  ProblemFile pf;
  if (command != "selftest") {
    std::ifstream in(input_path);
    if (!in) {
      json doc;
      doc["error"] = {{"code", 2}, {"type", "validation"},
                      {"message", "cannot read input file: " + input_path}};
      err << doc.dump() << "\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      pf = parse_problem(text.str());
    } catch (const ValidationError& e) {
      json doc;
      doc["error"] = {{"code", 2}, {"type", "validation"}, {"message", e.what()}};
      err << doc.dump() << "\n";
      return 2;
    }
  }

  const Options& o = overrides;
  if (o.cutoff) pf.options.cutoff = o.cutoff;
  if (o.hbar) pf.options.hbar = o.hbar;
  if (o.r) pf.options.r = o.r;
  if (o.lambda) pf.options.lambda = o.lambda;
  if (o.k_max) pf.options.k_max = o.k_max;
  if (o.k) pf.options.k = o.k;
  if (o.n_max) pf.options.n_max = o.n_max;
  if (o.max_denominator) pf.options.max_denominator = o.max_denominator;
  if (o.q) pf.options.q = o.q;
  if (o.tol) pf.options.tol = o.tol;
  if (o.seed) pf.options.seed = o.seed;
  if (o.branch) pf.options.branch = o.branch;
  if (o.filter) pf.options.filter = o.filter;

  if (!output_path.empty()) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      json doc;
      doc["error"] = {{"code", 2}, {"type", "validation"},
                      {"message", "cannot write output file: " + output_path}};
      err << doc.dump() << "\n";
      return 2;
    }
    return run(command, pf, file, err);
  }
  return run(command, pf, console_out, err);
}

}  // namespace metaspec::cli

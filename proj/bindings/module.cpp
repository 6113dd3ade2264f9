#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "metaspec/acceptance.hpp"
#include "metaspec/asymptotics.hpp"
#include "metaspec/combinatorics.hpp"
#include "metaspec/fock.hpp"
#include "metaspec/linalg.hpp"
#include "metaspec/spectrum.hpp"
#include "metaspec/symbols.hpp"

namespace py = pybind11;

namespace {

using metaspec::Integer;
using metaspec::Rational;
using metaspec::linalg::Complex;
using metaspec::linalg::ComplexMatrix;
using metaspec::linalg::RealMatrix;
using metaspec::spectrum::RationalFrequencies;
using metaspec::symbols::LieAlgebraElement;

py::object to_py_int(const Integer& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_py_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(metaspec::rational_to_string(r));
}

Rational rational_from_object(const py::handle& obj) {
  return metaspec::rational_from_string(py::str(obj).cast<std::string>());
}

Integer integer_from_object(const py::handle& obj) {
  return Integer(py::str(obj).cast<std::string>());
}

std::vector<Rational> rationals_from_list(const py::iterable& seq) {
  std::vector<Rational> out;
  for (const py::handle& item : seq) out.push_back(rational_from_object(item));
  return out;
}

std::vector<Integer> integers_from_list(const py::iterable& seq) {
  std::vector<Integer> out;
  for (const py::handle& item : seq) out.push_back(integer_from_object(item));
  return out;
}

RealMatrix real_matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t d = rows.size();
  RealMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw metaspec::ShapeMismatch("matrix rows must form a square");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> real_matrix_rows(const RealMatrix& m) {
  std::vector<std::vector<double>> rows(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

ComplexMatrix complex_matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t d = rows.size();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw metaspec::ShapeMismatch("matrix rows must form a square");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Complex>> complex_matrix_rows(const ComplexMatrix& m) {
  std::vector<std::vector<Complex>> rows(m.dim(), std::vector<Complex>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

py::dict mu_to_dict(const metaspec::spectrum::MuSpectrum& mu) {
  py::dict out;
  out["kind"] = mu.kind == metaspec::spectrum::MuKind::FiniteGroup ? "FiniteGroup" : "FullCircle";
  out["phase"] = mu.phase_branches.first;
  out["phase_other"] = mu.phase_branches.second;
  if (mu.kind == metaspec::spectrum::MuKind::FiniteGroup) {
    out["q"] = to_py_int(mu.q);
    out["p"] = to_py_int(mu.p);
    out["elements"] = *mu.elements;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and asymptotic spectra of quadratic Hamiltonians built from u(d) data";

  py::register_exception<metaspec::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<metaspec::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<metaspec::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<LieAlgebraElement>(m, "LieAlgebraElement")
      .def_readonly("d", &LieAlgebraElement::d)
      .def_property_readonly("B",
                             [](const LieAlgebraElement& a) { return real_matrix_rows(a.B); })
      .def_property_readonly("C",
                             [](const LieAlgebraElement& a) { return real_matrix_rows(a.C); })
      .def_property_readonly(
          "complex_form",
          [](const LieAlgebraElement& a) { return complex_matrix_rows(a.complex_form); })
      .def_readonly("frequencies", &LieAlgebraElement::frequencies)
      .def_readonly("ground_shift", &LieAlgebraElement::ground_shift);

  py::class_<RationalFrequencies>(m, "RationalFrequencies")
      .def_property_readonly("x", [](const RationalFrequencies& rf) { return to_py_fraction(rf.x); })
      .def_property_readonly("p",
                             [](const RationalFrequencies& rf) {
                               py::list out;
                               for (const Integer& v : rf.p) out.append(to_py_int(v));
                               return out;
                             })
      .def_property_readonly("g", [](const RationalFrequencies& rf) { return to_py_int(rf.g); })
      .def_property_readonly("q_lcm",
                             [](const RationalFrequencies& rf) { return to_py_int(rf.q_lcm); })
      .def_property_readonly(
          "ground_shift",
          [](const RationalFrequencies& rf) { return to_py_fraction(rf.ground_shift()); })
      .def("frequencies", [](const RationalFrequencies& rf) {
        py::list out;
        for (std::size_t j = 0; j < rf.dim(); ++j) out.append(to_py_fraction(rf.frequency(j)));
        return out;
      });

  m.def(
      "from_blocks",
      [](const std::vector<std::vector<double>>& B, const std::vector<std::vector<double>>& C) {
        return metaspec::symbols::from_blocks(real_matrix_from_rows(B), real_matrix_from_rows(C));
      },
      py::arg("B"), py::arg("C"));

  m.def(
      "symbol_eval",
      [](const LieAlgebraElement& A, const std::vector<double>& x, const std::vector<double>& xi) {
        return metaspec::symbols::symbol_eval(A, x, xi);
      },
      py::arg("A"), py::arg("x"), py::arg("xi"));

  m.def(
      "harmonic_flow",
      [](double t, std::vector<double> x, std::vector<double> xi) {
        metaspec::symbols::harmonic_flow(t, x, xi);
        return py::make_tuple(x, xi);
      },
      py::arg("t"), py::arg("x"), py::arg("xi"));

  m.def("verify_constant_of_motion", &metaspec::symbols::verify_constant_of_motion, py::arg("A"),
        py::arg("sample_count") = 100, py::arg("seed") = 0);

  m.def(
      "weyl_operator_coefficients",
      [](const LieAlgebraElement& A, double hbar) {
        auto w = metaspec::symbols::weyl_operator_coefficients(A, hbar);
        py::dict out;
        out["hbar"] = w.hbar;
        out["second_order"] = real_matrix_rows(w.second_order);
        out["first_order"] = real_matrix_rows(w.first_order);
        out["potential"] = real_matrix_rows(w.potential);
        out["zeroth_order"] = w.zeroth_order;
        return out;
      },
      py::arg("A"), py::arg("hbar") = 1.0);

  m.def(
      "frequencies_from_exact",
      [](const py::iterable& values) {
        return RationalFrequencies::from_exact(rationals_from_list(values));
      },
      py::arg("values"));

  m.def(
      "rationalize",
      [](const std::vector<double>& s, const py::handle& max_denominator, double tol) {
        return metaspec::spectrum::rationalize(s, integer_from_object(max_denominator), tol);
      },
      py::arg("s"), py::arg("max_denominator") = 1000000, py::arg("tol") = 1e-10);

  m.def(
      "classify",
      [](const LieAlgebraElement& A, const py::handle& max_denominator, double tol) {
        metaspec::spectrum::NumericMode mode;
        mode.max_denominator = integer_from_object(max_denominator);
        mode.tol = tol;
        auto cls = metaspec::spectrum::classify(A, mode);
        py::dict out;
        out["kind"] = cls.kind == metaspec::spectrum::SpectrumKind::UniformlyDiscrete
                          ? "UniformlyDiscrete"
                          : "Dense";
        out["heuristic"] = cls.heuristic;
        if (cls.generator) out["generator"] = to_py_fraction(*cls.generator);
        return out;
      },
      py::arg("A"), py::arg("max_denominator") = 1000000, py::arg("tol") = 1e-10);

  m.def(
      "enumerate_point_spectrum",
      [](const LieAlgebraElement& A, const RationalFrequencies& rf, double cutoff, int n_max) {
        auto sp = metaspec::spectrum::enumerate_point_spectrum(A, rf, cutoff, n_max);
        py::list entries;
        for (const auto& e : sp.eigenvalues) {
          py::dict entry;
          entry["value"] = to_py_fraction(e.value);
          if (e.infinite_multiplicity)
            entry["multiplicity"] = "Infinite";
          else
            entry["multiplicity"] = to_py_int(e.multiplicity);
          entries.append(entry);
        }
        py::dict out;
        out["eigenvalues"] = entries;
        out["complete"] = sp.complete;
        return out;
      },
      py::arg("A"), py::arg("rf"), py::arg("cutoff"), py::arg("n_max") = 50);

  m.def(
      "mu_spectrum_from_angles",
      [](const py::iterable& angles) {
        return mu_to_dict(metaspec::spectrum::mu_spectrum_from_angles(rationals_from_list(angles)));
      },
      py::arg("angles"));

  m.def(
      "mu_point_spectrum",
      [](const std::vector<std::vector<Complex>>& g, const py::handle& max_denominator,
         double tol) {
        metaspec::spectrum::NumericMode mode;
        mode.max_denominator = integer_from_object(max_denominator);
        mode.tol = tol;
        return mu_to_dict(metaspec::spectrum::mu_point_spectrum(complex_matrix_from_rows(g), mode));
      },
      py::arg("g"), py::arg("max_denominator") = 1000000, py::arg("tol") = 1e-10);

  m.def(
      "denumerant",
      [](const py::iterable& p, const py::handle& k) {
        return to_py_int(metaspec::combinatorics::denumerant(integers_from_list(p),
                                                             integer_from_object(k)));
      },
      py::arg("p"), py::arg("k"));

  m.def(
      "multiplicity",
      [](const RationalFrequencies& rf, const py::handle& lambda_value) -> py::object {
        auto result = metaspec::combinatorics::multiplicity(rf, rational_from_object(lambda_value));
        using Kind = metaspec::combinatorics::MultiplicityResult::Kind;
        if (result.kind == Kind::Finite) return to_py_int(result.count);
        if (result.kind == Kind::Infinite) return py::str("Infinite");
        return py::str("NotAnEigenvalue");
      },
      py::arg("rf"), py::arg("lambda_value"));

  m.def(
      "quasi_polynomial_fit",
      [](const py::iterable& p, std::size_t k_window) {
        auto fit = metaspec::combinatorics::quasi_polynomial_fit(integers_from_list(p), k_window);
        py::dict out;
        out["degree"] = fit.degree;
        out["period"] = fit.period;
        py::list classes;
        for (const auto& cls : fit.classes) {
          py::list coeffs;
          for (const Rational& c : cls) coeffs.append(to_py_fraction(c));
          classes.append(coeffs);
        }
        out["classes"] = classes;
        return out;
      },
      py::arg("p"), py::arg("k_window"));

  m.def(
      "lattice_count_simplex",
      [](const py::iterable& p, const py::handle& q, const py::handle& k) {
        return to_py_int(metaspec::combinatorics::lattice_count_simplex(
            integers_from_list(p), integer_from_object(q), integer_from_object(k)));
      },
      py::arg("p"), py::arg("q"), py::arg("k"));

  m.def(
      "ehrhart_polynomial",
      [](const py::iterable& p, const py::handle& q) {
        auto eh = metaspec::combinatorics::ehrhart_polynomial(integers_from_list(p),
                                                              integer_from_object(q));
        py::dict out;
        py::list coeffs;
        for (const Rational& c : eh.coefficients) coeffs.append(to_py_fraction(c));
        out["coefficients"] = coeffs;
        py::list facets;
        for (const Rational& v : eh.facet_lattice_volumes) facets.append(to_py_fraction(v));
        out["facet_lattice_volumes"] = facets;
        out["slant_facet_euclidean_volume"] = eh.slant_facet_euclidean_volume;
        return out;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "counting_function",
      [](const RationalFrequencies& rf, const py::handle& r) {
        return to_py_int(
            metaspec::combinatorics::counting_function(rf, rf.ground_shift(), rational_from_object(r)));
      },
      py::arg("rf"), py::arg("r"));

  m.def(
      "verify_sandwich",
      [](const RationalFrequencies& rf, const py::handle& r) {
        auto rep = metaspec::combinatorics::verify_sandwich(rf, rf.ground_shift(),
                                                            rational_from_object(r));
        py::dict out;
        out["k"] = to_py_int(rep.k);
        out["lower"] = to_py_int(rep.lower);
        out["upper"] = to_py_int(rep.upper);
        out["actual"] = to_py_int(rep.actual);
        out["aligned"] = rep.aligned;
        return out;
      },
      py::arg("rf"), py::arg("r"));

  m.def("polytope_volume", &metaspec::asymptotics::polytope_volume, py::arg("s"), py::arg("t"));
  m.def("ellipsoid_volume", &metaspec::asymptotics::ellipsoid_volume, py::arg("s"), py::arg("t"));
  m.def("face_volume", &metaspec::asymptotics::face_volume, py::arg("s"), py::arg("t"));
  m.def("surface_integral", &metaspec::asymptotics::surface_integral, py::arg("s"), py::arg("t"));

  m.def(
      "weyl_estimate",
      [](const RationalFrequencies& rf, const py::handle& hbar, const py::handle& r) {
        auto est = metaspec::asymptotics::weyl_estimate(rf, rational_from_object(hbar),
                                                        rational_from_object(r));
        py::dict out;
        out["hbar"] = est.hbar;
        out["r"] = est.r;
        out["leading"] = est.leading;
        out["second_paper"] = est.second_paper;
        out["second_lattice"] = est.second_lattice;
        out["total_paper"] = est.total_paper;
        out["total_lattice"] = est.total_lattice;
        out["exact"] = to_py_int(est.exact);
        out["remainder_paper"] = est.remainder_paper;
        out["remainder_lattice"] = est.remainder_lattice;
        return out;
      },
      py::arg("rf"), py::arg("hbar"), py::arg("r"));

  m.def(
      "remainder_scan",
      [](const RationalFrequencies& rf, const py::handle& hbar, int k_max) {
        auto scan = metaspec::asymptotics::remainder_scan(rf, rational_from_object(hbar), k_max);
        py::dict out;
        out["d"] = scan.d;
        out["hbar"] = scan.hbar;
        out["r"] = scan.grid_r;
        out["u"] = scan.grid_u;
        py::list exact;
        for (const Integer& v : scan.exact) exact.append(to_py_int(v));
        out["exact"] = exact;
        out["leading"] = scan.leading;
        out["second_paper"] = scan.second_paper;
        out["second_lattice"] = scan.second_lattice;
        out["remainder_paper"] = scan.remainder_paper;
        out["remainder_lattice"] = scan.remainder_lattice;
        out["normalized_paper"] = scan.normalized_paper;
        out["normalized_lattice"] = scan.normalized_lattice;
        out["sup_normalized_paper"] = scan.sup_normalized_paper;
        out["sup_normalized_lattice"] = scan.sup_normalized_lattice;
        return out;
      },
      py::arg("rf"), py::arg("hbar"), py::arg("k_max") = 200);

  m.def(
      "hbar_rescale_check",
      [](const RationalFrequencies& rf, const py::handle& hbar, const py::handle& r) {
        return metaspec::asymptotics::hbar_rescale_check(rf, rf.ground_shift(),
                                                         rational_from_object(hbar),
                                                         rational_from_object(r));
      },
      py::arg("rf"), py::arg("hbar"), py::arg("r"));

  py::class_<metaspec::fock::FockBlock>(m, "FockBlock")
      .def_property_readonly("dim",
                             [](const metaspec::fock::FockBlock& b) { return b.basis.dim; })
      .def_property_readonly("indices",
                             [](const metaspec::fock::FockBlock& b) { return b.basis.indices; })
      .def_property_readonly(
          "matrix", [](const metaspec::fock::FockBlock& b) { return complex_matrix_rows(b.matrix); })
      .def_readonly("weights", &metaspec::fock::FockBlock::weights);

  m.def("block_matrix_hamiltonian",
        [](const LieAlgebraElement& A, std::size_t k) {
          return metaspec::fock::block_matrix_hamiltonian(A, k);
        },
        py::arg("A"), py::arg("k"));

  m.def(
      "block_matrix_unitary",
      [](const std::vector<std::vector<Complex>>& g, std::size_t k, const std::string& branch) {
        const auto b = branch == "other" ? metaspec::fock::PhaseBranch::Other
                                         : metaspec::fock::PhaseBranch::Principal;
        return metaspec::fock::block_matrix_unitary(complex_matrix_from_rows(g), k, b);
      },
      py::arg("g"), py::arg("k"), py::arg("branch") = "principal");

  m.def("predicted_block_spectrum", &metaspec::fock::predicted_block_spectrum, py::arg("s"),
        py::arg("E0"), py::arg("k"));

  m.def(
      "eigenpolynomial",
      [](const std::vector<std::vector<Complex>>& V, const std::vector<unsigned>& n) {
        return metaspec::fock::eigenpolynomial(complex_matrix_from_rows(V), n);
      },
      py::arg("V"), py::arg("n"));

  m.def(
      "verify_eigenpair",
      [](const metaspec::fock::FockBlock& block, const std::vector<Complex>& coeffs,
         Complex lambda) { return metaspec::fock::verify_eigenpair(block, coeffs, lambda); },
      py::arg("block"), py::arg("coeffs"), py::arg("lambda_value"));

  m.def(
      "cross_validate_block",
      [](const LieAlgebraElement& A, std::size_t k, double tol) {
        auto rep = metaspec::fock::cross_validate_block(A, k, tol);
        py::dict out;
        out["d"] = rep.d;
        out["k"] = rep.k;
        out["dim"] = rep.dim;
        out["matched"] = rep.matched;
        out["max_error"] = rep.max_pairing_error;
        return out;
      },
      py::arg("A"), py::arg("k"), py::arg("tol") = 1e-8);

  m.def(
      "hermitian_eigendecomposition",
      [](const std::vector<std::vector<Complex>>& H, double tol) {
        auto eig = metaspec::linalg::hermitian_eigendecomposition(complex_matrix_from_rows(H), tol);
        py::dict out;
        out["values"] = eig.values;
        out["vectors"] = complex_matrix_rows(eig.vectors);
        out["residual"] = eig.residual;
        return out;
      },
      py::arg("H"), py::arg("tol") = 1e-10);

  m.def(
      "validate_unitary",
      [](const std::vector<std::vector<Complex>>& g, double tol) {
        return metaspec::linalg::validate_unitary(complex_matrix_from_rows(g), tol);
      },
      py::arg("g"), py::arg("tol") = 1e-10);

  m.def(
      "selftest",
      [](const std::string& filter) {
        py::list out;
        for (const auto& r : metaspec::acceptance::run(filter)) {
          py::dict entry;
          entry["id"] = r.id;
          entry["name"] = r.name;
          entry["passed"] = r.passed;
          entry["detail"] = r.detail;
          entry["seconds"] = r.seconds;
          out.append(entry);
        }
        return out;
      },
      py::arg("filter") = "");
}

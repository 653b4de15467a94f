// Python bindings for the main operations: polynomial arithmetic, complex
// construction, the degreewise isomorphism, homology, identities, and the
// cohomology tables.  Big integers cross the boundary as python ints via
// their decimal representation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arithcx/alpha.hpp"
#include "arithcx/complex.hpp"
#include "arithcx/homology.hpp"
#include "arithcx/identities.hpp"
#include "arithcx/numeric.hpp"
#include "arithcx/sheaf.hpp"
#include "arithcx/sweeps.hpp"

namespace py = pybind11;
using namespace arithcx;

namespace {

py::int_ to_py(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

mpz_class to_mpz(const py::int_& n) {
  return mpz_class(py::str(n).cast<std::string>());
}

py::list matrix_to_list(const ZMatrix& m) {
  py::list rows;
  for (long r = 0; r < m.rows(); ++r) {
    py::list row;
    for (long c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(std::move(row));
  }
  return rows;
}

py::list poly_matrix_to_list(const Matrix<IVPoly>& m) {
  py::list rows;
  for (long r = 0; r < m.rows(); ++r) {
    py::list row;
    for (long c = 0; c < m.cols(); ++c) row.append(m(r, c));
    rows.append(std::move(row));
  }
  return rows;
}

py::dict group_to_dict(const AbelianGroup& g) {
  py::list torsion;
  for (const mpz_class& f : g.invariant_factors) torsion.append(to_py(f));
  return py::dict(py::arg("free_rank") = g.free_rank, py::arg("torsion") = torsion);
}

py::dict report_to_dict(const Report& r) {
  py::list checks;
  for (const Check& c : r.checks) {
    py::dict item(py::arg("claim") = c.claim, py::arg("degree") = c.degree,
                  py::arg("pass") = c.pass);
    if (c.witness)
      item["witness"] = py::make_tuple(c.witness->row, c.witness->col, c.witness->lhs,
                                       c.witness->rhs);
    checks.append(std::move(item));
  }
  return py::dict(py::arg("claim") = r.claim, py::arg("pass") = r.pass(),
                  py::arg("checks") = checks, py::arg("notes") = r.notes);
}

py::dict group_table_to_dict(const GroupTable& t) {
  py::dict out;
  for (const auto& [i, g] : t) out[py::int_(i)] = group_to_dict(g);
  return out;
}

WeightVector weights_from_args(const std::string& w0, const std::vector<int>& tail) {
  std::string csv;
  for (std::size_t i = 0; i < tail.size(); ++i)
    csv += (i ? "," : "") + std::to_string(tail[i]);
  return parse_weight_vector(w0, csv);
}

} // namespace

PYBIND11_MODULE(arithcx, m) {
  m.doc() = "exact arithmetic complexes over integer-valued polynomials";

  py::class_<IVPoly>(m, "IVPoly")
      .def(py::init([](const py::list& coeffs) {
             std::vector<mpz_class> c;
             for (const auto& item : coeffs) c.push_back(to_mpz(py::cast<py::int_>(item)));
             return IVPoly::from_coeffs(std::move(c));
           }),
           "construct from binomial-basis coefficients")
      .def_static("parse", &parse_ivpoly)
      .def_property_readonly("coeffs",
                             [](const IVPoly& p) {
                               py::list out;
                               for (const mpz_class& c : p.coeffs()) out.append(to_py(c));
                               return out;
                             })
      .def("degree", &IVPoly::degree)
      .def("is_zero", &IVPoly::is_zero)
      .def("eval", [](const IVPoly& p, const py::int_& m) { return to_py(p.eval(to_mpz(m))); })
      .def("__add__", [](const IVPoly& p, const IVPoly& q) { return p + q; })
      .def("__sub__", [](const IVPoly& p, const IVPoly& q) { return p - q; })
      .def("__mul__", [](const IVPoly& p, const IVPoly& q) { return p * q; })
      .def("__neg__", [](const IVPoly& p) { return -p; })
      .def("__eq__", [](const IVPoly& p, const IVPoly& q) { return p == q; })
      .def("__str__", &IVPoly::to_string)
      .def("__repr__", [](const IVPoly& p) { return "IVPoly(" + p.to_string() + ")"; });

  m.def("affine_binom", &affine_binom, py::arg("sign"), py::arg("shift"), py::arg("n"));
  m.def("int_binom",
        [](const py::int_& a, long k) { return to_py(int_binom(to_mpz(a), k)); });

  m.def("enumerate_compositions", [](int t, int k) {
    py::list out;
    for (const Composition& c : enumerate_compositions(t, k)) out.append(c.parts());
    return out;
  });

  py::class_<ArithmeticComplex<mpz_class>>(m, "IntegerComplex")
      .def_property_readonly("d", &ArithmeticComplex<mpz_class>::d)
      .def("rank", [](const ArithmeticComplex<mpz_class>& c, int k) { return c.chain.rank_at(k); })
      .def("basis",
           [](const ArithmeticComplex<mpz_class>& c, int k) {
             py::list out;
             for (const Composition& b : c.bases.at(static_cast<std::size_t>(k)))
               out.append(b.parts());
             return out;
           })
      .def("differential",
           [](const ArithmeticComplex<mpz_class>& c, int k) {
             return matrix_to_list(c.chain.diff_at(k));
           })
      .def("homology",
           [](const ArithmeticComplex<mpz_class>& c, int k) {
             return group_to_dict(homology_Z(c.chain, k));
           })
      .def("homology_table",
           [](const ArithmeticComplex<mpz_class>& c) {
             py::dict out;
             for (const auto& [k, g] : homology_table_Z(c.chain)) out[py::int_(k)] = group_to_dict(g);
             return out;
           })
      .def("homology_mod_p",
           [](const ArithmeticComplex<mpz_class>& c, long p, int k) {
             return homology_field(reduce_mod(c, p).chain, k);
           })
      .def("is_exact_over_Q",
           [](const ArithmeticComplex<mpz_class>& c) { return is_exact_over_Q(c.chain); });

  py::class_<ArithmeticComplex<IVPoly>>(m, "SymbolicComplex")
      .def_property_readonly("d", &ArithmeticComplex<IVPoly>::d)
      .def("rank", [](const ArithmeticComplex<IVPoly>& c, int k) { return c.chain.rank_at(k); })
      .def("basis",
           [](const ArithmeticComplex<IVPoly>& c, int k) {
             py::list out;
             for (const Composition& b : c.bases.at(static_cast<std::size_t>(k)))
               out.append(b.parts());
             return out;
           })
      .def("differential",
           [](const ArithmeticComplex<IVPoly>& c, int k) {
             return poly_matrix_to_list(c.chain.diff_at(k));
           })
      .def("specialize", [](const ArithmeticComplex<IVPoly>& c, const py::int_& x) {
        return specialize(c, to_mpz(x));
      });

  m.def(
      "build_complex",
      [](const std::string& w0, const std::vector<int>& tail) {
        return build_complex(weights_from_args(w0, tail));
      },
      py::arg("w0"), py::arg("tail"), "symbolic complex for any leftmost weight");
  m.def(
      "build_complex_over_Z",
      [](const std::string& w0, const std::vector<int>& tail) {
        return build_complex_over_Z(weights_from_args(w0, tail));
      },
      py::arg("w0"), py::arg("tail"), "integer complex; w0 must be an integer");

  m.def("alpha_map", [](int d, int k) { return matrix_to_list(alpha_map(d, k)); });
  m.def("verify_chain_map", [](int d) { return report_to_dict(verify_chain_map(d)); });
  m.def("verify_triangular", [](int d) { return report_to_dict(verify_triangular(d)); });
  m.def("verify_block_structure",
        [](int d) { return report_to_dict(verify_block_structure(d).report); });
  m.def("verify_homotopy", [](int d) { return report_to_dict(verify_homotopy(d)); });
  m.def("iso_certificate", [](int d) {
    py::list dets;
    for (const mpz_class& det : iso_certificate(d).determinants) dets.append(to_py(det));
    return dets;
  });

  m.def("product_step_check", [](int d, const std::vector<int>& lam, const std::vector<int>& mu) {
    return product_step_check(CompositionPair(d, Composition(lam), Composition(mu)));
  });
  m.def("alternating_sum_check",
        [](int d, const std::vector<int>& lam, const std::vector<int>& mu) {
          return alternating_sum_check(CompositionPair(d, Composition(lam), Composition(mu)));
        });
  m.def("vandermonde_check", &vandermonde_check);
  m.def("szekely_check", &szekely_check);
  m.def("fuzz_identities", [](std::uint64_t seed, int count, int dmax) {
    long failures = 0;
    auto records = fuzz_composition_identities(seed, count, dmax);
    for (const FuzzRecord& rec : records)
      if (!rec.pass) ++failures;
    return py::dict(py::arg("records") = records.size(), py::arg("failures") = failures);
  });

  m.def("validate_ribbon", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return validate_ribbon(SkewShape(lambda, mu));
  });
  m.def("ribbon_columns", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return ribbon_columns(SkewShape(lambda, mu));
  });
  m.def("stable_cohomology_ribbon", [](const std::vector<int>& w) {
    return group_table_to_dict(stable_cohomology_ribbon(w));
  });
  m.def("stable_cohomology_ribbon_mod_p", [](const std::vector<int>& w, long p) {
    py::dict out;
    for (const auto& [i, dim] : stable_cohomology_ribbon_mod_p(w, p)) out[py::int_(i)] = dim;
    return out;
  });
  m.def("stable_cohomology_two_column", [](int m_len, int d_len) {
    TwoColumnTable t = stable_cohomology_two_column(TwoColumnShape(m_len, d_len));
    return py::dict(py::arg("table") = group_table_to_dict(t.table),
                    py::arg("routes_agree") = t.routes_agree);
  });
  m.def("verify_identification_Z", [](int m_len, int d_len) {
    return report_to_dict(verify_identification_Z(TwoColumnShape(m_len, d_len)));
  });
  m.def("verify_identification_field", [](int m_len, int d_len, long p) {
    return report_to_dict(verify_identification_field(TwoColumnShape(m_len, d_len), p));
  });

  m.def("dd_zero_sweep", [](std::uint64_t seed, int dmax, int samples) {
    SweepResult r = dd_zero_sweep(seed, dmax, samples);
    return py::dict(py::arg("built") = r.built, py::arg("pass") = r.pass,
                    py::arg("first_failure") = r.first_failure);
  });
}

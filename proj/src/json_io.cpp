#include "arithcx/json_io.hpp"

namespace arithcx {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

json ivpoly_to_json(const IVPoly& p) {
  json coeffs = json::array();
  for (const mpz_class& c : p.coeffs()) coeffs.push_back(mpz_to_json(c));
  return coeffs;
}

namespace {

template <typename T, typename F>
json matrix_json(const Matrix<T>& m, const std::string& ring, F&& entry) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"ring", ring}, {"entries", std::move(rows)}};
}

template <typename T>
json complex_json(const ArithmeticComplex<T>& c) {
  json degrees = json::array();
  for (int k = 0; k <= c.d(); ++k) {
    json basis = json::array();
    for (const Composition& comp : c.bases[static_cast<std::size_t>(k)]) {
      json parts = json::array();
      for (int p : comp.parts()) parts.push_back(p);
      basis.push_back(std::move(parts));
    }
    degrees.push_back({{"k", k}, {"basis", std::move(basis)}});
  }
  json diffs = json::array();
  for (int k = 1; k <= c.d(); ++k)
    diffs.push_back({{"k", k}, {"matrix", matrix_to_json(c.chain.diff_at(k))}});
  return {{"weights", {{"w0", c.weights.w0_string()}, {"tail", c.weights.tail}}},
          {"d", c.d()},
          {"degrees", std::move(degrees)},
          {"differentials", std::move(diffs)}};
}

} // namespace

json matrix_to_json(const ZMatrix& m) {
  return matrix_json(m, "Z", [](const mpz_class& z) { return mpz_to_json(z); });
}

json matrix_to_json(const QMatrix& m) {
  return matrix_json(m, "Q", [](const mpq_class& q) { return json(q.get_str()); });
}

json matrix_to_json(const FpMatrix& m) {
  long p = 0;
  for (long r = 0; r < m.rows() && p == 0; ++r)
    for (long c = 0; c < m.cols() && p == 0; ++c) p = m(r, c).modulus();
  return matrix_json(m, "Fp:" + std::to_string(p), [](const Fp& e) { return json(e.value()); });
}

json matrix_to_json(const Matrix<IVPoly>& m) {
  return matrix_json(m, "IVPoly", [](const IVPoly& p) { return ivpoly_to_json(p); });
}

json complex_to_json(const ArithmeticComplex<IVPoly>& c) { return complex_json(c); }
json complex_to_json(const ArithmeticComplex<mpz_class>& c) { return complex_json(c); }
json complex_to_json(const ArithmeticComplex<Fp>& c) { return complex_json(c); }

json group_to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const mpz_class& f : g.invariant_factors) torsion.push_back(mpz_to_json(f));
  return {{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json item = {{"claim", c.claim}, {"degree", c.degree}, {"pass", c.pass}};
    if (c.witness)
      item["witness"] = {{"row", c.witness->row},
                         {"col", c.witness->col},
                         {"lhs", c.witness->lhs},
                         {"rhs", c.witness->rhs}};
    checks.push_back(std::move(item));
  }
  json out = {{"claim", r.claim}, {"pass", r.pass()}, {"checks", std::move(checks)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json group_table_to_json(const GroupTable& t) {
  json out = json::array();
  for (const auto& [i, g] : t) out.push_back({{"i", i}, {"group", group_to_json(g)}});
  return out;
}

json dim_table_to_json(const DimTable& t) {
  json out = json::array();
  for (const auto& [i, dim] : t) out.push_back({{"i", i}, {"dim", dim}});
  return out;
}

} // namespace arithcx

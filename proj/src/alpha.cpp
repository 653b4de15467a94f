#include "arithcx/alpha.hpp"

#include <stdexcept>

#include "arithcx/numeric.hpp"

namespace arithcx {

mpz_class alpha_entry(int d, const Composition& lam, const Composition& mu) {
  const int t = lam.length();
  if (mu.length() != t) throw std::invalid_argument("alpha_entry: part count mismatch");
  if (lam.sum() != mu.sum()) throw std::invalid_argument("alpha_entry: sum mismatch");
  if (lam.sum() != d - t + 1) throw std::invalid_argument("alpha_entry: sum does not match d");

  mpz_class result = (d - mu.from_right(t)) % 2 == 0 ? 1 : -1;
  long run = 0; // sum_{j<=s} (lam_j + mu_j)
  for (int s = 0; s <= t - 2; ++s) {
    if (s > 0) run += lam.from_right(s) + mu.from_right(s);
    result *= int_binom(run + mu.from_right(s + 1) + 2 * s, run + lam.from_right(s + 1) + 2 * s);
    if (result == 0) return result;
  }
  return result;
}

ZMatrix alpha_map(int d, int k) {
  if (k < 0 || k > d) throw std::invalid_argument("alpha_map: degree out of range");
  const int t = d - k + 1;
  std::vector<Composition> basis = enumerate_compositions(t, k);
  const long n = static_cast<long>(basis.size());
  ZMatrix m(n, n);
  for (long c = 0; c < n; ++c)
    for (long r = 0; r < n; ++r)
      m(r, c) = alpha_entry(d, basis[static_cast<std::size_t>(c)],
                            basis[static_cast<std::size_t>(r)]);
  return m;
}

namespace {

Matrix<IVPoly> lift(const ZMatrix& m) {
  return map_entries<IVPoly>(m, [](const mpz_class& z) { return IVPoly(z); });
}

std::vector<int> ones(int d) { return std::vector<int>(static_cast<std::size_t>(d), 1); }

// First violating entry of lhs == rhs, as a witness.
std::optional<Witness> compare(const Matrix<IVPoly>& lhs, const Matrix<IVPoly>& rhs) {
  for (long r = 0; r < lhs.rows(); ++r)
    for (long c = 0; c < lhs.cols(); ++c)
      if (!(lhs(r, c) == rhs(r, c)))
        return Witness{r, c, lhs(r, c).to_string(), rhs(r, c).to_string()};
  return std::nullopt;
}

} // namespace

Report verify_chain_map(int d) {
  if (d < 1) throw std::invalid_argument("verify_chain_map: need d >= 1");
  Report report;
  report.claim = "chain map";
  auto cx = build_complex(WeightVector::affine(+1, 0, ones(d)));
  auto cy = build_complex(WeightVector::affine(-1, -2 * d, ones(d)));
  std::vector<Matrix<IVPoly>> alpha;
  for (int k = 0; k <= d; ++k) alpha.push_back(lift(alpha_map(d, k)));
  for (int k = 1; k <= d; ++k) {
    Matrix<IVPoly> lhs = alpha[static_cast<std::size_t>(k - 1)] * cx.chain.diff_at(k);
    Matrix<IVPoly> rhs = cy.chain.diff_at(k) * alpha[static_cast<std::size_t>(k)];
    auto witness = compare(lhs, rhs);
    report.add({"chain map", k, !witness.has_value(), witness});
  }
  return report;
}

Report verify_triangular(int d) {
  if (d < 0) throw std::invalid_argument("verify_triangular: need d >= 0");
  Report report;
  report.claim = "triangular";
  for (int k = 0; k <= d; ++k) {
    const int t = d - k + 1;
    ZMatrix m = alpha_map(d, k);
    std::vector<Composition> basis = enumerate_compositions(t, k);
    std::optional<Witness> witness;
    for (long r = 0; r < m.rows() && !witness; ++r) {
      for (long c = 0; c < m.cols() && !witness; ++c) {
        const Composition& mu = basis[static_cast<std::size_t>(r)];
        const Composition& lam = basis[static_cast<std::size_t>(c)];
        const mpz_class& e = m(r, c);
        if (r > c && e != 0)
          witness = Witness{r, c, e.get_str(), "0 (below diagonal)"};
        else if (r == c) {
          mpz_class want = (d - lam.part(0)) % 2 == 0 ? 1 : -1;
          if (e != want) witness = Witness{r, c, e.get_str(), want.get_str()};
        }
        if (e != 0 && !witness) {
          // support criterion: mu_j >= lam_j for j = 1..t-1
          for (int j = 1; j <= t - 1; ++j)
            if (mu.from_right(j) < lam.from_right(j)) {
              witness = Witness{r, c, e.get_str(), "0 (support criterion)"};
              break;
            }
        }
      }
    }
    report.add({"triangular", k, !witness.has_value(), witness});
  }
  return report;
}

BlockReport verify_block_structure(int d) {
  if (d < 1) throw std::invalid_argument("verify_block_structure: need d >= 1");
  BlockReport out;
  out.report.claim = "block structure";
  for (int k = 0; k <= d; ++k) {
    const int t = d - k + 1;
    ZMatrix m = alpha_map(d, k);
    std::vector<Composition> basis = enumerate_compositions(t, k);
    long n0 = 0;
    while (n0 < static_cast<long>(basis.size()) &&
           basis[static_cast<std::size_t>(n0)].part(0) == 0)
      ++n0;
    long n1 = m.rows() - n0;

    std::optional<Witness> witness;
    ZMatrix top_left = m.block(0, 0, n0, n0);
    ZMatrix expected_tl = ZMatrix::identity(n0);
    if (d % 2 != 0) expected_tl = -expected_tl;
    if (!(top_left == expected_tl))
      witness = Witness{0, 0, "top-left block", "(-1)^d * identity"};
    if (!witness && !m.block(n0, 0, n1, n0).is_zero())
      witness = Witness{n0, 0, "bottom-left block", "0"};
    if (!witness && k >= 1) {
      ZMatrix bottom_right = m.block(n0, n0, n1, n1);
      if (!(bottom_right == alpha_map(d - 1, k - 1)))
        witness = Witness{n0, n0, "bottom-right block", "alpha(d-1, k-1)"};
    }
    out.report.add({"block structure", k, !witness.has_value(), witness});
    out.gamma.push_back(m.block(0, n0, n0, n1));
  }
  return out;
}

namespace {

// lhs and rhs of the homotopy identity at chain degree j for sign pattern
// (a, b, c); cones and blocks are precomputed by the callers.
struct HomotopyData {
  ConeDecomposition cone_x, cone_y;
  std::vector<Matrix<IVPoly>> alpha_prev; // lifted alpha^{d-1}, degrees 0..d-1
  std::vector<ZMatrix> gamma;             // degrees 0..d
};

HomotopyData homotopy_data(int d) {
  HomotopyData h;
  h.cone_x = cone_decompose(build_complex(WeightVector::affine(+1, 0, ones(d))));
  h.cone_y = cone_decompose(build_complex(WeightVector::affine(-1, -2 * d, ones(d))));
  for (int j = 0; j <= d - 1; ++j) h.alpha_prev.push_back(lift(alpha_map(d - 1, j)));
  h.gamma = verify_block_structure(d).gamma;
  return h;
}

std::optional<Witness> homotopy_check_degree(const HomotopyData& h, int d, int j, int a, int b,
                                             int c) {
  const auto& sub = h.cone_x.sub.chain;   // C(1^d)
  const auto& quot = h.cone_x.quot.chain; // C(x+1, 1^{d-1})
  Matrix<IVPoly> phi_x = h.cone_x.phi[static_cast<std::size_t>(j)];
  Matrix<IVPoly> phi_y = h.cone_y.phi[static_cast<std::size_t>(j)];
  Matrix<IVPoly> h_j = lift(h.gamma[static_cast<std::size_t>(j + 1)]);
  Matrix<IVPoly> h_prev = lift(h.gamma[static_cast<std::size_t>(j)]);

  int sign_phi = (d % 2 == 0) ? a : -a;
  Matrix<IVPoly> lhs_phi = sign_phi > 0 ? phi_x : -phi_x;
  Matrix<IVPoly> term2 = phi_y * h.alpha_prev[static_cast<std::size_t>(j)];
  Matrix<IVPoly> lhs = lhs_phi + (b > 0 ? term2 : -term2);

  Matrix<IVPoly> term3 = sub.diff_at(j + 1) * h_j;
  Matrix<IVPoly> term4 = h_prev * quot.diff_at(j);
  Matrix<IVPoly> rhs = term3 + (c > 0 ? term4 : -term4);
  return compare(lhs, rhs);
}

} // namespace

Report verify_homotopy(int d) {
  if (d < 2) throw std::invalid_argument("verify_homotopy: need d >= 2");
  Report report;
  report.claim = "cone homotopy";
  auto [a, b, c] = kHomotopySigns;
  report.notes["signs"] = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c) +
                          " in a*(-1)^d*phi_x + b*phi'*alpha = dA*h + c*h*dB";
  HomotopyData h = homotopy_data(d);
  for (int j = 0; j <= d - 1; ++j) {
    auto witness = homotopy_check_degree(h, d, j, a, b, c);
    report.add({"cone homotopy", j, !witness.has_value(), witness});
  }
  return report;
}

std::vector<std::array<int, 3>> homotopy_sign_search(int d) {
  if (d < 2) throw std::invalid_argument("homotopy_sign_search: need d >= 2");
  HomotopyData h = homotopy_data(d);
  std::vector<std::array<int, 3>> found;
  for (int a : {-1, +1})
    for (int b : {-1, +1})
      for (int c : {-1, +1}) {
        bool ok = true;
        for (int j = 0; j <= d - 1 && ok; ++j)
          ok = !homotopy_check_degree(h, d, j, a, b, c).has_value();
        if (ok) found.push_back({a, b, c});
      }
  return found;
}

bool IsoCertificate::all_unit() const {
  for (const mpz_class& det : determinants)
    if (det != 1 && det != -1) return false;
  return true;
}

IsoCertificate iso_certificate(int d) {
  if (d < 0) throw std::invalid_argument("iso_certificate: need d >= 0");
  IsoCertificate cert;
  cert.d = d;
  for (int k = 0; k <= d; ++k) cert.determinants.push_back(det_int(alpha_map(d, k)));
  return cert;
}

} // namespace arithcx

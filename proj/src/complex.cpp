#include "arithcx/complex.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "arithcx/numeric.hpp"
#include "arithcx/smith.hpp"

namespace arithcx {

WeightVector WeightVector::affine(int x_coeff, long c, std::vector<int> tail) {
  if (x_coeff != 1 && x_coeff != -1)
    throw std::invalid_argument("WeightVector::affine: x coefficient must be ±1");
  WeightVector w;
  w.x_coeff = x_coeff;
  w.w0_const = c;
  w.tail = std::move(tail);
  for (int t : w.tail)
    if (t < 0) throw std::invalid_argument("tail weights must be nonnegative");
  return w;
}

WeightVector WeightVector::integer(mpz_class w0, std::vector<int> tail) {
  WeightVector w;
  w.x_coeff = 0;
  w.w0_const = std::move(w0);
  w.tail = std::move(tail);
  for (int t : w.tail)
    if (t < 0) throw std::invalid_argument("tail weights must be nonnegative");
  return w;
}

std::string WeightVector::w0_string() const {
  if (x_coeff == 0) return w0_const.get_str();
  std::string out = x_coeff > 0 ? "x" : "-x";
  if (w0_const > 0) out += "+" + w0_const.get_str();
  if (w0_const < 0) out += w0_const.get_str();
  return out;
}

std::string WeightVector::to_string() const {
  std::string out = "(" + w0_string();
  for (int t : tail) out += "," + std::to_string(t);
  return out + ")";
}

WeightVector parse_weight_vector(const std::string& w0_text, const std::string& tail_csv) {
  auto [xc, c] = parse_affine(w0_text);
  std::vector<int> tail;
  std::stringstream ss(tail_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty tail entry");
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad tail entry '" + item + "'");
    if (v < 0) throw std::invalid_argument("tail weights must be nonnegative");
    tail.push_back(v);
  }
  if (xc == 0) return WeightVector::integer(mpz_class(c), std::move(tail));
  return WeightVector::affine(xc, c, std::move(tail));
}

IntervalWeight interval_weight(const WeightVector& w, int start_vertex, int length) {
  if (length < 0 || start_vertex < 0 || start_vertex + length > w.d())
    throw std::out_of_range("interval_weight: interval outside the path");
  IntervalWeight iw;
  for (int v = start_vertex; v <= start_vertex + length; ++v) {
    if (v == 0) {
      iw.x_coeff = w.x_coeff;
      iw.constant += w.w0_const;
    } else {
      iw.constant += w.tail[static_cast<std::size_t>(v - 1)];
    }
  }
  return iw;
}

namespace {

long to_small(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("weight constant too large");
  return z.get_si();
}

// Assembles bases and differentials; make(top, n) produces the ring element
// C(top, n) for a (possibly affine) interval weight top and integer n.
template <typename T, typename MakeBinom>
ArithmeticComplex<T> build_generic(const WeightVector& w, MakeBinom make) {
  const int d = w.d();
  ArithmeticComplex<T> out;
  out.weights = w;
  out.bases.resize(static_cast<std::size_t>(d) + 1);
  out.chain.lo = 0;
  for (int k = 0; k <= d; ++k) {
    out.bases[static_cast<std::size_t>(k)] = enumerate_compositions(d - k + 1, k);
    out.chain.ranks.push_back(static_cast<long>(out.bases[static_cast<std::size_t>(k)].size()));
  }
  for (int k = 1; k <= d; ++k) {
    const auto& domain = out.bases[static_cast<std::size_t>(k)];
    const auto& codomain = out.bases[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<int>, long> row_index;
    for (std::size_t r = 0; r < codomain.size(); ++r)
      row_index[codomain[r].parts()] = static_cast<long>(r);

    Matrix<T> mat(static_cast<long>(codomain.size()), static_cast<long>(domain.size()));
    const int t = d - k + 1;
    for (std::size_t c = 0; c < domain.size(); ++c) {
      const Composition& lam = domain[c];
      int start = 0;
      for (int p = 0; p < t; ++p) { // interval index from the left
        int len = lam.part(p);
        for (int i = 1; i <= len; ++i) {
          IntervalWeight top = interval_weight(w, start, len);
          IntervalWeight right = interval_weight(w, start + i, len - i);
          // the right piece never contains vertex 0
          T coef = make(top, to_small(right.constant));
          if (p % 2 != 0) coef = -coef;
          std::vector<int> parts = lam.parts();
          parts[static_cast<std::size_t>(p)] = i - 1;
          parts.insert(parts.begin() + p + 1, len - i);
          long r = row_index.at(parts);
          mat(r, static_cast<long>(c)) += coef;
        }
        start += len + 1;
      }
    }
    out.chain.diffs.push_back(std::move(mat));
  }
  if (!out.chain.dd_zero())
    throw std::logic_error("arithmetic complex: composite differential is nonzero");
  return out;
}

} // namespace

ArithmeticComplex<IVPoly> build_complex(const WeightVector& w) {
  return build_generic<IVPoly>(w, [](const IntervalWeight& top, long n) {
    if (top.x_coeff != 0) return affine_binom(top.x_coeff, to_small(top.constant), n);
    return IVPoly(int_binom(top.constant, n));
  });
}

ArithmeticComplex<mpz_class> build_complex_over_Z(const WeightVector& w) {
  if (w.affine_w0())
    throw std::invalid_argument("build_complex_over_Z: w0 must be a plain integer");
  return build_generic<mpz_class>(
      w, [](const IntervalWeight& top, long n) { return int_binom(top.constant, n); });
}

ArithmeticComplex<mpz_class> specialize(const ArithmeticComplex<IVPoly>& c, const mpz_class& m) {
  ArithmeticComplex<mpz_class> out;
  out.weights = WeightVector::integer(c.weights.x_coeff * m + c.weights.w0_const, c.weights.tail);
  out.bases = c.bases;
  out.chain.lo = c.chain.lo;
  out.chain.ranks = c.chain.ranks;
  for (const Matrix<IVPoly>& diff : c.chain.diffs)
    out.chain.diffs.push_back(
        map_entries<mpz_class>(diff, [&m](const IVPoly& p) { return p.eval(m); }));
  if (!out.chain.dd_zero()) throw std::logic_error("specialize: composite differential nonzero");
  return out;
}

ArithmeticComplex<Fp> reduce_mod(const ArithmeticComplex<mpz_class>& c, long p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod: modulus must be prime");
  ArithmeticComplex<Fp> out;
  out.weights = c.weights;
  out.bases = c.bases;
  out.chain.lo = c.chain.lo;
  out.chain.ranks = c.chain.ranks;
  for (const ZMatrix& diff : c.chain.diffs) out.chain.diffs.push_back(to_mod_p(diff, p));
  if (!out.chain.dd_zero()) throw std::logic_error("reduce_mod: composite differential nonzero");
  return out;
}

ConeDecomposition cone_decompose(const ArithmeticComplex<IVPoly>& c) {
  const int d = c.d();
  if (d < 1) throw std::invalid_argument("cone_decompose: need d >= 1");
  for (int t : c.weights.tail)
    if (t != 1) throw std::invalid_argument("cone_decompose: tail must be all ones");

  ConeDecomposition out;
  std::vector<int> ones(static_cast<std::size_t>(d) - 1, 1);
  WeightVector wq = c.weights.affine_w0()
                        ? WeightVector::affine(c.weights.x_coeff,
                                               to_small(c.weights.w0_const + 1), ones)
                        : WeightVector::integer(c.weights.w0_const + 1, ones);
  out.sub = build_complex(WeightVector::integer(1, ones));
  out.quot = build_complex(wq);

  // Basis labels with leading part 0 come first in enumeration order, so the
  // split is a contiguous block split.
  auto zero_count = [&](int k) {
    const auto& basis = c.bases[static_cast<std::size_t>(k)];
    long n0 = 0;
    while (n0 < static_cast<long>(basis.size()) &&
           basis[static_cast<std::size_t>(n0)].part(0) == 0)
      ++n0;
    return n0;
  };

  for (int k = 1; k <= d; ++k) {
    Matrix<IVPoly> diff = c.chain.diff_at(k);
    long rows0 = zero_count(k - 1), cols0 = zero_count(k);
    long rows1 = diff.rows() - rows0, cols1 = diff.cols() - cols0;

    Matrix<IVPoly> top_left = diff.block(0, 0, rows0, cols0);
    Matrix<IVPoly> top_right = diff.block(0, cols0, rows0, cols1);
    Matrix<IVPoly> bottom_left = diff.block(rows0, 0, rows1, cols0);
    Matrix<IVPoly> bottom_right = diff.block(rows0, cols0, rows1, cols1);

    if (!bottom_left.is_zero())
      throw std::logic_error("cone_decompose: lower-left block not zero");
    if (!(top_left == -out.sub.chain.diff_at(k)))
      throw std::logic_error("cone_decompose: sub block does not match -dA");
    if (!(bottom_right == out.quot.chain.diff_at(k - 1)))
      throw std::logic_error("cone_decompose: quot block does not match dB");
    out.phi.push_back(std::move(top_right)); // phi at quot degree k-1
  }
  return out;
}

} // namespace arithcx

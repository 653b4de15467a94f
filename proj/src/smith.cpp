#include "arithcx/smith.hpp"

#include <stdexcept>

namespace arithcx {

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> d;
  long n = std::min(s.rows(), s.cols());
  d.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) d.push_back(s(i, i));
  return d;
}

std::vector<mpz_class> SmithDecomposition::invariant_factors() const {
  std::vector<mpz_class> f;
  for (const mpz_class& d : diagonal())
    if (d > 1) f.push_back(d);
  return f;
}

namespace {

void swap_rows(ZMatrix& a, long i, long j) {
  for (long c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(ZMatrix& a, long i, long j) {
  for (long r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

void negate_row(ZMatrix& a, long i) {
  for (long c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
}

// Quotient minimizing |a - q*b| for b > 0.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > b) q += 1;
  return q;
}

} // namespace

SmithDecomposition smith_normal_form(ZMatrix a) {
  const long m = a.rows(), n = a.cols();
  SmithDecomposition out;
  out.u = ZMatrix::identity(m);
  out.v = ZMatrix::identity(n);
  out.v_inverse = ZMatrix::identity(n);

  // row r -= q * row i, mirrored on u
  auto row_op = [&](long r, long i, const mpz_class& q) {
    for (long c = 0; c < n; ++c) a(r, c) -= q * a(i, c);
    for (long c = 0; c < m; ++c) out.u(r, c) -= q * out.u(i, c);
  };
  // col c -= q * col i, mirrored on v and v_inverse
  auto col_op = [&](long c, long i, const mpz_class& q) {
    for (long r = 0; r < m; ++r) a(r, c) -= q * a(r, i);
    for (long r = 0; r < n; ++r) out.v(r, c) -= q * out.v(r, i);
    for (long k = 0; k < n; ++k) out.v_inverse(i, k) += q * out.v_inverse(c, k);
  };

  const long steps = std::min(m, n);
  for (long i = 0; i < steps; ++i) {
    for (;;) {
      // minimal |.| nonzero pivot in the trailing submatrix, row-then-column
      long pr = -1, pc = -1;
      mpz_class best;
      for (long r = i; r < m; ++r)
        for (long c = i; c < n; ++c) {
          if (a(r, c) == 0) continue;
          mpz_class v = abs(a(r, c));
          if (pr < 0 || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) goto done; // submatrix is zero
      if (pr != i) {
        swap_rows(a, i, pr);
        swap_rows(out.u, i, pr);
      }
      if (pc != i) {
        swap_cols(a, i, pc);
        swap_cols(out.v, i, pc);
        swap_rows(out.v_inverse, i, pc);
      }
      if (a(i, i) < 0) {
        negate_row(a, i);
        negate_row(out.u, i);
      }

      bool clean = true;
      for (long r = i + 1; r < m; ++r) {
        if (a(r, i) == 0) continue;
        row_op(r, i, nearest_quotient(a(r, i), a(i, i)));
        if (a(r, i) != 0) clean = false; // smaller remainder becomes next pivot
      }
      for (long c = i + 1; c < n; ++c) {
        if (a(i, c) == 0) continue;
        col_op(c, i, nearest_quotient(a(i, c), a(i, i)));
        if (a(i, c) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (long r = i + 1; r < m && divides; ++r)
        for (long c = i + 1; c < n && divides; ++c)
          if (a(r, c) % a(i, i) != 0) {
            row_op(i, r, mpz_class(-1)); // fold row r into row i and restart
            divides = false;
          }
      if (divides) break;
    }
  }
done:
  out.s = a;
  for (long i = 0; i < steps; ++i)
    if (a(i, i) != 0) ++out.rank;
  return out;
}

mpz_class det_int(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_int: matrix not square");
  const long n = a.rows();
  if (n == 0) return 1;
  ZMatrix b = a;
  mpz_class prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      long swap = -1;
      for (long r = k + 1; r < n; ++r)
        if (b(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(b, k, swap);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        mpz_class t = b(k, k) * b(i, j) - b(i, k) * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = b(k, k);
  }
  return sign * b(n - 1, n - 1);
}

namespace {

template <typename F>
long rank_eliminate(Matrix<F> a, F (*invert)(const F&)) {
  const F zero{};
  long rank = 0;
  long rows = a.rows(), cols = a.cols();
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (!(a(r, c) == zero)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (long j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    F inv = invert(a(rank, c));
    for (long r = rank + 1; r < rows; ++r) {
      if (a(r, c) == zero) continue;
      F factor = a(r, c) * inv;
      for (long j = c; j < cols; ++j) a(r, j) -= factor * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

mpq_class invert_q(const mpq_class& x) { return 1 / x; }
Fp invert_fp(const Fp& x) { return x.inverse(); }

} // namespace

long rank_over_field(const QMatrix& a) { return rank_eliminate<mpq_class>(a, &invert_q); }
long rank_over_field(const FpMatrix& a) { return rank_eliminate<Fp>(a, &invert_fp); }

QMatrix to_rational(const ZMatrix& a) {
  return map_entries<mpq_class>(a, [](const mpz_class& z) { return mpq_class(z); });
}

FpMatrix to_mod_p(const ZMatrix& a, long p) {
  return map_entries<Fp>(a, [p](const mpz_class& z) {
    long r = static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
    return Fp(r, p);
  });
}

long rank_over_Q(const ZMatrix& a) { return rank_over_field(to_rational(a)); }
long rank_mod_p(const ZMatrix& a, long p) { return rank_over_field(to_mod_p(a, p)); }

} // namespace arithcx

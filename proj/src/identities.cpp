#include "arithcx/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "arithcx/ivpoly.hpp"
#include "arithcx/numeric.hpp"

namespace arithcx {

CompositionPair::CompositionPair(int d, Composition lam, Composition mu)
    : d(d), t(lam.length()), lam(std::move(lam)), mu(std::move(mu)) {
  if (t < 1) throw std::invalid_argument("CompositionPair: need t >= 1");
  if (this->mu.length() != t + 1)
    throw std::invalid_argument("CompositionPair: mu must have t+1 parts");
  if (this->lam.sum() != d - t + 1 || this->mu.sum() != d - t)
    throw std::invalid_argument("CompositionPair: sums do not match d and t");
}

namespace {

std::string json_array(const Composition& c) {
  std::string out = "[";
  for (int i = 0; i < c.length(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.part(i));
  }
  return out + "]";
}

} // namespace

std::string CompositionPair::to_string() const {
  return "{\"d\":" + std::to_string(d) + ",\"t\":" + std::to_string(t) +
         ",\"lam\":" + json_array(lam) + ",\"mu\":" + json_array(mu) + "}";
}

namespace {

// sum_{m=1}^{s} (mu_m + lam_m), parts counted from the right
long interleaved_sum(const CompositionPair& ctx, int s) {
  long total = 0;
  for (int m = 1; m <= s; ++m) total += ctx.mu.from_right(m) + ctx.lam.from_right(m);
  return total;
}

void require_k(const CompositionPair& ctx, int k) {
  if (k < 1 || k > ctx.t) throw std::invalid_argument("factor index out of range");
}

} // namespace

mpz_class factor_a(const CompositionPair& ctx, int k) {
  require_k(ctx, k);
  mpz_class result = 1;
  for (int s = 0; s <= k - 2; ++s) {
    long run = interleaved_sum(ctx, s);
    result *= int_binom(run + ctx.mu.from_right(s + 1) + 2 * s,
                        run + ctx.lam.from_right(s + 1) + 2 * s);
  }
  return result;
}

mpz_class factor_b(const CompositionPair& ctx, int k) {
  require_k(ctx, k);
  mpz_class result = 1;
  for (int s = k + 1; s <= ctx.t - 1; ++s) {
    long run = interleaved_sum(ctx, s - 1);
    result *= int_binom(run + ctx.mu.from_right(s) + ctx.mu.from_right(s + 1) + 2 * s - 1,
                        interleaved_sum(ctx, s) + 2 * s - 1);
  }
  return result;
}

mpz_class factor_g(const CompositionPair& ctx, int k, long z) {
  require_k(ctx, k);
  long run = interleaved_sum(ctx, k - 1);
  return int_binom(run + ctx.mu.from_right(k) + 2 * (k - 1),
                   run + ctx.lam.from_right(k) - z + 2 * (k - 1));
}

mpz_class factor_h(const CompositionPair& ctx, int k, long z) {
  require_k(ctx, k);
  long run = interleaved_sum(ctx, k);
  return int_binom(run + ctx.mu.from_right(k + 1) - z + 2 * k, run + 2 * k - 1);
}

bool product_step_check(const CompositionPair& ctx) {
  const int t = ctx.t;
  if (factor_g(ctx, 1, ctx.lam.from_right(1) + 1) != 0) return false;
  for (int k = 1; k <= t - 1; ++k) {
    if (factor_a(ctx, k) * factor_g(ctx, k, 0) != factor_a(ctx, k + 1)) return false;
    if (factor_h(ctx, k, 0) != factor_g(ctx, k + 1, ctx.lam.from_right(k + 1) + 1)) return false;
  }
  for (int k = 1; k <= t - 2; ++k) {
    if (factor_b(ctx, k) !=
        factor_b(ctx, k + 1) * factor_h(ctx, k + 1, ctx.lam.from_right(k + 1) + 1))
      return false;
  }
  return factor_a(ctx, t) * factor_g(ctx, t, 0) == 0;
}

bool alternating_sum_check(const CompositionPair& ctx) {
  const int t = ctx.t;
  mpz_class lhs = 0;
  for (int k = 1; k <= t - 1; ++k) {
    long zk = ctx.lam.from_right(k) + 1;
    mpz_class term = factor_a(ctx, k) * factor_b(ctx, k) *
                     (factor_h(ctx, k, zk) * factor_g(ctx, k, zk) +
                      factor_g(ctx, k, 0) * factor_h(ctx, k, 0));
    if ((t - k) % 2 != 0) term = -term;
    lhs += term;
  }
  mpz_class rhs = -factor_a(ctx, t) * factor_g(ctx, t, ctx.lam.from_right(t) + 1);
  return lhs == rhs;
}

bool vandermonde_check(long m, long n, long r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("vandermonde: nonnegative inputs");
  mpz_class rhs = 0;
  for (long k = 0; k <= r; ++k) rhs += int_binom(m, k) * int_binom(n, r - k);
  return int_binom(m + n, r) == rhs;
}

bool szekely_check(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("szekely: nonnegative inputs");
  IVPoly lhs;
  for (long j = 0; j <= std::min(b, c); ++j) {
    IVPoly term = IVPoly(int_binom(b, j)) * affine_binom(+1, a, a - b + 1 + j) *
                  affine_binom(+1, a + b + c - j, c - j);
    lhs += term;
  }
  IVPoly rhs = affine_binom(+1, a + c, a - b + c + 1) * IVPoly(int_binom(a + c + 1, c));
  return lhs == rhs;
}

std::vector<CompositionPair> exhaustive_pairs(int dmax) {
  std::vector<CompositionPair> out;
  for (int d = 1; d <= dmax; ++d)
    for (int t = 1; t <= d; ++t)
      for (const Composition& lam : enumerate_compositions(t, d - t + 1))
        for (const Composition& mu : enumerate_compositions(t + 1, d - t))
          out.emplace_back(d, lam, mu);
  return out;
}

CompositionPair random_pair(Rng& rng, int dmax, int min_t) {
  int d = static_cast<int>(rng.uniform(std::max(min_t, 1), dmax));
  int t = static_cast<int>(rng.uniform(std::max(min_t, 1), d));
  auto lams = enumerate_compositions(t, d - t + 1);
  auto mus = enumerate_compositions(t + 1, d - t);
  Composition lam = lams[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(lams.size()) - 1))];
  Composition mu = mus[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mus.size()) - 1))];
  return {d, std::move(lam), std::move(mu)};
}

std::vector<FuzzRecord> fuzz_composition_identities(std::uint64_t seed, int count, int dmax) {
  Rng rng(seed);
  std::vector<FuzzRecord> out;
  out.reserve(static_cast<std::size_t>(count) * 2);
  for (int i = 0; i < count; ++i) {
    CompositionPair ctx = random_pair(rng, dmax, 1);
    out.push_back({"product-steps", ctx.to_string(), product_step_check(ctx)});
    out.push_back({"alternating-sum", ctx.to_string(), alternating_sum_check(ctx)});
  }
  return out;
}

std::vector<FuzzRecord> fuzz_vandermonde(std::uint64_t seed, int count, long max_value) {
  Rng rng(seed);
  std::vector<FuzzRecord> out;
  for (int i = 0; i < count; ++i) {
    long m = rng.uniform(0, max_value), n = rng.uniform(0, max_value), r = rng.uniform(0, max_value);
    std::string ctx = "{\"m\":" + std::to_string(m) + ",\"n\":" + std::to_string(n) +
                      ",\"r\":" + std::to_string(r) + "}";
    out.push_back({"vandermonde", ctx, vandermonde_check(m, n, r)});
  }
  return out;
}

std::vector<FuzzRecord> fuzz_szekely(std::uint64_t seed, int count, long max_value) {
  Rng rng(seed);
  std::vector<FuzzRecord> out;
  for (int i = 0; i < count; ++i) {
    long a = rng.uniform(0, max_value), b = rng.uniform(0, max_value), c = rng.uniform(0, max_value);
    std::string ctx = "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) +
                      ",\"c\":" + std::to_string(c) + "}";
    out.push_back({"szekely", ctx, szekely_check(a, b, c)});
  }
  return out;
}

} // namespace arithcx

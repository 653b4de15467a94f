#include "arithcx/composition.hpp"

#include <numeric>
#include <stdexcept>

#include "arithcx/numeric.hpp"

namespace arithcx {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool succeq(const Composition& a, const Composition& b) {
  if (a.length() != b.length()) throw std::invalid_argument("succeq: length mismatch");
  for (int i = 0; i < a.length(); ++i) {
    int diff = a.part(i) - b.part(i);
    if (diff != 0) return diff < 0;
  }
  return true; // equal
}

namespace {

void enumerate_rec(int t, int k, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (t == 1) {
    prefix.push_back(k);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= k; ++first) {
    prefix.push_back(first);
    enumerate_rec(t - 1, k - first, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Composition> enumerate_compositions(int t, int k) {
  if (t < 1) throw std::invalid_argument("enumerate_compositions: t must be >= 1");
  if (k < 0) throw std::invalid_argument("enumerate_compositions: k must be >= 0");
  std::vector<Composition> out;
  out.reserve(static_cast<std::size_t>(binom_count(k + t - 1, t - 1)));
  std::vector<int> prefix;
  enumerate_rec(t, k, prefix, out);
  return out;
}

} // namespace arithcx

#pragma once

#include <string>
#include <vector>

namespace arithcx {

// Weak composition (a_t, ..., a_1) of an integer into t nonnegative parts,
// stored leftmost-first: parts()[0] = a_t.  These label the bases of the
// arithmetic complexes; part indices counted from the right (a_1 is the
// rightmost part) match the usual subscripts.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  // 0-based from the left: part(0) = a_t.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  // 1-based from the right: from_right(1) = a_1.
  int from_right(int j) const { return parts_.at(parts_.size() - static_cast<std::size_t>(j)); }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;
  std::string to_string() const; // "(0,1,2)"

private:
  std::vector<int> parts_;
};

// The basis order: a ≽ b iff a == b or the first nonzero entry of a - b,
// read leftmost first, is negative.  Total on compositions of equal sum and
// length.
bool succeq(const Composition& a, const Composition& b);

// All weak compositions of k into t parts, strictly descending under ≽:
// (0,...,0,k) first, (k,0,...,0) last.  Requires t >= 1, k >= 0.
std::vector<Composition> enumerate_compositions(int t, int k);

} // namespace arithcx

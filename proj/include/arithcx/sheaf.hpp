#pragma once

#include <map>
#include <string>
#include <vector>

#include "arithcx/abelian.hpp"
#include "arithcx/report.hpp"

namespace arithcx {

// Skew diagram lambda/mu in the English convention (rows top-down, lambda_1
// longest).  Trailing zero rows of lambda are stripped; mu is padded with
// zeros to lambda's length.
struct SkewShape {
  std::vector<int> lambda;
  std::vector<int> mu;

  SkewShape(std::vector<int> lambda, std::vector<int> mu);
  long cells() const; // |lambda| - |mu|
};

// A ribbon: connected, no 2x2 square.  Checked via the row conditions
// lambda_{i+1} <= mu_i + 1 (no 2x2) and mu_i < lambda_{i+1} whenever
// lambda_{i+1} > 0 (consecutive rows overlap), plus nonemptiness and no
// empty row.
bool validate_ribbon(const SkewShape& shape);

// Column heights of a ribbon, leftmost column first.  The orientation is
// pinned by a golden test: lambda=(4,4,3,3)/mu=(3,2,2) gives (1,1,3,2).
// Throws std::invalid_argument when the shape is not a ribbon.
std::vector<int> ribbon_columns(const SkewShape& shape);

// Partition whose conjugate is (m, d): first column length m, second d.
struct TwoColumnShape {
  int m = 0;
  int d = 0;
  TwoColumnShape(int m, int d);
};

using GroupTable = std::map<int, AbelianGroup>;
using DimTable = std::map<int, long>;

std::string group_table_to_string(const GroupTable& t);
std::string dim_table_to_string(const DimTable& t);

// Cohomology table of a ribbon with column heights w (all >= 1): the entry
// in degree i is the homology of the integral complex of w at degree
// |w| - i.
GroupTable stable_cohomology_ribbon(const std::vector<int>& w);
DimTable stable_cohomology_ribbon_mod_p(const std::vector<int>& w, long p);

// Cohomology table of a two-column shape via the dual-shift form
// H^i = H_{d+m-i}(shift(dual(C(-m-d-1,1^d) ⊗ Z), -d)); the second route
// H_{i-m-1}(C(-m-d-1,1^d) ⊗ Z) is computed alongside and compared, and the
// comparison outcome is embedded in the result.  Requires m >= d >= 1.
struct TwoColumnTable {
  GroupTable table;
  bool routes_agree = true;
  std::string note;
};
TwoColumnTable stable_cohomology_two_column(const TwoColumnShape& shape);

// Degreewise equality of the two-column table with the (2m+2-i)-reindexed
// table of the ribbon (m-d+1, 1^d).
Report verify_identification_Z(const TwoColumnShape& shape);

// Dimension equality over F_p, degree by degree, between the two-column side
// H_{i-m}(C(-m-d-1,1^d) ⊗ F_p) and the (2m+1-i)-reindexed ribbon side —
// plus an independent route through the alpha matrices specialized at
// x = m-d+1: they conjugate one reduced complex into the other, so the
// differential ranks must agree mod p.
Report verify_identification_field(const TwoColumnShape& shape, long p);

} // namespace arithcx

#include "arithcx/golden.hpp"

namespace arithcx {

namespace {

Matrix<IVPoly> poly_matrix(long rows, long cols, const std::vector<const char*>& entries) {
  Matrix<IVPoly> m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      m(r, c) = parse_ivpoly(entries[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

ZMatrix int_matrix(long rows, long cols, const std::vector<long>& entries) {
  ZMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = entries[static_cast<std::size_t>(r * cols + c)];
  return m;
}

} // namespace

const std::array<Matrix<IVPoly>, 3>& golden_d3_diffs_x() {
  static const std::array<Matrix<IVPoly>, 3> diffs = {
      poly_matrix(1, 3, {"2", "-2", "x+1"}),
      poly_matrix(3, 3,
                  {"-3", "x+1", "0",
                   "-3", "0", "C(x+2,2)",
                   "0", "-2", "x+2"}),
      poly_matrix(3, 1, {"C(x+3,3)", "C(x+3,2)", "x+3"}),
  };
  return diffs;
}

const std::array<Matrix<IVPoly>, 3>& golden_d3_diffs_neg() {
  static const std::array<Matrix<IVPoly>, 3> diffs = {
      poly_matrix(1, 3, {"2", "-2", "-x-5"}),
      poly_matrix(3, 3,
                  {"-3", "-x-5", "0",
                   "-3", "0", "C(x+5,2)",
                   "0", "-2", "-x-4"}),
      poly_matrix(3, 1, {"-C(x+5,3)", "C(x+4,2)", "-x-3"}),
  };
  return diffs;
}

const std::array<ZMatrix, 4>& golden_d3_alpha() {
  static const std::array<ZMatrix, 4> maps = {
      int_matrix(1, 1, {-1}),
      int_matrix(3, 3,
                 {-1, 0, -1,
                  0, -1, -3,
                  0, 0, 1}),
      int_matrix(3, 3,
                 {-1, -2, -1,
                  0, 1, 1,
                  0, 0, -1}),
      int_matrix(1, 1, {1}),
  };
  return maps;
}

} // namespace arithcx

#pragma once

#include <json.hpp>

#include "arithcx/abelian.hpp"
#include "arithcx/alpha.hpp"
#include "arithcx/complex.hpp"
#include "arithcx/report.hpp"
#include "arithcx/sheaf.hpp"

namespace arithcx {

using json = nlohmann::json;

// Integers render as JSON numbers when they fit a signed 64-bit value and
// as decimal strings otherwise; readers must accept both.
json mpz_to_json(const mpz_class& z);
json ivpoly_to_json(const IVPoly& p); // coefficient array

// {"rows": r, "cols": c, "ring": "Z"|"Q"|"Fp:<p>"|"IVPoly", "entries": [[...]]}
json matrix_to_json(const ZMatrix& m);
json matrix_to_json(const QMatrix& m);
json matrix_to_json(const FpMatrix& m);
json matrix_to_json(const Matrix<IVPoly>& m);

// Weights in the CLI affine syntax, bases as integer arrays in order, and
// differentials in the matrix format above.
json complex_to_json(const ArithmeticComplex<IVPoly>& c);
json complex_to_json(const ArithmeticComplex<mpz_class>& c);
json complex_to_json(const ArithmeticComplex<Fp>& c);

// {"free_rank": r, "torsion": [d1, ...]}
json group_to_json(const AbelianGroup& g);

// Array of {claim, degree, pass, witness}; witness only on failure.
json report_to_json(const Report& r);

json group_table_to_json(const GroupTable& t);
json dim_table_to_json(const DimTable& t);

} // namespace arithcx

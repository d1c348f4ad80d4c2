#pragma once

// JSON encodings shared by the command-line tool and the acceptance report.
// Rationals are always "p/q" strings with q > 0.

#include "agslice/coweight.hpp"
#include "agslice/nilpotent.hpp"
#include "agslice/poisson.hpp"
#include "agslice/slice_equations.hpp"
#include "agslice/slice_iso.hpp"
#include "agslice/tpoly.hpp"

#include <json.hpp>

#include <string>

namespace agslice::json_io {

using json = nlohmann::json;

inline constexpr const char* kVersion = "v1";

json to_json(const Rational& r);
/// Accepts "p/q", "p" or a JSON integer.
Rational rational_from_json(const json& j);

/// {"shift": int, "coeffs": {"s": "p/q"}} for shift t^shift * sum c_s t^{-s}.
json to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);
/// Row-major array of rows of TPoly.
json to_json(const TMatrix& m);
/// Entries may also be plain rationals (constant polynomials).
TMatrix tmatrix_from_json(const json& j);

/// Row-major array of rows of "p/q" strings.
json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

json to_json(const Coweight& c);
json to_json(const Partition& p);
json index_set_json(const IndexSet& s);
json to_json(const MinorCondition& c);

/// [{"monomial": {"x_i_j": e}, "coeff": "p/q"}, ...] in term order.
json to_json(const SymbolicPoly& p);
/// Same layout with "d_i_j_r" keys.
json to_json(const PoissonPoly& p);
json to_json(const CoordFn& c);

json to_json(const MembershipResult& r);
json to_json(const GeneratorSet& g, bool with_polys);
json to_json(const ShapeReport& r);
json to_json(const ValuationReport& r, bool failures_only);
json to_json(const RigidityReport& r);
json to_json(const EmbeddingReport& r);
json to_json(const ConverseReport& r);
json to_json(const InequalityReport& r);
json to_json(const VanishingReport& r);

/// Compact dump with sorted keys; identical inputs give identical bytes.
std::string dump(const json& j);

}  // namespace agslice::json_io

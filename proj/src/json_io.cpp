#include "agslice/json_io.hpp"

#include <stdexcept>

namespace agslice::json_io {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const TPoly& p) {
  json coeffs = json::object();
  for (const auto& [s, c] : p.coeffs()) coeffs[std::to_string(s)] = c.str();
  return json{{"shift", p.shift()}, {"coeffs", coeffs}};
}

TPoly tpoly_from_json(const json& j) {
  if (!j.is_object()) return TPoly(rational_from_json(j));
  if (!j.contains("shift") || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw std::invalid_argument("polynomial needs \"shift\" and \"coeffs\": " + j.dump());
  std::map<int, Rational> coeffs;
  for (const auto& [k, v] : j["coeffs"].items()) {
    std::size_t used = 0;
    const int s = std::stoi(k, &used);
    if (used != k.size() || s < 0) throw std::invalid_argument("bad coefficient index '" + k + "'");
    coeffs[s] = rational_from_json(v);
  }
  return TPoly::from_coeffs(j["shift"].get<int>(), std::move(coeffs));
}

namespace {

template <class Scalar, class F>
Matrix<Scalar> matrix_from_json(const json& j, F&& entry) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw std::invalid_argument("matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix rows have different lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry(row[c]);
  }
  return m;
}

template <class M>
json matrix_json(const M& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

json to_json(const TMatrix& m) { return matrix_json(m); }
json to_json(const QMatrix& m) { return matrix_json(m); }

TMatrix tmatrix_from_json(const json& j) { return matrix_from_json<TPoly>(j, tpoly_from_json); }
QMatrix qmatrix_from_json(const json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

json to_json(const Coweight& c) {
  json out = json::array();
  for (int i = 1; i < c.n(); ++i) out.push_back(c.coeff(i));
  return out;
}

json to_json(const Partition& p) { return p.parts(); }

json index_set_json(const IndexSet& s) {
  json out = json::array();
  for (int i : s) out.push_back(i);
  return out;
}

json to_json(const MinorCondition& c) {
  return json{{"C", index_set_json(c.rows)}, {"D", index_set_json(c.cols)}, {"s", c.order}};
}

json to_json(const SymbolicPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& [v, e] : m) mono["x_" + std::to_string(v.row) + "_" + std::to_string(v.col)] = e;
    out.push_back(json{{"monomial", mono}, {"coeff", c.str()}});
  }
  return out;
}

json to_json(const CoordFn& c) { return "d_" + std::to_string(c.i) + "_" + std::to_string(c.j) + "_" + std::to_string(c.r); }

json to_json(const PoissonPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& [v, e] : m) mono[to_json(v).get<std::string>()] = e;
    out.push_back(json{{"monomial", mono}, {"coeff", c.str()}});
  }
  return out;
}

json to_json(const MembershipResult& r) {
  json v = json::array();
  for (const Violation& x : r.violations) {
    json e = to_json(x.condition);
    e["kind"] = x.u0 ? "char-poly" : "minor";
    e["value"] = x.value.str();
    v.push_back(e);
  }
  return json{{"member", r.member}, {"violations", v}};
}

json to_json(const GeneratorSet& g, bool with_polys) {
  json w = json::array();
  for (const MinorCondition& c : g.w_part) {
    json e = to_json(c);
    e["trivial"] = c.trivial();
    if (with_polys) e["poly"] = to_json(g.w_poly(c));
    w.push_back(e);
  }
  json u = json::array();
  for (int p : g.u0_orders) {
    json e{{"p", p}};
    if (with_polys) e["poly"] = to_json(g.u0_poly(p));
    u.push_back(e);
  }
  return json{{"n", g.n}, {"lambda", to_json(g.lambda)}, {"m", g.m}, {"w_part", w}, {"u0", u}};
}

json to_json(const ShapeReport& r) {
  return json{{"entries_ok", r.entries_ok}, {"det_ok", r.det_ok}, {"diagnostics", r.diagnostics}};
}

json to_json(const ValuationReport& r, bool failures_only) {
  json cs = json::array();
  for (const ValuationCondition& c : r.conditions) {
    if (failures_only && c.pass) continue;
    json e{{"j", c.j},
           {"rows", index_set_json(c.rows)},
           {"cols", index_set_json(c.cols)},
           {"required", c.required},
           {"pass", c.pass}};
    e["achieved"] = c.achieved ? json(*c.achieved) : json("inf");
    cs.push_back(e);
  }
  return json{{"member", r.member}, {"checked", r.conditions.size()}, {failures_only ? "failures" : "conditions", cs}};
}

json to_json(const RigidityReport& r) {
  return json{{"one_by_one_ok", r.one_by_one_ok},
              {"forced_form", r.forced_form},
              {"holds", r.holds()},
              {"diagnostics", r.diagnostics}};
}

json to_json(const EmbeddingReport& r) {
  return json{{"k", r.k},
              {"image", to_json(r.image)},
              {"target", to_json(r.target, true)},
              {"shape", to_json(r.shape)},
              {"rigidity", to_json(r.rigidity)},
              {"identity_holds", r.identity_holds},
              {"identity_failures", r.identity_failures},
              {"ok", r.ok()}};
}

json to_json(const ConverseReport& r) {
  json out{{"target", to_json(r.target, true)}, {"rigidity", to_json(r.rigidity)}, {"holds", r.holds}};
  out["source"] = r.source ? to_json(*r.source, true) : json(nullptr);
  return out;
}

json to_json(const InequalityReport& r) {
  return json{{"k", r.k},
              {"m", r.m},
              {"m_bounded", r.m_bounded},
              {"increments_bounded", r.increments_bounded},
              {"telescoped", r.telescoped},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

json to_json(const VanishingReport& r) {
  json out{{"n", r.n},
           {"lambda", to_json(r.lambda)},
           {"seed", r.seed},
           {"samples", r.samples},
           {"generators", r.generators},
           {"pairs_checked", r.pairs_checked},
           {"all_zero", r.all_zero}};
  out["first_nonzero"] = r.first_nonzero ? json(*r.first_nonzero) : json(nullptr);
  json control{{"found", r.control.found}};
  if (r.control.found) {
    control["attempts"] = r.control.attempts;
    control["generator"] = to_json(r.control.generator);
    control["coordinate"] = to_json(r.control.coordinate);
    control["value"] = r.control.value.str();
    json pts = json::array();
    for (const QMatrix& x : r.control.point) pts.push_back(to_json(x));
    control["point"] = pts;
  }
  out["negative_control"] = control;
  return out;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace agslice::json_io

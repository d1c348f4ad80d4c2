#include "cli.hpp"

#include "agslice/acceptance.hpp"
#include "agslice/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace agslice::cli {

using json_io::json;

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 0;
  std::string lambda, mu, matrix, matrix_file, partition, other, a, b, out;
  int k = 0;
  int p = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  int max_order = 2;
  int n_max = 4;
  int max_rank = kDefaultMaxRank;
  std::string form = "trace";
  bool polys = false;
};

std::vector<int> int_list(const std::string& text, const std::string& what) {
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("bad integer '" + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

Coweight coweight_arg(const std::string& text, int n, const std::string& what) {
  if (text.empty()) throw InputError("--" + what + " is required");
  const std::vector<int> f = int_list(text, "--" + what);
  const int rank = n > 0 ? n : static_cast<int>(f.size()) + 1;
  if (static_cast<int>(f.size()) != rank - 1)
    throw InputError("--" + what + " needs " + std::to_string(rank - 1) + " fundamental coefficients for n = " +
                     std::to_string(rank));
  return Coweight(rank, f);
}

Partition partition_arg(const std::string& text, const std::string& what) {
  if (text.empty()) throw InputError("--" + what + " is required");
  std::vector<int> parts = int_list(text, "--" + what);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

CoordFn coord_arg(const std::string& text, const std::string& what) {
  const std::vector<int> v = int_list(text, "--" + what);
  if (v.size() != 3) throw InputError("--" + what + " needs i,j,r");
  return CoordFn{v[0], v[1], v[2]};
}

json matrix_json_arg(const Options& o) {
  if (!o.matrix.empty() && !o.matrix_file.empty()) throw InputError("give --matrix or --matrix-file, not both");
  std::string text = o.matrix;
  if (!o.matrix_file.empty()) {
    std::ifstream in(o.matrix_file);
    if (!in) throw InputError("cannot read " + o.matrix_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw InputError("--matrix or --matrix-file is required");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

QMatrix qmatrix_arg(const Options& o, int n) {
  const QMatrix x = json_io::qmatrix_from_json(matrix_json_arg(o));
  if (x.rows() != x.cols()) throw InputError("matrix is not square");
  if (n > 0 && x.rows() != n) throw InputError("matrix size " + std::to_string(x.rows()) + " does not match n = " + std::to_string(n));
  return x;
}

TMatrix tmatrix_arg(const Options& o, int n) {
  const TMatrix m = json_io::tmatrix_from_json(matrix_json_arg(o));
  if (m.rows() != m.cols()) throw InputError("matrix is not square");
  if (n > 0 && m.rows() != n) throw InputError("matrix size " + std::to_string(m.rows()) + " does not match n = " + std::to_string(n));
  return m;
}

json header(const Options& o, const std::string& command) {
  return json{{"version", json_io::kVersion}, {"command", command}, {"seed", o.seed}};
}

struct Outcome {
  json body;
  int code = 0;
};

Outcome cmd_coweight(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  json j{{"n", lam.n()}, {"lambda", json_io::to_json(lam)}, {"dominant", lam.dominant()}};
  json coroot = json::array();
  const CorootVector c = simple_coroot_coords(lam);
  for (int i = 1; i < lam.n(); ++i) coroot.push_back(c(i).str());
  j["coroot_coords"] = coroot;
  const CorootVector m = fund_to_coroot(lam);
  json mj = json::array();
  for (int i = 1; i < lam.n(); ++i) mj.push_back(m(i).str());
  j["m"] = mj;
  j["in_coroot_lattice"] = m.integral();
  bool below = false;
  try {
    require_below_minuscule_cone(lam);
    below = true;
  } catch (const PreconditionError&) {
  }
  j["below_n_w1"] = below;
  if (below) {
    const Partition v = coweight_to_partition(lam);
    j["partition"] = json_io::to_json(v);
    j["orbit_type"] = json_io::to_json(conjugate(v));
  }
  if (!o.mu.empty()) {
    const Coweight mu = coweight_arg(o.mu, lam.n(), "mu");
    j["mu"] = json_io::to_json(mu);
    j["mu_leq_lambda"] = dominance_leq(mu, lam);
    if (o.k > 0) {
      const PairingReport r = shift_pairing_check(mu, lam, o.k);
      json mt = json::array();
      for (Eigen::Index i = 0; i < r.mu_tilde.size(); ++i) mt.push_back(r.mu_tilde(i));
      j["pairing"] = json{{"k", r.k}, {"mu_tilde", mt}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
      return {j, r.holds ? 0 : 1};
    }
  }
  if (m.integral() && lam.dominant() && !lam.is_zero()) {
    j["k"] = embedding_factor(lam);
    j["tau"] = json_io::to_json(tau_embed(lam, embedding_factor(lam)));
  }
  return {j, 0};
}

Outcome cmd_ideal_gens(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  return {json_io::to_json(ideal_generators(lam.n(), lam), o.polys), 0};
}

Outcome cmd_member(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  const QMatrix x = qmatrix_arg(o, lam.n());
  const MembershipResult r = membership(x, lam);
  json j = json_io::to_json(r);
  j["lambda"] = json_io::to_json(lam);
  return {j, r.member ? 0 : 1};
}

Outcome cmd_orbit_sample(const Options& o) {
  const Partition u = partition_arg(o.partition, "partition");
  const QMatrix x = sample_nilpotent(u, o.seed);
  return {json{{"partition", json_io::to_json(u)}, {"matrix", json_io::to_json(x)}}, 0};
}

Outcome cmd_orbit_type(const Options& o) {
  const QMatrix x = qmatrix_arg(o, o.n);
  if (!is_nilpotent(x)) return {json{{"nilpotent", false}, {"certificate", "X^n is nonzero"}}, 1};
  return {json{{"nilpotent", true}, {"jordan_type", json_io::to_json(jordan_type(x))}}, 0};
}

Outcome cmd_orbit_closure(const Options& o) {
  const Partition a = partition_arg(o.partition, "partition");
  const Partition b = partition_arg(o.other, "other");
  if (a.size() != b.size()) throw InputError("partitions have different sizes");
  const bool leq = closure_leq(a, b);
  return {json{{"a", json_io::to_json(a)}, {"b", json_io::to_json(b)}, {"a_in_closure_of_b", leq}}, leq ? 0 : 1};
}

Outcome cmd_weyman_generators(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  json list = json::array();
  for (const WeymanGenerator& w : weyman_generators(lam.n(), lam)) {
    json e = json_io::to_json(w.condition);
    e["i"] = w.i;
    e["p"] = w.p;
    if (o.polys) e["poly"] = json_io::to_json(w.poly);
    list.push_back(e);
  }
  return {json{{"lambda", json_io::to_json(lam)}, {"generators", list}}, 0};
}

Outcome cmd_weyman_hwv(const Options& o) {
  if (o.n < 2) throw InputError("--n >= 2 is required");
  json checks = json::array();
  bool all = true;
  for (int p = 1; p <= o.n; ++p)
    for (int k = 1; k <= std::min(p, o.n - p); ++k) {
      if ((o.k > 0 && k != o.k) || (o.p > 0 && p != o.p)) continue;
      const SymbolicPoly f = highest_weight_vector(o.n, k, p);
      IndexSet c0, d0;
      for (int a = k + 1; a <= o.n; ++a) c0.push_back(a);
      for (int b = 1; b <= o.n - k; ++b) d0.push_back(b);
      const IVector w = torus_weight(o.n, c0, d0);
      const auto alpha = alpha_weight(o.n, k);
      bool weight_ok = true;
      for (int i = 0; i < o.n; ++i) weight_ok = weight_ok && w(i) == alpha[i];
      const bool raised = raising_annihilation_check(f, o.n);
      all = all && weight_ok && raised;
      std::vector<int> wv(w.data(), w.data() + w.size());
      checks.push_back(json{{"k", k}, {"p", p}, {"weight", wv}, {"weight_ok", weight_ok}, {"annihilated", raised}});
    }
  if (checks.empty()) throw InputError("no valid (k, p) with 1 <= k <= min(p, n-p)");
  return {json{{"n", o.n}, {"checks", checks}, {"all_pass", all}}, all ? 0 : 1};
}

Outcome cmd_weyman_dims(const Options& o) {
  if (o.n < 2 || o.p < 1 || o.p > o.n || o.k < 0 || o.k > o.n) throw InputError("need n >= 2, 1 <= p <= n, 0 <= k <= n");
  const SpanDimensionReport r = span_dimension_report(o.n, o.k, o.p);
  return {json{{"n", r.n},
               {"k", r.k},
               {"p", r.p},
               {"dim_w", r.dim_w},
               {"dim_mp", r.dim_mp},
               {"schur_dims", r.schur_dims},
               {"partial_sum", r.partial_sum},
               {"mp_identity", r.mp_identity},
               {"inclusion_consistent", r.inclusion_consistent}},
          0};
}

Outcome cmd_iso_embed(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  const bool given = !o.matrix.empty() || !o.matrix_file.empty();
  const TMatrix g = given ? tmatrix_arg(o, lam.n()) : sample_slice_point(lam, o.seed);
  const EmbeddingReport r = verify_embedding(g, lam, o.max_rank);
  json j = json_io::to_json(r);
  j["lambda"] = json_io::to_json(lam);
  j["g"] = json_io::to_json(g);
  j["converse"] = json_io::to_json(converse_check(r.image, lam, o.max_rank));
  return {j, r.ok() ? 0 : 1};
}

Outcome cmd_iso_verify(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  const Coweight mu = o.mu.empty() ? Coweight::zero(lam.n()) : coweight_arg(o.mu, lam.n(), "mu");
  const TMatrix m = tmatrix_arg(o, lam.n());
  const ShapeReport shape = w_mu_shape_check(m, mu);
  if (!shape.entries_ok) return {json{{"member", false}, {"shape", json_io::to_json(shape)}}, 1};
  const ValuationReport r = slice_conditions(m, lam, mu, o.max_rank);
  json j = json_io::to_json(r, !r.member);
  j["shape"] = json_io::to_json(shape);
  return {j, r.member && shape.ok() ? 0 : 1};
}

Outcome cmd_iso_inequalities(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  const InequalityReport r = proof_inequalities(lam);
  return {json_io::to_json(r), r.ok() ? 0 : 1};
}

Outcome cmd_poisson_bracket(const Options& o) {
  if (o.n < 2) throw InputError("--n >= 2 is required");
  const CoordFn a = coord_arg(o.a, "a"), b = coord_arg(o.b, "b");
  for (const CoordFn& c : {a, b})
    if (c.i < 1 || c.j < 1 || c.i > o.n || c.j > o.n || c.r < 0) throw InputError("coordinate out of range");
  PoissonBracket pb(o.n, parse_form(o.form));
  return {json{{"n", o.n},
               {"form", o.form},
               {"a", json_io::to_json(a)},
               {"b", json_io::to_json(b)},
               {"bracket", json_io::to_json(pb.bracket(a, b))}},
          0};
}

Outcome cmd_poisson_jacobi(const Options& o) {
  if (o.n < 2) throw InputError("--n >= 2 is required");
  if (o.max_order < 0) throw InputError("--max-order must be non-negative");
  PoissonBracket pb(o.n, parse_form(o.form));
  std::vector<CoordFn> cs;
  for (int i = 1; i <= o.n; ++i)
    for (int j = 1; j <= o.n; ++j)
      for (int r = 0; r <= o.max_order; ++r) cs.push_back(CoordFn{i, j, r});
  long triples = 0;
  json failure = nullptr;
  for (const CoordFn& a : cs)
    for (const CoordFn& b : cs)
      for (const CoordFn& c : cs) {
        if (!failure.is_null()) break;
        const PoissonPoly f = coord(a.i, a.j, a.r), g = coord(b.i, b.j, b.r), h = coord(c.i, c.j, c.r);
        const PoissonPoly sum = pb.bracket_poly(f, pb.bracket_poly(g, h)) + pb.bracket_poly(g, pb.bracket_poly(h, f)) +
                                pb.bracket_poly(h, pb.bracket_poly(f, g));
        ++triples;
        if (!sum.is_zero())
          failure = json{{"a", json_io::to_json(a)}, {"b", json_io::to_json(b)}, {"c", json_io::to_json(c)},
                         {"cyclic_sum", json_io::to_json(sum)}};
      }
  return {json{{"n", o.n}, {"form", o.form}, {"max_order", o.max_order}, {"triples", triples}, {"holds", failure.is_null()},
               {"failure", failure}},
          failure.is_null() ? 0 : 1};
}

Outcome cmd_poisson_vanishing(const Options& o) {
  const Coweight lam = coweight_arg(o.lambda, o.n, "lambda");
  const VanishingReport r = ideal_vanishing_check(lam, o.seed, o.samples > 0 ? o.samples : 50, parse_form(o.form));
  json j = json_io::to_json(r);
  j["form"] = o.form;
  return {j, r.all_zero ? 0 : 1};
}

Outcome cmd_selftest(const Options& o, std::ostream& err) {
  acceptance::Config cfg;
  cfg.seed = o.seed;
  cfg.n_max = o.n_max;
  if (cfg.n_max < 2 || cfg.n_max > 5) throw InputError("--n-max must be between 2 and 5");
  const auto results = acceptance::run_all(cfg);
  bool all = true;
  for (const auto& r : results) {
    err << acceptance::status_line(r) << "  " << r.seconds << " s (budget " << r.budget_seconds << " s)\n";
    all = all && r.pass();
  }
  return {acceptance::report(results, cfg), all ? 0 : 1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Slices of the affine Grassmannian of SL_n: computations and checks", "agslice"};
  app.require_subcommand(1);
  auto common = [&o](CLI::App* c) {
    c->add_option("--n", o.n, "rank n of SL_n");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  auto lambda_opt = [&o](CLI::App* c) { c->add_option("--lambda", o.lambda, "fundamental coefficients, e.g. 2,0"); };
  auto matrix_opts = [&o](CLI::App* c) {
    c->add_option("--matrix", o.matrix, "matrix as JSON");
    c->add_option("--matrix-file", o.matrix_file, "file holding the matrix JSON");
  };

  std::string chosen;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* c = parent->add_subcommand(name, help);
    common(c);
    c->callback([&chosen, c, parent]() { chosen = (parent->get_parent() ? parent->get_name() + " " : "") + c->get_name(); });
    return c;
  };

  auto* cw = leaf(&app, "coweight", "conversions and the partition dictionary");
  lambda_opt(cw);
  cw->add_option("--mu", o.mu, "second coweight for dominance and pairing");
  cw->add_option("--k", o.k, "target size factor for the pairing check");

  auto* ig = leaf(&app, "ideal-gens", "generators of the ideal for (lambda, 0)");
  lambda_opt(ig);
  ig->add_flag("--polys", o.polys, "include polynomials");

  auto* mem = leaf(&app, "member", "test I + t^-1 X against the ideal");
  lambda_opt(mem);
  matrix_opts(mem);

  auto* orbit = app.add_subcommand("orbit", "nilpotent orbits");
  orbit->require_subcommand(1);
  auto* os = leaf(orbit, "sample", "random matrix of a Jordan type");
  os->add_option("--partition", o.partition, "Jordan type, e.g. 2,1");
  auto* ot = leaf(orbit, "type", "Jordan type of a nilpotent matrix");
  matrix_opts(ot);
  auto* oc = leaf(orbit, "closure", "orbit closure order");
  oc->add_option("--partition", o.partition, "first Jordan type");
  oc->add_option("--other", o.other, "second Jordan type");

  auto* wey = app.add_subcommand("weyman", "highest weight vectors and dimensions");
  wey->require_subcommand(1);
  auto* wg = leaf(wey, "generators", "highest weight generators for lambda");
  lambda_opt(wg);
  wg->add_flag("--polys", o.polys, "include polynomials");
  auto* wh = leaf(wey, "hwv-check", "weight and raising checks");
  wh->add_option("--k", o.k, "only this k");
  wh->add_option("--p", o.p, "only this p");
  auto* wd = leaf(wey, "dims", "span dimension report");
  wd->add_option("--k", o.k, "minor size");
  wd->add_option("--p", o.p, "order");

  auto* iso = app.add_subcommand("iso", "block embedding into SL_kn");
  iso->require_subcommand(1);
  auto* ie = leaf(iso, "embed", "embed a slice point (sampled unless --matrix is given)");
  lambda_opt(ie);
  matrix_opts(ie);
  ie->add_option("--max-rank-override", o.max_rank, "raise the matrix size cap");
  auto* iv = leaf(iso, "verify", "valuation conditions for M in the slice of (lambda, mu)");
  lambda_opt(iv);
  iv->add_option("--mu", o.mu, "lower coweight (default 0)");
  matrix_opts(iv);
  iv->add_option("--max-rank-override", o.max_rank, "raise the matrix size cap");
  auto* ii = leaf(iso, "inequalities", "inequalities on m");
  lambda_opt(ii);

  auto* poi = app.add_subcommand("poisson", "Poisson bracket on G_1[[t^-1]]");
  poi->require_subcommand(1);
  auto* pbk = leaf(poi, "bracket", "bracket of two coordinates");
  pbk->add_option("--a", o.a, "first coordinate i,j,r");
  pbk->add_option("--b", o.b, "second coordinate i,j,r");
  pbk->add_option("--form", o.form, "trace or killing");
  auto* pj = leaf(poi, "jacobi", "Jacobi identity on coordinate triples");
  pj->add_option("--max-order", o.max_order, "largest order r");
  pj->add_option("--form", o.form, "trace or killing");
  auto* pv = leaf(poi, "vanishing", "brackets of ideal generators on the slice");
  lambda_opt(pv);
  pv->add_option("--samples", o.samples, "sample points (default 50)");
  pv->add_option("--form", o.form, "trace or killing");

  auto* st = leaf(&app, "selftest", "run all acceptance criteria");
  st->add_option("--n-max", o.n_max, "rank bound for the sweeps (default 4)");

  auto fail = [&out](const std::string& msg) {
    out << json_io::dump(json{{"version", json_io::kVersion}, {"error", msg}}) << "\n";
    return 2;
  };

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  Outcome res;
  try {
    if (chosen == "coweight") res = cmd_coweight(o);
    else if (chosen == "ideal-gens") res = cmd_ideal_gens(o);
    else if (chosen == "member") res = cmd_member(o);
    else if (chosen == "orbit sample") res = cmd_orbit_sample(o);
    else if (chosen == "orbit type") res = cmd_orbit_type(o);
    else if (chosen == "orbit closure") res = cmd_orbit_closure(o);
    else if (chosen == "weyman generators") res = cmd_weyman_generators(o);
    else if (chosen == "weyman hwv-check") res = cmd_weyman_hwv(o);
    else if (chosen == "weyman dims") res = cmd_weyman_dims(o);
    else if (chosen == "iso embed") res = cmd_iso_embed(o);
    else if (chosen == "iso verify") res = cmd_iso_verify(o);
    else if (chosen == "iso inequalities") res = cmd_iso_inequalities(o);
    else if (chosen == "poisson bracket") res = cmd_poisson_bracket(o);
    else if (chosen == "poisson jacobi") res = cmd_poisson_jacobi(o);
    else if (chosen == "poisson vanishing") res = cmd_poisson_vanishing(o);
    else if (chosen == "selftest") res = cmd_selftest(o, err);
    else return fail("no subcommand selected");
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::domain_error& e) {
    return fail(e.what());
  } catch (const json::exception& e) {
    return fail(std::string("bad JSON input: ") + e.what());
  }

  json doc = header(o, chosen);
  doc["result"] = res.body;
  const std::string text = json_io::dump(doc) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) return fail("cannot write " + o.out);
    f << text;
  }
  return res.code;
}

}  // namespace agslice::cli

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opid/cache.hpp"
#include "opid/classify.hpp"

using namespace opid;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Common {
  unsigned degree = 2;
  unsigned mult = 2;
  std::string format = "text";
};

void add_shape(CLI::App* sub, Common& c, bool with_format = true) {
  sub->add_option("--degree", c.degree, "number of arguments p")->capture_default_str();
  sub->add_option("--mult", c.mult, "number of operator applications q")->capture_default_str();
  if (with_format)
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
      out.back().canonicalize();
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational number: '" + item + "'");
    }
  }
  return out;
}

RationalPoint parse_point(const std::string& text) {
  RationalPoint pt;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + item + "'");
    auto v = parse_rationals(item.substr(eq + 1));
    if (v.size() != 1) throw std::invalid_argument("bad value in '" + item + "'");
    pt[item.substr(0, eq)] = v[0];
  }
  return pt;
}

CaseSpec pick_case(const std::vector<CaseSpec>& all, unsigned id) {
  if (id < 1 || id > all.size())
    throw std::invalid_argument("case must be between 1 and " + std::to_string(all.size()));
  return all[id - 1];
}

std::string point_text(const RationalPoint& pt) {
  std::string s;
  for (const auto& [v, x] : pt) s += (s.empty() ? "" : ",") + v + "=" + to_string(x);
  return s;
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// --- subcommands -----------------------------------------------------------

int run_enumerate(const Common& c) {
  auto basis = enumerate_monomials(c.degree, c.mult);
  if (c.format == "json") {
    json out = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k)
      out.push_back({{"index", k + 1},
                     {"paren", basis[k].paren()},
                     {"star", basis[k].render(RenderStyle::Star)},
                     {"letters", basis[k].render(RenderStyle::Letters)}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < basis.size(); ++k)
      std::cout << k + 1 << "  " << basis[k].paren() << "  "
                << basis[k].render(RenderStyle::Letters) << "\n";
  }
  return kOk;
}

int run_consequences(const Common& c, const std::string& coeffs, bool dedup) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  RationalPoint pt;
  if (!coeffs.empty()) pt = coefficient_point(C, parse_rationals(coeffs));
  auto value_of = [&](const OperatorPolynomial& v) {
    if (pt.empty()) return v;
    OperatorPolynomial out(v.ring());
    for (const auto& [m, k] : v.terms()) out.add(m, substitute(k, pt));
    return out;
  };
  json rows = json::array();
  std::ostringstream text;
  std::size_t n = 0;
  for (std::size_t i = 0; i < C.raw.size(); ++i) {
    const auto& q = C.raw[i];
    if (dedup && q.duplicate_of) continue;
    ++n;
    OperatorPolynomial v = value_of(q.value);
    json row = {{"index", i + 1}, {"label", q.spec.label()}, {"value", v.to_string()}};
    if (q.duplicate_of) row["duplicate_of"] = *q.duplicate_of + 1;
    rows.push_back(row);
    text << i + 1 << ". " << q.spec.label() << ":  " << v.to_string();
    if (q.duplicate_of) text << "   [same as " << *q.duplicate_of + 1 << "]";
    text << "\n";
  }
  if (c.format == "json")
    std::cout << rows.dump(2) << "\n";
  else
    std::cout << "R = " << value_of(C.R).to_string() << "\n" << n << " consequences\n" << text.str();
  return kOk;
}

int run_matrix(const Common& c, bool transpose) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  PolyMatrix M = transpose ? C.matrix.transpose() : C.matrix;
  if (c.format == "json") {
    json j = M.to_json();
    json rl = json::array(), cl = json::array();
    for (const auto& r : C.row_labels) rl.push_back(r.label());
    for (const auto& m : C.col_labels) cl.push_back(m.render(RenderStyle::Star));
    j[transpose ? "col_labels" : "row_labels"] = rl;
    j[transpose ? "row_labels" : "col_labels"] = cl;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << M.to_text();
  }
  return kOk;
}

int run_psf(const Common& c, unsigned case_id) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  CaseSpec cs = pick_case(cases(C), case_id);
  CaseResidual r = case_residual(C, cs);
  if (c.format == "json") {
    json j = {{"case", cs.index},
              {"pinned", point_text(cs.pinned)},
              {"identity_size", r.psf.identity_size},
              {"operations", r.psf.ops.size()},
              {"residual", r.residual.to_json()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "case " << cs.index << ": " << cs.describe() << "\n"
              << "identity block " << r.psf.identity_size << ", residual "
              << r.residual.rows() << "x" << r.residual.cols() << " ("
              << r.psf.ops.size() << " elementary operations)\n"
              << r.residual.to_text();
  }
  return kOk;
}

int run_minors(const Common& c, unsigned case_id, std::size_t size, bool distinct) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  CaseResidual r = case_residual(C, pick_case(cases(C), case_id));
  MinorCensus m = minor_census(r.residual, size, MinorDedup::UpToScalar);
  if (c.format == "json") {
    json j = {{"size", size},
              {"raw", m.raw},
              {"nonzero", m.nonzero},
              {"distinct", m.distinct.size()},
              {"min_degree", m.min_degree},
              {"max_degree", m.max_degree}};
    if (distinct) {
      json list = json::array();
      for (const auto& p : m.distinct) list.push_back(p.to_string());
      j["minors"] = list;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << size << "x" << size << " minors: " << m.raw << " raw, " << m.nonzero
              << " nonzero, " << m.distinct.size() << " distinct up to scalar, degrees "
              << m.min_degree << ".." << m.max_degree << "\n";
    if (distinct)
      for (const auto& p : m.distinct) std::cout << p.to_string() << "\n";
  }
  return kOk;
}

int run_gb(const Common& c, unsigned case_id, std::size_t size, double timeout,
           const std::string& save, bool no_cache) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  CaseResidual r = case_residual(C, pick_case(cases(C), case_id));
  Ideal I(r.residual.ring(), minors(r.residual, size));
  std::string key = groebner_cache_key(I);
  ArtifactCache cache(ArtifactCache::default_dir());
  std::optional<json> doc;
  if (!no_cache) {
    doc = cache.load(key);
    if (cache.discarded())
      std::cerr << "warning: discarded corrupt cache entry " << cache.path_for(key) << "\n";
  }
  if (!doc) {
    GroebnerOptions go;
    go.timeout_seconds = timeout;
    GroebnerBasis G = buchberger(I, go);
    doc = groebner_to_json(G, I.size());
    if (!no_cache) cache.store(key, *doc);
  }
  std::string out = doc->dump(2) + "\n";
  if (!save.empty()) write_output(save, out);
  std::cout << out;
  return kOk;
}

int run_rank_at(const Common& c, unsigned case_id, const std::string& point,
                const std::string& free) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  RationalPoint pinned;
  if (case_id) pinned = pick_case(cases(C), case_id).pinned;
  if (free.empty()) {
    RationalPoint pt = parse_point(point);
    for (const auto& [v, x] : pinned) pt.emplace(v, x);
    for (const auto& [v, x] : pt)
      if (C.ring->index_of(v) < 0) throw std::invalid_argument("unknown coefficient '" + v + "'");
    std::size_t r = rank_at(C.matrix, pt);
    if (c.format == "json")
      std::cout << json{{"point", point_text(pt)}, {"rank", r}}.dump(2) << "\n";
    else
      std::cout << r << "\n";
    return kOk;
  }
  // Values may be polynomials in the free coefficient, e.g. f=-d-1.
  ClaimPoint cp = parse_claim_point(point, {free});
  for (const auto& [v, x] : pinned) cp.coords.emplace(v, Polynomial::constant(cp.parameter_ring, x));
  for (const auto& [v, x] : cp.coords)
    if (C.ring->index_of(v) < 0) throw std::invalid_argument("unknown coefficient '" + v + "'");
  cp.coords.emplace(free, Polynomial::variable(cp.parameter_ring, free));
  PolyMatrix M(cp.parameter_ring, C.matrix.rows(), C.matrix.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      M.at(i, j) = compose(C.matrix.at(i, j), cp.coords, cp.parameter_ring);
  ParametricRank pr = rank_at(M, {}, free);
  std::string shown = point;
  json drops = json::array();
  for (const auto& [x, r] : pr.drops) drops.push_back({{"value", to_string(x)}, {"rank", r}});
  if (c.format == "json") {
    std::cout << json{{"point", shown},
                      {"free", free},
                      {"generic_rank", pr.generic_rank},
                      {"exceptional", pr.exceptional.to_string()},
                      {"drops", drops}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << pr.generic_rank << " generically in " << free << "; exceptional polynomial "
              << pr.exceptional.to_string() << "\n";
    for (const auto& [x, r] : pr.drops)
      std::cout << "rank " << r << " at " << free << "=" << to_string(x) << "\n";
  }
  return kOk;
}

ScanOptions scan_options(std::uint64_t seed, std::size_t budget, const std::string& grid,
                         bool random) {
  ScanOptions o;
  o.seed = seed;
  o.budget = budget;
  if (random)
    o.grid.clear();
  else if (!grid.empty())
    o.grid = parse_rationals(grid);
  return o;
}

int run_scan(const Common& c, unsigned case_id, const ScanOptions& opts) {
  ConsequenceMatrix C = build_consequence_matrix(c.degree, c.mult);
  CaseSpec cs = pick_case(cases(C), case_id);
  ScanReport r = genericity_scan(C, cs, opts);
  const auto& pub = published_classification(c.degree, c.mult);
  if (c.format == "json") {
    json f = json::array(), h = json::array();
    for (const auto& x : r.findings) f.push_back({{"point", point_text(x.point)}, {"rank", x.rank}, {"note", x.note}});
    for (const auto& x : r.table_hits) h.push_back({{"point", point_text(x.point)}, {"rank", x.rank}});
    std::cout << json{{"case", cs.index}, {"sampled", r.sampled}, {"maximal", r.maximal},
                      {"on_table", r.on_table}, {"table_hits", h}, {"findings", f},
                      {"pass", r.pass()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "case " << cs.index << ": " << r.sampled << " sampled, " << r.maximal
              << " at rank " << pub.max_rank << ", " << r.on_table << " on published entries\n";
    for (const auto& x : r.table_hits)
      std::cout << "  table: rank " << x.rank << " at " << point_text(x.point) << "\n";
    for (const auto& x : r.findings)
      std::cout << "  FINDING: rank " << x.rank << " at " << point_text(x.point) << " (" << x.note << ")\n";
  }
  return r.pass() ? kOk : kVerificationFailed;
}

int run_classify(const Common& c, const ClassifyOptions& opts, const std::string& report) {
  ClassificationReport r = classify(c.degree, c.mult, opts);
  std::string md = r.to_markdown();
  if (!report.empty()) {
    bool as_json = report.size() >= 5 && report.substr(report.size() - 5) == ".json";
    write_output(report, as_json ? r.to_json().dump(2) + "\n" : md);
  }
  if (c.format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << md;
  return r.pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of operator identities on associative algebras"};
  app.require_subcommand(1);

  Common common;
  std::string coeffs, point, free, save, grid, report;
  bool dedup = false, transpose = false, distinct = false, no_cache = false, random = false;
  unsigned case_id = 0;
  std::size_t size = 1, budget = 200;
  std::uint64_t seed = 1;
  double timeout = 0;
  ClassifyOptions copts;

  auto* enumerate = app.add_subcommand("enumerate", "list the monomial basis of O(p,q)");
  add_shape(enumerate, common);

  auto* conseq = app.add_subcommand("consequences", "list the consequences of a generic identity");
  add_shape(conseq, common);
  conseq->add_option("--coeffs", coeffs, "numeric coefficients a,b,c,...");
  conseq->add_flag("--dedup", dedup, "drop repeated consequences");

  auto* matrix = app.add_subcommand("matrix", "print the matrix of consequences");
  add_shape(matrix, common);
  matrix->add_flag("--transpose", transpose);

  auto* psf = app.add_subcommand("psf", "partial Smith form of one normalisation case");
  add_shape(psf, common);
  psf->add_option("--case", case_id, "case number (first nonzero coefficient)")->required();

  auto* mins = app.add_subcommand("minors", "minors of a case's residual block");
  add_shape(mins, common);
  mins->add_option("--case", case_id)->required();
  mins->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  mins->add_flag("--distinct", distinct, "list the distinct minors");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a determinantal ideal");
  add_shape(gb, common, false);
  gb->add_option("--case", case_id)->required();
  gb->add_option("--minor-size", size)->required()->check(CLI::PositiveNumber);
  gb->add_option("--timeout", timeout, "seconds, 0 for none");
  gb->add_option("--save", save, "also write the JSON to this file");
  gb->add_flag("--no-cache", no_cache);

  auto* rank = app.add_subcommand("rank-at", "rank of the matrix of consequences at a point");
  add_shape(rank, common);
  rank->add_option("--case", case_id, "fill in the case's pinned coefficients");
  rank->add_option("--point", point, "a=1,b=0,...")->required();
  rank->add_option("--free", free, "coefficient left symbolic");

  auto* scan = app.add_subcommand("scan", "rank at sampled points of one case");
  add_shape(scan, common);
  scan->add_option("--case", case_id)->required();
  scan->add_option("--seed", seed)->capture_default_str();
  scan->add_option("--budget", budget)->capture_default_str();
  scan->add_option("--grid", grid, "comma-separated sample values");
  scan->add_flag("--random", random, "random rationals instead of a grid");

  auto* cls = app.add_subcommand("classify", "verify the published classification");
  add_shape(cls, common);
  cls->add_option("--seed", seed)->capture_default_str();
  cls->add_option("--budget", budget)->capture_default_str();
  cls->add_option("--scan-grid", grid, "comma-separated sample values");
  cls->add_flag("--random", random, "random rationals instead of a grid");
  cls->add_option("--max-minor-size", copts.max_minor_size)->capture_default_str();
  cls->add_option("--timeout", timeout, "per Groebner basis, seconds");
  cls->add_option("--report", report, "write a report (.json or .md)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(common);
    if (*conseq) return run_consequences(common, coeffs, dedup);
    if (*matrix) return run_matrix(common, transpose);
    if (*psf) return run_psf(common, case_id);
    if (*mins) return run_minors(common, case_id, size, distinct);
    if (*gb) return run_gb(common, case_id, size, timeout, save, no_cache);
    if (*rank) return run_rank_at(common, case_id, point, free);
    if (*scan) return run_scan(common, case_id, scan_options(seed, budget, grid, random));
    if (*cls) {
      copts.scan = scan_options(seed, budget, grid, random);
      copts.gb_timeout_seconds = timeout;
      return run_classify(common, copts, report);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroebnerTimeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

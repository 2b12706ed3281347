#include "opid/classify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opid {

std::string CaseSpec::describe() const {
  std::string out;
  for (const auto& [v, x] : pinned) {
    if (!out.empty()) out += ", ";
    out += v + "=" + to_string(x);
  }
  if (!free.empty()) {
    out += "; free:";
    for (const auto& v : free) out += " " + v;
  }
  return out;
}

std::vector<CaseSpec> cases(const ConsequenceMatrix& C) {
  std::vector<CaseSpec> out;
  const auto& vars = C.ring->variables();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    CaseSpec cs;
    cs.index = static_cast<unsigned>(k + 1);
    for (std::size_t m = 0; m < k; ++m) cs.pinned[vars[m]] = 0;
    cs.pinned[vars[k]] = 1;
    for (std::size_t m = k + 1; m < vars.size(); ++m) cs.free.push_back(vars[m]);
    out.push_back(std::move(cs));
  }
  return out;
}

ClaimPoint parse_entry_point(const std::string& row) {
  std::string body = row, param;
  if (auto bar = row.find('|'); bar != std::string::npos) {
    body = row.substr(0, bar);
    param = row.substr(bar + 1);
    param.erase(0, param.find_first_not_of(' '));
    param.erase(param.find_last_not_of(' ') + 1);
  }
  body.erase(body.find_last_not_of(' ') + 1);
  ClaimPoint pt = parse_claim_point(body, param.empty()
                                              ? std::vector<std::string>{}
                                              : std::vector<std::string>{param});
  pt.label = row;
  return pt;
}

namespace {

ClaimPoint entry_point(const PublishedEntry& e) {
  return parse_entry_point(e.parameter.empty() ? e.point
                                               : e.point + " | " + e.parameter);
}

std::vector<Polynomial> entry_coefficients(const ConsequenceMatrix& C,
                                           const ClaimPoint& pt) {
  std::vector<Polynomial> out;
  for (const auto& v : C.ring->variables()) {
    auto it = pt.coords.find(v);
    if (it == pt.coords.end())
      throw std::invalid_argument("point lacks coefficient '" + v + "'");
    out.push_back(it->second);
  }
  return out;
}

std::vector<Rational> rational_coefficients(const ConsequenceMatrix& C,
                                            const RationalPoint& pt) {
  std::vector<Rational> out;
  for (const auto& v : C.ring->variables()) out.push_back(pt.at(v));
  return out;
}

std::string coefficient_text(const Polynomial& c) {
  if (c.is_constant()) {
    Rational v = c.constant_value();
    return v == 1 ? std::string() : to_string(v) + " ";
  }
  if (c.size() == 1) return c.to_string() + " ";
  return "(" + c.to_string() + ") ";
}

// Matrix of an entry: coefficients replaced by their values, as polynomials
// in the entry's parameter ring.
PolyMatrix entry_matrix(const ConsequenceMatrix& C, const ClaimPoint& pt) {
  PolyMatrix out(pt.parameter_ring, C.matrix.rows(), C.matrix.cols());
  for (std::size_t i = 0; i < C.matrix.rows(); ++i)
    for (std::size_t j = 0; j < C.matrix.cols(); ++j)
      if (!C.matrix.at(i, j).is_zero())
        out.at(i, j) = compose(C.matrix.at(i, j), pt.coords, pt.parameter_ring);
  return out;
}

const CaseSpec& case_of(const std::vector<CaseSpec>& cs,
                        const std::vector<Rational>& coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) return cs.at(k);
  throw std::invalid_argument("zero identity has no case");
}

}  // namespace

std::vector<Rational> normalize_leading(std::vector<Rational> coeffs) {
  for (const auto& c : coeffs)
    if (c != 0) {
      Rational s = c;
      for (auto& x : coeffs) x /= s;
      break;
    }
  return coeffs;
}

std::vector<Rational> mirror22(const std::vector<Rational>& v) {
  if (v.size() != 6) throw std::invalid_argument("mirror22 needs 6 coefficients");
  return {v[0], v[3], v[5], v[1], v[4], v[2]};
}

std::string identity_render(const ConsequenceMatrix& C,
                            const std::vector<Polynomial>& coefficients) {
  std::vector<std::string> left, right;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Polynomial& c = coefficients[k];
    if (c.is_zero()) continue;
    std::string mono =
        C.coefficient_basis.at(k).render(RenderStyle::Letters, true);
    if (c.leading_term().coef > 0)
      left.push_back(coefficient_text(c) + mono);
    else
      right.push_back(coefficient_text(-c) + mono);
  }
  if (left.empty()) std::swap(left, right);
  auto join = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("0");
    std::string s;
    for (const auto& t : v) s += (s.empty() ? "" : " + ") + t;
    return s;
  };
  if (left.empty()) return "0 = 0";
  return join(left) + " = " + join(right);
}

std::string identity_render(const ConsequenceMatrix& C, const ClaimPoint& pt) {
  return identity_render(C, entry_coefficients(C, pt));
}

std::optional<std::size_t> match_entry(const PublishedClassification& pub,
                                       const RationalPoint& point) {
  for (std::size_t k = 0; k < pub.entries.size(); ++k) {
    const auto& e = pub.entries[k];
    ClaimPoint pt = entry_point(e);
    RationalPoint param;
    if (!e.parameter.empty()) {
      Polynomial var = Polynomial::variable(pt.parameter_ring, e.parameter);
      for (const auto& [v, c] : pt.coords)
        if (c == var) {
          auto it = point.find(v);
          if (it != point.end()) param[e.parameter] = it->second;
          break;
        }
      if (param.empty()) continue;
      const Rational& t = param.begin()->second;
      if (std::find(e.excluded.begin(), e.excluded.end(), t) != e.excluded.end())
        continue;
    }
    bool ok = true;
    for (const auto& [v, c] : pt.coords) {
      auto it = point.find(v);
      if (it == point.end() || evaluate(c, param) != it->second) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

std::string identity_name(unsigned p, unsigned q,
                          const std::vector<Rational>& coeffs) {
  const PublishedClassification* pub = nullptr;
  try {
    pub = &published_classification(p, q);
  } catch (const std::invalid_argument&) {
    return {};
  }
  auto vars = coefficient_names(coeffs.size());
  RationalPoint pt;
  auto norm = normalize_leading(coeffs);
  for (std::size_t k = 0; k < norm.size(); ++k) pt[vars[k]] = norm[k];
  auto m = match_entry(*pub, pt);
  return m ? pub->entries[*m].name : std::string();
}

// ---------------------------------------------------------------------------

CaseResidual case_residual(const ConsequenceMatrix& C, const CaseSpec& cs) {
  PolyMatrix M = C.matrix;
  if (M.cols() > M.rows()) M = M.transpose();
  M = M.substitute(cs.pinned);
  CaseResidual out;
  out.psf = partial_smith_form(M);
  out.residual = out.psf.residual.change_ring(Ring::make(cs.free));
  return out;
}

std::vector<Rational> default_scan_grid() {
  return {-2, -1, make_rational(-1, 2), 0, make_rational(1, 2), 1, 2};
}

ScanReport genericity_scan(const ConsequenceMatrix& C, const CaseSpec& cs,
                           const ScanOptions& opts) {
  const auto& pub = published_classification(C.p, C.q);
  ScanReport rep;
  rep.case_index = cs.index;
  if (cs.free.empty()) return rep;
  std::mt19937_64 rng(opts.seed * 1000003 + cs.index);
  const std::size_t nfree = cs.free.size();

  std::vector<std::vector<Rational>> samples;
  if (!opts.grid.empty()) {
    double total = 1;
    for (std::size_t k = 0; k < nfree; ++k) total *= static_cast<double>(opts.grid.size());
    if (total <= static_cast<double>(opts.budget)) {
      std::vector<std::size_t> idx(nfree, 0);
      while (true) {
        std::vector<Rational> s;
        for (auto i : idx) s.push_back(opts.grid[i]);
        samples.push_back(std::move(s));
        std::size_t k = 0;
        while (k < nfree && ++idx[k] == opts.grid.size()) idx[k++] = 0;
        if (k == nfree) break;
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, opts.grid.size() - 1);
      std::set<std::vector<Rational>> seen;
      while (samples.size() < opts.budget) {
        std::vector<Rational> s;
        for (std::size_t k = 0; k < nfree; ++k) s.push_back(opts.grid[pick(rng)]);
        if (seen.insert(s).second) samples.push_back(std::move(s));
      }
    }
  } else {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
    std::size_t attempts = 0;
    while (samples.size() < opts.budget && attempts++ < 100 * opts.budget) {
      std::vector<Rational> s;
      for (std::size_t k = 0; k < nfree; ++k) s.push_back(make_rational(num(rng), den(rng)));
      RationalPoint pt = cs.pinned;
      for (std::size_t k = 0; k < nfree; ++k) pt[cs.free[k]] = s[k];
      if (opts.off_table_only && match_entry(pub, pt)) continue;
      samples.push_back(std::move(s));
    }
  }

  for (const auto& s : samples) {
    RationalPoint pt = cs.pinned;
    for (std::size_t k = 0; k < nfree; ++k) pt[cs.free[k]] = s[k];
    auto m = match_entry(pub, pt);
    if (m && opts.off_table_only) {
      ++rep.on_table;
      continue;
    }
    ++rep.sampled;
    std::size_t r = rank_at(C.matrix, pt);
    if (m) {
      ++rep.on_table;
      rep.table_hits.push_back({pt, r, pub.entries[*m].name});
      if (r != pub.entries[*m].rank)
        rep.findings.push_back({pt, r, "published rank " +
                                           std::to_string(pub.entries[*m].rank)});
    } else if (r == pub.max_rank) {
      ++rep.maximal;
    } else {
      rep.findings.push_back({pt, r, "unexplained rank below maximum"});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void check_ideals(CaseReport& cr, const PolyMatrix& B, const RingPtr& ring,
                  const PublishedClassification& pub,
                  const ClassifyOptions& opts,
                  std::vector<std::optional<GroebnerBasis>>& bases,
                  std::vector<Ideal>& ideals) {
  // Generic rank of the residual at a fixed rational point.
  RationalPoint probe;
  long v = 2;
  for (const auto& name : ring->variables()) probe[name] = make_rational(v++, 7);
  std::size_t generic = rank_at(B, probe);
  std::size_t top = std::min(generic, opts.max_minor_size);
  bases.assign(top + 1, std::nullopt);
  ideals.assign(top + 1, Ideal());
  for (std::size_t r = 1; r <= top; ++r) {
    IdealCheck ic;
    ic.minor_size = r;
    std::vector<Polynomial> ms = minors(B, r);
    ic.raw_minors = ms.size();
    ideals[r] = Ideal(ring, std::move(ms));
    ic.generators = ideals[r].size();
    GroebnerOptions go;
    go.timeout_seconds = opts.gb_timeout_seconds;
    try {
      GroebnerBasis gb = buchberger(ideals[r], go);
      ic.recomputed = true;
      ic.basis_size = gb.basis.size();
      for (const auto& g : gb.basis) ic.basis.push_back(g.to_string());
      bases[r] = std::move(gb);
    } catch (const GroebnerTimeout&) {
      ic.recomputed = false;
    }
    for (const auto& pb : pub.bases) {
      if (pb.case_index != cr.spec.index || pb.minor_size != r) continue;
      if (!bases[r]) {
        ic.published_comparison = "not compared (basis not recomputed)";
        continue;
      }
      RingPtr pr = Ring::make(pb.ring);
      std::vector<Polynomial> theirs;
      for (const auto& t : pb.basis)
        theirs.push_back(change_ring(Polynomial::parse(pr, t), ring));
      std::vector<Polynomial> monic;
      for (const auto& t : theirs) monic.push_back(t.monic());
      std::sort(monic.begin(), monic.end(), Polynomial::canonical_less);
      std::vector<Polynomial> ours = bases[r]->basis;
      std::sort(ours.begin(), ours.end(), Polynomial::canonical_less);
      if (monic == ours) {
        ic.published_comparison = "equal to the published basis";
      } else {
        // Published bases under another order: compare the ideals.
        bool in_ours = std::all_of(theirs.begin(), theirs.end(), [&](const Polynomial& t) {
          return ideal_membership(t, *bases[r]);
        });
        GroebnerBasis tg = buchberger(Ideal(ring, theirs));
        bool in_theirs = std::all_of(ours.begin(), ours.end(), [&](const Polynomial& t) {
          return ideal_membership(t, tg);
        });
        if (in_ours && in_theirs) {
          ic.published_comparison = "same ideal as the published basis (" +
                                    std::to_string(theirs.size()) +
                                    " published elements)";
        } else {
          ic.published_comparison = "DIFFERS from the published basis";
          ic.pass = false;
        }
      }
    }
    if (ic.published_comparison.empty())
      for (const auto& [size, count] : pub.basis_sizes)
        if (cr.spec.index == 1 && size == r && pub.q == 2)
          ic.published_comparison = "published size " + std::to_string(count);
    if (!ic.pass) cr.pass = false;
    cr.ideals.push_back(std::move(ic));
  }
}

void check_zero_sets(CaseReport& cr, const PublishedClassification& pub,
                     const std::vector<std::optional<GroebnerBasis>>& bases,
                     const std::vector<Ideal>& ideals) {
  for (const auto& zs : pub.zero_sets) {
    if (zs.case_index != cr.spec.index) continue;
    ZeroSetCheck zc;
    zc.name = zs.name;
    zc.minor_size = zs.minor_size;
    if (zs.minor_size >= ideals.size()) {
      zc.report.points.push_back({zs.name, false, "", "ideal not computed"});
    } else {
      Ideal I = bases[zs.minor_size]
                    ? Ideal(bases[zs.minor_size]->ring, bases[zs.minor_size]->basis)
                    : ideals[zs.minor_size];
      ZeroSetClaim claim;
      for (const auto& row : zs.rows) claim.points.push_back(parse_entry_point(row));
      zc.report = verify_zero_set(I, claim);
    }
    if (!zc.report.all_pass()) cr.pass = false;
    cr.zero_sets.push_back(std::move(zc));
  }
}

}  // namespace

ClassificationReport classify(unsigned p, unsigned q, const ClassifyOptions& opts) {
  const auto& pub = published_classification(p, q);
  ConsequenceMatrix C = build_consequence_matrix(p, q);
  ClassificationReport rep;
  rep.p = p;
  rep.q = q;
  rep.max_rank = pub.max_rank;
  auto all_cases = cases(C);

  std::vector<CaseResidual> residuals(all_cases.size());
  for (const auto& cs : all_cases) {
    CaseReport cr;
    cr.spec = cs;
    if (cs.free.empty()) {
      cr.method = "constant";
      cr.identity_size = rank_at(C.matrix, cs.pinned);
    } else if (cs.free.size() == 1) {
      cr.method = "smith";
      PolyMatrix M = C.matrix.cols() > C.matrix.rows() ? C.matrix.transpose()
                                                       : C.matrix;
      auto sf = univariate_smith_form(M.substitute(cs.pinned), cs.free[0]);
      for (const auto& d : sf.diagonal) {
        if (d.is_constant())
          ++cr.identity_size;
        else
          cr.smith_diagonal.push_back(d.to_string());
      }
    } else {
      cr.method = "psf";
      residuals[cs.index - 1] = case_residual(C, cs);
      const auto& res = residuals[cs.index - 1];
      cr.identity_size = res.psf.identity_size;
      cr.residual_rows = res.residual.rows();
      cr.residual_cols = res.residual.cols();
      std::vector<std::optional<GroebnerBasis>> bases;
      std::vector<Ideal> ideals;
      check_ideals(cr, res.residual, res.residual.ring(), pub, opts, bases, ideals);
      check_zero_sets(cr, pub, bases, ideals);
    }
    cr.scan = genericity_scan(C, cs, opts.scan);
    if (!cr.scan.pass()) cr.pass = false;
    rep.cases.push_back(std::move(cr));
  }

  for (const auto& e : pub.entries) {
    EntryCheck ec;
    ec.entry = e;
    ClaimPoint pt = entry_point(e);
    ec.rendered = identity_render(C, pt);
    if (e.parameter.empty()) {
      RationalPoint rp;
      for (const auto& [v, c] : pt.coords) rp[v] = c.constant_value();
      ec.rank = rank_at(C.matrix, rp);
      const CaseSpec& cs = case_of(all_cases, rational_coefficients(C, rp));
      const auto& res = residuals[cs.index - 1];
      if (res.residual.ring()) {
        RationalPoint sub;
        for (const auto& v : cs.free) sub[v] = rp.at(v);
        ec.psf_route_agrees =
            res.psf.identity_size + rank_at(res.residual, sub) == ec.rank;
      }
      ec.pass = ec.rank == e.rank && ec.psf_route_agrees;
    } else {
      PolyMatrix M = entry_matrix(C, pt);
      ParametricRank pr = rank_at(M, {}, e.parameter);
      ec.rank = pr.generic_rank;
      ec.exceptional = pr.exceptional.to_string();
      bool drops_excluded = true;
      for (const auto& [x, r] : pr.drops)
        if (std::find(e.excluded.begin(), e.excluded.end(), x) == e.excluded.end())
          drops_excluded = false;
      for (const auto& x : e.excluded) {
        std::size_t r = rank_at(M, {{e.parameter, x}});
        ec.excluded_ranks.emplace_back(x, r);
      }
      ec.pass = ec.rank == e.rank && drops_excluded;
      if (!drops_excluded) ec.detail = "rank drops at a non-excluded value";
    }
    if (ec.rendered != e.identity) {
      ec.pass = false;
      ec.detail += (ec.detail.empty() ? "" : "; ") +
                   std::string("rendered differently from the published identity");
    }
    rep.entries.push_back(std::move(ec));
  }

  // Scaling invariance on every point entry.
  {
    bool ok = true;
    for (const auto& e : pub.entries) {
      if (!e.parameter.empty()) continue;
      ClaimPoint pt = entry_point(e);
      RationalPoint rp;
      for (const auto& [v, c] : pt.coords) rp[v] = c.constant_value() * make_rational(-3, 2);
      if (rank_at(C.matrix, rp) != e.rank) ok = false;
    }
    rep.cross_checks.push_back({"rank is invariant under scaling by -3/2", ok});
  }

  if (p == 2 && q == 2) {
    // Left/right mirror.
    bool ok = true;
    for (const auto& e : pub.entries) {
      if (!e.parameter.empty()) continue;
      ClaimPoint pt = entry_point(e);
      RationalPoint rp;
      for (const auto& [v, c] : pt.coords) rp[v] = c.constant_value();
      auto mv = normalize_leading(mirror22(rational_coefficients(C, rp)));
      RationalPoint mp = coefficient_point(C, mv);
      auto m = match_entry(pub, mp);
      if (!m || pub.entries[*m].rank != e.rank || rank_at(C.matrix, mp) != e.rank)
        ok = false;
    }
    rep.cross_checks.push_back(
        {"mirror (a,b,c,d,e,f) -> (a,d,f,b,e,c) maps the table to itself with equal ranks", ok});

    // Compositions of the rank-14 identities with L.
    ConsequenceMatrix C21 = build_consequence_matrix(2, 1);
    const auto& pub21 = published_classification(2, 1);
    std::set<std::string> reached;
    bool ranks_ok = true;
    for (const auto& e : pub21.entries) {
      ClaimPoint pt = entry_point(e);
      OperatorPolynomial R(C21.ring);
      for (std::size_t k = 0; k < C21.coefficient_basis.size(); ++k)
        R.add(C21.coefficient_basis[k],
              Polynomial::constant(C21.ring, pt.coords.at(C21.ring->variable(k)).constant_value()));
      for (unsigned i = 1; i <= 2; ++i) {
        OperatorPolynomial S = R.map([&](const OperatorMonomial& m) { return comp_m_L(m, i); });
        std::vector<Rational> v;
        for (const auto& m : C.coefficient_basis) {
          Polynomial c = S.coefficient(m);
          v.push_back(c.is_zero() ? Rational(0) : c.constant_value());
        }
        RationalPoint sp = coefficient_point(C, normalize_leading(v));
        auto m = match_entry(pub, sp);
        if (m) {
          if (rank_at(C.matrix, sp) != pub.entries[*m].rank) ranks_ok = false;
          if (!pub.entries[*m].name.empty()) reached.insert(pub.entries[*m].name);
        }
      }
    }
    std::vector<std::string> want = {"Left average", "Right average", "P1", "P2",
                                     "P3", "P4", "P5"};
    bool all = ranks_ok && std::all_of(want.begin(), want.end(), [&](const auto& w) {
                 return reached.count(w) > 0;
               });
    std::string got;
    for (const auto& r : reached) got += (got.empty() ? "" : ", ") + r;
    rep.cross_checks.push_back(
        {"composing the rank-14 identities with L at either argument gives " + got, all});
  }
  return rep;
}

bool ClassificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }) &&
         std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }) &&
         std::all_of(cross_checks.begin(), cross_checks.end(),
                     [](const auto& c) { return c.pass; });
}

nlohmann::json ClassificationReport::to_json() const {
  using nlohmann::json;
  json j;
  j["degree"] = p;
  j["multiplicity"] = q;
  j["max_rank"] = max_rank;
  j["pass"] = pass();
  json cs = json::array();
  for (const auto& c : cases) {
    json jc;
    jc["case"] = c.spec.index;
    jc["spec"] = c.spec.describe();
    jc["method"] = c.method;
    jc["identity_size"] = c.identity_size;
    if (c.method == "psf") jc["residual"] = {c.residual_rows, c.residual_cols};
    if (!c.smith_diagonal.empty()) jc["smith_diagonal"] = c.smith_diagonal;
    json ideals = json::array();
    for (const auto& ic : c.ideals)
      ideals.push_back({{"minor_size", ic.minor_size},
                        {"raw_minors", ic.raw_minors},
                        {"generators", ic.generators},
                        {"recomputed", ic.recomputed},
                        {"basis_size", ic.basis_size},
                        {"basis", ic.basis},
                        {"published", ic.published_comparison},
                        {"pass", ic.pass}});
    jc["ideals"] = ideals;
    json zs = json::array();
    for (const auto& z : c.zero_sets) {
      json pts = json::array();
      for (const auto& pr : z.report.points)
        pts.push_back({{"point", pr.label}, {"pass", pr.pass}, {"witness", pr.witness}});
      zs.push_back({{"name", z.name}, {"minor_size", z.minor_size}, {"points", pts}});
    }
    jc["zero_sets"] = zs;
    json findings = json::array();
    for (const auto& f : c.scan.findings) {
      std::string pt;
      for (const auto& [v, x] : f.point) pt += (pt.empty() ? "" : ",") + v + "=" + to_string(x);
      findings.push_back({{"point", pt}, {"rank", f.rank}, {"note", f.note}});
    }
    jc["scan"] = {{"sampled", c.scan.sampled},
                  {"on_table", c.scan.on_table},
                  {"maximal", c.scan.maximal},
                  {"findings", findings}};
    jc["pass"] = c.pass;
    cs.push_back(std::move(jc));
  }
  j["cases"] = cs;
  json es = json::array();
  for (const auto& e : entries) {
    json je = {{"point", e.entry.point},
               {"identity", e.rendered},
               {"name", e.entry.name},
               {"published_rank", e.entry.rank},
               {"rank", e.rank},
               {"pass", e.pass}};
    if (!e.entry.parameter.empty()) {
      je["parameter"] = e.entry.parameter;
      je["exceptional"] = e.exceptional;
      json ex = json::array();
      for (const auto& [x, r] : e.excluded_ranks) ex.push_back({to_string(x), r});
      je["excluded_ranks"] = ex;
    }
    if (!e.detail.empty()) je["detail"] = e.detail;
    es.push_back(std::move(je));
  }
  j["entries"] = es;
  json cc = json::array();
  for (const auto& c : cross_checks)
    cc.push_back({{"check", c.description}, {"pass", c.pass}});
  j["cross_checks"] = cc;
  return j;
}

std::string ClassificationReport::to_markdown() const {
  auto badge = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  std::ostringstream os;
  os << "# Operator identities of degree " << p << ", multiplicity " << q << "\n\n";
  os << "Overall: **" << badge(pass()) << "**. Maximal rank " << max_rank << ".\n\n";
  std::map<std::size_t, std::vector<const EntryCheck*>> by_rank;
  for (const auto& e : entries) by_rank[e.entry.rank].push_back(&e);
  for (const auto& [r, list] : by_rank) {
    os << "## Rank " << r << "\n\n";
    os << "| | identity | name | coefficients | computed rank |\n|---|---|---|---|---|\n";
    for (const auto* e : list) {
      os << "| " << badge(e->pass) << " | " << e->rendered << " | " << e->entry.name
         << " | " << e->entry.point;
      if (!e->entry.parameter.empty()) {
        os << " (" << e->entry.parameter << " free";
        for (const auto& x : e->entry.excluded)
          os << ", " << e->entry.parameter << " != " << to_string(x);
        os << ")";
      }
      os << " | " << e->rank;
      if (!e->entry.parameter.empty()) {
        os << " generic, exceptional " << e->exceptional;
        for (const auto& [x, rr] : e->excluded_ranks)
          os << ", rank " << rr << " at " << e->entry.parameter << "=" << to_string(x);
      }
      os << " |\n";
    }
    os << "\n";
  }
  os << "## Cases\n\n";
  for (const auto& c : cases) {
    os << "### Case " << c.spec.index << ": " << c.spec.describe() << " (" << badge(c.pass)
       << ")\n\n";
    if (c.method == "constant") {
      os << "No free coefficients; rank " << c.identity_size << ".\n";
    } else if (c.method == "smith") {
      os << "Smith form over Q[" << c.spec.free[0] << "]: 1 (" << c.identity_size
         << " times)";
      for (const auto& d : c.smith_diagonal) os << ", " << d;
      os << ".\n";
    } else {
      os << "Partial Smith form: identity " << c.identity_size << ", residual "
         << c.residual_rows << "x" << c.residual_cols << ".\n\n";
      for (const auto& ic : c.ideals) {
        os << "- I(B," << ic.minor_size << "): " << ic.raw_minors << " minors, "
           << ic.generators << " distinct generators, ";
        if (ic.recomputed)
          os << "reduced basis of " << ic.basis_size << " elements recomputed";
        else
          os << "basis not recomputed";
        if (!ic.published_comparison.empty()) os << "; " << ic.published_comparison;
        os << "\n";
      }
      for (const auto& z : c.zero_sets) {
        std::size_t ok = 0;
        for (const auto& pr : z.report.points) ok += pr.pass;
        os << "- solution table " << z.name << " against I(B," << z.minor_size
           << "): " << ok << "/" << z.report.points.size() << " rows vanish\n";
      }
    }
    if (!c.spec.free.empty()) {
      os << "\nSampling: " << c.scan.sampled << " points, " << c.scan.maximal
         << " at maximal rank, " << c.scan.on_table << " on published entries, "
         << c.scan.findings.size() << " unexplained.\n";
      for (const auto& f : c.scan.findings) {
        os << "  - rank " << f.rank << " at";
        for (const auto& [v, x] : f.point) os << " " << v << "=" << to_string(x);
        os << " (" << f.note << ")\n";
      }
    }
    os << "\n";
  }
  if (!cross_checks.empty()) {
    os << "## Cross checks\n\n";
    for (const auto& c : cross_checks)
      os << "- " << badge(c.pass) << " " << c.description << "\n";
  }
  return os.str();
}

}  // namespace opid

#include "opid/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace opid {

namespace {

// Integer-coefficient polynomial with strictly descending monomials. All
// Groebner work happens on these, kept primitive, to avoid rational
// arithmetic in the inner loops.
struct IPoly {
  std::vector<Monomial> mono;
  std::vector<Integer> coef;

  std::size_t size() const { return mono.size(); }
  bool empty() const { return mono.empty(); }
  Monomial lm() const { return mono.front(); }
};

// Returns the factor s with to_ipoly(p) = s * p.
IPoly to_ipoly(const Polynomial& p, Rational* scale = nullptr) {
  IPoly out;
  if (p.is_zero()) {
    if (scale) *scale = 1;
    return out;
  }
  Rational c = p.content();
  if (p.leading_term().coef < 0) c = -c;
  out.mono.reserve(p.size());
  out.coef.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational q = t.coef / c;
    out.mono.push_back(t.mono);
    out.coef.push_back(q.get_num());
  }
  if (scale) *scale = 1 / c;
  return out;
}

Polynomial from_ipoly(const IPoly& p, const RingPtr& ring,
                      const Rational& divisor = 1) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c(p.coef[i]);
    if (divisor != 1) c /= divisor;
    terms.push_back({p.mono[i], c});
  }
  // Already sorted and nonzero.
  return Polynomial::from_terms(ring, std::move(terms));
}

Integer content_of(const IPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coef) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the content and makes the leading coefficient positive.
// Returns the factor the polynomial was divided by.
Integer make_primitive(IPoly& p) {
  if (p.empty()) return 1;
  Integer g = content_of(p);
  if (p.coef.front() < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return g;
}

// f <- a*f - b*t*g, where the term at index `pos` of f cancels.
void combine(IPoly& f, std::size_t pos, const Integer& a, const Integer& b,
             Monomial t, const IPoly& g) {
  IPoly out;
  out.mono.reserve(f.size() + g.size());
  out.coef.reserve(f.size() + g.size());
  const bool scale = a != 1;
  for (std::size_t i = 0; i < pos; ++i) {
    out.mono.push_back(f.mono[i]);
    out.coef.push_back(scale ? Integer(a * f.coef[i]) : f.coef[i]);
  }
  std::size_t i = pos, j = 0;
  Integer tmp;
  while (i < f.size() || j < g.size()) {
    Monomial gm = j < g.size() ? t * g.mono[j] : Monomial();
    if (j >= g.size() || (i < f.size() && f.mono[i] > gm)) {
      out.mono.push_back(f.mono[i]);
      out.coef.push_back(scale ? Integer(a * f.coef[i]) : f.coef[i]);
      ++i;
    } else if (i >= f.size() || gm > f.mono[i]) {
      out.mono.push_back(gm);
      out.coef.push_back(-b * g.coef[j]);
      ++j;
    } else {
      if (scale)
        tmp = a * f.coef[i];
      else
        tmp = f.coef[i];
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g.coef[j].get_mpz_t());
      if (tmp != 0) {
        out.mono.push_back(f.mono[i]);
        out.coef.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
  f = std::move(out);
}

struct Reducers {
  std::vector<const IPoly*> polys;

  const IPoly* find(Monomial m) const {
    const IPoly* best = nullptr;
    for (const IPoly* g : polys)
      if (g->lm().divides(m) && (!best || g->size() < best->size())) best = g;
    return best;
  }
};

// Full pseudo-reduction. On return f is primitive (up to sign) and
// `scale` is multiplied by the overall factor applied to f.
void normal_form(IPoly& f, const Reducers& reducers, bool top_only,
                 Rational* scale) {
  std::size_t pos = 0;
  unsigned steps_since_content = 0;
  Integer h, a, b;
  while (pos < f.size()) {
    const IPoly* g = reducers.find(f.mono[pos]);
    if (!g) {
      if (top_only) break;
      ++pos;
      continue;
    }
    const Integer& cf = f.coef[pos];
    const Integer& cg = g->coef.front();
    mpz_gcd(h.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), cg.get_mpz_t(), h.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), cf.get_mpz_t(), h.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Monomial t = g->lm().quotient_of(f.mono[pos]);
    combine(f, pos, a, b, t, *g);
    if (scale && a != 1) *scale *= Rational(a);
    if (a != 1 && ++steps_since_content >= 6) {
      steps_since_content = 0;
      Integer c = content_of(f);
      if (c > 1) {
        for (auto& x : f.coef)
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (scale) *scale /= Rational(c);
      }
    }
  }
  if (!f.empty()) {
    Integer c = make_primitive(f);
    if (scale) *scale /= Rational(c);
  }
}

IPoly s_poly(const IPoly& f, const IPoly& g) {
  Monomial l = f.lm().lcm(g.lm());
  Integer h;
  mpz_gcd(h.get_mpz_t(), f.coef.front().get_mpz_t(), g.coef.front().get_mpz_t());
  Integer a = g.coef.front() / h;  // multiplier of f
  Integer b = f.coef.front() / h;  // multiplier of g
  Monomial tf = f.lm().quotient_of(l);
  Monomial tg = g.lm().quotient_of(l);
  IPoly sf;
  sf.mono.reserve(f.size());
  sf.coef.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    sf.mono.push_back(tf * f.mono[i]);
    sf.coef.push_back(a * f.coef[i]);
  }
  combine(sf, 0, Integer(1), b, tg, g);
  return sf;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Pair {
  Monomial lcm;
  std::uint64_t tie;
  std::uint32_t i, j;

  bool operator<(const Pair& o) const {
    if (lcm != o.lcm) return lcm < o.lcm;
    if (tie != o.tie) return tie < o.tie;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

class Buchberger {
 public:
  Buchberger(const Ideal& ideal, const GroebnerOptions& opts)
      : ring_(ideal.ring()), opts_(opts) {
    for (const auto& g : ideal.generators()) inputs_.push_back(to_ipoly(g));
    std::sort(inputs_.begin(), inputs_.end(),
              [](const IPoly& x, const IPoly& y) { return x.lm() < y.lm(); });
  }

  GroebnerBasis run() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t next_input = 0;
    while (next_input < inputs_.size() || !pairs_.empty()) {
      if (opts_.timeout_seconds > 0) {
        double el = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (el > opts_.timeout_seconds)
          throw GroebnerTimeout("Groebner basis computation timed out");
      }
      IPoly h;
      bool from_input;
      if (next_input < inputs_.size() &&
          (pairs_.empty() || inputs_[next_input].lm() <= pairs_.begin()->lcm)) {
        h = std::move(inputs_[next_input++]);
        from_input = true;
      } else {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        h = s_poly(basis_[p.i], basis_[p.j]);
        ++stats_.pairs_reduced;
        from_input = false;
      }
      normal_form(h, reducers_, false, nullptr);
      if (h.empty()) {
        if (from_input)
          ++stats_.generators_reduced_to_zero;
        else
          ++stats_.zero_reductions;
        continue;
      }
      add(std::move(h));
      if (basis_.back().lm().is_one()) break;  // unit ideal
      if (opts_.progress)
        opts_.progress(stats_, pairs_.size() + inputs_.size() - next_input);
    }

    GroebnerBasis out;
    out.ring = ring_;
    std::vector<IPoly> final_basis;
    if (!basis_.empty() && basis_.back().lm().is_one()) {
      IPoly one;
      one.mono.push_back(Monomial());
      one.coef.push_back(1);
      final_basis.push_back(one);
    } else {
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (active_[k]) final_basis.push_back(basis_[k]);
      interreduce(final_basis);
    }
    for (auto& p : final_basis) {
      Rational lc(p.coef.front());
      out.basis.push_back(from_ipoly(p, ring_, lc));
    }
    stats_.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    out.stats = stats_;
    return out;
  }

  static void interreduce(std::vector<IPoly>& polys) {
    std::sort(polys.begin(), polys.end(),
              [](const IPoly& x, const IPoly& y) { return x.lm() < y.lm(); });
    // Minimalise: drop elements whose leading monomial is divisible by
    // another one's.
    std::vector<IPoly> minimal;
    for (auto& p : polys) {
      bool redundant = false;
      for (const auto& q : minimal)
        if (q.lm().divides(p.lm())) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Reducers others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.polys.push_back(&minimal[l]);
      normal_form(minimal[k], others, false, nullptr);
    }
    polys = std::move(minimal);
  }

 private:
  void add(IPoly h) {
    const auto hi = static_cast<std::uint32_t>(basis_.size());
    const Monomial lh = h.lm();
    basis_.push_back(std::move(h));
    active_.push_back(true);

    // New pairs (k, h) with Gebauer-Moeller pruning.
    struct Cand {
      Monomial lcm;
      std::uint32_t k;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::uint32_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      Monomial lk = basis_[k].lm();
      cands.push_back({lk.lcm(lh), k, lk.coprime(lh)});
    }
    stats_.pairs_created += cands.size();
    std::vector<Cand> kept;
    if (opts_.chain_criterion) {
      // Keep (k,h) unless another candidate's lcm properly divides it, or
      // an equal lcm appears later; coprime candidates always stay so that
      // they can shadow others before being dropped.
      for (std::size_t x = 0; x < cands.size(); ++x) {
        const auto& c = cands[x];
        bool drop = false;
        if (!c.coprime) {
          for (std::size_t y = 0; y < cands.size() && !drop; ++y) {
            if (y == x) continue;
            const auto& o = cands[y];
            if (!o.lcm.divides(c.lcm)) continue;
            if (o.lcm != c.lcm) drop = true;
            else if (y > x || o.coprime) drop = true;
          }
        }
        if (!drop) kept.push_back(c);
      }
    } else {
      kept = cands;
    }

    if (opts_.chain_criterion) {
      for (auto it = pairs_.begin(); it != pairs_.end();) {
        const Pair& p = *it;
        if (lh.divides(p.lcm) &&
            basis_[p.i].lm().lcm(lh) != p.lcm &&
            basis_[p.j].lm().lcm(lh) != p.lcm)
          it = pairs_.erase(it);
        else
          ++it;
      }
    }

    for (const auto& c : kept) {
      if (opts_.coprime_criterion && c.coprime) continue;
      std::uint64_t tie =
          opts_.tie_seed == 0 ? 0 : mix(opts_.tie_seed ^ (std::uint64_t(c.k) << 32) ^ hi);
      pairs_.insert(Pair{c.lcm, tie, c.k, hi});
    }

    for (std::uint32_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].lm())) active_[k] = false;

    reducers_.polys.clear();
    std::size_t n_active = 0;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) {
        reducers_.polys.push_back(&basis_[k]);
        ++n_active;
      }
    stats_.max_basis_size = std::max(stats_.max_basis_size, n_active);
  }

  RingPtr ring_;
  GroebnerOptions opts_;
  std::vector<IPoly> inputs_;
  // std::deque keeps addresses stable for the reducer pointers.
  std::deque<IPoly> basis_;
  std::vector<bool> active_;
  std::set<Pair> pairs_;
  Reducers reducers_;
  GroebnerStats stats_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Polynomial> normalize_generators(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (auto& p : polys)
    if (!p.is_zero()) out.push_back(p.primitive());
  std::sort(out.begin(), out.end(), Polynomial::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (!g.is_zero() && !same_ring(g.ring(), ring_))
      throw std::invalid_argument("ideal generator from a different ring");
  gens_ = normalize_generators(std::move(generators));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
  if (f.is_zero()) return f;
  std::vector<IPoly> gs;
  gs.reserve(G.size());
  for (const auto& g : G)
    if (!g.is_zero()) gs.push_back(to_ipoly(g));
  Reducers r;
  for (const auto& g : gs) r.polys.push_back(&g);
  Rational scale;
  IPoly h = to_ipoly(f, &scale);
  normal_form(h, r, false, &scale);
  return from_ipoly(h, f.ring(), scale);
}

DivisionCertificate divide_with_certificate(const Polynomial& f,
                                            const std::vector<Polynomial>& G) {
  DivisionCertificate cert;
  const RingPtr& ring = f.ring();
  for (std::size_t i = 0; i < G.size(); ++i) cert.quotients.emplace_back(ring);
  Polynomial rest = f;
  std::vector<Polynomial::Term> rem;
  while (!rest.is_zero()) {
    const auto lt = rest.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      const auto& lg = G[i].leading_term();
      if (!lg.mono.divides(lt.mono)) continue;
      Monomial m = lg.mono.quotient_of(lt.mono);
      Rational c = lt.coef / lg.coef;
      cert.quotients[i] += Polynomial::monomial(ring, m, c);
      rest -= G[i].times_term(m, c);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      rest -= Polynomial::monomial(ring, lt.mono, lt.coef);
    }
  }
  cert.remainder = Polynomial::from_terms(ring, std::move(rem));
  return cert;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = lf.mono.lcm(lg.mono);
  return f.times_term(lf.mono.quotient_of(l), 1 / lf.coef) -
         g.times_term(lg.mono.quotient_of(l), 1 / lg.coef);
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts) {
  if (ideal.generators().empty()) {
    GroebnerBasis out;
    out.ring = ideal.ring();
    return out;
  }
  return Buchberger(ideal, opts).run();
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  if (basis.empty()) return basis;
  RingPtr ring;
  std::vector<IPoly> ps;
  for (const auto& p : basis)
    if (!p.is_zero()) {
      ring = p.ring();
      ps.push_back(to_ipoly(p));
    }
  Buchberger::interreduce(ps);
  std::vector<Polynomial> out;
  for (auto& p : ps) out.push_back(from_ipoly(p, ring, Rational(p.coef.front())));
  return out;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G) {
  return reduce(f, G.basis).is_zero();
}

namespace {

bool rabinowitsch(const Polynomial& f, const std::vector<Polynomial>& gens,
                  const RingPtr& ring) {
  if (f.is_zero()) return true;
  std::string fresh = "y";
  for (int k = 1; ring->index_of(fresh) >= 0; ++k) fresh = "y" + std::to_string(k);
  auto vars = ring->variables();
  vars.push_back(fresh);
  RingPtr ext = Ring::make(vars, ring->order());
  std::vector<Polynomial> ext_gens;
  for (const auto& g : gens) ext_gens.push_back(change_ring(g, ext));
  Polynomial y = Polynomial::variable(ext, fresh);
  ext_gens.push_back(Polynomial::constant(ext, 1) - y * change_ring(f, ext));
  return buchberger(Ideal(ext, ext_gens)).is_unit();
}

}  // namespace

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  return rabinowitsch(f, ideal.generators(), ideal.ring());
}

bool radical_membership(const Polynomial& f, const GroebnerBasis& G) {
  return rabinowitsch(f, G.basis, G.ring);
}

std::size_t confluence_failures(const GroebnerBasis& G) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    for (std::size_t j = i + 1; j < G.basis.size(); ++j)
      if (!reduce(s_polynomial(G.basis[i], G.basis[j]), G.basis).is_zero())
        ++failures;
  return failures;
}

ClaimPoint parse_claim_point(const std::string& text,
                             const std::vector<std::string>& parameters) {
  ClaimPoint pt;
  pt.parameter_ring = Ring::make(parameters);
  pt.label = text;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    item = trim(item);
    if (item.empty()) continue;
    if (auto ne = item.find("!="); ne != std::string::npos) {
      pt.exclusions.push_back(item);
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected var=value in '" + item + "'");
    std::string name = trim(item.substr(0, eq));
    pt.coords[name] =
        Polynomial::parse(pt.parameter_ring, trim(item.substr(eq + 1)));
    // Normalise a zero result to carry the ring.
    if (pt.coords[name].is_zero()) pt.coords[name] = Polynomial(pt.parameter_ring);
  }
  return pt;
}

bool ZeroSetReport::all_pass() const {
  return std::all_of(points.begin(), points.end(),
                     [](const ZeroSetPointResult& r) { return r.pass; });
}

ZeroSetReport verify_zero_set(const Ideal& ideal, const ZeroSetClaim& claim) {
  ZeroSetReport report;
  for (const auto& pt : claim.points) {
    ZeroSetPointResult res;
    res.label = pt.label;
    res.pass = true;
    for (const auto& g : ideal.generators()) {
      Polynomial v = compose(g, pt.coords, pt.parameter_ring);
      if (!v.is_zero()) {
        res.pass = false;
        res.witness = g.to_string();
        res.residue = v.to_string();
        break;
      }
    }
    report.points.push_back(std::move(res));
  }
  return report;
}

}  // namespace opid

#include "opid/polylinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace opid {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.at(i, j) = at(rows[i], cols[j]);
  return s;
}

PolyMatrix PolyMatrix::substitute(const RationalPoint& point,
                                  RingPtr target) const {
  PolyMatrix s(ring_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k)
    s.e_[k] = opid::substitute(e_[k], point);
  if (target && !same_ring(target, ring_)) return s.change_ring(target);
  return s;
}

PolyMatrix PolyMatrix::change_ring(const RingPtr& target) const {
  PolyMatrix s(target, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k)
    s.e_[k] = opid::change_ring(e_[k], target);
  return s;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t PolyMatrix::count_nonzero() const {
  return static_cast<std::size_t>(std::count_if(
      e_.begin(), e_.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

std::string PolyMatrix::to_text() const {
  std::vector<std::string> cells(e_.size());
  std::vector<std::size_t> width(cols_, 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& p = at(i, j);
      cells[i * cols_ + j] = p.is_zero() ? "." : p.to_string();
      width[j] = std::max(width[j], cells[i * cols_ + j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& c = cells[i * cols_ + j];
      if (j) out += "  ";
      out += c;
      if (j + 1 < cols_) out.append(width[j] - c.size(), ' ');
    }
    out += '\n';
  }
  return out;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back(at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", rows_},
          {"cols", cols_},
          {"vars", ring_ ? ring_->variables() : std::vector<std::string>{}},
          {"entries", std::move(rows)}};
}

PolyMatrix PolyMatrix::from_json(const nlohmann::json& j, RingPtr ring) {
  PolyMatrix m(ring, j.at("rows").get<std::size_t>(),
               j.at("cols").get<std::size_t>());
  const auto& entries = j.at("entries");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t k = 0; k < m.cols_; ++k)
      m.at(i, k) = Polynomial::parse(ring, entries.at(i).at(k).get<std::string>());
  return m;
}

// ---------------------------------------------------------------------------
// Ranks over Q

namespace {

// Fast evaluation for matrices whose entries are all fully assigned.
struct Evaluator {
  const Ring& ring;
  std::vector<std::vector<Rational>> powers;  // powers[k][e]

  Evaluator(const Ring& r, const RationalPoint& point) : ring(r) {
    powers.resize(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      auto it = point.find(r.variable(k));
      if (it != point.end()) powers[k] = {Rational(1), it->second};
    }
  }

  Rational operator()(const Polynomial& p) {
    Rational sum = 0;
    for (const auto& t : p.terms()) {
      Rational term = t.coef;
      for (std::size_t k = 0; k < ring.size(); ++k) {
        unsigned e = ring.exponent(t.mono, k);
        if (e == 0) continue;
        auto& pw = powers[k];
        if (pw.empty())
          throw std::invalid_argument("no value for variable '" +
                                      ring.variable(k) + "'");
        while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
        term *= pw[e];
      }
      sum += term;
    }
    return sum;
  }
};

RationalMatrix evaluate_matrix(const PolyMatrix& M, const RationalPoint& point) {
  RationalMatrix out(M.rows(), std::vector<Rational>(M.cols()));
  if (!M.ring()) return out;
  Evaluator ev(*M.ring(), point);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) out[i][j] = ev(M.at(i, j));
  return out;
}

}  // namespace

RationalMatrix to_rational(const PolyMatrix& M) {
  return evaluate_matrix(M, {});
}

std::size_t rank(RationalMatrix M) {
  if (M.empty()) return 0;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(M[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(M[i][c]) == 0) continue;
      Rational f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(M[r][j]) != 0) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank_at(const PolyMatrix& M, const RationalPoint& point) {
  return rank(evaluate_matrix(M, point));
}

// ---------------------------------------------------------------------------
// Partial Smith form

void apply(PolyMatrix& M, const ElementaryOp& op) {
  using T = ElementaryOp::Type;
  switch (op.type) {
    case T::SwapRows:
      for (std::size_t j = 0; j < M.cols(); ++j)
        std::swap(M.at(op.target, j), M.at(op.source, j));
      break;
    case T::SwapCols:
      for (std::size_t i = 0; i < M.rows(); ++i)
        std::swap(M.at(i, op.target), M.at(i, op.source));
      break;
    case T::ScaleRow:
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M.at(op.target, j).is_zero())
          M.at(op.target, j) = M.at(op.target, j) * op.factor;
      break;
    case T::AddRow:
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M.at(op.source, j).is_zero())
          M.at(op.target, j) += op.factor * M.at(op.source, j);
      break;
    case T::AddCol:
      for (std::size_t i = 0; i < M.rows(); ++i)
        if (!M.at(i, op.source).is_zero())
          M.at(i, op.target) += op.factor * M.at(i, op.source);
      break;
  }
}

PolyMatrix PartialSmithForm::block_form(std::size_t rows,
                                        std::size_t cols) const {
  PolyMatrix out(residual.ring(), rows, cols);
  for (std::size_t t = 0; t < identity_size; ++t)
    out.at(t, t) = Polynomial::constant(residual.ring(), 1);
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j)
      out.at(identity_size + i, identity_size + j) = residual.at(i, j);
  return out;
}

PartialSmithForm partial_smith_form(const PolyMatrix& input) {
  using T = ElementaryOp::Type;
  PartialSmithForm psf;
  PolyMatrix M = input;
  const RingPtr& ring = M.ring();
  auto log = [&](ElementaryOp op) {
    apply(M, op);
    psf.ops.push_back(std::move(op));
  };
  std::size_t t = 0;
  const std::size_t n = std::min(M.rows(), M.cols());
  while (t < n) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (int pass = 0; pass < 2 && !pivot; ++pass)
      for (std::size_t i = t; i < M.rows() && !pivot; ++i)
        for (std::size_t j = t; j < M.cols(); ++j) {
          const auto& e = M.at(i, j);
          if (e.is_zero() || !e.is_constant()) continue;
          if (pass == 0 && abs(e.constant_value()) != 1) continue;
          pivot = {i, j};
          break;
        }
    if (!pivot) break;
    auto [pi, pj] = *pivot;
    if (pi != t) log({T::SwapRows, t, pi, {}});
    if (pj != t) log({T::SwapCols, t, pj, {}});
    Rational c = M.at(t, t).constant_value();
    if (c != 1) log({T::ScaleRow, t, t, Polynomial::constant(ring, 1 / c)});
    for (std::size_t i = t + 1; i < M.rows(); ++i)
      if (!M.at(i, t).is_zero()) log({T::AddRow, i, t, -M.at(i, t)});
    for (std::size_t j = t + 1; j < M.cols(); ++j)
      if (!M.at(t, j).is_zero()) log({T::AddCol, j, t, -M.at(t, j)});
    ++t;
  }
  psf.identity_size = t;
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = t; i < M.rows(); ++i) rows.push_back(i);
  for (std::size_t j = t; j < M.cols(); ++j) cols.push_back(j);
  psf.residual = M.submatrix(rows, cols);
  return psf;
}

// ---------------------------------------------------------------------------
// Minors

namespace {

struct MinorEngine {
  const PolyMatrix& M;
  // Key: row mask in the high 64 bits, column mask in the low 64 bits.
  std::unordered_map<unsigned __int128, Polynomial,
                     decltype([](unsigned __int128 k) {
                       return std::hash<std::uint64_t>()(
                           static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ull ^
                           static_cast<std::uint64_t>(k >> 64));
                     })>
      memo;

  // Laplace expansion along the first selected row; smaller minors are
  // memoised so that r-minors reuse the (r-1)-minors.
  Polynomial det(std::uint64_t rows, std::uint64_t cols) {
    int r0 = __builtin_ctzll(rows);
    std::uint64_t rest = rows & (rows - 1);
    if (!rest) return M.at(static_cast<std::size_t>(r0),
                           static_cast<std::size_t>(__builtin_ctzll(cols)));
    unsigned __int128 key = (static_cast<unsigned __int128>(rows) << 64) | cols;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Polynomial sum(M.ring());
    bool plus = true;
    for (std::uint64_t c = cols; c; c &= c - 1) {
      int j = __builtin_ctzll(c);
      const Polynomial& e =
          M.at(static_cast<std::size_t>(r0), static_cast<std::size_t>(j));
      if (!e.is_zero()) {
        Polynomial sub = det(rest, cols & ~(std::uint64_t{1} << j));
        if (!sub.is_zero()) {
          if (plus)
            sum += e * sub;
          else
            sum -= e * sub;
        }
      }
      plus = !plus;
    }
    memo.emplace(key, sum);
    return sum;
  }
};

template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  std::vector<std::size_t> idx(r);
  for (std::size_t k = 0; k < r; ++k) idx[k] = k;
  if (r > n) return;
  while (true) {
    f(idx);
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == n - r + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t m = k; m < r; ++m) idx[m] = idx[m - 1] + 1;
  }
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r) {
  if (r < 1 || r > std::min(M.rows(), M.cols()))
    throw std::out_of_range("minor size out of range");
  if (M.rows() > 64 || M.cols() > 64)
    throw std::invalid_argument("minors: at most 64 rows and columns");
  MinorEngine eng{M, {}};
  std::vector<std::uint64_t> colmasks;
  for_each_subset(M.cols(), r, [&](const auto& c) { colmasks.push_back(mask_of(c)); });
  std::vector<Polynomial> out;
  for_each_subset(M.rows(), r, [&](const auto& rows) {
    std::uint64_t rm = mask_of(rows);
    for (auto cm : colmasks) out.push_back(eng.det(rm, cm));
  });
  return out;
}

MinorCensus minor_census(const PolyMatrix& M, std::size_t r, MinorDedup dedup) {
  MinorCensus census;
  std::vector<Polynomial> all = minors(M, r);
  census.raw = all.size();
  std::vector<Polynomial> keep;
  for (auto& p : all) {
    if (p.is_zero()) continue;
    ++census.nonzero;
    unsigned d = p.total_degree();
    if (keep.empty() || d < census.min_degree) census.min_degree = d;
    if (keep.empty() || d > census.max_degree) census.max_degree = d;
    switch (dedup) {
      case MinorDedup::Exact:
        keep.push_back(std::move(p));
        break;
      case MinorDedup::UpToSign:
        keep.push_back(p.leading_term().coef < 0 ? -p : std::move(p));
        break;
      case MinorDedup::UpToScalar:
        keep.push_back(p.primitive());
        break;
    }
  }
  std::sort(keep.begin(), keep.end(), Polynomial::canonical_less);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  census.distinct = std::move(keep);
  return census;
}

Polynomial determinant(const PolyMatrix& input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const RingPtr& ring = input.ring();
  if (n == 0) return Polynomial::constant(ring, 1);
  PolyMatrix M = input;
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && M.at(piv, k).is_zero()) ++piv;
      if (piv == n) return Polynomial(ring);
      for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        Polynomial q(ring);
        if (!divides_exactly(prev, v, &q))
          throw std::logic_error("Bareiss division was not exact");
        M.at(i, j) = std::move(q);
      }
    prev = M.at(k, k);
  }
  Polynomial d = M.at(n - 1, n - 1);
  return negate ? -d : d;
}

// ---------------------------------------------------------------------------
// Univariate Smith form

UnivariateSmithForm univariate_smith_form(const PolyMatrix& input,
                                          const std::string& variable) {
  RingPtr uni = Ring::make({variable});
  PolyMatrix A = input.change_ring(uni);
  const std::size_t rows = A.rows(), cols = A.cols();
  auto weight = [](const Polynomial& p) {
    return std::pair{p.total_degree(), p.size()};
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Polynomial& f) {
    for (std::size_t j = 0; j < cols; ++j)
      if (!A.at(src, j).is_zero()) A.at(dst, j) += f * A.at(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Polynomial& f) {
    for (std::size_t i = 0; i < rows; ++i)
      if (!A.at(i, src).is_zero()) A.at(i, dst) += f * A.at(i, src);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(A.at(a, j), A.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(A.at(i, a), A.at(i, b));
  };

  UnivariateSmithForm out{variable, {}};
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!A.at(i, j).is_zero() &&
            (!best || weight(A.at(i, j)) < weight(A.at(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    while (true) {
      bool moved = false;
      for (std::size_t i = t + 1; i < rows && !moved; ++i) {
        if (A.at(i, t).is_zero()) continue;
        auto [q, r] = divide(A.at(i, t), A.at(t, t));
        row_axpy(i, t, -q);
        if (!r.is_zero()) {
          swap_rows(i, t);
          moved = true;
        }
      }
      for (std::size_t j = t + 1; j < cols && !moved; ++j) {
        if (A.at(t, j).is_zero()) continue;
        auto [q, r] = divide(A.at(t, j), A.at(t, t));
        col_axpy(j, t, -q);
        if (!r.is_zero()) {
          swap_cols(j, t);
          moved = true;
        }
      }
      if (moved) continue;
      // The pivot must divide the whole remaining block.
      for (std::size_t i = t + 1; i < rows && !moved; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!A.at(i, j).is_zero() && !divides_exactly(A.at(t, t), A.at(i, j))) {
            row_axpy(t, i, Polynomial::constant(uni, 1));
            moved = true;
            break;
          }
      if (!moved) break;
    }
    out.diagonal.push_back(A.at(t, t).monic());
  }
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<std::size_t> sup = p.support();
  if (sup.size() > 1)
    throw std::invalid_argument("rational_roots needs a univariate polynomial");
  std::vector<Rational> roots;
  if (sup.empty()) return roots;
  const Ring& ring = *p.ring();
  const std::size_t v = sup[0];
  Polynomial q = p.primitive();
  // Integer coefficients indexed by exponent, low to high.
  std::vector<Integer> c(q.degree_in(v) + 1);
  for (const auto& t : q.terms()) c[ring.exponent(t.mono, v)] = t.coef.get_num();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> d;
    for (Integer k = 1; k * k <= n; ++k)
      if (n % k == 0) {
        d.push_back(k);
        if (k * k != n) d.push_back(n / k);
      }
    return d;
  };
  auto value = [&](const Rational& x) {
    Rational s = 0;
    for (std::size_t e = c.size(); e-- > 0;) s = s * x + c[e];
    return s;
  };
  if (low + 1 < c.size())
    for (const auto& num : divisors(c[low]))
      for (const auto& den : divisors(c.back()))
        for (int sign : {1, -1}) {
          Rational x(sign * num, den);
          x.canonicalize();
          if (value(x) == 0) roots.push_back(x);
        }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

ParametricRank rank_at(const PolyMatrix& M, const RationalPoint& point,
                       const std::string& free) {
  if (M.ring()->index_of(free) < 0)
    throw std::invalid_argument("free variable '" + free + "' not in ring");
  RationalPoint fixed = point;
  fixed.erase(free);
  for (const auto& v : M.ring()->variables())
    if (v != free && !fixed.count(v))
      throw std::invalid_argument("no value for variable '" + v + "'");
  PolyMatrix S = M.substitute(fixed);
  UnivariateSmithForm smith = univariate_smith_form(S, free);
  ParametricRank out;
  out.variable = free;
  out.generic_rank = smith.diagonal.size();
  RingPtr uni = Ring::make({free});
  out.exceptional = smith.diagonal.empty() ? Polynomial::constant(uni, 1)
                                           : smith.diagonal.back();
  out.diagonal = smith.diagonal;
  if (!out.exceptional.is_constant())
    for (const auto& x : rational_roots(out.exceptional)) {
      std::size_t r = 0;
      for (const auto& d : smith.diagonal)
        if (evaluate(d, {{free, x}}) != 0) ++r;
      out.drops.emplace_back(x, r);
    }
  return out;
}

}  // namespace opid

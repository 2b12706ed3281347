#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opid/polynomial.hpp"

namespace opid {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;
  /// Entrywise substitution; the result lives in `target` (defaults to
  /// this matrix's ring).
  PolyMatrix substitute(const RationalPoint& point,
                        RingPtr target = nullptr) const;
  PolyMatrix change_ring(const RingPtr& target) const;
  bool is_zero() const;
  std::size_t count_nonzero() const;

  /// Whitespace-aligned text with "." for zero entries.
  std::string to_text() const;
  nlohmann::json to_json() const;
  static PolyMatrix from_json(const nlohmann::json& j, RingPtr ring);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> e_;
};

/// Exact rational matrix used for ranks at specialised points.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const PolyMatrix& M);
/// Rank by Gaussian elimination over Q.
std::size_t rank(RationalMatrix M);

/// One logged elementary operation. Row and column additions carry a
/// polynomial multiplier: target += factor * source.
struct ElementaryOp {
  enum class Type { SwapRows, SwapCols, ScaleRow, AddRow, AddCol };
  Type type;
  std::size_t target = 0;
  std::size_t source = 0;
  Polynomial factor;
};

void apply(PolyMatrix& M, const ElementaryOp& op);

struct PartialSmithForm {
  std::size_t identity_size = 0;
  PolyMatrix residual;
  std::vector<ElementaryOp> ops;

  /// [[I, 0], [0, residual]] at the original size.
  PolyMatrix block_form(std::size_t rows, std::size_t cols) const;
};

/// Pivots on constant entries (entries equal to +-1 first, each pass
/// scanning row-major) until none remains in the lower right block.
PartialSmithForm partial_smith_form(const PolyMatrix& M);

/// All r x r minors, row selections outer and column selections inner,
/// both in lexicographic order. Zero minors are included.
std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r);

enum class MinorDedup {
  /// Distinct as polynomials.
  Exact,
  /// p and -p count once.
  UpToSign,
  /// Equal after removing rational content and sign.
  UpToScalar,
};

struct MinorCensus {
  std::size_t raw = 0;
  std::size_t nonzero = 0;
  std::vector<Polynomial> distinct;  // canonical order, nonzero only
  unsigned min_degree = 0;
  unsigned max_degree = 0;
};

MinorCensus minor_census(const PolyMatrix& M, std::size_t r,
                         MinorDedup dedup = MinorDedup::Exact);

/// Determinant by fraction-free (Bareiss) elimination with exact division.
Polynomial determinant(const PolyMatrix& M);

/// Smith form of a matrix over Q[t] for a single variable t.
struct UnivariateSmithForm {
  std::string variable;
  /// Monic invariant factors d_1 | d_2 | ... ; zeros are not listed.
  std::vector<Polynomial> diagonal;
};
UnivariateSmithForm univariate_smith_form(const PolyMatrix& M,
                                          const std::string& variable);

/// Distinct rational roots of a univariate polynomial, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

struct ParametricRank {
  std::string variable;
  std::size_t generic_rank = 0;
  /// Invariant factors over Q[free].
  std::vector<Polynomial> diagonal;
  /// Last invariant factor; the rank drops exactly at its roots.
  Polynomial exceptional;
  /// Rational roots of `exceptional` with the rank there.
  std::vector<std::pair<Rational, std::size_t>> drops;
};

/// Rank of M after substituting `point`. Every ring variable must be
/// assigned, except `free` when given; then the rank is computed over
/// Q(free) and the exceptional values are reported.
std::size_t rank_at(const PolyMatrix& M, const RationalPoint& point);
ParametricRank rank_at(const PolyMatrix& M, const RationalPoint& point,
                       const std::string& free);

}  // namespace opid

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opid/conmatrix.hpp"
#include "opid/ideals.hpp"

namespace opid {

/// One normalisation case: the first nonzero coefficient is pinned to 1.
struct CaseSpec {
  unsigned index = 0;  // 1-based
  RationalPoint pinned;
  std::vector<std::string> free;

  std::string describe() const;
};

/// Cases for an identity with n coefficients: case k pins the first k-1
/// coefficients to 0 and the k-th to 1.
std::vector<CaseSpec> cases(const ConsequenceMatrix& C);

/// A published classification entry: a point, or a one-parameter family
/// with excluded parameter values.
struct PublishedEntry {
  std::string point;      // "a=1,b=0,c=-1"
  std::string parameter;  // empty for points
  std::vector<Rational> excluded;
  std::size_t rank = 0;
  std::string name;
  std::string identity;  // expected rendering
};

/// A published solution table of a residual ideal.
struct PublishedZeroSet {
  std::string name;
  unsigned case_index = 0;
  std::size_t minor_size = 0;  // determinantal ideal I(B, minor_size)
  std::vector<std::string> rows;  // "a=1,b=0,..." with optional "| param"
};

/// A published reduced Groebner basis of a residual ideal.
struct PublishedBasis {
  std::string name;
  unsigned case_index = 0;
  std::size_t minor_size = 0;
  std::vector<std::string> ring;
  std::vector<std::string> basis;
};

struct PublishedClassification {
  unsigned p = 0, q = 0;
  std::size_t max_rank = 0;
  std::vector<PublishedEntry> entries;
  std::vector<PublishedZeroSet> zero_sets;
  std::vector<PublishedBasis> bases;
  /// Published basis sizes reported without elements (case 1).
  std::vector<std::pair<std::size_t, std::size_t>> basis_sizes;
};

/// The published tables for (2,1) and (2,2); throws for other sizes.
const PublishedClassification& published_classification(unsigned p, unsigned q);

/// Parses a row "a=1,b=d,c=-d-1 | d" into a claim point.
ClaimPoint parse_entry_point(const std::string& row);

/// Operator identity with negative terms moved to the right-hand side.
/// Coefficients are polynomials in at most one parameter.
std::string identity_render(const ConsequenceMatrix& C,
                            const std::vector<Polynomial>& coefficients);
std::string identity_render(const ConsequenceMatrix& C, const ClaimPoint& pt);

/// Name of a known identity at this point, or empty.
std::string identity_name(unsigned p, unsigned q, const std::vector<Rational>& coeffs);

/// Coefficients scaled so that the first nonzero one is 1.
std::vector<Rational> normalize_leading(std::vector<Rational> coeffs);

/// (a,b,c,d,e,f) -> (a,d,f,b,e,c): the left/right mirror in O(2,2).
std::vector<Rational> mirror22(const std::vector<Rational>& v);

/// {-2, -1, -1/2, 0, 1/2, 1, 2}
std::vector<Rational> default_scan_grid();

struct ScanOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 200;
  /// Sample values per free variable; the full product is used when it fits
  /// the budget, otherwise a uniform subsample. Empty means random rationals
  /// num/den with |num| <= 12, 1 <= den <= 6.
  std::vector<Rational> grid = default_scan_grid();
  /// Skip (and in random mode resample) points matching a published entry.
  bool off_table_only = false;
};

struct ScanFinding {
  RationalPoint point;
  std::size_t rank = 0;
  std::string note;
};

struct ScanReport {
  unsigned case_index = 0;
  std::size_t sampled = 0;
  std::size_t on_table = 0;
  std::size_t maximal = 0;
  std::vector<ScanFinding> findings;  // unexplained low-rank or wrong rank
  std::vector<ScanFinding> table_hits;  // sampled points on a published entry
  bool pass() const { return findings.empty(); }
};

ScanReport genericity_scan(const ConsequenceMatrix& C, const CaseSpec& cs,
                           const ScanOptions& opts);

/// Index of the published entry containing the point, if any.
std::optional<std::size_t> match_entry(const PublishedClassification& pub,
                                       const RationalPoint& point);

struct IdealCheck {
  std::size_t minor_size = 0;
  std::size_t raw_minors = 0;
  std::size_t generators = 0;
  std::size_t basis_size = 0;
  std::vector<std::string> basis;
  bool recomputed = false;
  std::string published_comparison;  // empty when nothing was published
  bool pass = true;
};

struct ZeroSetCheck {
  std::string name;
  std::size_t minor_size = 0;
  ZeroSetReport report;
};

struct EntryCheck {
  PublishedEntry entry;
  std::string rendered;
  std::size_t rank = 0;
  /// For families: rank at the excluded values.
  std::vector<std::pair<Rational, std::size_t>> excluded_ranks;
  std::string exceptional;
  bool psf_route_agrees = true;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  CaseSpec spec;
  std::string method;  // "psf", "smith" or "constant"
  std::size_t identity_size = 0;
  std::size_t residual_rows = 0, residual_cols = 0;
  std::vector<std::string> smith_diagonal;
  std::vector<IdealCheck> ideals;
  std::vector<ZeroSetCheck> zero_sets;
  ScanReport scan;
  bool pass = true;
};

struct CrossCheck {
  std::string description;
  bool pass = false;
};

struct ClassifyOptions {
  ScanOptions scan;
  /// Largest determinantal ideal whose Groebner basis is recomputed.
  std::size_t max_minor_size = 4;
  double gb_timeout_seconds = 0.0;
};

struct ClassificationReport {
  unsigned p = 0, q = 0;
  std::size_t max_rank = 0;
  std::vector<CaseReport> cases;
  std::vector<EntryCheck> entries;
  std::vector<CrossCheck> cross_checks;
  bool pass() const;

  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

ClassificationReport classify(unsigned p, unsigned q,
                              const ClassifyOptions& opts = {});

/// Residual block of the partial Smith form for one case, in the ring of
/// the free variables. Transposes first when the matrix is wider than tall.
struct CaseResidual {
  PartialSmithForm psf;
  PolyMatrix residual;  // over the free variables
};
CaseResidual case_residual(const ConsequenceMatrix& C, const CaseSpec& cs);

}  // namespace opid

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opid/polynomial.hpp"

namespace opid {

/// Polynomial ideal given by generators. Generators are stored content-free
/// with a positive leading coefficient, without zeros or duplicates, sorted
/// by the ring order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Content-strip, sign-normalise, drop zeros, deduplicate and sort.
std::vector<Polynomial> normalize_generators(std::vector<Polynomial> polys);

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t generators_reduced_to_zero = 0;
  std::size_t max_basis_size = 0;
  double seconds = 0.0;
};

struct GroebnerOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;
  /// Nonzero seeds scramble the tie-breaking among S-pairs of equal lcm;
  /// the reduced basis must not depend on it.
  std::uint64_t tie_seed = 0;
  /// Wall-clock limit in seconds; 0 disables it.
  double timeout_seconds = 0.0;
  /// Optional progress callback, called after every basis update.
  std::function<void(const GroebnerStats&, std::size_t queue_size)> progress;
};

class GroebnerTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis: monic elements, sorted ascending by leading
/// monomial, no term of any element divisible by another leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;
  GroebnerStats stats;

  bool is_unit() const {
    return basis.size() == 1 && basis[0].is_constant();
  }
};

/// Normal form of f with respect to G (fully reduced remainder).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G);

struct DivisionCertificate {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};
/// Multivariate division keeping the quotients, so that
/// f = sum quotients[i] * G[i] + remainder.
DivisionCertificate divide_with_certificate(const Polynomial& f,
                                            const std::vector<Polynomial>& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the normal selection strategy, Gebauer-Moeller
/// pair management (coprime and chain criteria) and final inter-reduction.
/// Generators are fed through the same degree-ordered queue as S-pairs, so
/// each is reduced against the running basis before it joins.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Inter-reduces an arbitrary Groebner basis into the reduced one.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G);

/// True iff f lies in the radical of the ideal: 1 is in I + <1 - y f> with a
/// fresh variable y.
bool radical_membership(const Polynomial& f, const Ideal& ideal);
/// Same test starting from a known Groebner basis of the ideal.
bool radical_membership(const Polynomial& f, const GroebnerBasis& G);

/// Checks that every S-polynomial of the basis reduces to zero, without
/// using any criterion. Returns the number of failing pairs.
std::size_t confluence_failures(const GroebnerBasis& G);

/// One claimed zero of an ideal. Coordinates are polynomials in a parameter
/// ring (empty variable list for plain rational points); parameters may come
/// with excluded values that are reported, not tested.
struct ClaimPoint {
  std::map<std::string, Polynomial> coords;
  RingPtr parameter_ring;
  std::vector<std::string> exclusions;
  std::string label;
};

struct ZeroSetClaim {
  std::vector<ClaimPoint> points;
};

/// Parses a row like "a=1,b=0,c=-1,d=d,f=-d-1" over the given parameter
/// variables.
ClaimPoint parse_claim_point(const std::string& text,
                             const std::vector<std::string>& parameters = {});

struct ZeroSetPointResult {
  std::string label;
  bool pass = false;
  /// First generator that does not vanish, rendered, when failing.
  std::string witness;
  std::string residue;
};

struct ZeroSetReport {
  std::vector<ZeroSetPointResult> points;
  bool all_pass() const;
};

/// Substitutes every claimed point into every generator; symbolic
/// coordinates must give the zero polynomial identically. Variables of the
/// ideal's ring missing from a point are an error.
ZeroSetReport verify_zero_set(const Ideal& ideal, const ZeroSetClaim& claim);

}  // namespace opid

// Brute-force ground truth: class counts, box-search weights, nearest-codeword
// decoding, minimum distance and exhaustive error-class sweeps.

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/code.hpp"
#include "hurwitz/decoder.hpp"
#include "hurwitz/weight.hpp"

namespace hurwitz {

/// Hurwitz weight of q computed without shell search: every x = q - delta*pi
/// with delta a Lipschitz integer in the box [-box_radius, box_radius]^4 is
/// split into five coordinates in all ways, and the lightest is kept.
std::int64_t weight_by_box_search(const HurwitzInt& q, const HurwitzInt& pi,
                                  std::int64_t box_radius);
/// Box radius large enough for canonical q at the moduli used in practice.
std::int64_t default_box_radius(const HurwitzInt& q, const HurwitzInt& pi);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::int64_t kInfiniteDistance = std::numeric_limits<std::int64_t>::max();

/// All codewords. Vectors over the entry alphabet are filtered by syndrome
/// when there are at most `cap` of them; otherwise the encoder is used. For
/// H_pi codes each entry may also move to the other right class of its
/// left-ideal class. Throws std::length_error above `cap` codewords.
std::vector<CodeVector> enumerate_codewords(const CodeSpec& code,
                                            std::size_t cap = kDefaultEnumerationCap);

/// Distance between two vectors: sum of field weights for R_pi codes, sum of
/// right-class weights for H_pi codes.
std::int64_t vector_distance(const CodeSpec& code, const HurwitzResidueSystem& system,
                             std::span<const HurwitzInt> a, std::span<const HurwitzInt> b);

struct NearestCodewords {
  std::vector<CodeVector> codewords;  // all ties, in enumeration order
  std::int64_t distance = 0;
};

NearestCodewords brute_force_decode(const CodeSpec& code, const HurwitzResidueSystem& system,
                                    std::span<const HurwitzInt> r,
                                    std::size_t cap = kDefaultEnumerationCap);
/// Same, with a precomputed codebook.
NearestCodewords brute_force_decode(const CodeSpec& code, const HurwitzResidueSystem& system,
                                    const std::vector<CodeVector>& codebook,
                                    std::span<const HurwitzInt> r);

/// kInfiniteDistance for the zero-dimensional code.
std::int64_t min_hurwitz_distance(const CodeSpec& code, const HurwitzResidueSystem& system,
                                  std::size_t cap = kDefaultEnumerationCap);

inline const std::vector<std::string> kErrorClassLabels = {
    "single-unit",    "single-any",     "double-unit",           "double-any",
    "hz-single-unit", "hz-single-any",  "hz-double-shared-unit",
};

/// Every pattern of the named class for this code's length and field,
/// deduplicated by class. Throws std::invalid_argument on an unknown label or
/// one whose error model differs from the code's.
std::vector<ErrorPattern> enumerate_error_class(const CodeSpec& code, const std::string& label);

struct SweepOptions {
  std::uint64_t seed = 1;
  /// Run every pattern against every codeword instead of the zero codeword.
  bool all_codewords = false;
  /// Extra trials with a random codeword and a random pattern of the class.
  std::size_t random_trials = 0;
  /// Above this many jobs a seeded uniform sample of this size is used.
  std::size_t sample_cap = 1'000'000;
  bool exhaustive = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepFailure {
  CodeVector codeword;
  ErrorPattern pattern;
  std::string outcome;
};

struct SweepReport {
  std::string code;
  std::string label;
  std::size_t total = 0;
  std::size_t successes = 0;
  std::vector<SweepFailure> failures;
  std::size_t fallbacks = 0;
  std::map<std::string, std::size_t> methods;
  bool sampled = false;
  double wall_seconds = 0;  // not part of equality or record output

  friend bool operator==(const SweepReport& a, const SweepReport& b) {
    return a.code == b.code && a.label == b.label && a.total == b.total &&
           a.successes == b.successes && a.failures.size() == b.failures.size() &&
           a.fallbacks == b.fallbacks && a.methods == b.methods && a.sampled == b.sampled;
  }
};

SweepReport sweep_error_class(const CodeSpec& code, const std::string& label,
                              const SweepOptions& options = {});

struct AgreementReport {
  std::size_t total = 0;
  std::size_t agree = 0;
  /// Nearest codeword not unique: not compared.
  std::size_t ties = 0;
  std::size_t disagree = 0;
  std::vector<SweepFailure> disagreements;
};

/// Compares decode() with brute_force_decode on the same jobs a sweep with
/// these options would run.
AgreementReport oracle_agreement(const CodeSpec& code, const HurwitzResidueSystem& system,
                                 const std::string& label, const SweepOptions& options);

struct CardinalityReport {
  std::int64_t norm = 0;
  std::size_t lipschitz = 0;
  std::size_t hurwitz = 0;
  std::int64_t expected_lipschitz = 0;  // N^2
  std::int64_t expected_hurwitz = 0;    // 2 N^2
  std::int64_t stated_hurwitz = 0;      // 2 N^2 - 1
  bool lipschitz_ok() const { return static_cast<std::int64_t>(lipschitz) == expected_lipschitz; }
  bool hurwitz_ok() const { return static_cast<std::int64_t>(hurwitz) == expected_hurwitz; }
};

/// Throws std::invalid_argument for a unit or zero modulus.
CardinalityReport verify_cardinalities(const HurwitzInt& pi);

struct MetricAxiomReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t identity_violations = 0;
  std::size_t symmetry_violations = 0;
  std::size_t triangle_violations = 0;
  bool ok() const {
    return identity_violations == 0 && symmetry_violations == 0 && triangle_violations == 0;
  }
};

/// Identity and symmetry over all pairs of classes, the triangle inequality
/// over `triples` seeded random triples.
MetricAxiomReport check_metric_axioms(const HurwitzResidueSystem& system, std::size_t triples,
                                      std::uint64_t seed);

/// Deterministic per-index generator stream.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace hurwitz

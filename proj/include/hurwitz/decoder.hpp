// Syndrome decoders for the R_pi and H_pi codes, with an exhaustive matcher
// over each code's claimed error class as fallback (R_pi) or authority (H_pi).

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/code.hpp"

namespace hurwitz {

struct NoError {};

/// Intermediate values of the algebraic decoders, when they were computed.
struct DecodeTrace {
  std::optional<EisensteinInt> t0;
  std::optional<EisensteinInt> t1;
  std::optional<EisensteinInt> epsilon;
  /// Sum and product of beta^{6 l1}, beta^{6 l2} (four-row decoder).
  std::optional<EisensteinInt> x;
  std::optional<EisensteinInt> product;
  std::vector<EisensteinInt> roots;
  /// Unit stripped by the unit-factoring path; side 0 = left, 1 = right.
  std::optional<LipschitzUnit> unit;
  std::optional<int> side;
  /// Whether the unit-factoring candidate matched the exhaustive matcher;
  /// empty when factoring produced no candidate.
  std::optional<bool> fast_path_agrees;
};

struct Corrected {
  CodeVector codeword;
  ErrorPattern errors;
  /// "formula", "formula-single", "unit-factoring" or "exhaustive-fallback".
  std::string method;
  DecodeTrace trace;
};

struct Failure {
  /// "inconsistent", "degenerate", "no match", "ambiguous" or "out of class".
  std::string reason;
  std::string detail;
};

using DecodeResult = std::variant<NoError, Corrected, Failure>;

/// Locator coefficients of the three-row decoder.
struct LocatorCoefficients {
  EisensteinInt t0;
  EisensteinInt t1;
};
LocatorCoefficients locator_coefficients(const ResidueField& f, const EisensteinInt& s1,
                                         const EisensteinInt& s7, const EisensteinInt& s13);

/// Every minimal-size explanation of a syndrome inside the code's claimed
/// error class, in tie-break order (smallest locations, then the class's
/// fixed value order).
std::vector<ErrorPattern> match_claimed_class(const CodeSpec& code, const Syndrome& s);

DecodeResult decode_single_unit(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_single_any(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_double_unit(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_double_any(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_hz_single_unit(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_hz_single_any(const CodeSpec& code, std::span<const HurwitzInt> r);
DecodeResult decode_hz_double(const CodeSpec& code, std::span<const HurwitzInt> r);

/// Runs the decoder matching the code's rows and error model.
DecodeResult decode(const CodeSpec& code, std::span<const HurwitzInt> r);

/// One-line description such as "corrected [formula] (3, 2)".
std::string summarize(const DecodeResult& result);

}  // namespace hurwitz

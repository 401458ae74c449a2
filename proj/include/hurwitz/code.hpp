// Codes over R_pi and the Hurwitz residue system defined by parity checks
// with rows (beta^{e*j}), e in {1, 7, 13, 19}.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hurwitz/eisenstein.hpp"
#include "hurwitz/quaternion.hpp"
#include "hurwitz/residue.hpp"

namespace hurwitz {

enum class ErrorModel {
  kResidueField,  // "R_pi": entries and errors in R_pi
  kHurwitz,       // "H_pi": received entries and errors in the Hurwitz residue system
};

std::string to_string(ErrorModel m);
std::optional<ErrorModel> parse_error_model(std::string_view text);

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CodeVector = std::vector<HurwitzInt>;

struct ErrorEntry {
  std::int64_t location = 0;
  HurwitzInt value;

  friend bool operator==(const ErrorEntry&, const ErrorEntry&) = default;
};

/// Errors with strictly increasing locations.
using ErrorPattern = std::vector<ErrorEntry>;

struct Syndrome {
  std::vector<int> exponents;
  /// Canonical under the code's syndrome congruence: field representatives for
  /// R_pi codes, left-ideal representatives for H_pi codes.
  std::vector<HurwitzInt> values;

  bool is_zero() const;
  const HurwitzInt& at(int exponent) const;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

struct SyndromeKeyHash {
  std::size_t operator()(const std::vector<HurwitzInt>& v) const noexcept;
};

class CodeSpec;

/// The error patterns a code's decoder claims to correct, indexed by the
/// syndrome each single error produces. Pairs are matched by looking up the
/// residual syndrome after removing one single.
class ClaimedErrorClass {
 public:
  struct Single {
    std::int64_t location = 0;
    HurwitzInt value;
    /// Bit (side * 8 + unit index) is set when value = mu*q (side 0) or
    /// q*mu (side 1) for the class's admissible q. Unused for R_pi classes.
    std::uint32_t unit_tags = 0;
    std::vector<HurwitzInt> syndrome;
  };

  const std::string& label() const { return label_; }
  std::span<const Single> singles() const { return singles_; }
  bool allows_pairs() const { return allows_pairs_; }
  bool pair_allowed(const Single& first, const Single& second) const;
  /// Indices of singles whose syndrome equals `key`.
  std::span<const std::size_t> lookup(const std::vector<HurwitzInt>& key) const;

 private:
  friend CodeSpec build_code(std::shared_ptr<const ResidueField>, std::vector<int>, ErrorModel);

  std::string label_;
  std::vector<Single> singles_;
  bool allows_pairs_ = false;
  bool require_shared_unit_ = false;
  std::unordered_map<std::vector<HurwitzInt>, std::vector<std::size_t>, SyndromeKeyHash> index_;
};

/// Immutable after build_code.
class CodeSpec {
 public:
  const ResidueField& field() const { return *field_; }
  const std::shared_ptr<const ResidueField>& field_ptr() const { return field_; }
  std::int64_t n() const { return field_->n(); }
  /// Message length n - |rows|.
  std::int64_t k() const { return n() - static_cast<std::int64_t>(rows_.size()); }
  std::span<const int> rows() const { return rows_; }
  ErrorModel error_model() const { return model_; }
  /// beta^{rows[row] * col}.
  const EisensteinInt& matrix_entry(std::size_t row, std::size_t col) const {
    return matrix_[row][col];
  }
  const ClaimedErrorClass& claimed_class() const { return *claimed_; }

  /// For example "p=31 n=5 rows=[1,7] R_pi".
  std::string describe() const;

 private:
  friend CodeSpec build_code(std::shared_ptr<const ResidueField>, std::vector<int>, ErrorModel);
  friend CodeVector encode(const CodeSpec&, std::span<const EisensteinInt>);

  std::shared_ptr<const ResidueField> field_;
  std::vector<int> rows_;
  ErrorModel model_ = ErrorModel::kResidueField;
  std::vector<std::vector<EisensteinInt>> matrix_;
  std::vector<std::vector<EisensteinInt>> parity_inverse_;
  std::shared_ptr<const ClaimedErrorClass> claimed_;
};

/// rows must be one of [1], [1,7], [1,7,13], [1,7,13,19] and no longer than n.
/// Throws CodeError otherwise, or when the parity submatrix on the last |rows|
/// positions is singular.
CodeSpec build_code(std::shared_ptr<const ResidueField> field, std::vector<int> rows,
                    ErrorModel model);

/// Canonical class representative of a code entry. For R_pi codes the entry
/// must lie in Z[w] (CodeError otherwise).
HurwitzInt canonical_entry(const CodeSpec& code, const HurwitzInt& x);
CodeVector canonicalize(const CodeSpec& code, std::span<const HurwitzInt> v);
bool same_codeword(const CodeSpec& code, std::span<const HurwitzInt> a,
                   std::span<const HurwitzInt> b);

/// Reduces a syndrome component to its canonical form for this code.
HurwitzInt reduce_syndrome_value(const CodeSpec& code, const HurwitzInt& x);

/// s_e = sum_j r_j * beta^{e*j}, received entry on the left.
Syndrome syndrome(const CodeSpec& code, std::span<const HurwitzInt> r);
Syndrome error_syndrome(const CodeSpec& code, const ErrorPattern& e);

/// Systematic encoding: message in the first k positions, parity in the last
/// |rows| positions. Throws CodeError on a length mismatch.
CodeVector encode(const CodeSpec& code, std::span<const EisensteinInt> message);

/// c + e and r - e, entrywise canonical.
CodeVector add_errors(const CodeSpec& code, std::span<const HurwitzInt> c, const ErrorPattern& e);
CodeVector subtract_errors(const CodeSpec& code, std::span<const HurwitzInt> r,
                           const ErrorPattern& e);

}  // namespace hurwitz

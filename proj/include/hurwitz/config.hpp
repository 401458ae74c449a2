// Run configuration: a plain key = value file, one key per line, '#' comments.
//
//   pi = (1, 2, 2, 2)          # four coordinates, an (a, b) pair, or an expression
//   beta = (-1, 2)             # same formats
//   rows = [1, 7]
//   error_model = R_pi         # or H_pi
//   seed = 7
//   trials = 1000
//   caps = sweep=1000000, brute=1000000, batch=100
//   format = table             # or records

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/code.hpp"

namespace hurwitz {

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

enum class OutputFormat { kTable, kRecords };

struct Caps {
  std::size_t sweep = 1'000'000;
  std::size_t brute = 1'000'000;
  std::size_t batch = 100;
};

struct RunConfig {
  EisensteinInt pi;
  EisensteinInt beta;
  std::vector<int> rows;
  ErrorModel error_model = ErrorModel::kResidueField;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  Caps caps;
  OutputFormat format = OutputFormat::kTable;
  /// Line of each key, for errors raised after parsing.
  std::map<std::string, int> lines;
  /// Keys outside the schema, kept only when parsing fixtures.
  std::map<std::string, std::string> extras;
};

/// Throws ConfigError naming the line and field. pi, beta, rows and
/// error_model are required. With `allow_extra_keys` unknown keys are kept in
/// `extras` instead of rejected.
RunConfig parse_config(std::string_view text, bool allow_extra_keys = false);
RunConfig load_config(const std::string& path, bool allow_extra_keys = false);

struct BuiltCode {
  std::shared_ptr<const ResidueField> field;
  CodeSpec code;
};

/// Builds the field and code, mapping failures to ConfigError on the
/// responsible key.
BuiltCode build_from_config(const RunConfig& config);

std::string to_string(OutputFormat f);

}  // namespace hurwitz

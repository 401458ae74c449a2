#include "hurwitz/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hurwitz/notation.hpp"

namespace hurwitz {

namespace {

const std::set<std::string> kKeys = {"pi",   "beta",   "rows", "error_model",
                                     "seed", "trials", "caps", "format"};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::uint64_t parse_unsigned(const std::string& text, int line, const std::string& field) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      })) {
    throw ConfigError(line, field, "expected a nonnegative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ConfigError(line, field, "value '" + text + "' is too large");
  }
}

std::vector<int> parse_rows(std::string text, int line) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ConfigError(line, "rows", "unbalanced '['");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    rows.push_back(static_cast<int>(parse_unsigned(trim(item), line, "rows")));
  }
  if (rows.empty()) throw ConfigError(line, "rows", "empty row list");
  return rows;
}

Caps parse_caps(const std::string& text, int line) {
  Caps caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "caps", "expected name=value in '" + trim(item) + "'");
    const auto name = trim(item.substr(0, eq));
    const auto value = parse_unsigned(trim(item.substr(eq + 1)), line, "caps");
    if (value == 0) throw ConfigError(line, "caps", name + " must be positive");
    if (name == "sweep") {
      caps.sweep = value;
    } else if (name == "brute") {
      caps.brute = value;
    } else if (name == "batch") {
      caps.batch = value;
    } else {
      throw ConfigError(line, "caps", "unknown cap '" + name + "'");
    }
  }
  return caps;
}

EisensteinInt parse_ring_element(const std::string& text, int line, const std::string& field) {
  try {
    return parse_eisenstein(text, nullptr);
  } catch (const NotationError& e) {
    throw ConfigError(line, field, e.what());
  }
}

}  // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::invalid_argument("config line " + std::to_string(line) + ", field '" + field +
                            "': " + message),
      line_(line),
      field_(std::move(field)) {}

std::string to_string(OutputFormat f) { return f == OutputFormat::kTable ? "table" : "records"; }

RunConfig parse_config(std::string_view text, bool allow_extra_keys) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "", "expected 'key = value'");
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "", "missing key");
    if (cfg.lines.contains(key)) throw ConfigError(line, key, "duplicate key");
    cfg.lines[key] = line;
    if (!kKeys.contains(key)) {
      if (!allow_extra_keys) throw ConfigError(line, key, "unknown key");
      cfg.extras[key] = value;
      continue;
    }
    if (value.empty()) throw ConfigError(line, key, "missing value");
    if (key == "pi") {
      cfg.pi = parse_ring_element(value, line, key);
    } else if (key == "beta") {
      cfg.beta = parse_ring_element(value, line, key);
    } else if (key == "rows") {
      cfg.rows = parse_rows(value, line);
    } else if (key == "error_model") {
      const auto m = parse_error_model(value);
      if (!m) throw ConfigError(line, key, "expected R_pi or H_pi, got '" + value + "'");
      cfg.error_model = *m;
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value, line, key);
    } else if (key == "trials") {
      cfg.trials = parse_unsigned(value, line, key);
    } else if (key == "caps") {
      cfg.caps = parse_caps(value, line);
    } else if (key == "format") {
      if (value == "table") {
        cfg.format = OutputFormat::kTable;
      } else if (value == "records") {
        cfg.format = OutputFormat::kRecords;
      } else {
        throw ConfigError(line, key, "expected table or records, got '" + value + "'");
      }
    }
  }
  for (const auto* required : {"pi", "beta", "rows", "error_model"}) {
    if (!cfg.lines.contains(required)) throw ConfigError(line, required, "missing required key");
  }
  return cfg;
}

RunConfig load_config(const std::string& path, bool allow_extra_keys) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), allow_extra_keys);
}

BuiltCode build_from_config(const RunConfig& config) {
  const auto line = [&](const std::string& key) {
    const auto it = config.lines.find(key);
    return it == config.lines.end() ? 0 : it->second;
  };
  std::shared_ptr<const ResidueField> field;
  try {
    field = std::make_shared<const ResidueField>(ResidueField::build(config.pi, config.beta));
  } catch (const FieldError& e) {
    const bool about_pi = e.kind() == FieldError::Kind::kNormNotPrime ||
                          e.kind() == FieldError::Kind::kNormNotOneModSix;
    const std::string key = about_pi ? "pi" : "beta";
    throw ConfigError(line(key), key, e.what());
  }
  try {
    auto code = build_code(field, config.rows, config.error_model);
    return {field, std::move(code)};
  } catch (const CodeError& e) {
    throw ConfigError(line("rows"), "rows", e.what());
  }
}

}  // namespace hurwitz

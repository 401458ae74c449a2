#include "hurwitz/code.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hurwitz {

namespace {

const std::vector<std::vector<int>> kValidRows = {{1}, {1, 7}, {1, 7, 13}, {1, 7, 13, 19}};

std::vector<std::vector<EisensteinInt>> invert(const ResidueField& f,
                                               std::vector<std::vector<EisensteinInt>> a) {
  const auto m = a.size();
  std::vector<std::vector<EisensteinInt>> inv(m, std::vector<EisensteinInt>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = f.from_int(1);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && f.is_zero(a[pivot][col])) ++pivot;
    if (pivot == m) throw CodeError("parity submatrix on the last positions is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const auto scale = f.inv(a[col][col]);
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] = f.mul(a[col][j], scale);
      inv[col][j] = f.mul(inv[col][j], scale);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || f.is_zero(a[i][col])) continue;
      const auto factor = a[i][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[col][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

// Weight-1 five-coordinate vectors: +-1, +-e1, +-e2, +-e3, +-w.
std::vector<HurwitzInt> weight_one_elements() {
  std::vector<HurwitzInt> out;
  for (const auto& base : {HurwitzInt::one(), HurwitzInt::e1(), HurwitzInt::e2(),
                           HurwitzInt::e3(), HurwitzInt::w()}) {
    out.push_back(base);
    out.push_back(-base);
  }
  return out;
}

struct ValueCandidate {
  HurwitzInt value;
  std::uint32_t tags = 0;
};

std::vector<EisensteinInt> six_units(const ResidueField& f) {
  std::vector<EisensteinInt> out;
  for (int t = 0; t < 6; ++t) out.push_back(f.beta_power(t * f.n()));
  return out;
}

std::vector<EisensteinInt> nonzero_elements(const ResidueField& f) {
  std::vector<EisensteinInt> out;
  for (const auto& e : f.elements()) {
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

// Values mu*q (side 0) and q*mu (side 1) for q in `base`.
std::vector<ValueCandidate> unit_products(const std::vector<EisensteinInt>& base, bool both_sides) {
  std::vector<ValueCandidate> out;
  for (const auto& q : base) {
    const auto qh = q.to_hurwitz();
    for (auto u : kLipschitzUnits) {
      const auto mu = to_hurwitz(u);
      out.push_back({mu * qh, 1u << unit_index(u)});
      if (both_sides) out.push_back({qh * mu, 1u << (8 + unit_index(u))});
    }
  }
  return out;
}

std::vector<ValueCandidate> class_values(const ResidueField& f, std::size_t num_rows,
                                         ErrorModel model, std::string& label, bool& pairs,
                                         bool& shared) {
  std::vector<ValueCandidate> values;
  pairs = num_rows >= 3;
  shared = false;
  if (model == ErrorModel::kResidueField) {
    switch (num_rows) {
      case 1:
        label = "single-unit";
        for (const auto& u : six_units(f)) values.push_back({u.to_hurwitz(), 0});
        break;
      case 2:
        label = "single-any";
        for (const auto& e : nonzero_elements(f)) values.push_back({e.to_hurwitz(), 0});
        break;
      case 3: {
        label = "double-unit";
        const auto piq = f.modulus().quaternion();
        std::vector<HurwitzInt> light;
        for (const auto& u : weight_one_elements()) light.push_back(canonical_ideal_class(u, piq));
        for (const auto& e : nonzero_elements(f)) {
          const auto k = canonical_ideal_class(e.to_hurwitz(), piq);
          if (std::find(light.begin(), light.end(), k) != light.end()) {
            values.push_back({e.to_hurwitz(), 0});
          }
        }
        break;
      }
      default:
        label = "double-any";
        for (const auto& e : nonzero_elements(f)) values.push_back({e.to_hurwitz(), 0});
        break;
    }
    return values;
  }
  switch (num_rows) {
    case 1: {
      label = "hz-single-unit";
      const std::vector<EisensteinInt> w_powers = {{1, 0}, {0, 1}, {-1, 1}};
      for (const auto& mu1 : kLipschitzUnits) {
        for (const auto& t : w_powers) {
          for (const auto& mu2 : kLipschitzUnits) {
            values.push_back({to_hurwitz(mu1) * t.to_hurwitz() * to_hurwitz(mu2), 0});
          }
        }
      }
      break;
    }
    case 2:
      label = "hz-single-any";
      values = unit_products(nonzero_elements(f), true);
      for (auto& v : values) v.tags = 0;
      break;
    case 3:
      label = "hz-double-shared-unit";
      shared = true;
      values = unit_products(six_units(f), true);
      break;
    default:
      label = "hz-double-shared-unit";
      shared = true;
      values = unit_products(nonzero_elements(f), true);
      break;
  }
  return values;
}

}  // namespace

std::string to_string(ErrorModel m) {
  return m == ErrorModel::kResidueField ? "R_pi" : "H_pi";
}

std::optional<ErrorModel> parse_error_model(std::string_view text) {
  if (text == "R_pi") return ErrorModel::kResidueField;
  if (text == "H_pi") return ErrorModel::kHurwitz;
  return std::nullopt;
}

bool Syndrome::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.is_zero(); });
}

const HurwitzInt& Syndrome::at(int exponent) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == exponent) return values[i];
  }
  throw std::out_of_range("syndrome has no row with exponent " + std::to_string(exponent));
}

std::size_t SyndromeKeyHash::operator()(const std::vector<HurwitzInt>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  HurwitzIntHash inner;
  for (const auto& q : v) h ^= inner(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool ClaimedErrorClass::pair_allowed(const Single& first, const Single& second) const {
  if (!allows_pairs_ || first.location >= second.location) return false;
  return !require_shared_unit_ || (first.unit_tags & second.unit_tags) != 0;
}

std::span<const std::size_t> ClaimedErrorClass::lookup(const std::vector<HurwitzInt>& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return {};
  return it->second;
}

std::string CodeSpec::describe() const {
  std::ostringstream os;
  os << "p=" << field_->p() << " n=" << n() << " rows=[";
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << "] " << to_string(model_);
  return os.str();
}

CodeSpec build_code(std::shared_ptr<const ResidueField> field, std::vector<int> rows,
                    ErrorModel model) {
  if (!field) throw CodeError("build_code: missing field");
  if (std::find(kValidRows.begin(), kValidRows.end(), rows) == kValidRows.end()) {
    std::string text;
    for (auto r : rows) text += (text.empty() ? "" : ",") + std::to_string(r);
    throw CodeError("invalid row set [" + text + "]; expected a prefix of [1,7,13,19]");
  }
  const auto n = field->n();
  if (static_cast<std::int64_t>(rows.size()) > n) {
    throw CodeError("code length " + std::to_string(n) + " is shorter than the " +
                    std::to_string(rows.size()) + " parity rows");
  }

  CodeSpec code;
  code.field_ = field;
  code.rows_ = std::move(rows);
  code.model_ = model;
  const auto& f = *field;
  for (auto e : code.rows_) {
    std::vector<EisensteinInt> row;
    for (std::int64_t j = 0; j < n; ++j) row.push_back(f.beta_power(e * j));
    code.matrix_.push_back(std::move(row));
  }
  const auto m = code.rows_.size();
  const auto k = static_cast<std::size_t>(code.k());
  std::vector<std::vector<EisensteinInt>> parity(m, std::vector<EisensteinInt>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < m; ++t) parity[i][t] = code.matrix_[i][k + t];
  }
  code.parity_inverse_ = invert(f, std::move(parity));

  auto claimed = std::make_shared<ClaimedErrorClass>();
  const auto values =
      class_values(f, m, model, claimed->label_, claimed->allows_pairs_, claimed->require_shared_unit_);
  // Merge literal values that fall in the same class; keep the first literal.
  std::map<HurwitzInt, ValueCandidate> by_class;
  for (const auto& v : values) {
    const auto key = canonical_entry(code, v.value);
    auto [it, fresh] = by_class.try_emplace(key, v);
    if (!fresh) it->second.tags |= v.tags;
  }
  for (std::int64_t loc = 0; loc < n; ++loc) {
    for (const auto& [key, v] : by_class) {
      ClaimedErrorClass::Single s;
      s.location = loc;
      s.value = v.value;
      s.unit_tags = v.tags;
      s.syndrome = error_syndrome(code, {{loc, v.value}}).values;
      claimed->index_[s.syndrome].push_back(claimed->singles_.size());
      claimed->singles_.push_back(std::move(s));
    }
  }
  code.claimed_ = std::move(claimed);
  return code;
}

HurwitzInt canonical_entry(const CodeSpec& code, const HurwitzInt& x) {
  const auto& f = code.field();
  if (code.error_model() == ErrorModel::kResidueField) {
    const auto e = EisensteinInt::from_hurwitz(x);
    if (!e) throw CodeError("entry " + x.to_string() + " is not in Z[w]");
    return f.reduce(*e).to_hurwitz();
  }
  // Prefer the field representative when it lies in the same right class.
  const auto piq = f.modulus().quaternion();
  if (const auto e = f.from_hurwitz(x)) {
    const auto rep = e->to_hurwitz();
    if (right_congruent(x, rep, piq)) return rep;
  }
  return canonical_right_class(x, piq);
}

CodeVector canonicalize(const CodeSpec& code, std::span<const HurwitzInt> v) {
  CodeVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(canonical_entry(code, x));
  return out;
}

bool same_codeword(const CodeSpec& code, std::span<const HurwitzInt> a,
                   std::span<const HurwitzInt> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (canonical_entry(code, a[i]) != canonical_entry(code, b[i])) return false;
  }
  return true;
}

HurwitzInt reduce_syndrome_value(const CodeSpec& code, const HurwitzInt& x) {
  if (code.error_model() == ErrorModel::kResidueField) {
    const auto e = EisensteinInt::from_hurwitz(x);
    if (!e) throw CodeError("syndrome value " + x.to_string() + " is not in Z[w]");
    return code.field().reduce(*e).to_hurwitz();
  }
  return canonical_ideal_class(x, code.field().modulus().quaternion());
}

Syndrome syndrome(const CodeSpec& code, std::span<const HurwitzInt> r) {
  if (static_cast<std::int64_t>(r.size()) != code.n()) {
    throw CodeError("received vector has length " + std::to_string(r.size()) + ", expected " +
                    std::to_string(code.n()));
  }
  const auto& f = code.field();
  Syndrome s;
  s.exponents.assign(code.rows().begin(), code.rows().end());
  for (std::size_t row = 0; row < s.exponents.size(); ++row) {
    if (code.error_model() == ErrorModel::kResidueField) {
      EisensteinInt acc;
      for (std::size_t j = 0; j < r.size(); ++j) {
        const auto e = EisensteinInt::from_hurwitz(r[j]);
        if (!e) throw CodeError("entry " + r[j].to_string() + " is not in Z[w]");
        acc = f.add(acc, f.mul(*e, code.matrix_entry(row, j)));
      }
      s.values.push_back(acc.to_hurwitz());
    } else {
      const auto piq = f.modulus().quaternion();
      HurwitzInt acc;
      for (std::size_t j = 0; j < r.size(); ++j) {
        const auto x = canonical_right_class(r[j], piq);
        acc = canonical_ideal_class(acc + x * code.matrix_entry(row, j).to_hurwitz(), piq);
      }
      s.values.push_back(acc);
    }
  }
  return s;
}

Syndrome error_syndrome(const CodeSpec& code, const ErrorPattern& e) {
  CodeVector v(static_cast<std::size_t>(code.n()));
  for (const auto& [loc, value] : e) {
    if (loc < 0 || loc >= code.n()) {
      throw CodeError("error location " + std::to_string(loc) + " out of range");
    }
    v[static_cast<std::size_t>(loc)] += value;
  }
  return syndrome(code, v);
}

CodeVector encode(const CodeSpec& code, std::span<const EisensteinInt> message) {
  if (static_cast<std::int64_t>(message.size()) != code.k()) {
    throw CodeError("message has length " + std::to_string(message.size()) + ", expected " +
                    std::to_string(code.k()));
  }
  const auto& f = code.field();
  const auto m = code.rows_.size();
  const auto k = message.size();
  std::vector<EisensteinInt> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    EisensteinInt acc;
    for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(message[j], code.matrix_[i][j]));
    rhs[i] = f.neg(acc);
  }
  CodeVector c;
  c.reserve(k + m);
  for (const auto& x : message) c.push_back(f.reduce(x).to_hurwitz());
  for (std::size_t t = 0; t < m; ++t) {
    EisensteinInt acc;
    for (std::size_t i = 0; i < m; ++i) acc = f.add(acc, f.mul(code.parity_inverse_[t][i], rhs[i]));
    c.push_back(acc.to_hurwitz());
  }
  return canonicalize(code, c);
}

CodeVector add_errors(const CodeSpec& code, std::span<const HurwitzInt> c, const ErrorPattern& e) {
  CodeVector out(c.begin(), c.end());
  for (const auto& [loc, value] : e) {
    if (loc < 0 || loc >= static_cast<std::int64_t>(out.size())) {
      throw CodeError("error location " + std::to_string(loc) + " out of range");
    }
    out[static_cast<std::size_t>(loc)] += value;
  }
  return canonicalize(code, out);
}

CodeVector subtract_errors(const CodeSpec& code, std::span<const HurwitzInt> r,
                           const ErrorPattern& e) {
  ErrorPattern neg = e;
  for (auto& entry : neg) entry.value = -entry.value;
  return add_errors(code, r, neg);
}

}  // namespace hurwitz

#include "hurwitz/decoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

using FieldPattern = std::vector<std::pair<std::int64_t, EisensteinInt>>;

struct Formula {
  std::optional<FieldPattern> pattern;
  std::string failure;  // set when pattern is empty
  std::string method = "formula";
  DecodeTrace trace;
};

Formula fail(std::string reason, DecodeTrace trace = {}) {
  Formula f;
  f.failure = std::move(reason);
  f.trace = std::move(trace);
  return f;
}

void require(const CodeSpec& code, std::size_t rows, ErrorModel model, const char* name) {
  if (code.rows().size() != rows || code.error_model() != model) {
    throw std::invalid_argument(std::string(name) + " does not apply to the code " + code.describe());
  }
}

EisensteinInt as_field(const CodeSpec& code, const HurwitzInt& x) {
  const auto e = EisensteinInt::from_hurwitz(x);
  if (!e) throw std::logic_error("R_pi syndrome outside Z[w]");
  return code.field().reduce(*e);
}

std::vector<EisensteinInt> field_syndromes(const CodeSpec& code, const Syndrome& s) {
  std::vector<EisensteinInt> out;
  for (const auto& v : s.values) out.push_back(as_field(code, v));
  return out;
}

// Roots of z^2 - a z + b among the nonzero field elements, as logarithms.
std::vector<std::int64_t> quadratic_roots(const ResidueField& f, const EisensteinInt& a,
                                          const EisensteinInt& b) {
  std::vector<std::int64_t> roots;
  for (std::int64_t L = 0; L < f.p() - 1; ++L) {
    const auto z = f.beta_power(L);
    const auto v = f.add(f.sub(f.mul(z, z), f.mul(a, z)), b);
    if (f.is_zero(v)) roots.push_back(L);
  }
  return roots;
}

Formula theorem3(const ResidueField& f, const EisensteinInt& s1) {
  if (f.is_zero(s1)) return fail("degenerate");
  const auto L = f.dlog(s1);
  const auto l = L % f.n();
  Formula out;
  out.pattern = FieldPattern{{l, f.beta_power(L - l)}};
  return out;
}

Formula theorem4(const ResidueField& f, const EisensteinInt& s1, const EisensteinInt& s7) {
  if (f.is_zero(s1) || f.is_zero(s7)) return fail("inconsistent");
  const auto L = f.dlog(f.div(s7, s1));
  if (L % 6 != 0) return fail("inconsistent");
  const auto l = L / 6;
  Formula out;
  out.pattern = FieldPattern{{l, f.mul(s1, f.beta_power(-l))}};
  return out;
}

Formula theorem5(const ResidueField& f, const EisensteinInt& s1, const EisensteinInt& s7,
                 const EisensteinInt& s13) {
  if (f.pow(s1, 7) == s7 && f.pow(s1, 13) == s13) {
    auto single = theorem3(f, s1);
    single.method = "formula-single";
    return single;
  }
  if (f.is_zero(s1)) return fail("degenerate");
  DecodeTrace trace;
  const auto [t0, t1] = locator_coefficients(f, s1, s7, s13);
  trace.t0 = t0;
  trace.t1 = t1;
  if (f.is_zero(t1)) return fail("degenerate", trace);
  const auto eps = f.neg(f.div(t0, t1));
  trace.epsilon = eps;
  const auto roots = quadratic_roots(f, s1, eps);
  for (auto L : roots) trace.roots.push_back(f.beta_power(L));
  if (roots.size() != 2) return fail("degenerate", trace);
  FieldPattern p;
  for (auto L : roots) p.emplace_back(L % f.n(), f.beta_power(L - L % f.n()));
  if (p[0].first == p[1].first) return fail("degenerate", trace);
  std::sort(p.begin(), p.end());
  Formula out;
  out.pattern = std::move(p);
  out.trace = std::move(trace);
  return out;
}

Formula theorem6(const ResidueField& f, const EisensteinInt& s1, const EisensteinInt& s7,
                 const EisensteinInt& s13, const EisensteinInt& s19) {
  const auto d = f.sub(f.mul(s1, s13), f.mul(s7, s7));
  if (f.is_zero(d)) {
    auto single = theorem4(f, s1, s7);
    single.method = "formula-single";
    if (!single.pattern) single.failure = "degenerate";
    return single;
  }
  DecodeTrace trace;
  const auto x = f.div(f.sub(f.mul(s1, s19), f.mul(s7, s13)), d);
  const auto prod = f.div(f.sub(f.mul(s7, s19), f.mul(s13, s13)), d);
  trace.x = x;
  trace.product = prod;
  const auto roots = quadratic_roots(f, x, prod);
  for (auto L : roots) trace.roots.push_back(f.beta_power(L));
  if (roots.size() != 2 || roots[0] % 6 != 0 || roots[1] % 6 != 0) return fail("degenerate", trace);
  const auto l1 = roots[0] / 6;
  const auto l2 = roots[1] / 6;
  // e1 b^{l1} + e2 b^{l2} = s1, e1 b^{7 l1} + e2 b^{7 l2} = s7.
  const auto a11 = f.beta_power(l1), a12 = f.beta_power(l2);
  const auto a21 = f.beta_power(7 * l1), a22 = f.beta_power(7 * l2);
  const auto det = f.sub(f.mul(a11, a22), f.mul(a12, a21));
  if (f.is_zero(det)) return fail("degenerate", trace);
  const auto e1 = f.div(f.sub(f.mul(s1, a22), f.mul(a12, s7)), det);
  const auto e2 = f.div(f.sub(f.mul(a11, s7), f.mul(a21, s1)), det);
  if (f.is_zero(e1) || f.is_zero(e2)) return fail("degenerate", trace);
  FieldPattern p{{l1, e1}, {l2, e2}};
  std::sort(p.begin(), p.end());
  Formula out;
  out.pattern = std::move(p);
  out.trace = std::move(trace);
  return out;
}

Formula run_formula(const CodeSpec& code, const std::vector<EisensteinInt>& s) {
  const auto& f = code.field();
  switch (s.size()) {
    case 1:
      return theorem3(f, s[0]);
    case 2:
      return theorem4(f, s[0], s[1]);
    case 3:
      return theorem5(f, s[0], s[1], s[2]);
    default:
      return theorem6(f, s[0], s[1], s[2], s[3]);
  }
}

ErrorPattern to_pattern(const FieldPattern& p) {
  ErrorPattern out;
  for (const auto& [l, v] : p) out.push_back({l, v.to_hurwitz()});
  return out;
}

bool explains(const CodeSpec& code, const ErrorPattern& e, const Syndrome& s) {
  for (const auto& entry : e) {
    if (canonical_entry(code, entry.value).is_zero()) return false;
  }
  return error_syndrome(code, e) == s;
}

std::string describe(const ErrorPattern& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) {
    os << (i ? ", " : "") << "(" << e[i].location << ", " << e[i].value.to_string() << ")";
  }
  return os.str();
}

DecodeResult finish(const CodeSpec& code, std::span<const HurwitzInt> r, ErrorPattern errors,
                    std::string method, DecodeTrace trace) {
  Corrected c;
  c.codeword = subtract_errors(code, r, errors);
  if (!syndrome(code, c.codeword).is_zero()) {
    throw std::logic_error("decoder produced a vector with nonzero syndrome");
  }
  c.errors = std::move(errors);
  c.method = std::move(method);
  c.trace = std::move(trace);
  return c;
}

// Resolves a syndrome through the claimed-class matcher.
DecodeResult from_matcher(const CodeSpec& code, std::span<const HurwitzInt> r, const Syndrome& s,
                          const std::string& none_reason, std::string method, DecodeTrace trace) {
  const auto candidates = match_claimed_class(code, s);
  if (candidates.empty()) return Failure{none_reason, ""};
  if (candidates.size() > 1) {
    return Failure{"ambiguous", std::to_string(candidates.size()) +
                                    " explanations; first " + describe(candidates.front())};
  }
  return finish(code, r, candidates.front(), std::move(method), std::move(trace));
}

DecodeResult decode_r(const CodeSpec& code, std::span<const HurwitzInt> r) {
  const auto s = syndrome(code, r);
  if (s.is_zero()) return NoError{};
  auto formula = run_formula(code, field_syndromes(code, s));
  if (formula.pattern) {
    auto e = to_pattern(*formula.pattern);
    if (explains(code, e, s)) {
      return finish(code, r, std::move(e), formula.method, std::move(formula.trace));
    }
    formula.failure = "inconsistent";
  }
  if (code.rows().size() == 1) return Failure{formula.failure, ""};
  return from_matcher(code, r, s, formula.failure, "exhaustive-fallback", std::move(formula.trace));
}

// Strips a common unit from every syndrome component (left side: mu^-1 s,
// right side: s mu^-1), runs the R_pi formula and re-applies the unit.
std::optional<std::pair<ErrorPattern, DecodeTrace>> unit_factoring(const CodeSpec& code,
                                                                   const Syndrome& s) {
  const auto& f = code.field();
  for (int side = 0; side < 2; ++side) {
    for (auto u : kLipschitzUnits) {
      const auto inv = to_hurwitz(unit_inverse(u));
      std::vector<EisensteinInt> fs;
      for (const auto& v : s.values) {
        const auto x = f.from_hurwitz(side == 0 ? inv * v : v * inv);
        if (!x) break;
        fs.push_back(*x);
      }
      if (fs.size() != s.values.size()) continue;
      auto formula = run_formula(code, fs);
      if (!formula.pattern) continue;
      const auto mu = to_hurwitz(u);
      ErrorPattern e;
      for (const auto& [l, v] : *formula.pattern) {
        e.push_back({l, side == 0 ? mu * v.to_hurwitz() : v.to_hurwitz() * mu});
      }
      if (!explains(code, e, s)) continue;
      formula.trace.unit = u;
      formula.trace.side = side;
      return std::make_pair(std::move(e), std::move(formula.trace));
    }
  }
  return std::nullopt;
}

// The matcher decides; unit factoring is tried first and its agreement recorded.
DecodeResult decode_h(const CodeSpec& code, std::span<const HurwitzInt> r,
                      const std::string& none_reason) {
  const auto s = syndrome(code, r);
  if (s.is_zero()) return NoError{};
  const auto fast = unit_factoring(code, s);
  const auto candidates = match_claimed_class(code, s);
  if (candidates.empty()) return Failure{none_reason, fast ? "unit factoring: " + describe(fast->first) : ""};
  if (candidates.size() > 1) {
    return Failure{"ambiguous", std::to_string(candidates.size()) +
                                    " explanations; first " + describe(candidates.front())};
  }
  DecodeTrace trace;
  std::string method = "exhaustive-fallback";
  if (fast) {
    trace = fast->second;
    const bool agree = same_codeword(code, subtract_errors(code, r, fast->first),
                                     subtract_errors(code, r, candidates.front()));
    trace.fast_path_agrees = agree;
    if (agree) method = "unit-factoring";
  }
  return finish(code, r, candidates.front(), std::move(method), std::move(trace));
}

}  // namespace

LocatorCoefficients locator_coefficients(const ResidueField& f, const EisensteinInt& s1,
                                         const EisensteinInt& s7, const EisensteinInt& s13) {
  const auto c = [&](std::int64_t k) { return f.from_int(k); };
  const auto s1_7 = f.pow(s1, 7);
  const auto s1_14 = f.pow(s1, 14);
  const auto s7_2 = f.mul(s7, s7);
  const auto s1s13 = f.mul(s1, s13);
  const auto s1_7s7 = f.mul(s1_7, s7);
  auto t1 = f.add(f.mul(c(4), s1_14), f.mul(c(104), s1_7s7));
  t1 = f.add(t1, f.mul(c(39), s7_2));
  t1 = f.neg(f.sub(t1, f.mul(c(147), s1s13)));
  auto t0 = f.add(s1_14, f.mul(c(26), s1_7s7));
  t0 = f.add(t0, f.mul(c(169), s7_2));
  t0 = f.sub(t0, f.mul(c(196), s1s13));
  t0 = f.mul(f.mul(s1, s1), t0);
  return {t0, t1};
}

std::vector<ErrorPattern> match_claimed_class(const CodeSpec& code, const Syndrome& s) {
  const auto& cls = code.claimed_class();
  const auto singles = cls.singles();
  std::vector<ErrorPattern> out;
  for (auto i : cls.lookup(s.values)) out.push_back({{singles[i].location, singles[i].value}});
  if (!out.empty() || !cls.allows_pairs()) return out;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<HurwitzInt> residual(s.values.size());
  for (std::size_t i = 0; i < singles.size(); ++i) {
    for (std::size_t k = 0; k < residual.size(); ++k) {
      residual[k] = reduce_syndrome_value(code, s.values[k] - singles[i].syndrome[k]);
    }
    for (auto j : cls.lookup(residual)) {
      if (cls.pair_allowed(singles[i], singles[j])) pairs.emplace_back(i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [i, j] : pairs) {
    out.push_back({{singles[i].location, singles[i].value}, {singles[j].location, singles[j].value}});
  }
  return out;
}

DecodeResult decode_single_unit(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 1, ErrorModel::kResidueField, "decode_single_unit");
  return decode_r(code, r);
}

DecodeResult decode_single_any(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 2, ErrorModel::kResidueField, "decode_single_any");
  return decode_r(code, r);
}

DecodeResult decode_double_unit(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 3, ErrorModel::kResidueField, "decode_double_unit");
  return decode_r(code, r);
}

DecodeResult decode_double_any(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 4, ErrorModel::kResidueField, "decode_double_any");
  return decode_r(code, r);
}

DecodeResult decode_hz_single_unit(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 1, ErrorModel::kHurwitz, "decode_hz_single_unit");
  return decode_h(code, r, "no match");
}

DecodeResult decode_hz_single_any(const CodeSpec& code, std::span<const HurwitzInt> r) {
  require(code, 2, ErrorModel::kHurwitz, "decode_hz_single_any");
  return decode_h(code, r, "no match");
}

DecodeResult decode_hz_double(const CodeSpec& code, std::span<const HurwitzInt> r) {
  if (code.error_model() != ErrorModel::kHurwitz || code.rows().size() < 3) {
    throw std::invalid_argument("decode_hz_double does not apply to the code " + code.describe());
  }
  return decode_h(code, r, "out of class");
}

DecodeResult decode(const CodeSpec& code, std::span<const HurwitzInt> r) {
  if (code.error_model() == ErrorModel::kResidueField) return decode_r(code, r);
  return decode_h(code, r, code.rows().size() >= 3 ? "out of class" : "no match");
}

std::string summarize(const DecodeResult& result) {
  if (std::holds_alternative<NoError>(result)) return "no error";
  if (const auto* f = std::get_if<Failure>(&result)) {
    return "failure: " + f->reason + (f->detail.empty() ? "" : " (" + f->detail + ")");
  }
  const auto& c = std::get<Corrected>(result);
  return "corrected [" + c.method + "] " + describe(c.errors);
}

}  // namespace hurwitz

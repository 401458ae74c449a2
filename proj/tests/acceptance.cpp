// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/commands.hpp"
#include "hurwitz/decoder.hpp"
#include "hurwitz/notation.hpp"
#include "hurwitz/oracle.hpp"

namespace {

using namespace hurwitz;

constexpr double kCardinalityLimitSeconds = 30;  // per modulus
constexpr double kMetricLimitSeconds = 60;
constexpr double kSweepLimitSeconds = 300;
constexpr std::size_t kMetricTriples = 100'000;
constexpr std::size_t kAgreementSample = 1000;
constexpr std::size_t kRandomTrials = 1000;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::shared_ptr<const ResidueField> field13() {
  static const auto f = std::make_shared<const ResidueField>(ResidueField::build({-1, 4}, {-1, 2}));
  return f;
}
std::shared_ptr<const ResidueField> field31() {
  static const auto f = std::make_shared<const ResidueField>(ResidueField::build({-1, 6}, {-2, -1}));
  return f;
}

HurwitzInt bp(const ResidueField& f, std::int64_t k) { return f.beta_power(k).to_hurwitz(); }

const HurwitzResidueSystem& system13() {
  static const auto s = HurwitzResidueSystem::enumerate(HurwitzInt::from_integers(1, 2, 2, 2));
  return s;
}

bool same_errors(const CodeSpec& code, const ErrorPattern& got, const ErrorPattern& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].location != want[i].location ||
        canonical_entry(code, got[i].value) != canonical_entry(code, want[i].value)) {
      return false;
    }
  }
  return true;
}

const Corrected* corrected(const DecodeResult& r) { return std::get_if<Corrected>(&r); }

Outcome cardinalities() {
  Outcome o;
  struct Case {
    HurwitzInt pi;
    std::size_t lipschitz;
    std::size_t hurwitz;
  };
  for (const auto& c : {Case{HurwitzInt::from_integers(1, 2, 2, 2), 169, 337},
                        Case{HurwitzInt::from_integers(2, 3, 3, 3), 961, 1921}}) {
    const auto start = Clock::now();
    const auto r = verify_cardinalities(c.pi);
    const auto t = seconds_since(start);
    std::ostringstream msg;
    msg << "N=" << r.norm << ": " << r.lipschitz << " Lipschitz, " << r.hurwitz << " Hurwitz";
    o.note(msg.str());
    o.require(r.lipschitz == c.lipschitz, "Lipschitz count " + std::to_string(c.lipschitz));
    o.require(r.hurwitz == c.hurwitz, "Hurwitz count " + std::to_string(c.hurwitz));
    o.require(t < kCardinalityLimitSeconds, "runtime");
  }
  return o;
}

Outcome residue_table() {
  Outcome o;
  const auto& f = *field13();
  const std::vector<EisensteinInt> listed = {
      {0, 0},  {1, 0},  {-1, -1}, {0, -1}, {1, -1}, {2, -1}, {-1, 2},
      {1, -2}, {-2, 1}, {-1, 1},  {0, 1},  {1, 1},  {-1, 0},
  };
  const auto els = f.elements();
  o.require(els.size() == 13, "13 elements");
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      o.require(!congruent(els[i], els[j], f.modulus()), "pairwise non-congruence");
    }
  }
  std::set<EisensteinInt> matched;
  for (const auto& x : listed) {
    const auto it = std::find_if(els.begin(), els.end(),
                                 [&](const auto& e) { return congruent(e, x, f.modulus()); });
    o.require(it != els.end(), "listed " + x.to_string() + " has a class");
    if (it != els.end()) o.require(matched.insert(*it).second, "listed " + x.to_string() + " is new");
  }
  o.require(matched.size() == 13, "bijection");
  if (o.pass) o.note("13 elements, one per listed value");
  return o;
}

Outcome metric_facts() {
  Outcome o;
  const auto start = Clock::now();
  const auto pi = HurwitzInt::from_integers(1, 2, 2, 2);
  o.require(hurwitz_weight(HurwitzInt::w(), pi) == 1, "w_H(w) = 1");
  o.require(lipschitz_weight(HurwitzInt::w(), pi) == 2, "w_L(w) = 2");
  const auto r = check_metric_axioms(system13(), kMetricTriples, kSeed);
  o.require(r.ok(), "metric axioms");
  o.require(seconds_since(start) < kMetricLimitSeconds, "runtime");
  o.note("w_H(w)=1, w_L(w)=2, " + std::to_string(r.pairs) + " pairs, " +
         std::to_string(r.triples) + " triples");
  return o;
}

Outcome example_single_unit() {
  Outcome o;
  const auto code = build_code(field13(), {1}, ErrorModel::kResidueField);
  const auto& f = code.field();
  const auto w = HurwitzInt::w();
  const auto result = decode_single_unit(code, CodeVector{-bp(f, 1), w});
  const auto* c = corrected(result);
  o.require(c != nullptr, "corrected");
  if (!c) return o;
  o.require(c->codeword == canonicalize(code, CodeVector{-bp(f, 1), HurwitzInt::one()}), "codeword");
  o.require(same_errors(code, c->errors, {{1, w * w}}), "error (1, w^2)");
  o.note(format_vector(c->codeword, f) + " with " + format_errors(c->errors, f));
  return o;
}

Outcome example_single_any() {
  Outcome o;
  const auto code = build_code(field31(), {1, 7}, ErrorModel::kResidueField);
  const auto& f = code.field();
  const CodeVector r = {{}, {}, {}, HurwitzInt::scalar(2), {}};
  const auto s = syndrome(code, r);
  o.require(s.at(1) == bp(f, 27) && s.at(7) == bp(f, 15), "syndromes (b^27, b^15)");
  const auto result = decode_single_any(code, r);
  const auto* c = corrected(result);
  o.require(c != nullptr, "corrected");
  if (!c) return o;
  o.require(c->codeword == CodeVector(5), "zero codeword");
  o.require(same_errors(code, c->errors, {{3, HurwitzInt::scalar(2)}}), "error (3, 2)");
  o.note("syndromes (b^27, b^15), " + format_errors(c->errors, f));
  return o;
}

Outcome example_double_unit() {
  Outcome o;
  const auto code = build_code(field31(), {1, 7, 13}, ErrorModel::kResidueField);
  const auto& f = code.field();
  const CodeVector r = {{}, {}, bp(f, 15), {}, bp(f, 5)};
  const auto s = syndrome(code, r);
  o.require(s.at(1) == bp(f, 8) && s.at(7) == bp(f, 7) && s.at(13) == bp(f, 20),
            "syndromes (b^8, b^7, b^20)");
  const auto result = decode_double_unit(code, r);
  const auto* c = corrected(result);
  o.require(c != nullptr, "corrected");
  if (!c) return o;
  o.require(c->trace.t0 == f.beta_power(9), "t0 = b^9");
  o.require(c->trace.t1 == f.beta_power(28), "t1 = b^28");
  const std::set<EisensteinInt> roots(c->trace.roots.begin(), c->trace.roots.end());
  o.require(roots == std::set<EisensteinInt>{f.beta_power(17), f.beta_power(9)}, "roots {b^17, b^9}");
  o.require(same_errors(code, c->errors, {{2, -HurwitzInt::one()}, {4, HurwitzInt::w()}}),
            "errors (2, -1), (4, w)");
  o.require(c->codeword == CodeVector(5), "zero codeword");
  o.note("t0=b^9, t1=b^28, roots {b^9, b^17}, " + format_errors(c->errors, f));
  return o;
}

Outcome hurwitz_examples() {
  Outcome o;
  {
    const auto code = build_code(field13(), {1}, ErrorModel::kHurwitz);
    const auto& f = code.field();
    const auto r = parse_vector("-b, (1+e1-e2-e3)/2", &f);
    const auto result = decode_hz_single_unit(code, r);
    const auto* c = corrected(result);
    o.require(c && same_codeword(code, c->codeword, CodeVector{-bp(f, 1), HurwitzInt::one()}),
              "first example corrects to (-b, 1)");
    if (c) o.note("first " + format_vector(c->codeword, f));
  }
  {
    const auto code = build_code(field31(), {1, 7, 13}, ErrorModel::kHurwitz);
    const auto& f = code.field();
    const auto e2 = HurwitzInt::e2();
    const auto w = HurwitzInt::w();
    const CodeVector r = {{}, {}, e2 * bp(f, 15), {}, e2 * bp(f, 10)};
    const auto result = decode_hz_double(code, r);
    const auto* c = corrected(result);
    o.require(c && same_codeword(code, c->codeword, CodeVector(5)), "second example corrects to 0");
    o.require(c && same_errors(code, c->errors, {{2, -e2}, {4, e2 * w * w}}),
              "errors (2, -e2), (4, e2 w^2)");
    if (c) o.note("second " + format_vector(c->codeword, f) + " with " + format_errors(c->errors, f));
  }
  return o;
}

Outcome minimum_distance() {
  Outcome o;
  const auto code = build_code(field13(), {1}, ErrorModel::kResidueField);
  const auto d = min_hurwitz_distance(code, system13());
  o.require(d >= 3, "d >= 3");
  o.note("minimum nonzero codeword weight " + std::to_string(d));
  return o;
}

Outcome class_sweeps() {
  Outcome o;
  const auto start = Clock::now();
  struct Case {
    std::string name;
    std::shared_ptr<const ResidueField> field;
    std::vector<int> rows;
    std::string label;
    SweepOptions options;
    std::size_t expected_total;
  };
  SweepOptions a;
  a.all_codewords = true;
  SweepOptions b;
  b.seed = kSeed;
  b.random_trials = kRandomTrials;
  SweepOptions exhaustive;
  exhaustive.exhaustive = true;
  const std::vector<Case> cases = {
      {"a", field13(), {1}, "single-unit", a, 12 * 13},
      {"b", field31(), {1, 7}, "single-any", b, 150 + kRandomTrials},
      {"c", field31(), {1, 7, 13}, "double-unit", exhaustive, 160},
      {"d", field31(), {1, 7, 13, 19}, "double-any", exhaustive, 9000},
  };
  for (const auto& c : cases) {
    const auto code = build_code(c.field, c.rows, ErrorModel::kResidueField);
    const auto r = sweep_error_class(code, c.label, c.options);
    o.require(r.total == c.expected_total, "(" + c.name + ") pattern count");
    o.require(r.successes == r.total, "(" + c.name + ") full recovery");
    o.note("(" + c.name + ") " + std::to_string(r.successes) + "/" + std::to_string(r.total) +
           ", fallback " + std::to_string(r.fallbacks));
  }
  o.require(seconds_since(start) < kSweepLimitSeconds, "runtime");
  return o;
}

Outcome oracle_agreement_check() {
  Outcome o;
  {
    const auto code = build_code(field13(), {1}, ErrorModel::kResidueField);
    SweepOptions options;
    options.all_codewords = true;
    const auto r = oracle_agreement(code, system13(), "single-unit", options);
    o.require(r.disagree == 0, "single-unit class agreement");
    o.note("single-unit: " + std::to_string(r.agree) + " agree, " + std::to_string(r.ties) +
           " ties, " + std::to_string(r.disagree) + " disagree");
  }
  {
    const auto code = build_code(field31(), {1, 7, 13, 19}, ErrorModel::kResidueField);
    const auto system = HurwitzResidueSystem::from_shells(field31()->modulus().quaternion());
    SweepOptions options;
    options.seed = kSeed;
    options.sample_cap = kAgreementSample;
    const auto r = oracle_agreement(code, system, "double-any", options);
    o.require(r.total == kAgreementSample, "sample size");
    o.require(r.disagree == 0, "double-any sample agreement");
    o.note("double-any sample: " + std::to_string(r.agree) + " agree, " + std::to_string(r.ties) +
           " ties, " + std::to_string(r.disagree) + " disagree");
  }
  return o;
}

Outcome weight_oracle() {
  Outcome o;
  const auto pi = system13().modulus();
  std::size_t checked = 0;
  for (const auto& q : system13().representatives()) {
    const auto fast = hurwitz_weight(q, pi);
    const auto box = weight_by_box_search(q, pi, default_box_radius(q, pi));
    o.require(fast == box, "class " + q.to_string());
    ++checked;
  }
  o.note(std::to_string(checked) + " classes");
  return o;
}

Outcome determinism() {
  Outcome o;
  struct Run {
    std::string command;
    std::string fixture;
  };
  for (const auto& run : {Run{"verify", "example1.cfg"}, Run{"verify", "hurwitz_single.cfg"},
                          Run{"simulate", "example3.cfg"}, Run{"simulate", "hurwitz_double.cfg"}}) {
    CommandOptions options;
    options.format = OutputFormat::kRecords;
    options.seed = kSeed;
    options.trials = 500;
    const auto path = default_fixtures_dir() + "/" + run.fixture;
    std::ostringstream out1, out2, err;
    const int rc1 = run_command(run.command, path, options, out1, err);
    const int rc2 = run_command(run.command, path, options, out2, err);
    o.require(rc1 == kExitOk && rc2 == kExitOk, run.command + " " + run.fixture + " exit status");
    o.require(!out1.str().empty() && out1.str() == out2.str(),
              run.command + " " + run.fixture + " identical records");
  }
  if (o.pass) o.note("verify and simulate records identical across runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"class cardinalities", cardinalities},
      {"residue table at p=13", residue_table},
      {"metric facts and axioms", metric_facts},
      {"single unit error example", example_single_unit},
      {"single arbitrary error example", example_single_any},
      {"double unit error example", example_double_unit},
      {"Hurwitz-valued error examples", hurwitz_examples},
      {"minimum distance at p=13", minimum_distance},
      {"exhaustive class sweeps", class_sweeps},
      {"oracle agreement", oracle_agreement_check},
      {"weight oracle equivalence", weight_oracle},
      {"record determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto t = seconds_since(start);
    if (!o.pass) ++failures;
    std::printf("%-4s criterion %2zu  %-32s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), t, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

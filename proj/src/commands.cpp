#include "hurwitz/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hurwitz/decoder.hpp"
#include "hurwitz/notation.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/weight.hpp"

namespace hurwitz {

namespace {

using Json = nlohmann::ordered_json;

class Reporter {
 public:
  Reporter(OutputFormat format, std::ostream& out) : records_(format == OutputFormat::kRecords), out_(out) {}

  bool records() const { return records_; }
  void record(const Json& j) {
    if (records_) out_ << j.dump() << '\n';
  }
  void line(const std::string& s) {
    if (!records_) out_ << s << '\n';
  }

 private:
  bool records_;
  std::ostream& out_;
};

OutputFormat format_of(const RunConfig& config, const CommandOptions& options) {
  return options.format.value_or(config.format);
}

std::uint64_t seed_of(const RunConfig& config, const CommandOptions& options) {
  return options.seed.value_or(config.seed);
}

std::size_t trials_of(const RunConfig& config, const CommandOptions& options) {
  return options.trials.value_or(config.trials);
}

Json code_json(const CodeSpec& code) {
  return Json{{"p", code.field().p()},
              {"n", code.n()},
              {"rows", std::vector<int>(code.rows().begin(), code.rows().end())},
              {"error_model", to_string(code.error_model())}};
}

Json vector_json(std::span<const HurwitzInt> v, const ResidueField& f) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(format_element(x, f));
  return arr;
}

Json errors_json(const ErrorPattern& e, const ResidueField& f) {
  Json arr = Json::array();
  for (const auto& [loc, value] : e) arr.push_back({{"location", loc}, {"value", format_element(value, f)}});
  return arr;
}

std::uint64_t codebook_size(const CodeSpec& code) {
  std::uint64_t v = 1;
  const auto limit = std::uint64_t{1} << 40;
  for (std::int64_t i = 0; i < code.k() && v < limit; ++i) v *= static_cast<std::uint64_t>(code.field().p());
  if (code.error_model() == ErrorModel::kHurwitz) {
    for (std::int64_t i = 0; i < code.n() && v < limit; ++i) v *= 2;
  }
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// --- verify -----------------------------------------------------------------

// Codes with at most this many codewords are swept over every codeword.
constexpr std::uint64_t kAllCodewordsLimit = 100;
// Upper bound on (jobs x codewords) for the brute-force agreement check.
constexpr std::uint64_t kAgreementBudget = 5'000'000;

std::uint64_t agreement_jobs(const CodeSpec& code, const std::string& label,
                               const SweepOptions& options) {
  const auto patterns = enumerate_error_class(code, label).size();
  const auto base = options.all_codewords ? codebook_size(code) : 1;
  return std::min<std::uint64_t>(base * patterns, options.sample_cap) +
         std::min<std::uint64_t>(options.random_trials, 1000);
}

struct Check {
  std::string name;
  std::string status;  // pass, fail or info
  std::string detail;
  Json data = Json::object();
};

class CheckLog {
 public:
  explicit CheckLog(Reporter& rep) : rep_(rep) {}

  void add(Check c, double seconds) {
    if (c.status == "fail") ++failed_;
    ++count_;
    Json j{{"event", "check"}, {"name", c.name}, {"status", c.status}, {"detail", c.detail}};
    if (!c.data.empty()) j["data"] = c.data;
    rep_.record(j);
    rep_.line("[" + std::string(c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "INFO") +
              "] " + c.name + ": " + c.detail + " (" + fixed(seconds, 2) + " s)");
  }
  std::size_t failed() const { return failed_; }
  std::size_t count() const { return count_; }

 private:
  Reporter& rep_;
  std::size_t failed_ = 0;
  std::size_t count_ = 0;
};

template <class Fn>
void timed(CheckLog& log, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Check c = fn();
  log.add(std::move(c), seconds_since(start));
}

Check replay_fixture(const std::filesystem::path& path) {
  Check c;
  c.name = "fixture:" + path.filename().string();
  try {
    const auto cfg = load_config(path.string(), true);
    const auto built = build_from_config(cfg);
    const auto& code = built.code;
    const auto* f = built.field.get();
    const auto extra = [&](const std::string& key) -> std::optional<std::string> {
      const auto it = cfg.extras.find(key);
      if (it == cfg.extras.end()) return std::nullopt;
      return it->second;
    };
    const auto received = extra("received");
    const auto expect = extra("expect_codeword");
    if (!received || !expect) throw std::invalid_argument("fixture needs received and expect_codeword");
    const auto r = parse_vector(*received, f);
    const auto result = decode(code, r);
    std::vector<std::string> problems;
    if (const auto s = extra("expect_syndrome")) {
      const auto want = parse_vector(*s, f);
      const auto got = syndrome(code, r);
      bool same = want.size() == got.values.size();
      for (std::size_t i = 0; same && i < want.size(); ++i) {
        same = reduce_syndrome_value(code, want[i]) == got.values[i];
      }
      if (!same) problems.push_back("syndrome differs");
    }
    const auto want_c = parse_vector(*expect, f);
    CodeVector got_c;
    ErrorPattern got_e;
    if (const auto* corr = std::get_if<Corrected>(&result)) {
      got_c = corr->codeword;
      got_e = corr->errors;
    } else if (std::holds_alternative<NoError>(result)) {
      got_c = canonicalize(code, r);
    } else {
      problems.push_back(summarize(result));
    }
    if (problems.empty() && !same_codeword(code, got_c, want_c)) {
      problems.push_back("codeword " + format_vector(got_c, *f));
    }
    if (const auto e = extra("expect_errors"); e && problems.empty()) {
      const auto want_e = parse_errors(*e, f);
      bool same = want_e.size() == got_e.size();
      for (std::size_t i = 0; same && i < want_e.size(); ++i) {
        same = want_e[i].location == got_e[i].location &&
               canonical_entry(code, want_e[i].value) == canonical_entry(code, got_e[i].value);
      }
      if (!same) problems.push_back("errors " + format_errors(got_e, *f));
    }
    c.status = problems.empty() ? "pass" : "fail";
    c.detail = problems.empty() ? summarize(result) : problems.front();
  } catch (const std::exception& e) {
    c.status = "fail";
    c.detail = e.what();
  }
  return c;
}

// --- simulate ---------------------------------------------------------------

ErrorPattern triple_error(const CodeSpec& code, std::mt19937_64& rng) {
  const auto& f = code.field();
  const auto elements = f.elements();
  std::vector<std::int64_t> locs(static_cast<std::size_t>(code.n()));
  for (std::size_t i = 0; i < locs.size(); ++i) locs[i] = static_cast<std::int64_t>(i);
  std::shuffle(locs.begin(), locs.end(), rng);
  locs.resize(std::min<std::size_t>(3, locs.size()));
  std::sort(locs.begin(), locs.end());
  std::uniform_int_distribution<std::size_t> elem(0, elements.size() - 1);
  std::uniform_int_distribution<std::size_t> unit(0, kLipschitzUnits.size() - 1);
  ErrorPattern e;
  for (auto l : locs) {
    EisensteinInt v;
    while (v.is_zero()) v = elements[elem(rng)];
    auto q = v.to_hurwitz();
    if (code.error_model() == ErrorModel::kHurwitz) q = to_hurwitz(kLipschitzUnits[unit(rng)]) * q;
    e.push_back({l, q});
  }
  return e;
}

}  // namespace

std::string default_fixtures_dir() { return HURWITZ_FIXTURES_DIR; }

int run_inspect(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
  (void)err;
  Reporter rep(format_of(config, options), out);
  const auto built = build_from_config(config);
  const auto& f = *built.field;
  const auto piq = f.modulus().quaternion();

  rep.record({{"event", "field"},
              {"pi", f.modulus().pi().to_string()},
              {"pi_quaternion", piq.to_string()},
              {"p", f.p()},
              {"n", f.n()},
              {"beta", f.beta().to_string()},
              {"beta_order", f.p() - 1},
              {"beta_power_n", f.beta_power_sign() > 0 ? "+w" : "-w"}});
  rep.line("modulus      pi = " + f.modulus().pi().to_string() + " = " + piq.to_string());
  rep.line("field        p = " + std::to_string(f.p()) + ", n = " + std::to_string(f.n()));
  rep.line("primitive    beta = " + f.beta().to_string() + ", order " + std::to_string(f.p() - 1) +
           ", beta^n = " + (f.beta_power_sign() > 0 ? "+w" : "-w"));

  const auto system = HurwitzResidueSystem::from_shells(piq);
  rep.line("");
  rep.line("element      log   weight");
  for (const auto& e : f.elements()) {
    const auto w = field_weight(e, system);
    Json j{{"event", "element"}, {"value", e.to_string()}, {"weight", w}};
    std::string log = "-";
    if (!e.is_zero()) {
      j["log"] = f.dlog(e);
      log = "b^" + std::to_string(f.dlog(e));
    }
    rep.record(j);
    std::ostringstream row;
    row << std::left << std::setw(12) << e.to_string() << ' ' << std::setw(5) << log << ' ' << w;
    rep.line(row.str());
  }
  const auto dmax_field = d_max(f, DmaxScope::kResidueField, system);
  const auto dmax_assoc = d_max(f, DmaxScope::kAssociateClosure, system);
  rep.record({{"event", "d_max"}, {"residue_field", dmax_field}, {"associate_closure", dmax_assoc}});
  rep.line("");
  rep.line("d_max        " + std::to_string(dmax_field) + " over R_pi, " + std::to_string(dmax_assoc) +
           " over unit multiples");

  const auto card = verify_cardinalities(piq);
  rep.record({{"event", "classes"},
              {"lipschitz", card.lipschitz},
              {"hurwitz", card.hurwitz},
              {"hurwitz_max_weight", system.max_weight()}});
  rep.line("classes      " + std::to_string(card.lipschitz) + " Lipschitz, " +
           std::to_string(card.hurwitz) + " Hurwitz (max weight " +
           std::to_string(system.max_weight()) + ")");
  rep.line("code         " + built.code.describe() + ", claimed class " +
           built.code.claimed_class().label());
  return kExitOk;
}

int run_encode(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  Reporter rep(format_of(config, options), out);
  const auto built = build_from_config(config);
  const auto& code = built.code;
  const auto& f = *built.field;
  std::vector<EisensteinInt> message;
  for (const auto& x : parse_vector(options.input, &f)) {
    const auto e = EisensteinInt::from_hurwitz(x);
    if (!e) {
      err << "message entry " << x.to_string() << " is not in Z[w]\n";
      return kExitUsage;
    }
    message.push_back(*e);
  }
  if (static_cast<std::int64_t>(message.size()) != code.k()) {
    err << "message has " << message.size() << " entries, the code needs " << code.k() << "\n";
    return kExitUsage;
  }
  const auto c = encode(code, message);
  if (!syndrome(code, c).is_zero()) {
    err << "encoder produced a vector with nonzero syndrome\n";
    return kExitCheckFailed;
  }
  rep.record({{"event", "codeword"}, {"code", code_json(code)}, {"codeword", vector_json(c, f)}});
  rep.line("codeword     " + format_vector(c, f));
  return kExitOk;
}

int run_decode(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  Reporter rep(format_of(config, options), out);
  const auto built = build_from_config(config);
  const auto& code = built.code;
  const auto& f = *built.field;
  std::string input = options.input;
  if (input.empty()) {
    const auto it = config.extras.find("received");
    if (it == config.extras.end()) {
      err << "no received vector: pass one or use a fixture with a 'received' key\n";
      return kExitUsage;
    }
    input = it->second;
  }
  const auto r = parse_vector(input, &f);
  if (static_cast<std::int64_t>(r.size()) != code.n()) {
    err << "received vector has " << r.size() << " entries, the code has length " << code.n() << "\n";
    return kExitUsage;
  }
  const auto s = syndrome(code, r);
  Json syn = Json::object();
  std::string syn_line;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const auto text = format_element(s.values[i], f);
    syn["s" + std::to_string(s.exponents[i])] = text;
    syn_line += (i ? ", " : "") + std::string("s") + std::to_string(s.exponents[i]) + " = " + text;
  }
  rep.record({{"event", "received"}, {"code", code_json(code)}, {"vector", vector_json(r, f)}, {"syndrome", syn}});
  rep.line("code         " + code.describe());
  rep.line("received     " + format_vector(r, f));
  rep.line("syndrome     " + syn_line);

  const auto result = decode(code, r);
  int status = kExitOk;
  if (std::holds_alternative<NoError>(result)) {
    rep.record({{"event", "result"}, {"status", "no-error"}});
    rep.line("result       no error");
  } else if (const auto* fail = std::get_if<Failure>(&result)) {
    rep.record({{"event", "result"}, {"status", "failure"}, {"reason", fail->reason}, {"detail", fail->detail}});
    rep.line("result       failure: " + fail->reason + (fail->detail.empty() ? "" : " (" + fail->detail + ")"));
    status = kExitCheckFailed;
  } else {
    const auto& c = std::get<Corrected>(result);
    if (!syndrome(code, c.codeword).is_zero()) {
      err << "internal error: corrected vector has nonzero syndrome\n";
      return kExitCheckFailed;
    }
    Json trace = Json::object();
    const auto put = [&](const char* key, const std::optional<EisensteinInt>& v) {
      if (v) trace[key] = format_element(v->to_hurwitz(), f);
    };
    put("t0", c.trace.t0);
    put("t1", c.trace.t1);
    put("epsilon", c.trace.epsilon);
    put("x", c.trace.x);
    put("product", c.trace.product);
    if (!c.trace.roots.empty()) {
      Json roots = Json::array();
      for (const auto& z : c.trace.roots) roots.push_back(format_element(z.to_hurwitz(), f));
      trace["roots"] = roots;
    }
    if (c.trace.unit) {
      trace["unit"] = to_string(*c.trace.unit);
      trace["side"] = *c.trace.side == 0 ? "left" : "right";
    }
    if (c.trace.fast_path_agrees) trace["fast_path_agrees"] = *c.trace.fast_path_agrees;
    rep.record({{"event", "result"},
                {"status", "corrected"},
                {"method", c.method},
                {"errors", errors_json(c.errors, f)},
                {"codeword", vector_json(c.codeword, f)},
                {"trace", trace}});
    rep.line("method       " + c.method);
    rep.line("errors       " + format_errors(c.errors, f));
    rep.line("corrected    " + format_vector(c.codeword, f));
    for (const auto& [key, value] : trace.items()) {
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_array()) {
        for (const auto& item : value) text += (text.empty() ? "" : ", ") + item.get<std::string>();
        text = "{" + text + "}";
      } else {
        text = value.dump();
      }
      rep.line("  " + key + " = " + text);
    }
  }

  if (options.exhaustive) {
    const auto system = HurwitzResidueSystem::from_shells(f.modulus().quaternion());
    const auto nearest = brute_force_decode(code, system, r, config.caps.brute);
    Json list = Json::array();
    for (const auto& c : nearest.codewords) list.push_back(vector_json(c, f));
    rep.record({{"event", "nearest"}, {"distance", nearest.distance}, {"codewords", list}});
    rep.line("nearest      distance " + std::to_string(nearest.distance) + ", " +
             std::to_string(nearest.codewords.size()) + " codeword(s)");
    for (const auto& c : nearest.codewords) rep.line("             " + format_vector(c, f));
  }
  return status;
}

int run_verify(const RunConfig& config, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  (void)err;
  Reporter rep(format_of(config, options), out);
  const auto built = build_from_config(config);
  const auto& code = built.code;
  const auto& f = *built.field;
  const auto piq = f.modulus().quaternion();
  const auto seed = seed_of(config, options);
  rep.record({{"event", "verify"}, {"code", code_json(code)}, {"seed", seed}});
  rep.line("verify       " + code.describe() + ", seed " + std::to_string(seed));
  CheckLog log(rep);

  timed(log, [&] {
    const bool corrupt = options.inject_fault == "field-tables";
    const auto ok = corrupt ? f.with_corrupted_tables().tables_consistent() : f.tables_consistent();
    return Check{"field-tables", ok ? "pass" : "fail",
                 ok ? "log and antilog tables consistent, beta primitive"
                    : "log/antilog tables inconsistent"};
  });

  timed(log, [&] {
    const auto card = verify_cardinalities(piq);
    const bool ok = card.lipschitz_ok() && card.hurwitz_ok();
    Check c{"cardinalities", ok ? "pass" : "fail",
            std::to_string(card.lipschitz) + " Lipschitz (N^2 = " + std::to_string(card.expected_lipschitz) +
                "), " + std::to_string(card.hurwitz) + " Hurwitz (2N^2 = " +
                std::to_string(card.expected_hurwitz) + ")"};
    c.data = {{"lipschitz", card.lipschitz},
              {"hurwitz", card.hurwitz},
              {"n_squared", card.expected_lipschitz},
              {"two_n_squared", card.expected_hurwitz},
              {"two_n_squared_minus_one", card.stated_hurwitz}};
    return c;
  });

  const auto system = HurwitzResidueSystem::from_shells(piq);
  timed(log, [&] {
    const auto m = check_metric_axioms(system, 100'000, seed);
    Check c{"metric-axioms", m.ok() ? "pass" : "fail",
            std::to_string(m.pairs) + " pairs, " + std::to_string(m.triples) + " triples"};
    c.data = {{"pairs", m.pairs},
              {"triples", m.triples},
              {"identity_violations", m.identity_violations},
              {"symmetry_violations", m.symmetry_violations},
              {"triangle_violations", m.triangle_violations}};
    return c;
  });

  const auto book = codebook_size(code);
  if (book <= config.caps.brute) {
    timed(log, [&] {
      const auto d = min_hurwitz_distance(code, system, config.caps.brute);
      const bool claimed = code.rows().size() == 1 && code.error_model() == ErrorModel::kResidueField;
      const auto text = d == kInfiniteDistance ? std::string("infinite") : std::to_string(d);
      Check c{"min-distance", claimed ? (d >= 3 ? "pass" : "fail") : "info",
              "minimum nonzero codeword weight " + text + (claimed ? " (need >= 3)" : "")};
      c.data = {{"distance", d == kInfiniteDistance ? Json(nullptr) : Json(d)}, {"codewords", book}};
      return c;
    });
  }

  SweepOptions sweep;
  sweep.seed = seed;
  sweep.all_codewords = book <= kAllCodewordsLimit;
  sweep.random_trials = trials_of(config, options);
  sweep.sample_cap = config.caps.sweep;
  sweep.exhaustive = options.exhaustive;
  const auto label = code.claimed_class().label();
  timed(log, [&] {
    const auto s = sweep_error_class(code, label, sweep);
    Check c{"sweep:" + label, s.successes == s.total ? "pass" : "fail",
            std::to_string(s.successes) + "/" + std::to_string(s.total) + " recovered, " +
                std::to_string(s.fallbacks) + " via fallback" + (s.sampled ? ", sampled" : "")};
    Json methods = Json::object();
    for (const auto& [k, v] : s.methods) methods[k] = v;
    c.data = {{"total", s.total}, {"successes", s.successes}, {"fallbacks", s.fallbacks},
              {"sampled", s.sampled}, {"methods", methods}};
    if (!s.failures.empty()) {
      const auto& first = s.failures.front();
      c.data["first_failure"] = {{"codeword", vector_json(first.codeword, f)},
                                 {"errors", errors_json(first.pattern, f)},
                                 {"outcome", first.outcome}};
    }
    return c;
  });

  if (book * (agreement_jobs(code, label, sweep)) <= kAgreementBudget) {
    timed(log, [&] {
      SweepOptions agree = sweep;
      agree.random_trials = std::min<std::size_t>(sweep.random_trials, 1000);
      const auto a = oracle_agreement(code, system, label, agree);
      Check c{"oracle-agreement", "info",
              std::to_string(a.agree) + " agree, " + std::to_string(a.ties) + " ties, " +
                  std::to_string(a.disagree) + " disagree"};
      c.data = {{"total", a.total}, {"agree", a.agree}, {"ties", a.ties}, {"disagree", a.disagree}};
      return c;
    });
  }

  const auto dir = options.fixtures_dir.empty() ? default_fixtures_dir() : options.fixtures_dir;
  std::vector<std::filesystem::path> fixtures;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".cfg") fixtures.push_back(entry.path());
    }
  }
  std::sort(fixtures.begin(), fixtures.end());
  for (const auto& path : fixtures) timed(log, [&] { return replay_fixture(path); });

  rep.record({{"event", "summary"}, {"checks", log.count()}, {"failed", log.failed()}});
  rep.line(std::to_string(log.count() - log.failed()) + "/" + std::to_string(log.count()) +
           " checks passed");
  return log.failed() == 0 ? kExitOk : kExitCheckFailed;
}

int run_simulate(const RunConfig& config, const CommandOptions& options, std::ostream& out,
                 std::ostream& err) {
  Reporter rep(format_of(config, options), out);
  const auto built = build_from_config(config);
  const auto& code = built.code;
  const auto& f = *built.field;
  const auto seed = seed_of(config, options);
  const auto trials = trials_of(config, options);
  const auto batch = config.caps.batch;
  const auto& channel = options.channel;
  if (channel != "in-class" && channel != "none" && channel != "triple") {
    err << "unknown channel '" << channel << "' (expected in-class, none or triple)\n";
    return kExitUsage;
  }
  const auto label = code.claimed_class().label();
  const auto patterns = channel == "in-class" ? enumerate_error_class(code, label) : std::vector<ErrorPattern>{};
  const auto elements = f.elements();

  rep.record({{"event", "simulate"}, {"code", code_json(code)}, {"channel", channel},
              {"class", label}, {"seed", seed}, {"trials", trials}, {"batch", batch}});
  rep.line("simulate     " + code.describe() + ", channel " + channel + ", " + std::to_string(trials) +
           " trials, seed " + std::to_string(seed));

  std::map<std::string, std::size_t> methods;
  std::size_t successes = 0, fallbacks = 0, batch_ok = 0, batch_fb = 0, in_batch = 0, batch_index = 0;
  const auto flush = [&] {
    if (in_batch == 0) return;
    rep.record({{"event", "batch"}, {"batch", batch_index}, {"trials", in_batch},
                {"successes", batch_ok}, {"fallbacks", batch_fb}});
    rep.line("batch " + std::to_string(batch_index) + ": " + std::to_string(batch_ok) + "/" +
             std::to_string(in_batch) + " recovered, " + std::to_string(batch_fb) + " fallback");
    ++batch_index;
    in_batch = batch_ok = batch_fb = 0;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, t);
    std::uniform_int_distribution<std::size_t> elem(0, elements.size() - 1);
    std::vector<EisensteinInt> message(static_cast<std::size_t>(code.k()));
    for (auto& m : message) m = elements[elem(rng)];
    auto c = encode(code, message);
    if (code.error_model() == ErrorModel::kHurwitz) {
      std::uniform_int_distribution<std::size_t> unit(0, kLipschitzUnits.size() - 1);
      const auto h = to_hurwitz(kLipschitzUnits[unit(rng)]);
      for (auto& x : c) x = h * x;
      c = canonicalize(code, c);
    }
    ErrorPattern e;
    if (channel == "in-class" && !patterns.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, patterns.size() - 1);
      e = patterns[pick(rng)];
    } else if (channel == "triple") {
      e = triple_error(code, rng);
    }
    const auto r = add_errors(code, c, e);
    const auto result = decode(code, r);
    bool ok = false;
    std::string method;
    if (const auto* corr = std::get_if<Corrected>(&result)) {
      method = corr->method;
      ok = same_codeword(code, corr->codeword, c);
    } else if (std::holds_alternative<NoError>(result)) {
      method = "no-error";
      ok = same_codeword(code, r, c);
    } else {
      method = "failure:" + std::get<Failure>(result).reason;
    }
    ++methods[method];
    const bool fb = method == "exhaustive-fallback";
    successes += ok;
    fallbacks += fb;
    batch_ok += ok;
    batch_fb += fb;
    if (++in_batch == batch) flush();
  }
  flush();

  const double rate = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 1.0;
  const double fb_rate = trials ? static_cast<double>(fallbacks) / static_cast<double>(trials) : 0.0;
  Json hist = Json::object();
  for (const auto& [k, v] : methods) hist[k] = v;
  rep.record({{"event", "summary"}, {"trials", trials}, {"successes", successes},
              {"success_rate", rate}, {"fallback_rate", fb_rate}, {"methods", hist}});
  rep.line("success rate " + fixed(rate, 4) + ", fallback rate " + fixed(fb_rate, 4));
  for (const auto& [k, v] : methods) rep.line("  " + k + ": " + std::to_string(v));
  return kExitOk;
}

int run_command(const std::string& command, const std::string& path,
                const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    // Fixture files are valid configs; their expectation keys are ignored here.
    const auto config = load_config(path, true);
    for (const auto& [key, value] : config.extras) {
      if (key != "received" && key != "expect_codeword" && key != "expect_errors" &&
          key != "expect_syndrome") {
        throw ConfigError(config.lines.at(key), key, "unknown key");
      }
    }
    if (command == "inspect") return run_inspect(config, options, out, err);
    if (command == "encode") return run_encode(config, options, out, err);
    if (command == "decode") return run_decode(config, options, out, err);
    if (command == "verify") return run_verify(config, options, out, err);
    if (command == "simulate") return run_simulate(config, options, out, err);
    err << "unknown command '" << command << "'\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const NotationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CodeError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hurwitz

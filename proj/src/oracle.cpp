#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace hurwitz {

namespace {

// Lightest five-coordinate split of x: c4 has the parity of the doubled
// coordinates and c_i = (d_i - c4) / 2.
std::int64_t lightest_split(const HurwitzInt::Coords& d) {
  std::int64_t m = 0;
  for (auto x : d) m = std::max<std::int64_t>(m, std::llabs(x));
  const std::int64_t parity = d[0] & 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t c4 = -m - 1; c4 <= m + 1; ++c4) {
    if ((c4 & 1) != parity) continue;
    std::int64_t s = std::llabs(c4);
    for (auto x : d) s += std::llabs(x - c4) / 2;
    best = std::min(best, s);
  }
  return best;
}

std::uint64_t saturating_pow(std::uint64_t base, std::int64_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (v > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
    v *= base;
  }
  return v;
}

std::vector<HurwitzInt> hurwitz_units() {
  std::vector<HurwitzInt> out;
  for (auto u : kLipschitzUnits) out.push_back(to_hurwitz(u));
  for (int mask = 0; mask < 16; ++mask) {
    HurwitzInt::Coords d{};
    for (int i = 0; i < 4; ++i) d[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(HurwitzInt::from_doubled(d));
  }
  return out;
}

std::vector<HurwitzInt> field_values(const ResidueField& f) {
  std::vector<HurwitzInt> out;
  for (const auto& e : f.elements()) {
    if (!e.is_zero()) out.push_back(e.to_hurwitz());
  }
  return out;
}

// Values deduplicated by right class, first literal kept, in class order.
std::vector<HurwitzInt> dedupe(const CodeSpec& code, const std::vector<HurwitzInt>& values) {
  std::map<HurwitzInt, HurwitzInt> by_class;
  for (const auto& v : values) by_class.try_emplace(canonical_entry(code, v), v);
  std::vector<HurwitzInt> out;
  for (const auto& [k, v] : by_class) out.push_back(v);
  return out;
}

std::vector<ErrorPattern> singles(std::int64_t n, const std::vector<HurwitzInt>& values) {
  std::vector<ErrorPattern> out;
  for (std::int64_t l = 0; l < n; ++l) {
    for (const auto& v : values) out.push_back({{l, v}});
  }
  return out;
}

std::vector<ErrorPattern> pairs(std::int64_t n,
                                const std::vector<std::pair<HurwitzInt, HurwitzInt>>& values) {
  std::vector<ErrorPattern> out;
  for (std::int64_t l1 = 0; l1 < n; ++l1) {
    for (std::int64_t l2 = l1 + 1; l2 < n; ++l2) {
      for (const auto& [a, b] : values) out.push_back({{l1, a}, {l2, b}});
    }
  }
  return out;
}

std::vector<std::pair<HurwitzInt, HurwitzInt>> square(const std::vector<HurwitzInt>& v) {
  std::vector<std::pair<HurwitzInt, HurwitzInt>> out;
  for (const auto& a : v) {
    for (const auto& b : v) out.emplace_back(a, b);
  }
  return out;
}

struct Job {
  CodeVector codeword;
  ErrorPattern pattern;
};

std::vector<Job> build_jobs(const CodeSpec& code, const std::string& label,
                            const SweepOptions& options, bool& sampled) {
  const auto patterns = enumerate_error_class(code, label);
  std::vector<CodeVector> base;
  if (options.all_codewords) {
    base = enumerate_codewords(code);
  } else {
    base.push_back(CodeVector(static_cast<std::size_t>(code.n())));
  }
  std::vector<Job> jobs;
  const auto product = base.size() * patterns.size();
  sampled = product > options.sample_cap && !options.exhaustive;
  if (sampled) {
    auto rng = stream_rng(options.seed, 0);
    std::uniform_int_distribution<std::size_t> pick(0, product - 1);
    for (std::size_t i = 0; i < options.sample_cap; ++i) {
      const auto k = pick(rng);
      jobs.push_back({base[k / patterns.size()], patterns[k % patterns.size()]});
    }
  } else {
    for (const auto& c : base) {
      for (const auto& e : patterns) jobs.push_back({c, e});
    }
  }
  if (options.random_trials > 0 && !patterns.empty()) {
    const auto& f = code.field();
    const auto units = hurwitz_units();
    const auto elements = f.elements();
    for (std::size_t t = 0; t < options.random_trials; ++t) {
      auto rng = stream_rng(options.seed, t + 1);
      std::uniform_int_distribution<std::size_t> elem(0, elements.size() - 1);
      std::vector<EisensteinInt> message(static_cast<std::size_t>(code.k()));
      for (auto& m : message) m = elements[elem(rng)];
      auto c = encode(code, message);
      if (code.error_model() == ErrorModel::kHurwitz) {
        std::uniform_int_distribution<std::size_t> unit(0, units.size() - 1);
        const auto h = units[unit(rng)];
        for (auto& x : c) x = h * x;
        c = canonicalize(code, c);
      }
      std::uniform_int_distribution<std::size_t> pat(0, patterns.size() - 1);
      jobs.push_back({std::move(c), patterns[pat(rng)]});
    }
  }
  return jobs;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const auto chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * chunk; i < std::min(count, (t + 1) * chunk); ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::int64_t weight_by_box_search(const HurwitzInt& q, const HurwitzInt& pi,
                                  std::int64_t box_radius) {
  if (pi.norm() == 0) throw std::invalid_argument("weight_by_box_search: zero modulus");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const auto r = box_radius;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) {
      for (std::int64_t c = -r; c <= r; ++c) {
        for (std::int64_t d = -r; d <= r; ++d) {
          const auto x = q - HurwitzInt::from_integers(a, b, c, d) * pi;
          best = std::min(best, lightest_split(x.doubled()));
        }
      }
    }
  }
  return best;
}

std::int64_t default_box_radius(const HurwitzInt& q, const HurwitzInt& pi) {
  const auto ratio = std::sqrt(static_cast<double>(q.norm()) / static_cast<double>(pi.norm()));
  return static_cast<std::int64_t>(std::ceil(ratio)) + 3;
}

std::vector<CodeVector> enumerate_codewords(const CodeSpec& code, std::size_t cap) {
  const auto& f = code.field();
  const auto p = static_cast<std::uint64_t>(f.p());
  const auto n = code.n();
  const bool hurwitz = code.error_model() == ErrorModel::kHurwitz;
  const auto field_count = saturating_pow(p, code.k(), cap);
  const auto variants = hurwitz ? saturating_pow(2, n, cap) : 1;
  if (field_count > cap || variants > cap || field_count * variants > cap) {
    throw std::length_error("codebook of " + code.describe() + " exceeds the enumeration cap");
  }

  std::vector<CodeVector> base;
  const auto elements = f.elements();
  if (saturating_pow(p, n, cap) <= cap) {
    // Filter every vector over R_pi by its syndrome.
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    CodeVector v(static_cast<std::size_t>(n));
    while (true) {
      for (std::size_t j = 0; j < idx.size(); ++j) v[j] = elements[idx[j]].to_hurwitz();
      if (syndrome(code, v).is_zero()) base.push_back(canonicalize(code, v));
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == elements.size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  } else {
    std::vector<std::size_t> idx(static_cast<std::size_t>(code.k()), 0);
    std::vector<EisensteinInt> m(idx.size());
    while (true) {
      for (std::size_t j = 0; j < idx.size(); ++j) m[j] = elements[idx[j]];
      base.push_back(encode(code, m));
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == elements.size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  }
  if (!hurwitz) return base;

  // Each left-ideal class splits into the right classes of x and x + w*pi.
  const auto shift = HurwitzInt::w() * f.modulus().quaternion();
  std::vector<CodeVector> out;
  for (const auto& c : base) {
    for (std::uint64_t mask = 0; mask < variants; ++mask) {
      CodeVector v = c;
      for (std::int64_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1) v[static_cast<std::size_t>(j)] += shift;
      }
      out.push_back(canonicalize(code, v));
    }
  }
  return out;
}

std::int64_t vector_distance(const CodeSpec& code, const HurwitzResidueSystem& system,
                             std::span<const HurwitzInt> a, std::span<const HurwitzInt> b) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto diff = a[j] - b[j];
    d += code.error_model() == ErrorModel::kResidueField ? system.ideal_weight(diff)
                                                         : system.weight(diff);
  }
  return d;
}

NearestCodewords brute_force_decode(const CodeSpec& code, const HurwitzResidueSystem& system,
                                    const std::vector<CodeVector>& codebook,
                                    std::span<const HurwitzInt> r) {
  NearestCodewords out;
  out.distance = kInfiniteDistance;
  for (const auto& c : codebook) {
    const auto d = vector_distance(code, system, r, c);
    if (d < out.distance) {
      out.distance = d;
      out.codewords.clear();
    }
    if (d == out.distance) out.codewords.push_back(c);
  }
  return out;
}

NearestCodewords brute_force_decode(const CodeSpec& code, const HurwitzResidueSystem& system,
                                    std::span<const HurwitzInt> r, std::size_t cap) {
  return brute_force_decode(code, system, enumerate_codewords(code, cap), r);
}

std::int64_t min_hurwitz_distance(const CodeSpec& code, const HurwitzResidueSystem& system,
                                  std::size_t cap) {
  const CodeVector zero(static_cast<std::size_t>(code.n()));
  std::int64_t best = kInfiniteDistance;
  for (const auto& c : enumerate_codewords(code, cap)) {
    if (c == zero) continue;
    best = std::min(best, vector_distance(code, system, c, zero));
  }
  return best;
}

std::vector<ErrorPattern> enumerate_error_class(const CodeSpec& code, const std::string& label) {
  if (std::find(kErrorClassLabels.begin(), kErrorClassLabels.end(), label) ==
      kErrorClassLabels.end()) {
    throw std::invalid_argument("unknown error class '" + label + "'");
  }
  const bool hz = label.starts_with("hz-");
  if (hz != (code.error_model() == ErrorModel::kHurwitz)) {
    throw std::invalid_argument("error class '" + label + "' does not apply to " + code.describe());
  }
  const auto& f = code.field();
  const auto n = code.n();
  const auto w = HurwitzInt::w();
  const auto one = HurwitzInt::one();
  const std::vector<HurwitzInt> unit_weight = {one, -one, w, -w};
  const std::vector<HurwitzInt> six = {one, -one, w, -w, w * w, -(w * w)};
  const auto lipschitz_units = [] {
    std::vector<HurwitzInt> v;
    for (auto u : kLipschitzUnits) v.push_back(to_hurwitz(u));
    return v;
  }();

  if (label == "single-unit") return singles(n, six);
  if (label == "single-any") return singles(n, field_values(f));
  if (label == "double-unit") return pairs(n, square(unit_weight));
  if (label == "double-any") return pairs(n, square(field_values(f)));
  if (label == "hz-single-unit") {
    std::vector<HurwitzInt> v;
    for (const auto& a : lipschitz_units) {
      for (const auto& t : {one, w, w * w}) {
        for (const auto& b : lipschitz_units) v.push_back(a * t * b);
      }
    }
    return singles(n, dedupe(code, v));
  }
  if (label == "hz-single-any") {
    std::vector<HurwitzInt> v;
    for (const auto& q : field_values(f)) {
      for (const auto& mu : lipschitz_units) {
        v.push_back(mu * q);
        v.push_back(q * mu);
      }
    }
    return singles(n, dedupe(code, v));
  }
  // hz-double-shared-unit: (mu w^t1, +-mu w^t2) or (w^t1 mu, +-w^t2 mu).
  std::map<std::pair<HurwitzInt, HurwitzInt>, std::pair<HurwitzInt, HurwitzInt>> by_class;
  for (const auto& mu : lipschitz_units) {
    for (const auto& a : six) {
      for (const auto& b : six) {
        for (const auto& [x, y] : {std::pair{mu * a, mu * b}, std::pair{a * mu, b * mu}}) {
          by_class.try_emplace({canonical_entry(code, x), canonical_entry(code, y)}, std::pair{x, y});
        }
      }
    }
  }
  std::vector<std::pair<HurwitzInt, HurwitzInt>> values;
  for (const auto& [k, v] : by_class) values.push_back(v);
  return pairs(n, values);
}

SweepReport sweep_error_class(const CodeSpec& code, const std::string& label,
                              const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.code = code.describe();
  report.label = label;
  const auto jobs = build_jobs(code, label, options, report.sampled);

  struct Outcome {
    bool success = false;
    std::string method;
    std::string summary;
  };
  std::vector<Outcome> outcomes(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const auto& job = jobs[i];
    const auto r = add_errors(code, job.codeword, job.pattern);
    const auto result = decode(code, r);
    auto& o = outcomes[i];
    o.summary = summarize(result);
    if (const auto* c = std::get_if<Corrected>(&result)) {
      o.method = c->method;
      o.success = same_codeword(code, c->codeword, job.codeword);
    } else {
      o.method = std::holds_alternative<NoError>(result) ? "no-error" : "failure";
    }
  });

  report.total = jobs.size();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& o = outcomes[i];
    ++report.methods[o.method];
    if (o.method == "exhaustive-fallback") ++report.fallbacks;
    if (o.success) {
      ++report.successes;
    } else {
      report.failures.push_back({jobs[i].codeword, jobs[i].pattern, o.summary});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

AgreementReport oracle_agreement(const CodeSpec& code, const HurwitzResidueSystem& system,
                                 const std::string& label, const SweepOptions& options) {
  bool sampled = false;
  const auto jobs = build_jobs(code, label, options, sampled);
  const auto codebook = enumerate_codewords(code);
  enum class Verdict { kAgree, kTie, kDisagree };
  std::vector<Verdict> verdicts(jobs.size());
  std::vector<std::string> summaries(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const auto r = add_errors(code, jobs[i].codeword, jobs[i].pattern);
    const auto nearest = brute_force_decode(code, system, codebook, r);
    if (nearest.codewords.size() != 1) {
      verdicts[i] = Verdict::kTie;
      return;
    }
    const auto result = decode(code, r);
    const auto* c = std::get_if<Corrected>(&result);
    const bool same = c ? same_codeword(code, c->codeword, nearest.codewords.front())
                        : std::holds_alternative<NoError>(result) &&
                              same_codeword(code, r, nearest.codewords.front());
    verdicts[i] = same ? Verdict::kAgree : Verdict::kDisagree;
    summaries[i] = summarize(result) + "; nearest at distance " + std::to_string(nearest.distance);
  });
  AgreementReport report;
  report.total = jobs.size();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::kAgree:
        ++report.agree;
        break;
      case Verdict::kTie:
        ++report.ties;
        break;
      case Verdict::kDisagree:
        ++report.disagree;
        report.disagreements.push_back({jobs[i].codeword, jobs[i].pattern, summaries[i]});
        break;
    }
  }
  return report;
}

CardinalityReport verify_cardinalities(const HurwitzInt& pi) {
  const auto n = pi.norm();
  if (n <= 1) throw std::invalid_argument("verify_cardinalities: modulus must not be zero or a unit");
  CardinalityReport r;
  r.norm = n;
  r.lipschitz = enumerate_lipschitz_classes(pi);
  r.hurwitz = enumerate_hurwitz_classes(pi).size();
  r.expected_lipschitz = n * n;
  r.expected_hurwitz = 2 * n * n;
  r.stated_hurwitz = 2 * n * n - 1;
  return r;
}

MetricAxiomReport check_metric_axioms(const HurwitzResidueSystem& system, std::size_t triples,
                                      std::uint64_t seed) {
  MetricAxiomReport r;
  const auto reps = system.representatives();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      ++r.pairs;
      const auto d = system.distance(reps[i], reps[j]);
      if ((d == 0) != (i == j) || d < 0) ++r.identity_violations;
      if (d != system.distance(reps[j], reps[i])) ++r.symmetry_violations;
    }
  }
  auto rng = stream_rng(seed, 0);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& a = reps[pick(rng)];
    const auto& b = reps[pick(rng)];
    const auto& c = reps[pick(rng)];
    ++r.triples;
    if (system.distance(a, c) > system.distance(a, b) + system.distance(b, c)) {
      ++r.triangle_violations;
    }
  }
  return r;
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace hurwitz

#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "circanon/canon.hpp"
#include "circanon/cyclotomic.hpp"
#include "circanon/spectral.hpp"
#include "circanon/walk.hpp"

namespace circanon::exp {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool eigenvalues_equal(const ConnectionSet& s, int a, int b) {
  const int n = s.modulus();
  const CycloReducer& red = cyclo_reducer(n);
  std::vector<long long> ca(n, 0), cb(n, 0);
  for (int j : s.elements()) {
    ca[static_cast<int>((static_cast<long long>(a) * j) % n)] += 1;
    cb[static_cast<int>((static_cast<long long>(b) * j) % n)] += 1;
  }
  if (red.fits_int64(n)) return red.reduce_counts(ca) == red.reduce_counts(cb);
  return red.reduce_counts_exact(ca) == red.reduce_counts_exact(cb);
}

double median_of(std::vector<long long> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[m]);
  return 0.5 * static_cast<double>(values[m - 1] + values[m]);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct TrialContext {
  const ExperimentSpec& spec;
  bool directed;
  std::vector<std::string>& failures;
  std::mutex& failures_mutex;

  void fail(const std::string& message) {
    std::lock_guard<std::mutex> lock(failures_mutex);
    failures.push_back(message);
  }
};

void run_simple_or_saturated_trial(TrialContext& ctx, TrialRecord& rec, Rng& rng) {
  const int n = rec.n;
  const ConnectionSet s = sample_cayley(n, ctx.directed, rng);
  if (ctx.directed) {
    rec.simple = has_simple_spectrum(s) ? 1 : 0;
  } else {
    rec.saturated = has_saturated_spectrum(s) ? 1 : 0;
  }
  if (rec.trial % ctx.spec.cross_check_stride == 0) {
    // Exact cross-verification: a simple (saturated) spectrum forces the walk
    // predicate; the converse is weaker, so only the implication is checked.
    if (ctx.directed) {
      rec.walk_discrete = is_walk_discrete(cayley(s), 0) ? 1 : 0;
      if (rec.simple == 1 && rec.walk_discrete == 0) {
        ctx.fail("consistency: simple spectrum without walk-discreteness at n=" +
                 std::to_string(n) + " trial=" + std::to_string(rec.trial) +
                 " S=" + s.to_string());
      }
    } else {
      rec.walk_saturated = is_walk_saturated(s) ? 1 : 0;
      if (rec.saturated == 1 && rec.walk_saturated == 0) {
        ctx.fail("consistency: saturated spectrum without walk-saturation at n=" +
                 std::to_string(n) + " trial=" + std::to_string(rec.trial) +
                 " S=" + s.to_string());
      }
    }
  }
}

// Returns 1 when the lambda_p = lambda_2p collision occurred.
int run_collision_trial(TrialContext& ctx, TrialRecord& rec, Rng& rng) {
  const int n = rec.n;
  const int p = n / 3;
  const ConnectionSet s = sample_cayley(n, true, rng);
  const int collision = eigenvalues_equal(s, p, 2 * p) ? 1 : 0;
  rec.simple = has_simple_spectrum(s) ? 1 : 0;
  if (collision && rec.simple) {
    ctx.fail("consistency: collision implies non-simple spectrum, n=" + std::to_string(n) +
             " S=" + s.to_string());
  }
  if (rec.trial % ctx.spec.cross_check_stride == 0) {
    rec.walk_discrete = is_walk_discrete(cayley(s), 0) ? 1 : 0;
    if (rec.simple == 1 && rec.walk_discrete == 0) {
      ctx.fail("consistency: simple spectrum without walk-discreteness at n=" +
               std::to_string(n));
    }
  }
  return collision;
}

void run_canon_trial(TrialContext& ctx, TrialRecord& rec, Rng& rng, ExactSampler* sampler) {
  const int n = rec.n;
  Digraph x(1);
  std::optional<ConnectionSet> s;
  switch (ctx.spec.model) {
    case ModelKind::cayley:
      s = sample_cayley(n, ctx.directed, rng);
      x = cayley(*s);
      break;
    case ModelKind::unlabeled:
      s = sampler->sample_unlabeled(rng);
      x = cayley(*s);
      break;
    case ModelKind::labeled:
      x = sampler->sample_labeled(rng);
      break;
  }

  const auto canonize = [&](const Digraph& g) {
    return ctx.directed ? canonize_digraph(g) : canonize_graph(g);
  };
  const auto start = std::chrono::steady_clock::now();
  const CanonResult first = canonize(x);
  rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();

  const Digraph y = relabel(x, random_permutation(n, rng));
  const CanonResult second = canonize(y);
  if (first.ok() != second.ok()) {
    ctx.fail("canonicity: success verdict changed under relabeling, n=" + std::to_string(n) +
             " trial=" + std::to_string(rec.trial));
  } else if (first.ok() && !(*first.canonical_form == *second.canonical_form)) {
    ctx.fail("canonicity: canonical forms differ under relabeling, n=" + std::to_string(n) +
             " trial=" + std::to_string(rec.trial));
  }
  rec.canon_success = first.ok() ? 1 : 0;

  if (s && rec.trial % ctx.spec.cross_check_stride == 0) {
    if (ctx.directed) {
      rec.simple = has_simple_spectrum(*s) ? 1 : 0;
      rec.walk_discrete = is_walk_discrete(cayley(*s), 0) ? 1 : 0;
      if (rec.simple == 1 && rec.walk_discrete == 0) {
        ctx.fail("consistency: simple spectrum without walk-discreteness at n=" +
                 std::to_string(n));
      }
      if (rec.walk_discrete == 1 && rec.canon_success == 0) {
        ctx.fail("sufficiency: walk-discrete input not canonized at n=" + std::to_string(n));
      }
    } else {
      rec.saturated = has_saturated_spectrum(*s) ? 1 : 0;
      rec.walk_saturated = is_walk_saturated(*s) ? 1 : 0;
      if (rec.saturated == 1 && rec.walk_saturated == 0) {
        ctx.fail("consistency: saturated spectrum without walk-saturation at n=" +
                 std::to_string(n));
      }
      if (rec.walk_saturated == 1 && rec.canon_success == 0) {
        ctx.fail("sufficiency: walk-saturated input not canonized at n=" + std::to_string(n));
      }
    }
  }
}

void append_record(std::ostringstream& out, const TrialRecord& r) {
  auto verdict = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
  out << r.n << ',' << r.trial << ',' << r.seed << ',' << verdict(r.simple) << ','
      << verdict(r.saturated) << ',' << verdict(r.walk_discrete) << ','
      << verdict(r.walk_saturated) << ',' << verdict(r.canon_success) << ','
      << verdict(r.ccr_success) << ',' << verdict(r.firm) << ','
      << verdict(r.multiplier_free) << ',' << r.micros << '\n';
}

}  // namespace

WilsonInterval wilson(long long successes, long long trials, double z) {
  WilsonInterval w;
  if (trials <= 0) return w;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (p + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

const char* experiment_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::simple_spectrum: return "simple-spectrum";
    case ExperimentKind::saturated: return "saturated";
    case ExperimentKind::collision_3p: return "3p-collision";
    case ExperimentKind::canon_pipeline: return "canon-pipeline";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_name(const std::string& name) {
  for (ExperimentKind k :
       {ExperimentKind::simple_spectrum, ExperimentKind::saturated,
        ExperimentKind::collision_3p, ExperimentKind::canon_pipeline}) {
    if (name == experiment_name(k)) return k;
  }
  return std::nullopt;
}

double exact_collision_probability(int p) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(p),
               static_cast<unsigned long>(p));
  mpz_class denom(1);
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), 2 * static_cast<unsigned long>(p));
  return mpq_class(binom, denom).get_d();
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.ns.empty()) throw std::invalid_argument("experiment: empty n-range");
  if (spec.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");

  const bool directed = spec.kind == ExperimentKind::saturated
                            ? false
                            : (spec.kind == ExperimentKind::canon_pipeline ? spec.directed : true);
  if (spec.kind == ExperimentKind::collision_3p) {
    for (int n : spec.ns) {
      if (n % 3 != 0 || !is_prime(n / 3)) {
        throw std::invalid_argument("3p-collision: every n must be 3p with p prime");
      }
    }
  }
  if (spec.kind != ExperimentKind::canon_pipeline && spec.model != ModelKind::cayley) {
    throw std::invalid_argument("experiment: only canon-pipeline supports non-Cayley models");
  }

  ExperimentResult result;
  std::mutex failures_mutex;
  TrialContext ctx{spec, directed, result.assertion_failures, failures_mutex};

  const std::size_t per_n = static_cast<std::size_t>(spec.trials);
  const std::size_t total = per_n * spec.ns.size();
  std::vector<TrialRecord> records(total);
  std::vector<long long> collisions(spec.ns.size(), 0);
  std::mutex collisions_mutex;

  std::atomic<std::size_t> cursor{0};
  const int jobs = std::max(1, spec.jobs);
  auto worker = [&]() {
    std::vector<long long> local_collisions(spec.ns.size(), 0);
    std::unique_ptr<ExactSampler> sampler;
    int sampler_n = -1;
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= total) break;
      const std::size_t n_idx = i / per_n;
      const long long trial = static_cast<long long>(i % per_n);
      const int n = spec.ns[n_idx];
      TrialRecord& rec = records[i];
      rec.n = n;
      rec.trial = trial;
      Rng rng = Rng::derive(spec.seed, {static_cast<std::uint64_t>(spec.kind),
                                        static_cast<std::uint64_t>(n),
                                        static_cast<std::uint64_t>(trial)});
      rec.seed = rng.next_u64();
      rng = Rng(rec.seed);
      switch (spec.kind) {
        case ExperimentKind::simple_spectrum:
        case ExperimentKind::saturated:
          run_simple_or_saturated_trial(ctx, rec, rng);
          break;
        case ExperimentKind::collision_3p:
          local_collisions[n_idx] += run_collision_trial(ctx, rec, rng);
          break;
        case ExperimentKind::canon_pipeline:
          if (spec.model != ModelKind::cayley && sampler_n != n) {
            sampler = std::make_unique<ExactSampler>(n, directed);
            sampler_n = n;
          }
          run_canon_trial(ctx, rec, rng, sampler.get());
          break;
      }
    }
    if (spec.kind == ExperimentKind::collision_3p) {
      std::lock_guard<std::mutex> lock(collisions_mutex);
      for (std::size_t k = 0; k < collisions.size(); ++k) collisions[k] += local_collisions[k];
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Summaries in trial-index order (records are already deterministic).
  std::ostringstream out;
  out << "n,trial,seed,simple_spectrum,saturated_spectrum,walk_discrete,walk_saturated,"
         "canon_success,ccr_success,firm,multiplier_free,micros\n";
  for (const TrialRecord& r : records) append_record(out, r);

  auto assert_check = [&](bool ok, const std::string& what) {
    out << "# assert " << what << ": " << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok) result.assertion_failures.push_back(what);
  };

  out << "# experiment=" << experiment_name(spec.kind)
      << " model=" << (spec.model == ModelKind::cayley
                           ? "cayley"
                           : (spec.model == ModelKind::unlabeled ? "unlabeled" : "labeled"))
      << " directed=" << (directed ? 1 : 0) << " seed=" << spec.seed
      << " trials=" << spec.trials << '\n';

  for (std::size_t k = 0; k < spec.ns.size(); ++k) {
    const int n = spec.ns[k];
    PerNSummary s;
    s.n = n;
    s.trials = spec.trials;
    std::vector<long long> micros;
    micros.reserve(per_n);
    for (std::size_t i = k * per_n; i < (k + 1) * per_n; ++i) {
      const TrialRecord& r = records[i];
      switch (spec.kind) {
        case ExperimentKind::simple_spectrum:
          s.events += (r.simple == 0);
          break;
        case ExperimentKind::saturated:
          s.events += (r.saturated == 0);
          break;
        case ExperimentKind::collision_3p:
          break;  // aggregated separately
        case ExperimentKind::canon_pipeline:
          s.events += (r.canon_success == 0);
          micros.push_back(r.micros);
          break;
      }
    }
    if (spec.kind == ExperimentKind::collision_3p) s.events = collisions[k];
    s.rate = static_cast<double>(s.events) / static_cast<double>(s.trials);
    s.interval = wilson(s.events, s.trials);
    s.median_micros = median_of(std::move(micros));
    if (spec.kind == ExperimentKind::collision_3p) {
      s.reference = exact_collision_probability(n / 3);
    }
    result.per_n.push_back(s);

    out << "# stat n=" << n << " trials=" << s.trials << " events=" << s.events
        << " rate=" << format_double(s.rate) << " wilson_lo=" << format_double(s.interval.lo)
        << " wilson_hi=" << format_double(s.interval.hi);
    if (spec.kind == ExperimentKind::collision_3p) {
      out << " exact=" << format_double(s.reference);
    }
    out << '\n';
  }

  // Experiment-specific assertions.
  switch (spec.kind) {
    case ExperimentKind::simple_spectrum:
    case ExperimentKind::saturated: {
      for (const PerNSummary& s : result.per_n) {
        assert_check(s.rate <= spec.bound_constant / std::sqrt(static_cast<double>(s.n)),
                     "failure rate at n=" + std::to_string(s.n) + " bounded by C/sqrt(n)");
      }
      for (std::size_t k = 1; k < result.per_n.size(); ++k) {
        if (result.per_n[k].n <= result.per_n[k - 1].n) continue;
        assert_check(result.per_n[k].interval.lo <= result.per_n[k - 1].interval.hi,
                     "failure rate non-increasing within confidence intervals at n=" +
                         std::to_string(result.per_n[k].n));
      }
      break;
    }
    case ExperimentKind::collision_3p: {
      for (const PerNSummary& s : result.per_n) {
        const double exact = s.reference;
        const double sigma =
            std::sqrt(std::max(s.rate * (1.0 - s.rate), 1e-12) / static_cast<double>(s.trials));
        assert_check(s.rate >= exact - 4.0 * sigma,
                     "collision rate at n=" + std::to_string(s.n) +
                         " not below the exact value (4-sigma slack)");
        assert_check(std::abs(s.rate - exact) <= spec.relative_tolerance * exact,
                     "collision rate at n=" + std::to_string(s.n) + " within relative tolerance");
      }
      break;
    }
    case ExperimentKind::canon_pipeline: {
      if (spec.model == ModelKind::cayley) {
        for (const PerNSummary& s : result.per_n) {
          assert_check(1.0 - s.rate >= 1.0 - spec.bound_constant / std::sqrt(s.n),
                       "canonization success rate at n=" + std::to_string(s.n) +
                           " at least 1 - C/sqrt(n)");
        }
      }
      if (result.per_n.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double count = static_cast<double>(result.per_n.size());
        for (const PerNSummary& s : result.per_n) {
          const double lx = std::log(static_cast<double>(s.n));
          const double ly = std::log(std::max(s.median_micros, 1.0));
          sx += lx;
          sy += ly;
          sxx += lx * lx;
          sxy += lx * ly;
        }
        result.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        out << "# timing slope=" << format_double(result.slope) << '\n';
      }
      for (const PerNSummary& s : result.per_n) {
        out << "# timing n=" << s.n << " median_micros=" << format_double(s.median_micros)
            << '\n';
      }
      break;
    }
  }

  result.assertions_passed = result.assertion_failures.empty();
  for (const std::string& f : result.assertion_failures) {
    out << "# failure " << f << '\n';
  }
  out << "# result: " << (result.assertions_passed ? "PASS" : "FAIL") << '\n';
  result.csv = out.str();
  return result;
}

}  // namespace circanon::exp

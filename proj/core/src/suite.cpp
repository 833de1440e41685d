#include "cpotts/suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cpotts/bilateral.hpp"
#include "cpotts/errors.hpp"
#include "cpotts/hypergeometric.hpp"
#include "cpotts/identities.hpp"
#include "cpotts/rapidity.hpp"
#include "cpotts/transfer.hpp"

namespace cpotts {

namespace {

using Results = std::vector<IdentityResult>;

struct TrialContext {
  const SuiteConfig& config;
  const UnityContext& ctx;
  Modulus modulus;
  std::uint64_t seed;

  double tol(double fallback) const { return config.tol.value_or(fallback); }
};

using TrialFn = std::function<Results(const TrialContext&)>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::vector<Rapidity> family(const TrialContext& t, int count) {
  RapiditySampler sampler(t.seed, t.modulus, t.ctx);
  return sampler.next_family(count);
}

// Secondary stream for draws that are not rapidities.
std::mt19937_64 aux_rng(const TrialContext& t) { return std::mt19937_64(splitmix64(t.seed ^ 0xA5A5A5A5ULL)); }

Complex draw_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> r2(0.0, radius * radius);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  return std::polar(std::sqrt(r2(rng)), phase(rng));
}

Complex draw_annulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r2(0.04, 2.25);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  return std::polar(std::sqrt(r2(rng)), phase(rng));
}

Results one(IdentityResult r) { return Results{std::move(r)}; }

Results trial_reflection(const TrialContext& t) {
  const auto f = family(t, 2);
  return one(check_reflection(f[0], f[1], t.ctx, t.tol(1e-10)));
}

Results trial_inversion(const TrialContext& t) {
  const auto f = family(t, 2);
  return one(inversion_constant(f[0], f[1], t.ctx, t.tol(1e-10)));
}

Results trial_star_triangle(const TrialContext& t) {
  const auto f = family(t, 3);
  return one(star_triangle_constant(f[0], f[1], f[2], t.ctx, t.tol(1e-9)));
}

Results trial_4phi3(const TrialContext& t) {
  const auto f = family(t, 3);
  auto rng = aux_rng(t);
  std::uniform_int_distribution<int> spin(0, t.ctx.order() - 1);
  const int a = spin(rng), b = spin(rng), c = spin(rng);
  return one(check_4phi3(f[0], f[1], f[2], a, b, c, t.ctx, t.tol(1e-9)));
}

Results trial_fourier(const TrialContext& t) {
  const auto f = family(t, 2);
  return one(check_fourier_phi21(f[0], f[1], t.ctx, t.tol(1e-10)));
}

Results trial_phi21_closed(const TrialContext& t) {
  std::mt19937_64 rng(t.seed);
  const CyclicTriple c = sample_cyclic_triple(rng, t.ctx);
  return one(check_phi21_closed(c.x, c.y, c.z, t.ctx, t.tol(1e-8), 1e-7));
}

Results trial_wff(const TrialContext& t) {
  std::mt19937_64 rng(t.seed);
  const CyclicTriple c = sample_cyclic_triple(rng, t.ctx);
  return one(check_wff(c.x, c.y, c.z, t.ctx, t.tol(1e-9)));
}

Results trial_shift(const TrialContext& t) {
  std::mt19937_64 rng(t.seed);
  const CyclicTriple c = sample_cyclic_triple(rng, t.ctx);
  Results out;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 2; ++k) out.push_back(check_shift_recursion(c.x, c.y, c.z, m, n, k, t.ctx, t.tol(1e-10)));
  return out;
}

Results trial_phi32(const TrialContext& t) {
  std::mt19937_64 rng(t.seed);
  const int N = t.ctx.order();
  const double tol = t.tol(1e-9);
  Results out;
  const Phi32Params g = sample_phi32_params(rng, t.ctx, false);
  for (int b = 0; b < N; ++b) {
    IdentityResult r = check_phi32_transform(g.x1, g.x2, g.y1, g.y2, g.z, b, t.ctx, tol);
    if (b != 0) r.record_only("z1 branch sweep");
    out.push_back(std::move(r));
  }
  const Phi32Params w = sample_phi32_params(rng, t.ctx, true);
  IdentityResult r = check_phi32_transform(w.x1, w.x2, w.y1, w.y2, w.z, 0, t.ctx, tol);
  r.add("specialization", std::string("z=omega"));
  out.push_back(std::move(r));
  return out;
}

Results trial_euler(const TrialContext& t) {
  auto rng = aux_rng(t);
  const int N = t.ctx.order();
  const Complex tv = draw_disk(rng, 1.5);
  const Complex x = draw_annulus(rng);
  const Complex y = draw_annulus(rng);
  Results out;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int g = 1; g <= N; ++g) {
        const int s = a + b - g;
        if (s < 0 || s > N) continue;
        try {
          IdentityResult r = check_euler_analog(a, b, g, tv, t.ctx, t.tol(1e-11));
          r.add("property", std::string("transformation"));
          out.push_back(std::move(r));
        } catch (const InputError& e) {
          IdentityResult r("euler-analog", t.tol(1e-11));
          r.add("N", std::int64_t{N})
              .add("alpha", std::int64_t{a})
              .add("beta", std::int64_t{b})
              .add("gamma", std::int64_t{g})
              .add("property", std::string("transformation"));
          out.push_back(std::move(r.skip(e.what())));
        }
        try {
          IdentityResult r = check_euler_chain(a, b, g, x, y, 0, t.ctx, t.tol(1e-9));
          r.name = "euler-analog";
          r.add("property", std::string("chain"));
          if (g > std::min(a, b)) r.record_only("chain recorded only for gamma > min(alpha, beta)");
          out.push_back(std::move(r));
        } catch (const DomainError& e) {
          IdentityResult r("euler-analog", t.tol(1e-9));
          r.add("N", std::int64_t{N})
              .add("alpha", std::int64_t{a})
              .add("beta", std::int64_t{b})
              .add("gamma", std::int64_t{g})
              .add("property", std::string("chain"));
          out.push_back(std::move(r.skip(e.what())));
        }
      }
  return out;
}

Results trial_rothe(const TrialContext& t) {
  auto rng = aux_rng(t);
  const Complex x = draw_disk(rng, 1.5);
  Results out;
  for (int a = 0; a < t.ctx.order(); ++a) out.push_back(check_rothe(a, x, t.ctx, t.tol(1e-12)));
  return out;
}

Results trial_saalschutz(const TrialContext& t) {
  auto rng = aux_rng(t);
  const Complex a = draw_annulus(rng);
  const Complex b = draw_annulus(rng);
  const Complex c = draw_annulus(rng);
  const Complex q = draw_disk(rng, 0.8);
  std::uniform_int_distribution<int> len(0, 8);
  return one(check_saalschutz(a, b, c, len(rng), q, t.tol(1e-11)));
}

Results trial_binomial(const TrialContext& t) {
  auto rng = aux_rng(t);
  const Complex a = draw_annulus(rng);
  const Complex x = draw_disk(rng, 0.9);
  const Complex q = draw_disk(rng, 0.8);
  return one(check_q_binomial_theorem(a, x, q, t.tol(1e-12)));
}

Results trial_bilateral(const TrialContext& t) {
  const BilateralSpec spec = solve_bilateral_params(t.seed);
  return Results{bilateral_gamma_sum(spec, 100000, t.tol(1e-5)),
                 check_bilateral_symmetries(spec, 100000, t.tol(1e-9))};
}

Results trial_transfer(const TrialContext& t) {
  const auto f = family(t, 3);
  return one(check_commutation(f[0], f[1], f[2], t.config.L, t.ctx, t.tol(1e-8)));
}

struct Entry {
  const char* name;
  TrialFn fn;
  bool needs_rapidities;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"reflection", trial_reflection, true},
      {"inversion", trial_inversion, true},
      {"star-triangle", trial_star_triangle, true},
      {"star-triangle-4phi3", trial_4phi3, true},
      {"fourier-phi21", trial_fourier, true},
      {"phi21-closed", trial_phi21_closed, false},
      {"wff", trial_wff, false},
      {"shift-recursion", trial_shift, false},
      {"phi32-transform", trial_phi32, false},
      {"euler-analog", trial_euler, false},
      {"rothe", trial_rothe, false},
      {"saalschutz", trial_saalschutz, false},
      {"binomial-q", trial_binomial, false},
      {"bilateral-gamma", trial_bilateral, false},
      {"transfer-commutation", trial_transfer, true},
  };
  return entries;
}

const Entry& lookup(const std::string& name) {
  for (const Entry& e : registry())
    if (name == e.name) return e;
  throw InputError("unknown identity '" + name + "'");
}

constexpr int kMaxTrialAttempts = 16;

// Resamples on domain or sampler errors; a trial that never produces a
// well-defined instance becomes a failing result.
Results run_trial(const Entry& entry, const SuiteConfig& config, const UnityContext& ctx, const Modulus& modulus,
                  int trial) {
  const std::uint64_t base = trial_seed(config.seed, entry.name, trial);
  std::string last_error;
  for (int attempt = 0; attempt < kMaxTrialAttempts; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? base : (splitmix64(base + attempt) >> 1);
    const TrialContext t{config, ctx, modulus, seed};
    try {
      Results results = entry.fn(t);
      for (IdentityResult& r : results) {
        r.params.insert(r.params.begin(), {"seed", static_cast<std::int64_t>(seed)});
        r.params.insert(r.params.begin(), {"trial", std::int64_t{trial}});
      }
      return results;
    } catch (const DomainError& e) {
      last_error = e.what();
    } catch (const SamplerError& e) {
      last_error = e.what();
    }
  }
  IdentityResult r(entry.name, config.tol.value_or(0.0));
  r.add("trial", std::int64_t{trial}).add("seed", static_cast<std::int64_t>(base));
  r.note = "no well-defined instance after " + std::to_string(kMaxTrialAttempts) + " draws: " + last_error;
  r.finish(std::numeric_limits<double>::quiet_NaN());
  return one(std::move(r));
}

int worker_count(const SuiteConfig& config) {
  if (config.threads > 0) return config.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::ordered_json complex_json(Complex z) {
  return nlohmann::ordered_json{{"re", number_or_null(z.real())}, {"im", number_or_null(z.imag())}};
}

nlohmann::ordered_json param_json(const ParamValue& v) {
  return std::visit(
      [](const auto& value) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return complex_json(value);
        } else if constexpr (std::is_same_v<T, double>) {
          return number_or_null(value);
        } else {
          return value;
        }
      },
      v);
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

const std::vector<std::string>& registered_identities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

std::vector<std::string> resolve_identities(const SuiteConfig& config) {
  std::vector<std::string> out;
  auto push = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const std::string& name : config.identities) {
    if (name == "all") {
      for (const std::string& n : registered_identities()) push(n);
    } else {
      lookup(name);
      push(name);
    }
  }
  return out;
}

void validate_config(const SuiteConfig& config) {
  if (config.N < 1) throw InputError("N must be >= 1");
  if (config.trials < 1) throw InputError("trials must be >= 1");
  if (config.L < 1) throw InputError("L must be >= 1");
  if (config.tol && !(*config.tol > 0.0)) throw InputError("tol must be > 0");
  if (config.threads < 0) throw InputError("threads must be >= 0");
  if (config.identities.empty()) throw InputError("no identities requested");
  const std::vector<std::string> names = resolve_identities(config);
  bool rapidities = false;
  for (const std::string& n : names) rapidities = rapidities || lookup(n).needs_rapidities;
  if (rapidities) {
    const double k = std::abs(config.k);
    if (k < RapiditySampler::kModulusGuard || std::abs(k - 1.0) < RapiditySampler::kModulusGuard) {
      throw InputError("|k| must stay away from 0 and 1 for sampled rapidities");
    }
  }
  if (std::find(names.begin(), names.end(), "transfer-commutation") != names.end()) {
    long double dim = 1;
    for (int j = 0; j < config.L; ++j) dim *= config.N;
    if (dim > kMaxTransferDimension) throw InputError("N^L exceeds the transfer matrix size guard");
  }
}

std::uint64_t trial_seed(std::uint64_t master, const std::string& identity, int trial) {
  const std::uint64_t stream = splitmix64(master ^ fnv1a(identity));
  // 63 bits so the seed round-trips through signed JSON integers.
  return splitmix64(stream + static_cast<std::uint64_t>(trial)) >> 1;
}

int IdentityRun::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.asserted && r.pass; }));
}

int IdentityRun::failed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.failed(); }));
}

int IdentityRun::unasserted() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.asserted; }));
}

double IdentityRun::max_residual() const {
  double worst = 0.0;
  for (const IdentityResult& r : results) {
    if (!r.asserted) continue;
    if (std::isnan(r.max_residual)) return std::numeric_limits<double>::quiet_NaN();
    worst = std::max(worst, r.max_residual);
  }
  return worst;
}

bool VerificationReport::all_pass() const {
  for (const IdentityRun& run : runs)
    if (run.failed() > 0) return false;
  return true;
}

VerificationReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  using Clock = std::chrono::steady_clock;
  const auto suite_start = Clock::now();
  const UnityContext ctx(config.N);
  const Modulus modulus = modulus_from_k(config.k);
  const int workers = std::max(1, std::min(worker_count(config), config.trials));

  VerificationReport report;
  report.config = config;
  for (const std::string& name : resolve_identities(config)) {
    const Entry& entry = lookup(name);
    const auto start = Clock::now();
    std::vector<Results> per_trial(static_cast<std::size_t>(config.trials));
    std::atomic<int> next{0};
    auto work = [&] {
      for (int i = next++; i < config.trials; i = next++) {
        per_trial[static_cast<std::size_t>(i)] = run_trial(entry, config, ctx, modulus, i);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (std::thread& th : pool) th.join();
    }
    IdentityRun run;
    run.name = name;
    run.trials = config.trials;
    for (Results& r : per_trial)
      for (IdentityResult& x : r) run.results.push_back(std::move(x));
    run.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    report.runs.push_back(std::move(run));
  }
  report.wall_time = std::chrono::duration<double>(Clock::now() - suite_start).count();
  return report;
}

std::string report_json(const VerificationReport& report, bool include_timing) {
  using json = nlohmann::ordered_json;
  const SuiteConfig& c = report.config;
  json config{{"N", c.N},
              {"k", complex_json(c.k)},
              {"L", c.L},
              {"trials", c.trials},
              {"seed", c.seed},
              {"tol", c.tol ? json(*c.tol) : json(nullptr)},
              {"identities", resolve_identities(c)},
              {"format", c.format == OutputFormat::Json ? "json" : "text"}};

  json results = json::array();
  json per_identity = json::object();
  int total = 0, passed = 0, failed = 0, unasserted = 0;
  for (const IdentityRun& run : report.runs) {
    for (const IdentityResult& r : run.results) {
      json params = json::object();
      for (const auto& [key, value] : r.params) params[key] = param_json(value);
      json item{{"name", r.name},
                {"identity", run.name},
                {"params", params},
                {"constant", r.constant ? complex_json(*r.constant) : json(nullptr)},
                {"max_residual", number_or_null(r.max_residual)},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"asserted", r.asserted}};
      if (!r.note.empty()) item["note"] = r.note;
      results.push_back(std::move(item));
    }
    json entry{{"trials", run.trials},
               {"results", run.results.size()},
               {"passed", run.passed()},
               {"failed", run.failed()},
               {"unasserted", run.unasserted()},
               {"max_residual", number_or_null(run.max_residual())}};
    if (include_timing) entry["wall_time"] = run.wall_time;
    per_identity[run.name] = std::move(entry);
    total += static_cast<int>(run.results.size());
    passed += run.passed();
    failed += run.failed();
    unasserted += run.unasserted();
  }
  json summary{{"total", total},
               {"passed", passed},
               {"failed", failed},
               {"unasserted", unasserted},
               {"all_pass", report.all_pass()},
               {"per_identity", per_identity}};
  if (include_timing) summary["wall_time"] = report.wall_time;
  json doc{{"config", config}, {"results", results}, {"summary", summary}};
  return doc.dump(2) + "\n";
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  const SuiteConfig& c = report.config;
  os << "N=" << c.N << " k=" << format_complex(c.k) << " L=" << c.L << " trials=" << c.trials
     << " seed=" << c.seed << "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %8s %8s %8s %10s %12s %10s\n", "identity", "results", "passed", "failed",
                "unasserted", "max_resid", "time_s");
  os << line;
  for (const IdentityRun& run : report.runs) {
    std::snprintf(line, sizeof line, "%-22s %8zu %8d %8d %10d %12.3e %10.3f\n", run.name.c_str(),
                  run.results.size(), run.passed(), run.failed(), run.unasserted(), run.max_residual(),
                  run.wall_time);
    os << line;
  }
  bool header = false;
  for (const IdentityRun& run : report.runs) {
    for (const IdentityResult& r : run.results) {
      if (!r.failed()) continue;
      if (!header) {
        os << "\nfailures:\n";
        header = true;
      }
      os << "  " << r.name;
      for (const auto& [key, value] : r.params) {
        if (key == "trial" || key == "seed") os << ' ' << key << '=' << std::get<std::int64_t>(value);
      }
      os << " residual=" << fmt("%.3e", r.max_residual) << " tol=" << fmt("%.1e", r.tolerance);
      if (!r.note.empty()) os << " (" << r.note << ')';
      os << '\n';
    }
  }
  os << '\n' << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " in " << fmt("%.2f", report.wall_time)
     << " s\n";
  return os.str();
}

Complex parse_complex(const std::string& text) {
  auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw InputError("cannot parse complex '" + text + "'");
    }
    if (used != part.size()) throw InputError("cannot parse complex '" + text + "'");
    return v;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return Complex(parse(text), 0.0);
  return Complex(parse(text.substr(0, comma)), parse(text.substr(comma + 1)));
}

std::string format_complex(Complex z) {
  // Shortest text that parses back to the same doubles.
  auto shortest = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  std::string out = shortest(z.real());
  if (z.imag() != 0.0) out += ',' + shortest(z.imag());
  return out;
}

}  // namespace cpotts

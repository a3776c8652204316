#include "meixner/suites.hpp"

#include "meixner/random_params.hpp"
#include "meixner/translation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace meixner {

namespace {

constexpr MeixnerOp kOps[] = {MeixnerOp::U,  MeixnerOp::V,      MeixnerOp::N,
                              MeixnerOp::a0, MeixnerOp::aminus, MeixnerOp::aplus};

VerifyReport translation_report(const MeixnerParams& p, std::size_t N) {
  const TranslationReport tr = translation_form(p, TranslationReport::Mode::exact_if_square, N);
  VerifyReport r;
  r.identity = "translation forms = Delta-power series on X^0..X^" + std::to_string(N);
  r.max_checked_degree = static_cast<long>(N);
  for (const TranslationAgreement& a : tr.agreement) {
    if (a.pass) continue;
    r.pass = false;
    r.identity += " (fails for " + to_string(a.op) + ")";
    r.first_failure = a.first_failure;
    break;
  }
  return r;
}

/// Compares a list of recovered values with the expected ones index by index.
void compare_sequence(VerifyReport& r, const std::vector<Rat>& got, const std::vector<Rat>& want, std::size_t from) {
  for (std::size_t n = from; n < want.size(); ++n) {
    if (n < got.size() && got[n] == want[n]) continue;
    r.pass = false;
    if (!r.first_failure || n < *r.first_failure) r.first_failure = n;
    return;
  }
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::universal: return "universal";
    case Suite::pmd: return "pmd";
    case Suite::gramschmidt: return "gramschmidt";
    case Suite::limit: return "limit";
    case Suite::doublecomm: return "doublecomm";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::universal, Suite::pmd, Suite::gramschmidt, Suite::limit, Suite::doublecomm}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerifyReport> universal_checks(const MeixnerParams& p, std::size_t N) {
  const SzegoJacobi sj = szego_jacobi(p);
  return verify_universal(sj, effective_truncation(sj, N));
}

std::vector<VerifyReport> pmd_checks(const MeixnerParams& p, std::size_t N) {
  std::vector<VerifyReport> out;
  for (MeixnerOp op : kOps) out.push_back(check_closed_form(op, p, N, N));
  const Rat Delta = derived(p).Delta;
  if (Delta == 0) out.push_back(one_meixner_limit_check(p, N));
  if (exact_sqrt(Delta)) out.push_back(translation_report(p, N));
  return out;
}

std::vector<VerifyReport> gramschmidt_checks(const MeixnerParams& p, std::size_t N) {
  const SzegoJacobi sj = szego_jacobi(p);
  const GramSchmidtResult gs = gram_schmidt_from_moments(moments_from_sj(sj, 2 * N), N);

  // With 2N moments alpha_0..alpha_{N-1} and omega_1..omega_N are determined;
  // a finite support stops both at the support bound.
  const std::size_t stop = sj.support_bound ? std::min(N, *sj.support_bound) : N;
  std::vector<Rat> alpha, omega{Rat(0)};
  for (std::size_t n = 0; n < stop; ++n) alpha.push_back(sj.alpha(n));
  for (std::size_t n = 1; n <= stop; ++n) omega.push_back(sj.omega(n));

  VerifyReport r;
  r.identity = "Gram-Schmidt on the moments recovers alpha_n and omega_n";
  r.max_checked_degree = static_cast<long>(stop);
  compare_sequence(r, gs.alpha, alpha, 0);
  compare_sequence(r, gs.omega, omega, 1);
  const auto expected_bound = (sj.support_bound && *sj.support_bound <= N) ? sj.support_bound : std::nullopt;
  if (gs.support_bound != expected_bound) {
    r.pass = false;
    r.identity += " (support bound mismatch)";
  }

  std::vector<VerifyReport> out{r};
  if (p.beta < 0) {
    const std::size_t n = *sj.support_bound - 1;
    const HankelStatus h = hankel_check(moments_from_sj(sj, 2 * (n + 1)), n + 1);
    VerifyReport hr;
    hr.identity = "Hankel minors degenerate first at order " + std::to_string(n + 1);
    hr.max_checked_degree = static_cast<long>(n + 1);
    if (h.kind != HankelStatus::Kind::degenerate || h.index != n + 1) {
      hr.pass = false;
      hr.first_failure = h.index;
    }
    out.push_back(hr);
  }
  return out;
}

std::vector<VerifyReport> limit_checks(const MeixnerParams& p, std::size_t N) {
  const MeixnerDerived d = derived(p);
  if (d.Delta != 0) throw std::invalid_argument("limit checks need alpha^2 == 4 beta");
  std::vector<VerifyReport> out{one_meixner_limit_check(p, N)};

  const PMDecomp num = pmd_number(p, N);
  const PMDecomp expected(0, {Poly{}, Poly::linear(1, -p.alpha0), Rat(-1, 2) * Poly::linear(p.alpha, d.tau)});
  VerifyReport nr;
  nr.identity = "N = (X - alpha0) D - (alpha X + tau) D^2 / 2";
  nr.max_checked_degree = static_cast<long>(N);
  if (!(num == expected.truncated(N))) {
    nr.pass = false;
    for (std::size_t n = 0; n <= N; ++n) {
      if (num.coefficient(n) != expected.coefficient(n)) {
        nr.first_failure = n;
        nr.residual = num.coefficient(n) - expected.coefficient(n);
        break;
      }
    }
  }
  out.push_back(nr);
  out.push_back(check_closed_form(MeixnerOp::U, p, N, N));
  out.push_back(translation_report(p, N));
  return out;
}

std::vector<VerifyReport> doublecomm_checks(const MeixnerParams& p, std::size_t N) {
  return {comm_UX_check(p, N), double_commutator_check(p, N)};
}

bool TrialResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyReport& r) { return r.pass; });
}

bool SuiteReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const TrialResult& t) { return t.pass(); });
}

SuiteReport run_suite(Suite suite, std::size_t degree, std::size_t trials, std::uint64_t seed) {
  if (degree < 4) throw std::invalid_argument("suite degree must be at least 4, got " + std::to_string(degree));
  SuiteReport report{suite, degree, trials, seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    report.results.push_back({i, suite == Suite::limit ? draw_params_delta_zero(rng) : draw_params(rng), {}});
  }

  auto run = [suite, degree](const MeixnerParams& p) {
    switch (suite) {
      case Suite::universal: return universal_checks(p, degree);
      case Suite::pmd: return pmd_checks(p, degree);
      case Suite::gramschmidt: return gramschmidt_checks(p, degree);
      case Suite::limit: return limit_checks(p, degree);
      case Suite::doublecomm: return doublecomm_checks(p, degree);
    }
    return std::vector<VerifyReport>{};
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        report.results[i].checks = run(report.results[i].params);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(trials, 1));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return report;
}

Json to_json(const SuiteReport& report) {
  Json results = Json::array();
  for (const TrialResult& t : report.results) {
    Json checks = Json::array();
    for (const VerifyReport& r : t.checks) checks.push_back(to_json(r));
    Json entry;
    entry["trial"] = t.trial;
    entry["params"] = to_json(t.params);
    entry["pass"] = t.pass();
    entry["checks"] = std::move(checks);
    results.push_back(std::move(entry));
  }
  Json out;
  out["suite"] = to_string(report.suite);
  out["degree"] = report.degree;
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["pass"] = report.pass();
  out["results"] = std::move(results);
  return out;
}

}  // namespace meixner

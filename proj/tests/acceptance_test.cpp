// Acceptance gate: twelve numbered criteria, one [PASS]/[FAIL] line each.
// Exits nonzero if any criterion fails.  argv[1] must point at the CLI
// binary (used by criterion 12).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cdhahn/cdhahn.hpp"

namespace {

using cdhahn::cdh::CdhParams;
using cdhahn::complex_math::Complex;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& label, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const std::vector<CdhParams>& param_grid() {
  static const std::vector<CdhParams> grid = {
      CdhParams(1.0, 1.5, 2.0), CdhParams(0.7, 2.0, 1.3), CdhParams(0.8, 1.2, 2.5)};
  return grid;
}

// --- criterion 1: gamma functional equation, conjugate symmetry, modulus ---
void criterion_gamma_identities() {
  namespace cm = cdhahn::complex_math;
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> coord(-29.5, 29.5);
  double worst_rec = 0.0, worst_conj = 0.0;
  int tested = 0;
  while (tested < 1000) {
    const Complex z(coord(rng), coord(rng));
    if (std::abs(z) > 29.5) continue;
    if (std::abs(z.imag()) < 0.05 && z.real() < 0.5) continue;
    ++tested;
    const Complex lhs = cm::gamma(z + 1.0);
    const Complex rhs = z * cm::gamma(z);
    worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::abs(lhs));
    const Complex sym = cm::gamma(std::conj(z)) - std::conj(cm::gamma(z));
    worst_conj = std::max(worst_conj, std::abs(sym) / std::abs(cm::gamma(z)));
  }
  double worst_mod = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double y = 20.0 * static_cast<double>(i) / 1000.0;
    const double m = cm::gamma_abs(Complex(0.0, y));
    worst_mod = std::max(worst_mod, std::abs(m * m * y * std::sinh(M_PI * y) / M_PI - 1.0));
  }
  const bool ok = worst_rec <= 1e-12 && worst_conj <= 1e-12 && worst_mod <= 1e-11;
  report(1, ok, "gamma recurrence, conjugate symmetry, modulus identity",
         "worst rel: recurrence " + fmt_double(worst_rec) + ", conjugation " +
             fmt_double(worst_conj) + ", modulus " + fmt_double(worst_mod));
}

// --- criterion 2: contiguous relation and Euler transformation ---
void criterion_derivation_chain() {
  namespace hg = cdhahn::hypergeometric;
  std::mt19937 rng(9182736);
  std::uniform_real_distribution<double> upper(-1.5, 2.0);
  std::uniform_real_distribution<double> lower(0.6, 3.0);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a(upper(rng), im(rng));
    const Complex b(upper(rng), im(rng));
    const Complex c(lower(rng), im(rng));
    const double r = radius(rng), th = angle(rng);
    const Complex z(r * std::cos(th), r * std::sin(th));

    const Complex lhs = (a + b - c) * hg::hyp2f1_series({a, b, c, z});
    const Complex rhs = a * (1.0 - z) * hg::hyp2f1_series({a + 1.0, b, c, z}) -
                        (c - b) * hg::hyp2f1_series({a, b - 1.0, c, z});
    worst = std::max(worst, std::abs(lhs - rhs) /
                                std::max(1.0, std::max(std::abs(lhs), std::abs(rhs))));

    const Complex direct = hg::hyp2f1_series({a, b, c, z});
    const Complex euler = std::exp((c - a - b) * std::log(1.0 - z)) *
                          hg::hyp2f1_series({c - a, c - b, c, z});
    worst = std::max(worst, std::abs(direct - euler) / std::max(1.0, std::abs(direct)));
  }
  report(2, worst <= 1e-11, "contiguous relation and Euler transformation",
         "worst rel residual " + fmt_double(worst) + " over 200 samples");
}

// --- criterion 3: series near t = 1 against the closed form ---
void criterion_gauss_sum() {
  namespace hg = cdhahn::hypergeometric;
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> re(0.4, 1.8);
  std::uniform_real_distribution<double> im(-0.9, 0.9);
  std::uniform_real_distribution<double> shift(1.15, 1.85);
  hg::SeriesOptions probe;
  probe.max_terms = 1500000;
  probe.t_cutoff = 1.0;
  probe.partial_on_budget = true;
  const Complex t(1.0 - 1e-6, 0.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a(re(rng), im(rng));
    const Complex b(re(rng), im(rng));
    const Complex c = a + b + shift(rng);
    const Complex series = hg::hyp2f1_series({a, b, c, t}, probe);
    const Complex closed = hg::gauss_sum(a, b, c);
    worst = std::max(worst, std::abs(series - closed) / std::abs(closed));
  }
  report(3, worst <= 1e-4, "series at t = 1-1e-6 matches the unit-argument closed form",
         "worst rel gap " + fmt_double(worst) + " over 50 samples");
}

// --- criterion 4: generating function vs 200-term partial sums ---
void criterion_generating_function() {
  double worst = 0.0;
  for (const CdhParams& p : param_grid()) {
    for (double y : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, cdhahn::cdh::generating_function_check(p, y, {0.1, 0.3, 0.5}));
    }
  }
  report(4, worst <= 1e-9, "generating function matches partial sums",
         "worst abs mismatch " + fmt_double(worst) + " over 9 combinations x 3 points");
}

// --- criterion 5: recurrence vs direct evaluation ---
void criterion_recurrence_direct() {
  double worst = 0.0;
  for (const CdhParams& p : param_grid()) {
    for (double y : {0.5, 1.0, 2.0}) {
      const std::vector<double> rec = cdhahn::cdh::evaluate_recurrence(p, 50, y);
      for (long long n = 0; n <= 50; ++n) {
        const double direct = cdhahn::cdh::evaluate_direct(p, n, y);
        const double rel = std::abs(direct - rec[static_cast<std::size_t>(n)]) /
                           std::max(1.0, std::abs(rec[static_cast<std::size_t>(n)]));
        worst = std::max(worst, rel);
      }
    }
  }
  report(5, worst <= 1e-10, "recurrence agrees with the direct sum for n <= 50",
         "worst rel gap " + fmt_double(worst));
}

// --- criterion 6: weight normalization and orthogonality ---
void criterion_weight_orthogonality() {
  const std::vector<CdhParams> sets = {CdhParams(1.0, 1.5, 2.0), CdhParams(0.7, 2.0, 1.3),
                                       CdhParams(0.8, 1.2, 2.5), CdhParams(1.2, 0.9, 1.1),
                                       CdhParams(2.0, 3.0, 1.5)};
  double worst_norm = 0.0;
  for (const CdhParams& p : sets) {
    const auto r = cdhahn::quadrature::integrate_semi_infinite(
        [&](double y) { return cdhahn::cdh::weight(p, y); }, 1e-9);
    worst_norm = std::max(worst_norm, std::abs(r.value - 1.0));
  }
  const CdhParams base(1.0, 1.5, 2.0);
  double worst_excess = 0.0;  // off-diagonal integral over its allowed bound
  for (long long m = 0; m <= 8; ++m) {
    for (long long n = m + 1; n <= 8; ++n) {
      const double integral = cdhahn::quadrature::orthogonality_check(base, m, n);
      const double bound = 1e-7 * std::sqrt(cdhahn::cdh::norm_squared(base, m) *
                                            cdhahn::cdh::norm_squared(base, n));
      worst_excess = std::max(worst_excess, std::abs(integral) / bound);
    }
  }
  const bool ok = worst_norm <= 1e-8 && worst_excess <= 1.0;
  report(6, ok, "weight integrates to 1 and off-diagonal inner products vanish",
         "worst |norm-1| " + fmt_double(worst_norm) + ", worst off-diagonal/bound " +
             fmt_double(worst_excess));
}

// --- criterion 7: envelope-normalized error and pooled decay fit ---
void criterion_asymptotic_error() {
  const std::vector<long long> ns = {100, 200, 400, 800, 1600};
  double worst_scaled = 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const CdhParams& p : param_grid()) {
    for (double y : {0.5, 1.0, 2.0}) {
      const auto report_data = cdhahn::asymptotics::convergence_report(p, y, ns);
      for (const auto& e : report_data.entries) {
        worst_scaled = std::max(worst_scaled, e.env_error * static_cast<double>(e.n));
        const double lx = std::log(static_cast<double>(e.n));
        const double ly = std::log(e.env_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
      }
    }
  }
  const double denom = static_cast<double>(count) * sxx - sx * sx;
  const double slope = (static_cast<double>(count) * sxy - sx * sy) / denom;
  const bool ok = worst_scaled <= 5.0 && slope >= -1.5 && slope <= -0.5;
  report(7, ok, "envelope error <= 5/n with the expected pooled decay exponent",
         "worst n*e_n " + fmt_double(worst_scaled) + ", pooled exponent " +
             fmt_double(slope));
}

// --- criterion 8: amplitude-weight reciprocity ---
void criterion_reciprocity() {
  namespace cm = cdhahn::complex_math;
  double worst = 0.0;
  for (const CdhParams& p : param_grid()) {
    const long long n = 10;
    const double constant =
        2.0 / M_PI * cm::gamma(Complex(p.a() + p.b(), 0.0)).real() *
        std::pow(static_cast<double>(n), 2.0 * p.mu() - 2.0) /
        (cm::gamma(Complex(p.mu() + p.a(), 0.0)).real() *
         cm::gamma(Complex(p.mu() + p.b(), 0.0)).real());
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
      const double a = cdhahn::asymptotics::amplitude(p, y, n);
      const double product = a * a * cdhahn::cdh::weight(p, y);
      worst = std::max(worst, std::abs(product - constant) / constant);
    }
  }
  report(8, worst <= 1e-10, "amplitude squared times weight is constant in y",
         "worst rel deviation " + fmt_double(worst));
}

// --- criterion 9: comparison function absorbs the singularity ---
void criterion_remainder_decay() {
  const CdhParams p(1.0, 1.5, 2.0);
  const double y = 1.0;
  bool monotone = true;
  double prev = 0.0;
  std::string seq;
  for (int k = 1; k <= 5; ++k) {
    const double t = 1.0 - std::pow(10.0, -k);
    const Complex rhs = cdhahn::cdh::generating_function_rhs(p, y, Complex(t, 0.0));
    const Complex comp = cdhahn::asymptotics::comparison_function(p, y, Complex(t, 0.0));
    const double scaled = std::abs(rhs - comp) * std::pow(1.0 - t, p.mu());
    if (k > 1 && scaled >= prev) monotone = false;
    seq += (k > 1 ? " > " : "") + fmt_double(scaled);
    prev = scaled;
  }
  report(9, monotone, "scaled comparison-function remainder decays toward t = 1", seq);
}

// --- criterion 10: phase continuity ---
void criterion_phase_continuity() {
  const CdhParams p(1.0, 1.5, 2.0);
  const int points = 20000;
  double max_jump = 0.0;
  double prev = cdhahn::asymptotics::phase_gamma(p, 0.01);
  for (int i = 1; i < points; ++i) {
    const double y = 0.01 + (20.0 - 0.01) * static_cast<double>(i) /
                                static_cast<double>(points - 1);
    const double cur = cdhahn::asymptotics::phase_gamma(p, y);
    max_jump = std::max(max_jump, std::abs(cur - prev));
    prev = cur;
  }
  report(10, max_jump < 0.1, "phase shift has no branch jumps on (0.01, 20]",
         "max adjacent step " + fmt_double(max_jump) + " rad");
}

// --- criterion 11: bound-state spectrum ---
void criterion_spectrum() {
  using cdhahn::asymptotics::Channel;
  const auto entries =
      cdhahn::asymptotics::bound_state_spectrum(CdhParams::relaxed(-1.5, 2.0, 3.0));
  bool ok = entries.size() == 2 && entries[0].energy == -2.25 &&
            entries[1].energy == -0.25 && entries[0].channel == Channel::mu &&
            entries[1].channel == Channel::mu && entries[0].level == 0 &&
            entries[1].level == 1;
  ok = ok && cdhahn::asymptotics::bound_state_spectrum(CdhParams(1.0, 1.5, 2.0)).empty();
  report(11, ok, "spectrum at mu=-1.5 is exactly {-2.25, -0.25}, positive set is empty",
         entries.size() == 2 ? fmt_double(entries[0].energy) + ", " +
                                   fmt_double(entries[1].energy)
                             : "wrong entry count");
}

// --- criterion 12: CLI determinism and round-trip ---
struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& command) {
  CliResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

void criterion_cli(const char* cli_path) {
  if (!cli_path) {
    report(12, false, "CLI determinism", "no CLI path supplied on the command line");
    return;
  }
  const std::string cli = std::string("\"") + cli_path + "\"";
  const std::vector<std::string> invocations = {
      " eval --mu 1 --a 1.5 --b 2 --n 0 --y 1",
      " table --mu 1 --a 1.5 --b 2 --n 0,5,10 --y 0.5,1",
      " asym --mu 1 --a 1.5 --b 2 --y 0.5,1,2 --n 100",
      " converge --mu 1 --a 1.5 --b 2 --y 1 --n 100,200,400,800",
      " ortho --mu 1 --a 1.5 --b 2 --n 2 --tol 1e-8",
      " spectrum --mu -1.5 --a 2 --b 3",
      " genfun-check --mu 1 --a 1.5 --b 2 --y 1 --t 0.1,0.3,0.5",
      " converge --mu 1 --a 1.5 --b 2 --y 1 --n 100,200,400 --format json",
  };
  bool ok = true;
  std::string detail = "all runs byte-identical";
  for (const std::string& args : invocations) {
    const CliResult first = run_cli(cli + args);
    const CliResult second = run_cli(cli + args);
    if (first.status != 0 || second.status != 0) {
      ok = false;
      detail = "nonzero exit for" + args;
      break;
    }
    if (first.output.empty() || first.output != second.output) {
      ok = false;
      detail = "output mismatch for" + args;
      break;
    }
  }
  if (ok) {
    // Spot-check semantics: degree 0 evaluates to 1; spectrum rows are exact.
    const CliResult eval = run_cli(cli + " eval --mu 1 --a 1.5 --b 2 --n 0 --y 1");
    if (eval.output.find("0,1,1\n") == std::string::npos) {
      ok = false;
      detail = "eval smoke row missing";
    }
    const CliResult spectrum_run = run_cli(cli + " spectrum --mu -1.5 --a 2 --b 3");
    if (spectrum_run.output.find("mu,0,-2.25\n") == std::string::npos ||
        spectrum_run.output.find("mu,1,-0.25\n") == std::string::npos) {
      ok = false;
      detail = "spectrum smoke rows missing";
    }
  }
  if (ok) {
    const std::string csv_path = "acceptance_roundtrip.csv";
    const CliResult emit = run_cli(cli + " converge --mu 1 --a 1.5 --b 2 --y 1 --n " +
                                   "100,200,400,800 --out " + csv_path);
    const CliResult check = run_cli(cli + " --check " + csv_path);
    if (emit.status != 0 || check.status != 0 ||
        check.output.find("round-trip clean") == std::string::npos) {
      ok = false;
      detail = "CSV round-trip check failed";
    }
    std::remove(csv_path.c_str());
  }
  report(12, ok, "CLI output is deterministic and round-trips", detail);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_gamma_identities();
  criterion_derivation_chain();
  criterion_gauss_sum();
  criterion_generating_function();
  criterion_recurrence_direct();
  criterion_weight_orthogonality();
  criterion_asymptotic_error();
  criterion_reciprocity();
  criterion_remainder_decay();
  criterion_phase_continuity();
  criterion_spectrum();
  criterion_cli(argc > 1 ? argv[1] : nullptr);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}

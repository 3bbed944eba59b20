// cocycle-lab: command-line surface over the cocycle core library.
//
// Subcommands verify the library's exact identities (rotation-average of the
// log spectral radius vs. closed-form norm averages, the displacement
// involution's symmetry relations, the Haar preimage lemma), estimate
// Lyapunov exponents of driven SL(2,R) cocycles, and export branch/region
// tables. Reports are flat JSON (or CSV) with inputs echoed, both sides of
// the checked identity, the absolute difference, quadrature error estimates,
// and wall time. Exit status: 0 when every checked identity passes its
// tolerance, 1 on identity failure, 2 on input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cocycle/lyapunov.hpp>
#include <cocycle/mat2.hpp>
#include <cocycle/projective.hpp>
#include <cocycle/quadrature.hpp>
#include <cocycle/sampling.hpp>
#include <cocycle/word_io.hpp>
#include <cocycle/words.hpp>

namespace {

using nlohmann::ordered_json;
using namespace cocycle;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string command;
  std::string word_path;          // optional; required by some commands
  std::size_t nodes = 0;          // 0 = per-command default
  std::int64_t iterations = 0;    // 0 = per-command default
  std::uint64_t seed = 1;
  double c = 0.0;                 // herman-example parameter, lyap only
  std::string alpha = "golden";   // rotation step, number or the keyword
  std::string out_path;           // optional; default = stdout
  std::string format;             // json | csv; default per command
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double resolve_alpha(const std::string& text) {
  if (text == "golden") {
    return RotationBase::golden_alpha();
  }
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("alpha: expected a number or 'golden', got '" +
                                text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("alpha: trailing characters in '" + text +
                                "'");
  }
  return value;
}

void write_text(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + cfg.out_path);
  }
  out << text;
}

std::string render_scalar_csv(const ordered_json& report) {
  std::string keys;
  std::string values;
  for (const auto& item : report.items()) {
    if (!keys.empty()) {
      keys += ',';
      values += ',';
    }
    keys += item.key();
    values += item.value().dump();
  }
  return keys + "\n" + values + "\n";
}

// Emit a flat scalar report in the selected format and map the pass flag to
// the exit status.
int emit_report(const RunConfig& cfg, ordered_json report,
                const Stopwatch& timer) {
  report["wall_time_s"] = timer.seconds();
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    write_text(cfg, report.dump(2) + "\n");
  } else {
    write_text(cfg, render_scalar_csv(report));
  }
  const bool pass = report.value("pass", true);
  return pass ? kExitPass : kExitFail;
}

MatrixWord required_word(const RunConfig& cfg) {
  if (cfg.word_path.empty()) {
    throw std::invalid_argument(cfg.command + ": --word is required");
  }
  return load_word(cfg.word_path);
}

// ---------------------------------------------------------------------------
// verify-prop3: per letter, the rotation average of the log spectral radius
// of R_theta * A equals log((s + 1/s)/2) with s the top singular value.

int run_verify_prop3(const RunConfig& cfg) {
  Stopwatch timer;
  const std::size_t nodes = cfg.nodes == 0 ? 65536 : cfg.nodes;
  std::vector<Mat2> letters;
  if (!cfg.word_path.empty()) {
    letters = load_word(cfg.word_path).letters();
  } else {
    SeededRng rng(cfg.seed);
    letters.push_back(random_sl2(rng));
  }

  const double tolerance = 1e-5;
  double worst = -1.0;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  double quad_error = 0.0;
  std::size_t worst_letter = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const MatrixWord single({letters[i]});
    const QuadResult q = avg_spectral_radius_result(single, nodes);
    const double rhs = log_avg_norm(letters[i]);
    const double diff = std::abs(q.value - rhs);
    quad_error = std::max(quad_error, q.error_estimate);
    if (diff > worst) {
      worst = diff;
      worst_lhs = q.value;
      worst_rhs = rhs;
      worst_letter = i + 1;
    }
  }

  ordered_json report;
  report["command"] = "verify-prop3";
  report["word_path"] = cfg.word_path;
  report["seed"] = cfg.seed;
  report["nodes"] = nodes;
  report["letters"] = letters.size();
  report["worst_letter"] = worst_letter;
  report["lhs"] = worst_lhs;
  report["rhs"] = worst_rhs;
  report["abs_diff"] = worst;
  report["quad_error"] = quad_error;
  report["tolerance"] = tolerance;
  report["pass"] = worst <= tolerance;
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// verify-theorem3: the rotation average of the log spectral radius of the
// word product equals the sum of the per-letter norm averages, and also the
// sum of the per-letter branch integrals J_k.

int run_verify_theorem3(const RunConfig& cfg) {
  Stopwatch timer;
  const std::size_t nodes = cfg.nodes == 0 ? 65536 : cfg.nodes;
  const MatrixWord w = required_word(cfg);

  const QuadResult avg = avg_spectral_radius_result(w, nodes);
  double rhs = 0.0;
  for (const Mat2& a : w.letters()) {
    rhs += log_avg_norm(a);
  }

  // The J_k integrands are analytic but can carry narrow spikes when tail
  // letters contract strongly; double the grid until the half-rule error
  // estimate settles (deterministic for a fixed word).
  std::size_t jk_nodes = 1024;
  std::vector<QuadResult> jk;
  double jk_error = 0.0;
  for (;;) {
    jk = j_all(w, jk_nodes);
    jk_error = 0.0;
    for (const QuadResult& q : jk) {
      jk_error = std::max(jk_error, q.error_estimate);
    }
    if (jk_error <= 1e-7 || jk_nodes >= 65536) {
      break;
    }
    jk_nodes *= 2;
  }
  std::vector<double> jk_values(jk.size());
  for (std::size_t k = 0; k < jk.size(); ++k) {
    jk_values[k] = jk[k].value;
  }
  const double jk_sum = tree_sum(jk_values);

  const double tolerance = 1e-4;
  const double jk_tolerance = 2e-4;
  const double abs_diff = std::abs(avg.value - rhs);
  const double jk_abs_diff = std::abs(avg.value - jk_sum);

  ordered_json report;
  report["command"] = "verify-theorem3";
  report["word_path"] = cfg.word_path;
  report["nodes"] = nodes;
  report["jk_nodes"] = jk_nodes;
  report["letters"] = w.size();
  report["lhs"] = avg.value;
  report["rhs"] = rhs;
  report["jk_sum"] = jk_sum;
  report["abs_diff"] = abs_diff;
  report["jk_abs_diff"] = jk_abs_diff;
  report["quad_error"] = avg.error_estimate;
  report["jk_quad_error"] = jk_error;
  report["tolerance"] = tolerance;
  report["jk_tolerance"] = jk_tolerance;
  report["pass"] = abs_diff <= tolerance && jk_abs_diff <= jk_tolerance;
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// verify-involution: the displacement involution Psi satisfies, for
// non-orthogonal A: Psi(Psi(p)) = p, H(Psi(p)) = H(p), rho(Psi(p)) = -rho(p),
// and the derivative relations Psi' = -Phi' and H' = 1 + Psi' (the latter two
// checked against central finite differences).

int run_verify_involution(const RunConfig& cfg) {
  Stopwatch timer;
  const std::size_t points = cfg.nodes == 0 ? 256 : cfg.nodes;
  const std::int64_t matrices = cfg.iterations == 0 ? 100 : cfg.iterations;
  if (matrices < 1) {
    throw std::invalid_argument("verify-involution: iterations must be >= 1");
  }

  SeededRng rng(cfg.seed);
  const double tolerance = 1e-9;   // exact identities, items reported as max
  const double fd_tolerance = 1e-6;
  const double fd_step = 1e-8;
  double max_identity = 0.0;
  double max_fd = 0.0;
  double worst_inv = -1.0;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;

  for (std::int64_t m = 0; m < matrices; ++m) {
    Mat2 a = random_sl2(rng);
    // The involution is undefined on the orthogonal axis; redraw.
    while (operator_norm(a) - 1.0 < 1e-6) {
      a = random_sl2(rng);
    }
    for (std::size_t i = 0; i < points; ++i) {
      const ProjPoint p = random_proj_point(rng);
      const ProjPoint q = involution(a, p);

      const double inv_gap = dist(involution(a, q), p);
      const double disp_gap = std::abs(h(a, q) - h(a, p));
      const double rad_gap = std::abs(rho_fn(a, q) + rho_fn(a, p));
      for (double gap : {inv_gap, disp_gap, rad_gap}) {
        if (gap > max_identity) {
          max_identity = gap;
        }
      }
      if (inv_gap > worst_inv) {
        worst_inv = inv_gap;
        worst_lhs = involution(a, q).angle();
        worst_rhs = p.angle();
      }

      // Central differences for the derivative relations. The displacement
      // has a jump where it crosses +/- pi/2, so skip a small collar there.
      const ProjPoint p_plus(p.angle() + fd_step);
      const ProjPoint p_minus(p.angle() - fd_step);
      const double fd_psi =
          symmetric_mod_pi(involution(a, p_plus).angle() -
                           involution(a, p_minus).angle()) /
          (2.0 * fd_step);
      const double psi_gap = std::abs(fd_psi + phi_deriv(a, p));
      if (psi_gap > max_fd) {
        max_fd = psi_gap;
      }
      if (std::abs(h(a, p)) < kPi / 2.0 - 1e-3) {
        const double fd_disp =
            (h(a, p_plus) - h(a, p_minus)) / (2.0 * fd_step);
        const double disp_deriv_gap =
            std::abs(fd_disp - (1.0 - phi_deriv(a, p)));
        if (disp_deriv_gap > max_fd) {
          max_fd = disp_deriv_gap;
        }
      }
    }
  }

  ordered_json report;
  report["command"] = "verify-involution";
  report["seed"] = cfg.seed;
  report["matrices"] = matrices;
  report["points"] = points;
  report["lhs"] = worst_lhs;
  report["rhs"] = worst_rhs;
  report["abs_diff"] = max_identity;
  report["fd_abs_diff"] = max_fd;
  report["tolerance"] = tolerance;
  report["fd_tolerance"] = fd_tolerance;
  report["pass"] = max_identity <= tolerance && max_fd <= fd_tolerance;
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// lyap: single-orbit Lyapunov exponent estimate. With --c, the driven
// example rotation(x) * diag(c, 1/c) whose exponent is log((c + 1/c)/2) in
// closed form; with --word, a table-driven cocycle (value reported, no
// closed form to check against).

int run_lyap(const RunConfig& cfg) {
  Stopwatch timer;
  const std::int64_t iterations =
      cfg.iterations == 0 ? 1000000 : cfg.iterations;
  const double alpha = resolve_alpha(cfg.alpha);
  const RotationBase base(alpha);

  const bool has_c = cfg.c != 0.0;
  const bool has_word = !cfg.word_path.empty();
  if (has_c == has_word) {
    throw std::invalid_argument("lyap: pass exactly one of --c or --word");
  }

  ordered_json report;
  report["command"] = "lyap";
  report["alpha"] = alpha;
  report["iterations"] = iterations;
  if (base.diophantine().suspicious) {
    // A near-rational rotation ruins Birkhoff convergence; surface it.
    report["alpha_near_rational_denominator"] = base.diophantine().denominator;
  }

  if (has_c) {
    const CocycleSpec spec = CocycleSpec::herman_example(cfg.c);
    const double estimate = lyapunov_estimate(base, spec, iterations);
    const double closed_form = std::log(0.5 * (cfg.c + 1.0 / cfg.c));
    const double tolerance = 1e-2;
    const double abs_diff = std::abs(estimate - closed_form);
    report["c"] = cfg.c;
    report["lhs"] = estimate;
    report["rhs"] = closed_form;
    report["abs_diff"] = abs_diff;
    report["tolerance"] = tolerance;
    report["pass"] = abs_diff <= tolerance;
  } else {
    const MatrixWord w = load_word(cfg.word_path);
    const CocycleSpec spec = CocycleSpec::table_driven(w.letters());
    const double estimate = lyapunov_estimate(base, spec, iterations);
    report["word_path"] = cfg.word_path;
    report["bins"] = w.size();
    report["lambda"] = estimate;
    // A single orbit of a table cocycle has no closed-form exponent; the
    // norm-average integral is reported alongside for context only.
    report["herman_integral"] = herman_integral(base, spec, iterations);
    report["pass"] = true;
  }
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// family: average the exponent over the rotated family theta -> R_theta * A
// and compare with the norm-average integral (equal in the ergodic limit;
// tested here statistically). Also checks the one-sided inequality: the
// family average never falls below the integral beyond the tolerance.

int run_family(const RunConfig& cfg) {
  Stopwatch timer;
  const std::size_t nodes = cfg.nodes == 0 ? 64 : cfg.nodes;
  const std::int64_t iterations = cfg.iterations == 0 ? 100000 : cfg.iterations;
  const double alpha = resolve_alpha(cfg.alpha);
  const RotationBase base(alpha);
  const MatrixWord w = required_word(cfg);
  const CocycleSpec spec = CocycleSpec::table_driven(w.letters());

  const FamilyResult fam = family_average(base, spec, nodes, iterations);
  const double integral = herman_integral(base, spec, iterations);
  const double tolerance = 5e-2;
  const double abs_diff = std::abs(fam.average - integral);
  const double inequality_margin = fam.average - integral;

  ordered_json report;
  report["command"] = "family";
  report["word_path"] = cfg.word_path;
  report["alpha"] = alpha;
  report["nodes"] = nodes;
  report["iterations"] = iterations;
  report["lhs"] = fam.average;
  report["rhs"] = integral;
  report["abs_diff"] = abs_diff;
  report["inequality_margin"] = inequality_margin;
  report["tolerance"] = tolerance;
  report["pass"] = abs_diff <= tolerance && inequality_margin >= -tolerance;
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// regions: export the branch graphs over a p-grid. The union of the branch
// value ranges is the set of twists theta with a hyperbolic product; the
// summary row estimates the complementary (elliptic) Haar measure two
// independent ways and reports their discrepancy.

struct EllipticEstimates {
  double from_branches;
  double from_rho;
};

EllipticEstimates elliptic_estimates(const MatrixWord& w,
                                     const BranchTrace& trace) {
  double range_sum = 0.0;
  for (const std::vector<double>& branch : trace.thetas) {
    double lo = branch.front();
    double hi = lo;
    for (double t : branch) {
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    range_sum += hi - lo;
  }
  const int grid = 8192;
  int zero_count = 0;
  for (int i = 0; i < grid; ++i) {
    const double theta = kPi * static_cast<double>(i) / grid;
    if (rho_theta(w, theta) == 0.0) {
      ++zero_count;
    }
  }
  return EllipticEstimates{
      1.0 - range_sum / kPi,
      static_cast<double>(zero_count) / static_cast<double>(grid)};
}

std::string fmt_number(double x) { return nlohmann::json(x).dump(); }

int run_regions(const RunConfig& cfg) {
  Stopwatch timer;
  const std::size_t p_nodes = cfg.nodes == 0 ? 512 : cfg.nodes;
  const MatrixWord w = required_word(cfg);

  const BranchTrace trace = trace_branches(w, p_nodes);
  const EllipticEstimates est = elliptic_estimates(w, trace);
  const double tolerance = 2.0 / static_cast<double>(p_nodes);
  const double abs_diff = std::abs(est.from_branches - est.from_rho);
  const bool pass = abs_diff <= tolerance;

  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    std::string text = "p,branch,theta,deriv\n";
    for (std::size_t j = 0; j < trace.thetas.size(); ++j) {
      for (std::size_t i = 0; i < trace.p_grid.size(); ++i) {
        text += fmt_number(trace.p_grid[i]);
        text += ',';
        text += std::to_string(j + 1);
        text += ',';
        // Continuous lift values; reduce mod pi to draw all branches in one
        // period window.
        text += fmt_number(trace.thetas[j][i]);
        text += ',';
        text += fmt_number(trace.derivs[j][i]);
        text += '\n';
      }
    }
    text += "summary," + fmt_number(est.from_rho) + ',' +
            fmt_number(est.from_branches) + ',' + fmt_number(abs_diff) + '\n';
    write_text(cfg, text);
    return pass ? kExitPass : kExitFail;
  }

  ordered_json report;
  report["command"] = "regions";
  report["word_path"] = cfg.word_path;
  report["p_nodes"] = p_nodes;
  report["branches"] = trace.thetas.size();
  report["elliptic_rho"] = est.from_rho;
  report["elliptic_branches"] = est.from_branches;
  report["abs_diff"] = abs_diff;
  report["tolerance"] = tolerance;
  report["pass"] = pass;
  return emit_report(cfg, std::move(report), timer);
}

// ---------------------------------------------------------------------------
// haar-check: theta -> phi_word(theta, p) preserves the normalized circle
// measure, so the preimage weights 1/G' over the n solutions of
// phi_word(theta, p) = q sum to exactly 1 for every p, q.

int run_haar_check(const RunConfig& cfg) {
  Stopwatch timer;
  const std::int64_t pairs = cfg.iterations == 0 ? 50 : cfg.iterations;
  if (pairs < 1) {
    throw std::invalid_argument("haar-check: iterations must be >= 1");
  }
  SeededRng rng(cfg.seed);
  const MatrixWord w = cfg.word_path.empty() ? random_word(rng, 3)
                                             : load_word(cfg.word_path);

  const double tolerance = 1e-8;
  double worst_sum = 1.0;
  double worst = -1.0;
  for (std::int64_t i = 0; i < pairs; ++i) {
    const ProjPoint p = random_proj_point(rng);
    const ProjPoint q = random_proj_point(rng);
    const double sum = haar_preimage_sum(w, p, q);
    const double diff = std::abs(sum - 1.0);
    if (diff > worst) {
      worst = diff;
      worst_sum = sum;
    }
  }

  ordered_json report;
  report["command"] = "haar-check";
  report["word_path"] = cfg.word_path;
  report["seed"] = cfg.seed;
  report["letters"] = w.size();
  report["pairs"] = pairs;
  report["lhs"] = worst_sum;
  report["rhs"] = 1.0;
  report["abs_diff"] = worst;
  report["tolerance"] = tolerance;
  report["pass"] = worst <= tolerance;
  return emit_report(cfg, std::move(report), timer);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "cocycle-lab: identities and Lyapunov exponents of twisted SL(2,R) "
      "cocycles"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* cmd, bool with_word) {
    if (with_word) {
      cmd->add_option("--word", cfg.word_path,
                      "word file, JSON {\"word\": [[a,b,c,d], ...]}");
    }
    cmd->add_option("--out", cfg.out_path, "write the report here (default: stdout)");
    cmd->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* prop3 = app.add_subcommand(
      "verify-prop3",
      "per letter: rotation average of the log spectral radius vs. the "
      "closed-form norm average");
  add_common(prop3, true);
  prop3->add_option("--nodes", cfg.nodes, "quadrature nodes (default 65536)");
  prop3->add_option("--seed", cfg.seed,
                    "seed for a random matrix when --word is absent");

  CLI::App* thm3 = app.add_subcommand(
      "verify-theorem3",
      "rotation average for the whole word vs. the sum of per-letter "
      "averages and the sum of branch integrals");
  add_common(thm3, true);
  thm3->add_option("--nodes", cfg.nodes, "quadrature nodes (default 65536)");

  CLI::App* invo = app.add_subcommand(
      "verify-involution",
      "symmetry relations of the displacement involution on random matrices");
  add_common(invo, false);
  invo->add_option("--nodes", cfg.nodes,
                   "projective sample points per matrix (default 256)");
  invo->add_option("--iterations", cfg.iterations,
                   "number of random matrices (default 100)");
  invo->add_option("--seed", cfg.seed, "sampling seed");

  CLI::App* lyap = app.add_subcommand(
      "lyap", "single-orbit Lyapunov exponent over an irrational rotation");
  add_common(lyap, true);
  lyap->add_option("--c", cfg.c,
                   "driven example parameter: rotation(x) * diag(c, 1/c)");
  lyap->add_option("--alpha", cfg.alpha,
                   "rotation step in radians, or 'golden' (default)");
  lyap->add_option("--iterations", cfg.iterations,
                   "orbit length (default 1000000)");

  CLI::App* family = app.add_subcommand(
      "family",
      "average the exponent over the rotated family and compare with the "
      "norm-average integral");
  add_common(family, true);
  family->add_option("--nodes", cfg.nodes, "theta grid size (default 64)");
  family->add_option("--iterations", cfg.iterations,
                     "orbit length per node (default 100000)");
  family->add_option("--alpha", cfg.alpha,
                     "rotation step in radians, or 'golden' (default)");

  CLI::App* regions = app.add_subcommand(
      "regions",
      "export branch graphs over a p-grid plus elliptic-measure estimates");
  add_common(regions, true);
  regions->add_option("--nodes", cfg.nodes, "p-grid size (default 512)");

  CLI::App* haar = app.add_subcommand(
      "haar-check", "preimage weights of the twist map sum to one");
  add_common(haar, true);
  haar->add_option("--iterations", cfg.iterations,
                   "number of random (p, q) pairs (default 50)");
  haar->add_option("--seed", cfg.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitInput;
  }

  try {
    if (prop3->parsed()) {
      cfg.command = "verify-prop3";
      return run_verify_prop3(cfg);
    }
    if (thm3->parsed()) {
      cfg.command = "verify-theorem3";
      return run_verify_theorem3(cfg);
    }
    if (invo->parsed()) {
      cfg.command = "verify-involution";
      return run_verify_involution(cfg);
    }
    if (lyap->parsed()) {
      cfg.command = "lyap";
      return run_lyap(cfg);
    }
    if (family->parsed()) {
      cfg.command = "family";
      return run_family(cfg);
    }
    if (regions->parsed()) {
      cfg.command = "regions";
      return run_regions(cfg);
    }
    cfg.command = "haar-check";
    return run_haar_check(cfg);
  } catch (const word_io_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const numerical_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitFail;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
}

#include "cocycle/words.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cocycle/parallel.hpp"

namespace cocycle {

namespace {

constexpr double kBisectWidth = 1e-6;
constexpr int kNewtonMax = 20;
constexpr double kResidualTol = 1e-12;

}  // namespace

MatrixWord::MatrixWord(std::vector<Mat2> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("MatrixWord: at least one letter required");
  }
}

MatrixWord MatrixWord::concat(const MatrixWord& tail) const {
  std::vector<Mat2> joined = letters_;
  joined.insert(joined.end(), tail.letters_.begin(), tail.letters_.end());
  return MatrixWord(std::move(joined));
}

MatrixWord MatrixWord::cyclic_shift(std::size_t k) const {
  if (k > size()) {
    throw std::invalid_argument("MatrixWord::cyclic_shift: k out of range");
  }
  std::vector<Mat2> shifted;
  shifted.reserve(size());
  for (std::size_t i = k; i < size(); ++i) shifted.push_back(letters_[i]);
  for (std::size_t i = 0; i < k; ++i) shifted.push_back(letters_[i]);
  return MatrixWord(std::move(shifted));
}

Mat2 word_product(const MatrixWord& w, double theta) {
  const Mat2 r = rotation(theta);
  Mat2 prod = r * w.letter(0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    prod = prod * (r * w.letter(i));
  }
  return prod;
}

WordAction::WordAction(const MatrixWord& w) {
  letters_.reserve(w.size());
  for (const Mat2& m : w.letters()) {
    const Svd2 f = svd2(m);
    // Polar pieces: P = R^T D R is the symmetric factor, psi the angle of
    // the rotation part A P^-1. |P v_t| = |A v_t|, and the displacement
    // t -> angle(P v_t) stays strictly inside (-pi/2, pi/2), which makes the
    // per-letter lift below continuous without any branch tracking.
    const double r_angle = std::atan2(f.r_factor.c(), f.r_factor.a());
    const double cr = std::cos(r_angle);
    const double sr = std::sin(r_angle);
    const double sig = f.sigma;
    Letter L;
    L.p11 = sig * cr * cr + sr * sr / sig;
    L.p12 = (sig - 1.0 / sig) * cr * (-sr);
    L.p22 = sig * sr * sr + cr * cr / sig;
    // A P^-1 with P^-1 = [[p22, -p12], [-p12, p11]] (det P = 1).
    const double w11 = m.a() * L.p22 + m.b() * (-L.p12);
    const double w21 = m.c() * L.p22 + m.d() * (-L.p12);
    L.psi = std::atan2(w21, w11);
    letters_.push_back(L);
  }
}

WordAction::LiftJet WordAction::lift_jet(double theta, double p_lift) const {
  double q = p_lift;
  double d_theta = 0.0;
  double d_p = 1.0;
  for (std::size_t idx = letters_.size(); idx-- > 0;) {
    const Letter& L = letters_[idx];
    const double cq = std::cos(q);
    const double sq = std::sin(q);
    const double ux = L.p11 * cq + L.p12 * sq;
    const double uy = L.p12 * cq + L.p22 * sq;
    const double norm2 = ux * ux + uy * uy;
    const double disp = std::remainder(std::atan2(uy, ux) - q, kPi);
    q = theta + L.psi + q + disp;
    const double factor = 1.0 / norm2;
    d_theta = 1.0 + factor * d_theta;
    d_p *= factor;
  }
  return LiftJet{q, d_theta, d_p};
}

WordJet phi_word_jet(const MatrixWord& w, double theta, ProjPoint p) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("phi_word_jet: non-finite theta");
  }
  const WordAction act(w);
  const WordAction::LiftJet jet = act.lift_jet(theta, p.angle());
  return WordJet{ProjPoint(jet.value), jet.d_theta, jet.d_p};
}

namespace {

struct Root {
  double theta;
  double d_theta;
  double d_p;
};

// A steep branch cannot push its lift residual below d_theta * ulp(theta);
// accept once the angle is resolved to machine resolution even if the strict
// residual bound is out of reach.
bool root_accepted(double residual, double d_theta) {
  const double floor = d_theta * 4e-16;
  return std::abs(residual) <= (floor > kResidualTol ? floor : kResidualTol);
}

// Root of lift(theta) = target inside [lo, hi]. The lift is strictly
// increasing with derivative >= 1, so bisection to a narrow bracket followed
// by bracket-clamped Newton is unconditionally safe.
Root solve_monotone(const WordAction& act, double p_lift, double target,
                    double lo, double hi) {
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (act.lift_jet(mid, p_lift).value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double th = 0.5 * (lo + hi);
  Root best{th, 1.0, 0.0};
  double best_abs = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kNewtonMax; ++iter) {
    const WordAction::LiftJet jet = act.lift_jet(th, p_lift);
    const double residual = jet.value - target;
    const double abs_res = std::abs(residual);
    // Fully resolved: the residual is below the slope times one ulp of theta.
    if (abs_res <= jet.d_theta * 4e-16) {
      return Root{th, jet.d_theta, jet.d_p};
    }
    if (abs_res < best_abs) {
      best_abs = abs_res;
      best = Root{th, jet.d_theta, jet.d_p};
    } else if (root_accepted(best_abs, best.d_theta)) {
      return best;  // stalled at an acceptable residual
    }
    if (residual < 0.0) {
      lo = th;
    } else {
      hi = th;
    }
    double next = th - residual / jet.d_theta;
    // Clamp only strictly outside the closed bracket: the root may sit
    // exactly on an endpoint.
    if (next < lo || next > hi) next = 0.5 * (lo + hi);
    th = next;
  }
  if (root_accepted(best_abs, best.d_theta)) {
    return best;
  }
  // Rescue: plain bisection down to the resolution of the angle itself,
  // still tracking the smallest residual seen.
  while (hi - lo > 4e-16 * (std::abs(lo) > 1.0 ? std::abs(lo) : 1.0)) {
    const double mid = 0.5 * (lo + hi);
    const WordAction::LiftJet jet = act.lift_jet(mid, p_lift);
    const double residual = jet.value - target;
    const double abs_res = std::abs(residual);
    if (abs_res < best_abs) {
      best_abs = abs_res;
      best = Root{mid, jet.d_theta, jet.d_p};
    }
    if (root_accepted(residual, jet.d_theta)) {
      return Root{mid, jet.d_theta, jet.d_p};
    }
    if (residual < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // The bracket has collapsed to adjacent doubles while keeping the target
  // pinned inside, so no representable angle beats the best point seen.  On
  // very steep slopes the residual floor above is unreachable (one ulp of
  // theta already moves the lift by d_theta * ulp), and this is the exact
  // machine-resolution answer.
  return best;
}

struct RawBranches {
  std::vector<Root> roots;      // ascending theta, raw lift window
  std::vector<double> targets;  // lift target per root
};

// All n solutions of lift(theta) = p_lift (mod pi), labeled by lift offset:
// the base target is shifted so lift(0) - base lands in [0, pi), and branch
// j solves against base + (j-1)*pi.
RawBranches solve_branches_raw(const WordAction& act, double p_lift) {
  const std::size_t n = act.size();
  const double at_zero = act.lift_jet(0.0, p_lift).value;
  const double base = p_lift + std::floor((at_zero - p_lift) / kPi) * kPi;
  RawBranches out;
  out.roots.reserve(n);
  out.targets.reserve(n);
  double lo = -kPi - 0.25;
  for (std::size_t j = 0; j < n; ++j) {
    const double target = base + static_cast<double>(j) * kPi;
    Root root = solve_monotone(act, p_lift, target, lo, kPi + 0.25);
    lo = root.theta;
    out.roots.push_back(root);
    out.targets.push_back(target);
  }
  return out;
}

double branch_deriv(const Root& r) { return (1.0 - r.d_p) / r.d_theta; }

}  // namespace

BranchSolution branch_solve(const WordAction& act, ProjPoint p) {
  RawBranches raw = solve_branches_raw(act, p.angle());
  BranchSolution out{p, {}, {}};
  out.thetas.reserve(raw.roots.size());
  out.derivs.reserve(raw.roots.size());
  double shift = std::floor(raw.roots.front().theta / kPi) * kPi;
  // A first root within solver tolerance below a period boundary belongs to
  // the next window; snap so theta_1 lands at ~0 rather than ~pi.
  if (raw.roots.front().theta - shift >= kPi - 1e-9) shift += kPi;
  for (const Root& r : raw.roots) {
    out.thetas.push_back(r.theta - shift);
    out.derivs.push_back(branch_deriv(r));
  }
  return out;
}

BranchSolution branch_solve(const MatrixWord& w, ProjPoint p) {
  return branch_solve(WordAction(w), p);
}

double rho_theta(const MatrixWord& w, double theta) {
  return spectral_radius_log(word_product(w, theta));
}

QuadResult avg_spectral_radius_result(const MatrixWord& w, std::size_t nodes) {
  const QuadResult q = periodic_trapezoid(
      [&w](double theta) { return rho_theta(w, theta); }, 0.0, kPi, nodes);
  return QuadResult{q.value / kPi, q.error_estimate / kPi, q.nodes};
}

double avg_spectral_radius(const MatrixWord& w, std::size_t nodes) {
  return avg_spectral_radius_result(w, nodes).value;
}

std::vector<QuadResult> j_all(const MatrixWord& w, std::size_t nodes) {
  if (nodes < 16 || nodes % 2 != 0) {
    throw std::invalid_argument("j_all: nodes must be even and >= 16");
  }
  const std::size_t n = w.size();
  const WordAction act(w);
  const double h = kPi / static_cast<double>(nodes);

  std::vector<std::vector<double>> samples(n, std::vector<double>(nodes, 0.0));
  par::for_index(nodes, [&](std::size_t i) {
    const double p = -0.5 * kPi + static_cast<double>(i) * h;
    const RawBranches raw = solve_branches_raw(act, p);
    for (const Root& root : raw.roots) {
      const double weight = branch_deriv(root);
      // Suffix images: letter k sees the image of p under the rotated
      // sub-word (A_{k+1}, ..., A_n); the empty suffix leaves p fixed.
      double t = p;
      for (std::size_t k = n; k-- > 0;) {
        const Vec2 u = w.letter(k).apply(Vec2{std::cos(t), std::sin(t)});
        samples[k][i] += std::log(u.norm()) * weight;
        if (k > 0) t = std::atan2(u.y, u.x) + root.theta;
      }
    }
  });

  std::vector<QuadResult> out;
  out.reserve(n);
  const double scale = h / (2.0 * kPi);
  std::vector<double> coarse(nodes / 2);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < nodes; ++i) {
      if (!std::isfinite(samples[k][i])) {
        throw numerical_error("j_all: non-finite sample at node " +
                              std::to_string(i));
      }
    }
    const double full = tree_sum(samples[k]) * scale;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      coarse[i] = samples[k][2 * i];
    }
    const double half = tree_sum(coarse) * (2.0 * scale);
    out.push_back(QuadResult{full, std::abs(full - half), nodes});
  }
  return out;
}

double j_k(const MatrixWord& w, std::size_t k, std::size_t nodes) {
  if (k < 1 || k > w.size()) {
    throw std::invalid_argument("j_k: letter index out of range");
  }
  return j_all(w, nodes)[k - 1].value;
}

double haar_preimage_sum(const MatrixWord& w, ProjPoint p, ProjPoint q) {
  const WordAction act(w);
  const std::size_t n = act.size();
  const double p_lift = p.angle();
  const double q_lift = q.angle();
  const double at_zero = act.lift_jet(0.0, p_lift).value;
  const double k0 = std::ceil((at_zero - q_lift) / kPi);
  double sum = 0.0;
  double lo = -0.25;
  for (std::size_t j = 0; j < n; ++j) {
    const double target = q_lift + (k0 + static_cast<double>(j)) * kPi;
    const Root root = solve_monotone(act, p_lift, target, lo, kPi + 0.25);
    lo = root.theta;
    sum += 1.0 / root.d_theta;
  }
  return sum;
}

double branch_deriv_sum(const MatrixWord& w, ProjPoint p) {
  const BranchSolution sol = branch_solve(w, p);
  double sum = 0.0;
  for (const double d : sol.derivs) sum += d;
  return sum;
}

BranchTrace trace_branches(const MatrixWord& w, std::size_t p_nodes) {
  if (p_nodes < 64) {
    throw std::invalid_argument("trace_branches: p_nodes must be >= 64");
  }
  const std::size_t n = w.size();
  const WordAction act(w);
  const double h = kPi / static_cast<double>(p_nodes);
  const double p0 = -0.5 * kPi;

  BranchTrace trace;
  trace.p_grid.resize(p_nodes);
  trace.thetas.assign(n, std::vector<double>(p_nodes));
  trace.derivs.assign(n, std::vector<double>(p_nodes));

  // Each branch satisfies lift(theta_j(p), p) = p + c_j for a constant c_j;
  // pin the constants at the first node, then continue by Newton.
  const RawBranches first = solve_branches_raw(act, p0);
  std::vector<double> offsets(n);
  trace.p_grid[0] = p0;
  for (std::size_t j = 0; j < n; ++j) {
    offsets[j] = first.targets[j] - p0;
    trace.thetas[j][0] = first.roots[j].theta;
    trace.derivs[j][0] = branch_deriv(first.roots[j]);
  }

  for (std::size_t i = 1; i < p_nodes; ++i) {
    const double p = p0 + static_cast<double>(i) * h;
    trace.p_grid[i] = p;
    for (std::size_t j = 0; j < n; ++j) {
      const double target = p + offsets[j];
      double th = trace.thetas[j][i - 1];
      bool converged = false;
      WordAction::LiftJet jet{};
      for (int iter = 0; iter < 30; ++iter) {
        jet = act.lift_jet(th, p);
        const double residual = jet.value - target;
        if (root_accepted(residual, jet.d_theta)) {
          converged = true;
          break;
        }
        th -= residual / jet.d_theta;
      }
      if (!converged) {
        // Rebuild a bracket around the previous node's angle.
        double lo = trace.thetas[j][i - 1];
        double hi = lo;
        double width = 0.05;
        while (act.lift_jet(lo, p).value > target && width < 2.0 * kPi) {
          lo -= width;
          width *= 2.0;
        }
        width = 0.05;
        while (act.lift_jet(hi, p).value < target && width < 2.0 * kPi) {
          hi += width;
          width *= 2.0;
        }
        const Root root = solve_monotone(act, p, target, lo, hi);
        th = root.theta;
        jet = act.lift_jet(th, p);
      }
      trace.thetas[j][i] = th;
      trace.derivs[j][i] = (1.0 - jet.d_p) / jet.d_theta;
    }
  }
  return trace;
}

}  // namespace cocycle

#pragma once

#include <cstddef>
#include <vector>

#include "cocycle/mat2.hpp"
#include "cocycle/projective.hpp"
#include "cocycle/quadrature.hpp"

namespace cocycle {

/// Finite word (A_1, ..., A_n) of unit-determinant matrices, n >= 1.
class MatrixWord {
 public:
  explicit MatrixWord(std::vector<Mat2> letters);

  std::size_t size() const { return letters_.size(); }
  const Mat2& letter(std::size_t i) const { return letters_[i]; }  // 0-based
  const std::vector<Mat2>& letters() const { return letters_; }

  MatrixWord concat(const MatrixWord& tail) const;

  /// (A_{k+1}, ..., A_n, A_1, ..., A_k) for 0 <= k <= n.
  MatrixWord cyclic_shift(std::size_t k) const;

 private:
  std::vector<Mat2> letters_;
};

/// Rotated product (R_theta A_1)(R_theta A_2)...(R_theta A_n).
Mat2 word_product(const MatrixWord& w, double theta);

/// Precomputed per-letter polar data for evaluating the lifted projective
/// action of a word without re-running the SVDs.
///
/// lift_jet computes a continuous lift G of
///   (theta, p) -> phi applied through the word, innermost letter first,
/// together with both partials. G is strictly increasing in theta with
/// G(theta + pi) = G(theta) + n*pi, and d_theta >= 1 always.
class WordAction {
 public:
  explicit WordAction(const MatrixWord& w);

  struct LiftJet {
    double value;    // lift of the image angle
    double d_theta;  // sum over i of the product of the outer i-1 factors
    double d_p;      // product of all derivative factors, 1/|(R_theta W)v_p|^2
  };

  LiftJet lift_jet(double theta, double p_lift) const;

  std::size_t size() const { return letters_.size(); }

 private:
  struct Letter {
    double psi;  // polar rotation angle
    double p11, p12, p22;  // symmetric positive factor sqrt(A^T A)
  };
  std::vector<Letter> letters_;
};

/// Jet of the word action at (theta, p): canonical image point plus the two
/// partial derivatives of the lift.
struct WordJet {
  ProjPoint value;
  double d_theta;
  double d_p;
};

WordJet phi_word_jet(const MatrixWord& w, double theta, ProjPoint p);

/// The n angle branches through p: solutions of phi_word(theta, p) = p.
///
/// thetas are sorted ascending within a window of length pi, with the first
/// in [0, pi) (up to rounding at the window edge). Branch j is pinned by
/// lift offset (j-1)*pi from the base lift, so the labels are deterministic.
/// derivs holds the branch derivatives (1 - d_p) / d_theta.
struct BranchSolution {
  ProjPoint p;
  std::vector<double> thetas;
  std::vector<double> derivs;
};

BranchSolution branch_solve(const MatrixWord& w, ProjPoint p);
BranchSolution branch_solve(const WordAction& act, ProjPoint p);

/// Log spectral radius of the rotated product at theta.
double rho_theta(const MatrixWord& w, double theta);

/// (1/2pi) * integral over a full rotation of rho_theta, computed on one
/// period [0, pi) by pi-periodicity.
double avg_spectral_radius(const MatrixWord& w, std::size_t nodes);
QuadResult avg_spectral_radius_result(const MatrixWord& w, std::size_t nodes);

/// Per-letter split of the rotation average: the k-th term integrates
/// log |A_k v| along the k-th suffix image of each branch, weighted by the
/// branch derivative. j_all computes every k in one sweep (the branch solve
/// at each node is shared); j_k returns the value for one k (1-based).
std::vector<QuadResult> j_all(const MatrixWord& w, std::size_t nodes);
double j_k(const MatrixWord& w, std::size_t k, std::size_t nodes);

/// Sum of 1/d_theta over the n solutions of phi_word(theta, p) = q.
/// Equals 1 for every p, q: theta -> phi_word(theta, p) preserves the
/// normalized circle measure.
double haar_preimage_sum(const MatrixWord& w, ProjPoint p, ProjPoint q);

/// Sum of the branch derivatives at p; equals 1 - phi_deriv(A_n, p).
double branch_deriv_sum(const MatrixWord& w, ProjPoint p);

/// Branches continued over a p-grid on [-pi/2, pi/2) by Newton tracking, so
/// the labels stay consistent from node to node. thetas holds lift values
/// (continuous in p, reduce mod pi for display).
struct BranchTrace {
  std::vector<double> p_grid;
  std::vector<std::vector<double>> thetas;  // [branch][node]
  std::vector<std::vector<double>> derivs;  // [branch][node]
};

BranchTrace trace_branches(const MatrixWord& w, std::size_t p_nodes);

}  // namespace cocycle

#pragma once

#include <vector>

#include <gmpxx.h>

#include "msindex/counting.hpp"
#include "msindex/tree.hpp"

namespace msindex {

using Rational = mpq_class;

/// f_k(t) = t^k - t^(k-1) + 2t - 1, exactly. Throws BadK for k < 2.
Rational f_k_eval(int k, const Rational& t);

/// Bracket [lo, hi] around R_k, the root of f_k in (1/2, 1), with
/// f_k(lo) < 0 < f_k(hi). f_k increases on [0, 1], so bisection is sound.
struct RootBracket {
  int k = 2;
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Exact bisection from [1/2, 1] until the width is at most tol.
RootBracket r_k_bracket(int k, const Rational& tol);

/// t < 2^(-k/(k+1)), tested as t^(k+1) * 2^k < 1 (t > 0).
bool below_two_power_bound(const Rational& t, int k);

/// big / small > phi, tested as big^2 > big*small + small^2.
bool ratio_exceeds_golden(const Count& big, const Count& small);
/// big / small < phi.
bool ratio_below_golden(const Count& big, const Count& small);

/// a / b < R_k, tested as a^k - a^(k-1) b + 2 a b^(k-1) - b^k < 0
/// (valid for 0 < a <= b).
bool ratio_below_r_k(const Count& a, const Count& b, int k);

struct LeafBoundReport {
  int k = 2;
  int leaves_checked = 0;
  std::vector<Vertex> violations;
  bool pass() const { return violations.empty(); }
};

/// For a tree of stars whose centers all have degree >= k, checks
/// F(T - v) < R_k F(T) at every leaf v. Throws NotApplicable otherwise.
LeafBoundReport check_generalized_leaf_bound(const Tree& tree, int k);

/// Leaf and center golden-ratio bounds: F(T) > phi F(T - v) for leaves
/// (skipping the exposed center of an almost tree of stars) and
/// F(T) < phi F(T - w) for every center.
struct GoldenRatioReport {
  int leaves_checked = 0;
  int centers_checked = 0;
  std::vector<Vertex> leaf_violations;
  std::vector<Vertex> center_violations;
  bool pass() const { return leaf_violations.empty() && center_violations.empty(); }
};

/// Throws NotApplicable unless the tree is a tree of stars or almost one.
GoldenRatioReport check_golden_ratio_bounds(const Tree& tree);

}  // namespace msindex

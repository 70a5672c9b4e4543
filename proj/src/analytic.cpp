#include "msindex/analytic.hpp"

#include <algorithm>
#include <string>

#include "msindex/error.hpp"
#include "msindex/star_structure.hpp"

namespace msindex {

namespace {

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Count power(const Count& base, int e) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

Rational f_k_eval(int k, const Rational& t) {
  if (k < 2) throw BadK("f_k needs k >= 2, got " + std::to_string(k));
  Rational last = power(t, k - 1);
  Rational out = last * t - last + 2 * t - 1;
  out.canonicalize();
  return out;
}

RootBracket r_k_bracket(int k, const Rational& tol) {
  if (k < 2) throw BadK("R_k needs k >= 2, got " + std::to_string(k));
  if (tol <= 0) throw BadRange("bracket tolerance must be positive");
  RootBracket b{k, Rational(1, 2), Rational(1)};
  while (b.width() > tol) {
    Rational mid = (b.lo + b.hi) / 2;
    mid.canonicalize();
    if (f_k_eval(k, mid) < 0)
      b.lo = mid;
    else
      b.hi = mid;
  }
  return b;
}

bool below_two_power_bound(const Rational& t, int k) {
  Rational lhs = power(t, k + 1) * power(Rational(2), k);
  return lhs < 1;
}

bool ratio_exceeds_golden(const Count& big, const Count& small) {
  return big * big > big * small + small * small;
}

bool ratio_below_golden(const Count& big, const Count& small) {
  return big * big < big * small + small * small;
}

bool ratio_below_r_k(const Count& a, const Count& b, int k) {
  if (k < 2) throw BadK("R_k needs k >= 2, got " + std::to_string(k));
  Count value = power(a, k) - power(a, k - 1) * b + 2 * a * power(b, k - 1) - power(b, k);
  return value < 0;
}

LeafBoundReport check_generalized_leaf_bound(const Tree& tree, int k) {
  if (k < 2) throw BadK("R_k needs k >= 2, got " + std::to_string(k));
  auto centers = tree_of_stars_centers(tree);
  if (!centers) throw NotApplicable("the generalized leaf bound applies to trees of stars only");
  for (Vertex c : *centers)
    if (tree.degree(c) < k)
      throw NotApplicable("center " + std::to_string(c) + " has degree " + std::to_string(tree.degree(c)) +
                          " < k = " + std::to_string(k));
  LeafBoundReport report{k, 0, {}};
  const Count whole = merrifield_simmons(tree);
  for (Vertex v : tree.leaves()) {
    Vertex removed[] = {v};
    ++report.leaves_checked;
    if (!ratio_below_r_k(merrifield_simmons(tree.without(removed)), whole, k)) report.violations.push_back(v);
  }
  return report;
}

GoldenRatioReport check_golden_ratio_bounds(const Tree& tree) {
  auto cls = classify(tree);
  std::vector<Vertex> centers;
  Vertex exposed = -1;
  if (auto* tos = std::get_if<TreeOfStars>(&cls)) {
    centers = tos->centers;
  } else if (auto* almost = std::get_if<AlmostTreeOfStars>(&cls)) {
    centers = almost->centers;
    exposed = almost->exposed;
  } else {
    throw NotApplicable("golden-ratio bounds apply to trees of stars and almost trees of stars");
  }
  GoldenRatioReport report;
  const Count whole = merrifield_simmons(tree);
  for (Vertex v : tree.leaves()) {
    if (v == exposed) continue;
    Vertex removed[] = {v};
    ++report.leaves_checked;
    if (!ratio_exceeds_golden(whole, merrifield_simmons(tree.without(removed)))) report.leaf_violations.push_back(v);
  }
  for (Vertex w : centers) {
    Vertex removed[] = {w};
    ++report.centers_checked;
    if (!ratio_below_golden(whole, merrifield_simmons(tree.without(removed)))) report.center_violations.push_back(w);
  }
  return report;
}

}  // namespace msindex

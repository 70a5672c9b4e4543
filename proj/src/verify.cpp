#include "msindex/verify.hpp"

#include <algorithm>
#include <functional>

#include "msindex/analytic.hpp"
#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/edge_list.hpp"
#include "msindex/enumerate.hpp"
#include "msindex/error.hpp"
#include "msindex/rotation.hpp"
#include "msindex/star_structure.hpp"

namespace msindex {

namespace {

void require_budget(const std::string& suite, int max_n, int limit) {
  if (max_n < 1 || max_n > limit)
    throw BudgetExceeded(suite + " supports 1 <= max_n <= " + std::to_string(limit) + ", got " +
                         std::to_string(max_n));
}

std::string describe(const Tree& tree) { return "tree " + canonical_code(tree).code; }

// Runs check(tree, report) on every free tree of order 1..max_n. Worker
// reports are merged and violations sorted, so the result does not
// depend on the worker count.
VerificationReport sweep(const std::string& name, int max_n, int jobs,
                         const std::function<void(const Tree&, VerificationReport&)>& check) {
  VerificationReport total;
  total.name = name;
  jobs = std::max(1, jobs);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<VerificationReport> local(jobs);
    FreeTreeStream stream(n);
    consume_in_parallel(stream, jobs, 256, [&](int worker, std::span<const LevelSequence> batch) {
      for (const auto& levels : batch) {
        ++local[worker].cases;
        check(tree_from_levels(levels), local[worker]);
      }
    });
    for (auto& r : local) {
      total.cases += r.cases;
      total.items += r.items;
      total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
    }
  }
  std::sort(total.violations.begin(), total.violations.end());
  return total;
}

void check_deletion_recurrence(const Tree& tree, VerificationReport& report) {
  const Count whole = merrifield_simmons(tree);
  if (tree.order() <= kSubsetOracleMaxOrder) {
    ++report.items;
    if (whole != count_stable_sets_bruteforce(tree))
      report.violations.push_back(describe(tree) + ": recurrence count differs from the subset scan");
  }
  for (Vertex v = 0; v < tree.order(); ++v) {
    ++report.items;
    Vertex only[] = {v};
    const Count minus_v = merrifield_simmons(tree.without(only));
    std::vector<Vertex> closed{v};
    for (Vertex u : tree.neighbors(v)) closed.push_back(u);
    const Count minus_closed = merrifield_simmons(tree.without(closed));
    const std::string at = describe(tree) + " vertex " + std::to_string(v);
    if (whole != minus_v + minus_closed) report.violations.push_back(at + ": deletion recurrence fails");
    if (!(minus_v < whole)) report.violations.push_back(at + ": F(T - v) >= F(T)");
    const bool upper = tree.degree(v) >= 1 ? whole < 2 * minus_v : whole <= 2 * minus_v;
    if (!upper) report.violations.push_back(at + ": factor-two bound fails");
  }
}

void check_rotation_delta(const Tree& tree, VerificationReport& report) {
  const Count whole = merrifield_simmons(tree);
  for_each_rotation(tree, [&](const Rotation& rot) {
    ++report.items;
    const Count rotated = merrifield_simmons(apply_rotation(tree, rot));
    const auto identity = f_delta_identity(tree, rot);
    const std::string at = describe(tree) + " rotation " + format_rotation(rot);
    if (identity.lhs != whole - rotated || identity.lhs != identity.rhs)
      report.violations.push_back(at + ": delta identity fails");
    if (decreases_f(decompose(tree, rot)) != (rotated < whole))
      report.violations.push_back(at + ": sign test disagrees with direct comparison");
  });
}

void check_ratios(const Tree& tree, VerificationReport& report) {
  auto cls = classify(tree);
  if (std::holds_alternative<OddPath>(cls) || std::holds_alternative<OtherTree>(cls)) return;
  const auto golden = check_golden_ratio_bounds(tree);
  report.items += golden.leaves_checked + golden.centers_checked;
  for (Vertex v : golden.leaf_violations)
    report.violations.push_back(describe(tree) + " leaf " + std::to_string(v) + ": leaf golden-ratio bound fails");
  for (Vertex v : golden.center_violations)
    report.violations.push_back(describe(tree) + " center " + std::to_string(v) +
                                ": center golden-ratio bound fails");
  const auto* tos = std::get_if<TreeOfStars>(&cls);
  if (!tos || tos->centers.empty() || !is_balanced(tree)) return;
  int k = tree.order();
  for (Vertex c : tos->centers) k = std::min(k, tree.degree(c));
  const auto leaf = check_generalized_leaf_bound(tree, k);
  report.items += leaf.leaves_checked;
  for (Vertex v : leaf.violations)
    report.violations.push_back(describe(tree) + " leaf " + std::to_string(v) + ": R_" + std::to_string(k) +
                                " leaf bound fails");
}

void check_brackets(VerificationReport& report) {
  const Rational tol(1, 1000000000000L);
  for (int k = 2; k <= 64; ++k) {
    ++report.cases;
    ++report.items;
    const auto b = r_k_bracket(k, tol);
    const std::string at = "R_" + std::to_string(k) + " bracket";
    if (b.width() > tol) report.violations.push_back(at + ": wider than 1e-12");
    if (!(f_k_eval(k, b.lo) < 0 && f_k_eval(k, b.hi) > 0)) report.violations.push_back(at + ": no sign change");
    if (b.lo < Rational(1, 2) || b.hi >= 1) report.violations.push_back(at + ": outside [1/2, 1)");
    if (!below_two_power_bound(b.hi, k)) report.violations.push_back(at + ": hi is not below 2^(-k/(k+1))");
  }
}

void check_roundtrip(const Tree& tree, VerificationReport& report) {
  const auto code = canonical_code(tree);
  ++report.items;
  if (canonical_code(tree_from_code(code)) != code)
    report.violations.push_back(describe(tree) + ": code does not decode to the same class");
  if (code.code.size() != 2 * static_cast<std::size_t>(tree.order()))
    report.violations.push_back(describe(tree) + ": code length is not 2n");
  ++report.items;
  if (!(parse_edge_list(format_edge_list(tree)) == tree))
    report.violations.push_back(describe(tree) + ": edge-list text does not round-trip");
  if (tree.order() >= 3 && is_tree_of_stars(tree)) {
    ++report.items;
    if (canonical_code(realize(center_tree(tree))) != code)
      report.violations.push_back(describe(tree) + ": realize(center_tree) is not isomorphic to the tree");
  }
}

}  // namespace

VerificationReport verify_deletion_recurrence(int max_n, int jobs) {
  require_budget("lemma1", max_n, kDeletionMaxOrder);
  return sweep("lemma1", max_n, jobs, check_deletion_recurrence);
}

VerificationReport verify_rotation_delta(int max_n, int jobs) {
  require_budget("lemma7", max_n, kRotationDeltaMaxOrder);
  return sweep("lemma7", max_n, jobs, check_rotation_delta);
}

VerificationReport verify_ratios(int max_n, int jobs) {
  require_budget("ratios", max_n, kRatiosMaxOrder);
  auto report = sweep("ratios", max_n, jobs, check_ratios);
  VerificationReport brackets;
  check_brackets(brackets);
  report.cases += brackets.cases;
  report.items += brackets.items;
  report.violations.insert(report.violations.end(), brackets.violations.begin(), brackets.violations.end());
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

VerificationReport verify_roundtrip(int max_n, int jobs) {
  require_budget("roundtrip", max_n, kRoundtripMaxOrder);
  return sweep("roundtrip", max_n, jobs, check_roundtrip);
}

VerificationReport run_suite(const std::string& suite, int max_n, int jobs) {
  if (suite == "lemma1") return verify_deletion_recurrence(max_n, jobs);
  if (suite == "lemma7") return verify_rotation_delta(max_n, jobs);
  if (suite == "ratios") return verify_ratios(max_n, jobs);
  if (suite == "roundtrip") return verify_roundtrip(max_n, jobs);
  if (suite == "structure") return verify_structure(max_n, jobs);
  if (suite == "ctpath") return verify_ctpath(max_n, jobs);
  throw ParseError("unknown suite '" + suite + "'");
}

}  // namespace msindex

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/star_structure.hpp"

namespace msindex {

enum class SearchMethod { Exhaustive, Pruned };

std::string method_name(SearchMethod m);
SearchMethod parse_method(const std::string& name);

/// Minimum F over all trees with order n and stability number alpha,
/// together with every minimizer (sorted canonical codes).
struct ExtremalRecord {
  int n = 0;
  int alpha = 0;
  Count f_min = 0;
  std::vector<CanonicalCode> minimizers;
  SearchMethod method = SearchMethod::Exhaustive;
};

inline constexpr int kExhaustiveMaxOrder = 20;
inline constexpr int kPrunedMaxCenters = 14;

/// True when some tree of order n has stability number alpha.
bool alpha_feasible(int n, int alpha);

/// Records for every feasible alpha of order n from one pass over the
/// free trees, fanned out over `jobs` threads. Throws BudgetExceeded for
/// n > kExhaustiveMaxOrder.
std::map<int, ExtremalRecord> extremal_exhaustive_all(int n, int jobs = 1);

/// Throws BudgetExceeded, or EmptyClass when no tree has (n, alpha).
ExtremalRecord extremal_exhaustive(int n, int alpha, int jobs = 1);

/// Search restricted to balanced trees of stars (realized from balanced
/// center trees) plus the path when it has stability number alpha.
/// Throws BudgetExceeded when n - alpha > kPrunedMaxCenters and
/// EmptyClass when no tree has (n, alpha).
ExtremalRecord extremal_pruned(int n, int alpha);

/// Same record, read from / written to `cache_dir` when given.
ExtremalRecord extremal_cached(int n, int alpha, SearchMethod method, const std::optional<std::string>& cache_dir,
                               int jobs = 1);

/// Outcome of a verification sweep; `violations` holds one line each.
struct VerificationReport {
  std::string name;
  int cases = 0;
  long long items = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// Every minimizer must be a balanced tree of stars or an odd path.
void check_structure(const ExtremalRecord& record, VerificationReport& report);

/// The unique tree that is a balanced tree of stars whose center tree is
/// a path with the light centers at its ends. Needs alpha > n/2 and at
/// most two light centers; throws BadRange otherwise.
Tree predicted_path_extremal(int n, int alpha);

/// Whether (n, alpha) falls under the path characterization.
bool ctpath_applies(int n, int alpha);

/// For (n, alpha) under the path characterization: the minimizer set
/// must be exactly {predicted_path_extremal(n, alpha)}, every minimizer
/// must meet the three conditions directly, and exactly one balanced
/// center tree may meet them.
void check_ctpath(const ExtremalRecord& record, VerificationReport& report);

VerificationReport verify_structure(int max_n, int jobs = 1);
VerificationReport verify_ctpath(int max_n, int jobs = 1);

/// Center tree of a balanced tree of stars is a path with every light
/// center at an end.
bool is_path_with_light_ends(const CenterTree& ct, int heavy_size);

/// Extremal center trees for every alpha in (n/2, n).
struct AtlasEntry {
  int alpha = 0;
  HeavyLight accounting;
  ExtremalRecord record;
  std::vector<CenterTree> center_trees;  // one per minimizer, same order
};
std::vector<AtlasEntry> extremal_atlas(int n);

/// Machine checks on an atlas entry; appends violations to the report.
void check_atlas_entry(int n, const AtlasEntry& entry, VerificationReport& report);

// Results files.
std::string csv_header();
std::string csv_row(const ExtremalRecord& record);
std::string record_to_json(const ExtremalRecord& record);
ExtremalRecord record_from_json(const std::string& text);

}  // namespace msindex

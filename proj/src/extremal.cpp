#include "msindex/extremal.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msindex/enumerate.hpp"
#include "msindex/error.hpp"

namespace msindex {

std::string method_name(SearchMethod m) { return m == SearchMethod::Exhaustive ? "exhaustive" : "pruned"; }

SearchMethod parse_method(const std::string& name) {
  if (name == "exhaustive") return SearchMethod::Exhaustive;
  if (name == "pruned") return SearchMethod::Pruned;
  throw ParseError("unknown search method '" + name + "'");
}

bool alpha_feasible(int n, int alpha) {
  if (n < 1) return false;
  if (n == 1) return alpha == 1;
  return alpha >= (n + 1) / 2 && alpha <= n - 1;
}

namespace {

void require_feasible(int n, int alpha) {
  if (!alpha_feasible(n, alpha))
    throw EmptyClass("no tree has n=" + std::to_string(n) + " and alpha=" + std::to_string(alpha));
}

std::vector<CanonicalCode> sorted_codes(std::vector<CanonicalCode> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace

std::map<int, ExtremalRecord> extremal_exhaustive_all(int n, int jobs) {
  if (n < 1 || n > kExhaustiveMaxOrder)
    throw BudgetExceeded("exhaustive search supports 1 <= n <= " + std::to_string(kExhaustiveMaxOrder) + ", got " +
                         std::to_string(n));
  struct Best {
    std::uint64_t f = std::numeric_limits<std::uint64_t>::max();
    std::vector<LevelSequence> trees;
  };
  jobs = std::max(1, jobs);
  std::vector<std::vector<Best>> per_worker(jobs, std::vector<Best>(n + 1));

  FreeTreeStream stream(n);
  consume_in_parallel(stream, jobs, 4096, [&](int worker, std::span<const LevelSequence> batch) {
    auto& best = per_worker[worker];
    for (const auto& levels : batch) {
      auto summary = summarize_preorder(parents_from_levels(levels));
      Best& b = best[summary.alpha];
      if (summary.f < b.f) {
        b.f = summary.f;
        b.trees.assign(1, levels);
      } else if (summary.f == b.f) {
        b.trees.push_back(levels);
      }
    }
  });

  std::map<int, ExtremalRecord> out;
  for (int alpha = 0; alpha <= n; ++alpha) {
    Best merged;
    for (auto& worker : per_worker) {
      Best& b = worker[alpha];
      if (b.trees.empty()) continue;
      if (b.f < merged.f) {
        merged.f = b.f;
        merged.trees = std::move(b.trees);
      } else if (b.f == merged.f) {
        merged.trees.insert(merged.trees.end(), b.trees.begin(), b.trees.end());
      }
    }
    if (merged.trees.empty()) continue;
    ExtremalRecord record{n, alpha, Count(static_cast<unsigned long>(merged.f)), {}, SearchMethod::Exhaustive};
    for (const auto& levels : merged.trees) record.minimizers.push_back(canonical_code(tree_from_levels(levels)));
    record.minimizers = sorted_codes(std::move(record.minimizers));
    out.emplace(alpha, std::move(record));
  }
  return out;
}

ExtremalRecord extremal_exhaustive(int n, int alpha, int jobs) {
  if (n > kExhaustiveMaxOrder)
    throw BudgetExceeded("exhaustive search supports n <= " + std::to_string(kExhaustiveMaxOrder));
  require_feasible(n, alpha);
  auto all = extremal_exhaustive_all(n, jobs);
  return all.at(alpha);
}

ExtremalRecord extremal_pruned(int n, int alpha) {
  require_feasible(n, alpha);
  if (n == 1) return {1, 1, Count(2), {canonical_code(Tree())}, SearchMethod::Pruned};
  if (n - alpha > kPrunedMaxCenters)
    throw BudgetExceeded("pruned search supports at most " + std::to_string(kPrunedMaxCenters) +
                         " centers, (n, alpha) needs " + std::to_string(n - alpha));

  std::map<CanonicalCode, Count> candidates;
  for (const auto& ct : enumerate_balanced_center_trees(n, alpha)) {
    Tree t = realize(ct);
    candidates.emplace(canonical_code(t), merrifield_simmons(t));
  }
  Tree path = path_tree(n);
  if (stability_number(path) == alpha) candidates.emplace(canonical_code(path), merrifield_simmons(path));

  if (candidates.empty()) {
    // No structured candidate: fall back to the full scan where affordable.
    ExtremalRecord record = extremal_exhaustive(n, alpha);
    record.method = SearchMethod::Pruned;
    return record;
  }
  ExtremalRecord record{n, alpha, 0, {}, SearchMethod::Pruned};
  bool first = true;
  for (const auto& [code, f] : candidates) {
    if (first || f < record.f_min) {
      record.f_min = f;
      record.minimizers.assign(1, code);
      first = false;
    } else if (f == record.f_min) {
      record.minimizers.push_back(code);
    }
  }
  record.minimizers = sorted_codes(std::move(record.minimizers));
  return record;
}

ExtremalRecord extremal_cached(int n, int alpha, SearchMethod method, const std::optional<std::string>& cache_dir,
                               int jobs) {
  std::filesystem::path file;
  if (cache_dir) {
    file = std::filesystem::path(*cache_dir) /
           ("n" + std::to_string(n) + "_alpha" + std::to_string(alpha) + "_" + method_name(method) + ".json");
    if (std::ifstream in(file); in) {
      std::stringstream buffer;
      buffer << in.rdbuf();
      return record_from_json(buffer.str());
    }
  }
  ExtremalRecord record =
      method == SearchMethod::Exhaustive ? extremal_exhaustive(n, alpha, jobs) : extremal_pruned(n, alpha);
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    std::ofstream out(file);
    out << record_to_json(record) << '\n';
  }
  return record;
}

bool is_path_with_light_ends(const CenterTree& ct, int heavy_size) {
  for (Vertex c = 0; c < ct.size(); ++c) {
    if (ct.shape.degree(c) > 2) return false;
    if (ct.labels[c] < heavy_size && ct.shape.degree(c) > 1) return false;
  }
  return true;
}

namespace {

std::string case_name(const ExtremalRecord& r) {
  return "n=" + std::to_string(r.n) + " alpha=" + std::to_string(r.alpha);
}

}  // namespace

void check_structure(const ExtremalRecord& record, VerificationReport& report) {
  ++report.cases;
  for (const auto& code : record.minimizers) {
    ++report.items;
    Tree t = tree_from_code(code);
    auto cls = classify(t);
    bool ok = std::holds_alternative<OddPath>(cls) || (std::holds_alternative<TreeOfStars>(cls) && is_balanced(t));
    if (!ok)
      report.violations.push_back(case_name(record) + ": minimizer " + code.code + " is " + class_name(cls) +
                                  (std::holds_alternative<TreeOfStars>(cls) ? " (unbalanced)" : ""));
  }
}

bool ctpath_applies(int n, int alpha) {
  if (n < 3 || 2 * alpha <= n || alpha > n - 1) return false;
  return heavy_light(n, alpha).light <= 2;
}

Tree predicted_path_extremal(int n, int alpha) {
  if (!ctpath_applies(n, alpha))
    throw BadRange("the path characterization needs alpha > n/2 and at most two light centers");
  HeavyLight hl = heavy_light(n, alpha);
  const int k = n - alpha;
  CenterTree ct{path_tree(k), std::vector<int>(k, hl.heavy_size), {}};
  if (hl.light >= 1) ct.labels.front() = hl.light_size;
  if (hl.light >= 2) ct.labels.back() = hl.light_size;
  return realize(ct);
}

void check_ctpath(const ExtremalRecord& record, VerificationReport& report) {
  if (!ctpath_applies(record.n, record.alpha)) return;
  ++report.cases;
  const HeavyLight hl = heavy_light(record.n, record.alpha);
  const CanonicalCode predicted = canonical_code(predicted_path_extremal(record.n, record.alpha));

  // Extremal => the three conditions.
  for (const auto& code : record.minimizers) {
    ++report.items;
    Tree t = tree_from_code(code);
    if (!is_tree_of_stars(t) || !is_balanced(t)) {
      report.violations.push_back(case_name(record) + ": minimizer " + code.code + " is not a balanced tree of stars");
      continue;
    }
    if (!is_path_with_light_ends(center_tree(t), hl.heavy_size))
      report.violations.push_back(case_name(record) + ": minimizer " + code.code +
                                  " has a center tree that is not a path with light ends");
  }
  // The three conditions => extremal, and they pin down a single tree.
  if (std::find(record.minimizers.begin(), record.minimizers.end(), predicted) == record.minimizers.end())
    report.violations.push_back(case_name(record) + ": predicted tree " + predicted.code + " is not extremal");
  if (record.minimizers.size() != 1)
    report.violations.push_back(case_name(record) + ": expected a unique extremal tree, found " +
                                std::to_string(record.minimizers.size()));
  int matching = 0;
  for (const auto& ct : enumerate_balanced_center_trees(record.n, record.alpha))
    matching += is_path_with_light_ends(ct, hl.heavy_size);
  if (matching != 1)
    report.violations.push_back(case_name(record) + ": " + std::to_string(matching) +
                                " balanced center trees meet the path conditions, expected 1");
}

VerificationReport verify_structure(int max_n, int jobs) {
  if (max_n > kExhaustiveMaxOrder) throw BudgetExceeded("structure verification supports max_n <= 20");
  VerificationReport report;
  report.name = "structure";
  for (int n = 1; n <= max_n; ++n)
    for (const auto& [alpha, record] : extremal_exhaustive_all(n, jobs)) check_structure(record, report);
  return report;
}

VerificationReport verify_ctpath(int max_n, int jobs) {
  if (max_n > kExhaustiveMaxOrder) throw BudgetExceeded("center-tree verification supports max_n <= 20");
  VerificationReport report;
  report.name = "ctpath";
  for (int n = 3; n <= max_n; ++n)
    for (const auto& [alpha, record] : extremal_exhaustive_all(n, jobs)) check_ctpath(record, report);
  return report;
}

std::vector<AtlasEntry> extremal_atlas(int n) {
  std::vector<AtlasEntry> atlas;
  for (int alpha = n / 2 + 1; alpha <= n - 1; ++alpha) {
    if (n < 3) break;
    AtlasEntry entry{alpha, heavy_light(n, alpha), extremal_pruned(n, alpha), {}};
    for (const auto& code : entry.record.minimizers) {
      Tree t = tree_from_code(code);
      if (is_tree_of_stars(t)) entry.center_trees.push_back(center_tree(t));
    }
    atlas.push_back(std::move(entry));
  }
  return atlas;
}

void check_atlas_entry(int n, const AtlasEntry& entry, VerificationReport& report) {
  ++report.cases;
  const auto where = "n=" + std::to_string(n) + " alpha=" + std::to_string(entry.alpha);
  const HeavyLight& hl = entry.accounting;
  if (entry.center_trees.size() != entry.record.minimizers.size())
    report.violations.push_back(where + ": a minimizer is not a tree of stars");
  for (const auto& ct : entry.center_trees) {
    ++report.items;
    const std::string code = center_tree_code(ct);
    int heavy = 0, light = 0;
    for (int label : ct.labels) {
      if (label == hl.heavy_size)
        ++heavy;
      else if (label == hl.light_size)
        ++light;
    }
    if (!ct.is_balanced() || heavy != hl.heavy || light != hl.light || ct.size() != n - entry.alpha)
      report.violations.push_back(where + ": center tree " + code + " breaks the heavy/light accounting");
    if (hl.light <= 2 && !is_path_with_light_ends(ct, hl.heavy_size))
      report.violations.push_back(where + ": center tree " + code + " is not a path with light ends");
  }
}

std::string csv_header() { return "n,alpha,f_min,count,codes"; }

std::string csv_row(const ExtremalRecord& record) {
  std::string codes;
  for (const auto& c : record.minimizers) {
    if (!codes.empty()) codes += ';';
    codes += c.code;
  }
  return std::to_string(record.n) + ',' + std::to_string(record.alpha) + ',' + to_string(record.f_min) + ',' +
         std::to_string(record.minimizers.size()) + ',' + codes;
}

std::string record_to_json(const ExtremalRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["alpha"] = record.alpha;
  if (record.f_min.fits_ulong_p())
    j["f_min"] = record.f_min.get_ui();
  else
    j["f_min"] = to_string(record.f_min);
  j["count"] = record.minimizers.size();
  j["codes"] = nlohmann::json::array();
  for (const auto& c : record.minimizers) j["codes"].push_back(c.code);
  j["method"] = method_name(record.method);
  return j.dump();
}

ExtremalRecord record_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    ExtremalRecord r;
    r.n = j.at("n").get<int>();
    r.alpha = j.at("alpha").get<int>();
    const auto& f = j.at("f_min");
    r.f_min = f.is_string() ? Count(f.get<std::string>()) : Count(f.get<unsigned long>());
    for (const auto& c : j.at("codes")) r.minimizers.push_back({c.get<std::string>()});
    r.method = parse_method(j.at("method").get<std::string>());
    if (j.at("count").get<std::size_t>() != r.minimizers.size()) throw ParseError("count does not match codes");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed extremal record: ") + e.what());
  }
}

}  // namespace msindex

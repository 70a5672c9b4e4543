#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/dot.hpp"
#include "msindex/edge_list.hpp"
#include "msindex/enumerate.hpp"
#include "msindex/error.hpp"
#include "msindex/extremal.hpp"
#include "msindex/rotation.hpp"
#include "msindex/star_structure.hpp"
#include "msindex/verify.hpp"

using namespace msindex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

std::string join(const std::vector<Vertex>& values, char sep = ',') {
  std::string out;
  for (Vertex v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

int cmd_index(const std::string& file) {
  const Tree t = read_edge_list_file(file);
  std::cout << "F=" << to_string(merrifield_simmons(t)) << " alpha=" << stability_number(t) << '\n';
  return kExitOk;
}

int cmd_enumerate(int n, std::optional<int> alpha, const std::string& format) {
  auto emit = [&, index = 0](const Tree& t) mutable {
    if (format == "codes") {
      std::cout << canonical_code(t).code << '\n';
    } else {
      std::cout << "# tree " << index << '\n' << format_edge_list(t);
    }
    ++index;
  };
  if (alpha) {
    auto stream = trees_with_alpha(n, *alpha);
    while (auto t = stream.next()) emit(*t);
  } else {
    FreeTreeStream stream(n);
    while (auto t = stream.next()) emit(*t);
  }
  return kExitOk;
}

int cmd_classify(const std::string& file, const std::optional<std::string>& dot) {
  const Tree t = read_edge_list_file(file);
  const auto cls = classify(t);
  std::cout << "class=" << class_name(cls) << '\n';
  std::vector<Vertex> centers;
  if (const auto* tos = std::get_if<TreeOfStars>(&cls)) {
    centers = tos->centers;
    std::cout << "centers=" << join(centers) << '\n';
    std::cout << "balanced=" << (is_balanced(t) ? "true" : "false") << '\n';
    if (t.order() >= 3) {
      const CenterTree ct = center_tree(t);
      std::cout << "center_tree=" << center_tree_code(ct) << '\n';
      std::string edges;
      for (auto [a, b] : ct.shape.edges()) {
        if (!edges.empty()) edges += ',';
        edges += std::to_string(ct.origin[a]) + '-' + std::to_string(ct.origin[b]);
      }
      std::cout << "center_tree_edges=" << edges << '\n';
      std::string labels;
      for (int c = 0; c < ct.size(); ++c) {
        if (!labels.empty()) labels += ',';
        labels += std::to_string(ct.origin[c]) + ':' + std::to_string(ct.labels[c]);
      }
      std::cout << "center_labels=" << labels << '\n';
    }
  } else if (const auto* almost = std::get_if<AlmostTreeOfStars>(&cls)) {
    centers = almost->centers;
    std::cout << "centers=" << join(centers) << '\n';
    std::cout << "exposed=" << almost->exposed << '\n';
  }
  if (dot) write_file(*dot, tree_to_dot(t, centers));
  return kExitOk;
}

int cmd_rotate(const std::string& file, const std::string& rot_text, bool check_good) {
  const Tree t = read_edge_list_file(file);
  const Rotation rot = parse_rotation(rot_text);
  const Tree rotated = apply_rotation(t, rot);
  const bool good = is_good(t, rot);
  std::cout << "# good=" << (good ? "true" : "false") << " F=" << to_string(merrifield_simmons(t)) << "->"
            << to_string(merrifield_simmons(rotated)) << " alpha=" << stability_number(t) << "->"
            << stability_number(rotated) << '\n';
  std::cout << format_edge_list(rotated);
  return check_good && !good ? kExitViolation : kExitOk;
}

// Next rotation for the construct strategy, with the name of the rule used.
std::optional<std::pair<Rotation, std::string>> constructive_step(const Tree& t) {
  if (!t.is_path()) {
    const auto cls = classify(t);
    if (std::holds_alternative<TreeOfStars>(cls)) {
      if (!is_balanced(t)) return std::pair{rebalance_rotation(t), std::string("rebalance")};
    } else {
      return std::pair{construct_good_rotation_nontos(t), std::string("witness")};
    }
  }
  if (auto r = find_good_rotation(t)) return std::pair{*r, std::string("search")};
  return std::nullopt;
}

int cmd_improve(const std::string& file, const std::string& strategy) {
  Tree t = read_edge_list_file(file);
  const int n = t.order();
  const long long cap = static_cast<long long>(n) * n;
  const int alpha = stability_number(t);
  Count f = merrifield_simmons(t);
  std::cout << "# start F=" << to_string(f) << " alpha=" << alpha << '\n';
  long long steps = 0;
  for (;;) {
    std::optional<std::pair<Rotation, std::string>> step;
    if (strategy == "search") {
      if (auto r = find_good_rotation(t)) step = std::pair{*r, std::string("search")};
    } else {
      step = constructive_step(t);
    }
    if (!step) break;
    if (steps == cap) {
      std::cerr << "improve: stopped after the cap of " << cap << " rotations\n";
      std::cout << "# cap reached after " << steps << " steps F=" << to_string(f) << '\n' << format_edge_list(t);
      return kExitViolation;
    }
    const auto& [rot, rule] = *step;
    if (!is_good(t, rot))
      throw ConsistencyError("rotation " + format_rotation(rot) + " from rule '" + rule + "' is not good");
    Tree next = apply_rotation(t, rot);
    const Count next_f = merrifield_simmons(next);
    ++steps;
    std::cout << "# step " << steps << " " << rule << " rot=" << format_rotation(rot) << " F=" << to_string(f)
              << "->" << to_string(next_f) << '\n';
    t = std::move(next);
    f = next_f;
  }
  std::cout << "# final F=" << to_string(f) << " alpha=" << stability_number(t) << " steps=" << steps
            << " class=" << class_name(classify(t)) << '\n';
  std::cout << format_edge_list(t);
  return kExitOk;
}

int cmd_extremal(int n, int alpha, const std::string& method, const std::optional<std::string>& out,
                 const std::optional<std::string>& json, const std::optional<std::string>& cache, int jobs) {
  const ExtremalRecord record = extremal_cached(n, alpha, parse_method(method), cache, jobs);
  const std::string csv = csv_header() + '\n' + csv_row(record) + '\n';
  std::cout << csv;
  if (out) write_file(*out, csv);
  if (json) write_file(*json, record_to_json(record) + '\n');
  return kExitOk;
}

int cmd_atlas(int n, const std::optional<std::string>& dot_dir) {
  if (n < 3) throw BadRange("atlas needs n >= 3");
  if (dot_dir) std::filesystem::create_directories(*dot_dir);
  VerificationReport report;
  report.name = "atlas";
  for (const auto& entry : extremal_atlas(n)) {
    const HeavyLight& hl = entry.accounting;
    std::cout << "# alpha=" << entry.alpha << " h=" << hl.heavy << " l=" << hl.light
              << " heavy_size=" << hl.heavy_size << " light_size=" << hl.light_size
              << " f_min=" << to_string(entry.record.f_min) << " count=" << entry.record.minimizers.size() << '\n';
    for (std::size_t i = 0; i < entry.center_trees.size(); ++i) {
      const CenterTree& ct = entry.center_trees[i];
      std::string labels, edges;
      for (int label : ct.labels) labels += (labels.empty() ? "" : ",") + std::to_string(label);
      for (auto [a, b] : ct.shape.edges())
        edges += (edges.empty() ? "" : ",") + std::to_string(a) + '-' + std::to_string(b);
      std::cout << "alpha=" << entry.alpha << " center_tree=" << center_tree_code(ct) << " labels=" << labels
                << " edges=" << edges
                << " path_light_ends=" << (is_path_with_light_ends(ct, hl.heavy_size) ? "true" : "false") << '\n';
      if (dot_dir) {
        const std::string name = "n" + std::to_string(n) + "_alpha" + std::to_string(entry.alpha) + "_" +
                                 std::to_string(i + 1);
        write_file((std::filesystem::path(*dot_dir) / (name + ".dot")).string(),
                   center_tree_to_dot(ct, hl.heavy_size, name));
      }
    }
    check_atlas_entry(n, entry, report);
  }
  std::cout << "# checks cases=" << report.cases << " items=" << report.items
            << " violations=" << report.violations.size() << '\n';
  for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';
  return report.pass() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, int max_n, int jobs) {
  const VerificationReport report = run_suite(suite, max_n, jobs);
  std::cout << "suite=" << suite << " max_n=" << max_n << " cases=" << report.cases << " items=" << report.items
            << " violations=" << report.violations.size() << '\n';
  for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';
  std::cout << (report.pass() ? "PASS" : "FAIL") << '\n';
  return report.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable-set counts, trees of stars, rotations and extremal trees"};
  app.require_subcommand(1);
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string file;
  std::optional<std::string> dot, out, json, cache, dot_dir;
  std::optional<int> alpha_opt;
  int n = 0, alpha = 0, max_n = 0;
  std::string format = "codes", rot_text, strategy = "search", method = "exhaustive", suite;
  bool check_good = false;

  auto* index = app.add_subcommand("index", "Print F and alpha of a tree");
  index->add_option("file", file, "Edge-list file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every free tree of order n");
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_option("--alpha", alpha_opt, "Keep trees with this stability number");
  enumerate->add_option("--format", format, "codes or edges")->check(CLI::IsMember({"codes", "edges"}));

  auto* classify_cmd = app.add_subcommand("classify", "Structure class, centers and center tree");
  classify_cmd->add_option("file", file, "Edge-list file")->required();
  classify_cmd->add_option("--dot", dot, "Write a Graphviz rendering");

  auto* rotate = app.add_subcommand("rotate", "Apply a rotation 'y x x_new'");
  rotate->add_option("file", file, "Edge-list file")->required();
  rotate->add_option("--rot", rot_text, "Rotation as \"y x x_new\"")->required();
  rotate->add_flag("--check-good", check_good, "Exit 1 unless the rotation is good");

  auto* improve = app.add_subcommand("improve", "Apply good rotations until none is left");
  improve->add_option("file", file, "Edge-list file")->required();
  improve->add_option("--strategy", strategy, "search or construct")
      ->check(CLI::IsMember({"search", "construct"}));

  auto* extremal = app.add_subcommand("extremal", "Minimum F over trees with order n and stability number alpha");
  extremal->add_option("--n", n, "Order")->required();
  extremal->add_option("--alpha", alpha, "Stability number")->required();
  extremal->add_option("--method", method, "exhaustive or pruned")->check(CLI::IsMember({"exhaustive", "pruned"}));
  extremal->add_option("--out", out, "Also write the CSV here");
  extremal->add_option("--json", json, "Write the record as JSON");
  extremal->add_option("--cache", cache, "Cache directory");

  auto* atlas = app.add_subcommand("atlas", "Center trees of the extremal trees for every alpha > n/2");
  atlas->add_option("--n", n, "Order")->required();
  atlas->add_option("--dot-dir", dot_dir, "Write one Graphviz file per center tree");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma7", "ratios", "structure", "ctpath", "roundtrip"}));
  verify->add_option("--max-n", max_n, "Largest order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*index) return cmd_index(file);
    if (*enumerate) return cmd_enumerate(n, alpha_opt, format);
    if (*classify_cmd) return cmd_classify(file, dot);
    if (*rotate) return cmd_rotate(file, rot_text, check_good);
    if (*improve) return cmd_improve(file, strategy);
    if (*extremal) return cmd_extremal(n, alpha, method, out, json, cache, jobs);
    if (*atlas) return cmd_atlas(n, dot_dir);
    if (*verify) return cmd_verify(suite, max_n, jobs);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

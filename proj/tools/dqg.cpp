#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dqg/suite.hpp"

namespace {

using namespace dqg;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Q> parse_weights(const std::string& s) {
  std::vector<Q> out;
  for (const std::string& w : split(s, ',')) out.push_back(parse_rational(w));
  return out;
}

void print_problems(const std::string& what, const std::vector<std::string>& problems) {
  std::cerr << what << "\n";
  for (const std::string& p : problems) std::cerr << "  - " << p << "\n";
}

int run_check(const std::string& file, const std::string& suite, bool as_json, double tol) {
  auto s = parse_suite(suite);
  if (!s) {
    std::cerr << "unknown suite '" << suite << "' (expected axioms, integrals, dual, gns, fundamental, modular or all)\n";
    return kInvalid;
  }
  Report report;
  try {
    Instance inst = load_instance(file);
    report = run_suite(inst, SuiteOptions{*s, tol});
  } catch (const ValidationError& e) {
    print_problems("invalid instance " + file + ":", e.problems());
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "invalid instance " << file << ": " << e.what() << "\n";
    return kInvalid;
  }
  if (as_json)
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << report_text(report);
  return report.all_pass() ? kPass : kFail;
}

// Action as one permutation per group element, in the order of the group's
// elements, each a comma-separated list of the images of the points.
std::vector<std::vector<int>> parse_action(const std::string& s, const std::vector<std::string>& points,
                                           std::size_t group_size) {
  std::vector<std::string> perms = split(s, ';');
  if (perms.size() != group_size) throw std::invalid_argument("action needs one permutation per group element");
  std::vector<std::vector<int>> out;
  for (const std::string& p : perms) {
    std::vector<std::string> images = split(p, ',');
    if (images.size() != points.size()) throw std::invalid_argument("action permutation has wrong length");
    std::vector<int> row;
    for (const std::string& img : images) {
      auto it = std::find(points.begin(), points.end(), img);
      if (it == points.end()) throw std::invalid_argument("unknown point '" + img + "' in action");
      row.push_back(static_cast<int>(it - points.begin()));
    }
    out.push_back(row);
  }
  return out;
}

int run_example(const std::string& kind, const std::string& points_s, const std::string& weights_s,
                const std::string& group_s, const std::string& action_s, const std::string& emit) {
  Instance inst;
  try {
    if (kind == "pair") {
      std::vector<std::string> points = split(points_s.empty() ? "1,2" : points_s, ',');
      std::vector<Q> w = weights_s.empty() ? std::vector<Q>(points.size(), Q(1)) : parse_weights(weights_s);
      inst = example_pair(points, w);
    } else if (kind == "crossed") {
      if (points_s.empty() && group_s.empty() && action_s.empty()) {
        inst = weights_s.empty() ? example_crossed(instance_c_base()) : example_crossed(instance_c_base(parse_weights(weights_s)));
      } else {
        if (points_s.empty() || group_s.empty() || action_s.empty())
          throw std::invalid_argument("crossed example needs --points, --group and --action together");
        BaseSpec b;
        b.points = split(points_s, ',');
        auto [elements, table] = named_group(group_s);
        b.elements = elements;
        b.table = table;
        b.action = parse_action(action_s, b.points, elements.size());
        b.weight = weights_s.empty() ? std::vector<Q>(b.points.size(), Q(1)) : parse_weights(weights_s);
        inst = example_crossed(b);
      }
    } else if (kind == "group") {
      auto [elements, table] = named_group(group_s.empty() ? "Z2" : group_s);
      inst = example_group(elements, table);
    } else {
      std::cerr << "unknown example '" << kind << "' (expected pair, crossed or group)\n";
      return kInvalid;
    }
  } catch (const ValidationError& e) {
    print_problems("invalid example parameters:", e.problems());
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "invalid example parameters: " << e.what() << "\n";
    return kInvalid;
  }
  std::ofstream out(emit);
  if (!out) {
    std::cerr << "cannot write " << emit << "\n";
    return kInvalid;
  }
  out << to_json(inst).dump(2) << "\n";
  std::cout << "wrote " << emit << " (" << inst.name << ", dim A = " << inst.algebra.basis.size() << ")\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks measured Hopf algebroids and their fundamental unitaries"};
  app.require_subcommand(1);

  std::string file, suite = "all";
  bool as_json = false;
  double tol = 1e-9;
  CLI::App* check = app.add_subcommand("check", "Run a check suite on an instance file");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("--suite", suite, "axioms|integrals|dual|gns|fundamental|modular|all");
  check->add_flag("--json", as_json, "Machine-readable report");
  check->add_option("--tol", tol, "Tolerance of the numeric checks");

  std::string kind, points, weights, group, action, emit;
  CLI::App* example = app.add_subcommand("example", "Build an example instance and write it to a file");
  example->add_option("kind", kind, "pair|crossed|group")->required();
  example->add_option("--points", points, "Comma-separated point names");
  example->add_option("--weights", weights, "Comma-separated weights as p/q");
  example->add_option("--group", group, "Z<n> or S3");
  example->add_option("--action", action, "Per group element, the images of the points; elements separated by ';'");
  example->add_option("--emit", emit, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (check->parsed()) return run_check(file, suite, as_json, tol);
  return run_example(kind, points, weights, group, action, emit);
}

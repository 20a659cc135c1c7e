#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dqg {

enum class Mode { Exact, Numeric };

struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;
  Mode mode = Mode::Exact;
  double millis = 0.0;
};

// A check returns nullopt on success, otherwise a witness description.
using Witness = std::optional<std::string>;

class Report {
 public:
  void run(const std::string& id, const std::string& anchor, const std::function<Witness()>& check,
           Mode mode = Mode::Exact);
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void append(const Report& other);

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_pass() const;
  const CheckResult* find(const std::string& id) const;
  std::vector<std::string> failed_ids() const;

 private:
  std::vector<CheckResult> results_;
};

std::string mode_name(Mode m);

}  // namespace dqg

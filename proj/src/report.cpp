#include "dqg/report.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace dqg {

void Report::run(const std::string& id, const std::string& anchor, const std::function<Witness()>& check,
                 Mode mode) {
  CheckResult r;
  r.id = id;
  r.anchor = anchor;
  r.mode = mode;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Witness w = check();
    r.pass = !w.has_value();
    if (w) r.witness = *w;
  } catch (const std::exception& e) {
    r.pass = false;
    r.witness = std::string("error: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  results_.push_back(std::move(r));
}

void Report::append(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool Report::all_pass() const {
  return std::all_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.pass; });
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& r : results_)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<std::string> Report::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& r : results_)
    if (!r.pass) out.push_back(r.id);
  return out;
}

std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

}  // namespace dqg

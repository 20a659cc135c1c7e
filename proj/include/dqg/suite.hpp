#pragma once

#include <optional>
#include <string>

#include "dqg/instance.hpp"
#include "dqg/modular.hpp"

namespace dqg {

enum class Suite { Axioms, Integrals, Dual, Gns, Fundamental, Modular, All };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct SuiteOptions {
  Suite suite = Suite::All;
  double tol = 1e-9;
};

// Runs the selected checks on an already built instance. Missing layers
// (no rational cocycle, degenerate nu, non-invertible antipode) are reported
// as failed checks rather than thrown.
Report run_suite(const Built& b, const SuiteOptions& opt);
// The measured layers only; `M` may carry substituted tables.
Report run_measured(const Measured& M, const SuiteOptions& opt);
// Builds `inst`; throws ValidationError when it is structurally invalid.
Report run_suite(const Instance& inst, const SuiteOptions& opt);

nlohmann::json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace dqg

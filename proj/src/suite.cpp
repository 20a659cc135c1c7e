#include "dqg/suite.hpp"

#include <cstdio>
#include <sstream>

namespace dqg {

namespace {

bool selects(const SuiteOptions& opt, Suite s) { return opt.suite == Suite::All || opt.suite == s; }

void add_failure(Report& r, const std::string& id, const std::string& anchor, const std::string& witness) {
  CheckResult c;
  c.id = id;
  c.anchor = anchor;
  c.witness = witness;
  r.add(std::move(c));
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "axioms") return Suite::Axioms;
  if (name == "integrals") return Suite::Integrals;
  if (name == "dual") return Suite::Dual;
  if (name == "gns") return Suite::Gns;
  if (name == "fundamental") return Suite::Fundamental;
  if (name == "modular") return Suite::Modular;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Axioms: return "axioms";
    case Suite::Integrals: return "integrals";
    case Suite::Dual: return "dual";
    case Suite::Gns: return "gns";
    case Suite::Fundamental: return "fundamental";
    case Suite::Modular: return "modular";
    case Suite::All: return "all";
  }
  return "?";
}

Report run_measured(const Measured& M, const SuiteOptions& opt) {
  Report r;
  if (selects(opt, Suite::Integrals)) r.append(check_integrals(M));
  if (selects(opt, Suite::Dual)) r.append(check_dual(M));
  if (selects(opt, Suite::Gns)) r.append(check_gns(M));
  if (!selects(opt, Suite::Fundamental) && !selects(opt, Suite::Modular)) return r;
  std::optional<Gns> gns;
  std::optional<Fundamental> fund;
  try {
    gns.emplace(M);
    fund.emplace(*gns);
  } catch (const std::exception& e) {
    add_failure(r, "instance.unitaries", "fundamental:construction", e.what());
    return r;
  }
  if (selects(opt, Suite::Fundamental)) r.append(check_fundamental(*fund));
  if (selects(opt, Suite::Modular)) r.append(check_modular(*fund, opt.tol));
  return r;
}

Report run_suite(const Built& b, const SuiteOptions& opt) {
  Report r;
  if (selects(opt, Suite::Axioms)) {
    r.append(check_base(*b.base, b.coc));
    r.append(check_algebroid(*b.alg));
    r.append(check_fiber_product(*b.alg, b.kit->fp()));
    r.append(check_hopf(*b.kit));
  }
  if (opt.suite == Suite::Axioms) return r;
  if (!b.measured) {
    add_failure(r, "instance.measured", "cocycle:square-root", b.cocycle_error);
    return r;
  }
  r.append(run_measured(*b.measured, opt));
  return r;
}

Report run_suite(const Instance& inst, const SuiteOptions& opt) { return run_suite(build(inst), opt); }

nlohmann::json report_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const CheckResult& c : r.results()) {
    if (!c.pass) ++failed;
    checks.push_back({{"check_id", c.id},
                      {"anchor", c.anchor},
                      {"status", c.pass ? "pass" : "fail"},
                      {"witness", c.witness},
                      {"mode", mode_name(c.mode)},
                      {"timing", c.millis}});
  }
  return {{"checks", checks}, {"total", r.results().size()}, {"failed", failed}};
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const CheckResult& c : r.results()) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%9.1f ms", c.millis);
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << ", " << mode_name(c.mode) << "] " << ms;
    if (!c.pass) {
      ++failed;
      out << "\n     witness: " << c.witness;
    }
    out << "\n";
  }
  out << r.results().size() << " checks, " << failed << " failed\n";
  return out.str();
}

}  // namespace dqg

#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>

#include "dqg/suite.hpp"

namespace dqg::test {

inline Instance make_instance(const std::string& name) {
  if (name == "T") return example_pair({"1", "2"}, {Q(1), Q(1)});
  if (name == "T3") return example_pair({"1", "2", "3"}, {Q(1), Q(2), Q(3)});
  if (name == "C") return example_crossed(instance_c_base());
  auto [el, tab] = named_group(name);
  return example_group(el, tab);
}

// Built instance with its GNS spaces and unitaries, shared across tests.
struct Stack {
  Built b;
  std::unique_ptr<Gns> gns;
  std::unique_ptr<Fundamental> fund;
  const Measured& M() const { return *b.measured; }
  const Algebroid& A() const { return *b.alg; }
  const Base& B() const { return *b.base; }
  const HopfKit& kit() const { return *b.kit; }
};

inline const Stack& stack(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Stack>> cache;
  auto& slot = cache[name];
  if (!slot) {
    slot = std::make_unique<Stack>();
    slot->b = build(make_instance(name));
    slot->gns = std::make_unique<Gns>(*slot->b.measured);
    slot->fund = std::make_unique<Fundamental>(*slot->gns);
  }
  return *slot;
}

inline bool all_pass(const Report& r, std::string* failed = nullptr) {
  for (const CheckResult& c : r.results())
    if (!c.pass) {
      if (failed) *failed = c.id + ": " + c.witness;
      return false;
    }
  return true;
}

// Small Gaussian rationals with a fixed seed; zero is drawn often enough to
// exercise sparse and singular cases.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Q rational(int bound = 4) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
    return Q(num(rng_), den(rng_));
  }
  GQ scalar(bool complex = true) {
    GQ z(rational());
    if (complex && coin(0.5)) z.im = rational();
    z.re.canonicalize();
    z.im.canonicalize();
    return z;
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  Vec vec(std::size_t n, double density = 0.7) {
    Vec v(n);
    for (auto& x : v)
      if (coin(density)) x = scalar();
    return v;
  }
  GMatrix mat(std::size_t r, std::size_t c, double density = 0.7) {
    GMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(density)) m(i, j) = scalar();
    return m;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace dqg::test

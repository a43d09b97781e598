#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace operadkit {

struct Violation {
  std::string rule;      ///< which identity failed, e.g. "sequential"
  std::string instance;  ///< enough detail to reproduce the failure by hand
};

/// Outcome of checking an identity over a family of instances. Every instance is counted;
/// only the first `kMaxStored` violations are kept verbatim.
class CheckReport {
 public:
  static constexpr std::size_t kMaxStored = 64;

  void pass() { ++checked_; }
  void fail(std::string rule, std::string instance);
  /// Records pass or fail depending on `holds`; the instance text is only built on failure.
  template <typename Describe>
  void expect(bool holds, const std::string& rule, Describe&& describe) {
    if (holds) {
      pass();
    } else {
      fail(rule, describe());
    }
  }
  void merge(const CheckReport& other);

  bool ok() const { return violation_count_ == 0; }
  std::size_t checked() const { return checked_; }
  std::size_t violation_count() const { return violation_count_; }
  const std::vector<Violation>& violations() const { return violations_; }

  bool exhaustive() const { return exhaustive_; }
  void set_exhaustive(bool value) { exhaustive_ = value; }
  void mark_sampled() { exhaustive_ = false; }

 private:
  std::size_t checked_ = 0;
  std::size_t violation_count_ = 0;
  bool exhaustive_ = true;
  std::vector<Violation> violations_;
};

}  // namespace operadkit

#include "operadkit/report.hpp"

namespace operadkit {

void CheckReport::fail(std::string rule, std::string instance) {
  ++checked_;
  ++violation_count_;
  if (violations_.size() < kMaxStored) violations_.push_back({std::move(rule), std::move(instance)});
}

void CheckReport::merge(const CheckReport& other) {
  checked_ += other.checked_;
  violation_count_ += other.violation_count_;
  exhaustive_ = exhaustive_ && other.exhaustive_;
  for (const auto& v : other.violations_) {
    if (violations_.size() >= kMaxStored) break;
    violations_.push_back(v);
  }
}

}  // namespace operadkit

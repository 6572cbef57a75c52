#pragma once

#include <chrono>
#include <optional>

#include "liouville/errors.hpp"

namespace liouville {

// Wall-clock budget shared by the search stages. Default: unlimited.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }
  void check() const {
    if (expired()) throw Timeout("time budget exhausted");
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace liouville

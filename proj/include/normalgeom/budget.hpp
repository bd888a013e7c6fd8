/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "normalgeom/error.hpp"

namespace ng {

/// Optional wall-clock limit for elimination steps.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0) d.end_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return end_ && std::chrono::steady_clock::now() > *end_; }
  void check(const std::string& what) const {
    if (expired()) throw Error(Errc::budget, "time budget exhausted during " + what);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

}  // namespace ng

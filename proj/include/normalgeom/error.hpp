/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ng {

enum class Errc {
  invalid_argument,
  parse,
  division_by_zero,
  field_mismatch,
  hypothesis,   // input violates a structural requirement (char 2, reducible, ...)
  degenerate,   // geometric construction undefined at the given data
  unstable,     // randomized estimate did not stabilize
  budget,       // sampling or time budget exhausted
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

const char* errc_name(Errc code) noexcept;

}  // namespace ng

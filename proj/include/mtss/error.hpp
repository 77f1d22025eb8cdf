//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>

namespace mtss {

enum class Errc {
  not_prime,
  field_too_large,
  division_by_zero,
  budget_exceeded,
  not_found,
  too_many_blocks,
  block_count_mismatch,
  malformed_signature,
  malformed_key,
  unsupported_parameter,
  too_many_redactions,
  already_redacted,
  no_construction,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

/// Library-wide error type; code() carries the machine-readable class.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mtss

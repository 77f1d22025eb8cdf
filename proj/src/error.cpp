//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/error.hpp"

namespace mtss {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_found: return "NotFound";
    case Errc::too_many_blocks: return "TooManyBlocks";
    case Errc::block_count_mismatch: return "BlockCountMismatch";
    case Errc::malformed_signature: return "MalformedSignature";
    case Errc::malformed_key: return "MalformedKey";
    case Errc::unsupported_parameter: return "UnsupportedParameter";
    case Errc::too_many_redactions: return "TooManyRedactions";
    case Errc::already_redacted: return "AlreadyRedacted";
    case Errc::no_construction: return "NoConstruction";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace mtss

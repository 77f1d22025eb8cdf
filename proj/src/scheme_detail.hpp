//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
// Internal digest helpers shared by the scheme implementations.
#pragma once

#include <vector>

#include "mtss/cff.hpp"
#include "mtss/crypto.hpp"
#include "mtss/message.hpp"

namespace mtss::detail {

/// h_j for every matrix column: message blocks first, then the pad block
/// bound to surplus columns. The pad digest is computed once.
std::vector<Digest> column_digests(const BlockMessage& m, const CffMatrix& matrix,
                                   const HashFn& h);

/// Digest of the row's concatenated member digests, ascending column order.
Digest row_digest(const CffMatrix& matrix, std::uint32_t row, const std::vector<Digest>& hj,
                  const HashFn& h);

}  // namespace mtss::detail

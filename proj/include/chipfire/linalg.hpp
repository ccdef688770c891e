#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

// Exact linear algebra over the rationals. Elimination is fraction-free with
// content (row gcd) reduction; int64 arithmetic is tried first and the
// computation is redone with GMP integers if any intermediate overflows.

using IntRows = std::vector<std::vector<std::int64_t>>;

int rational_rank(const IntRows& rows);

std::int64_t exact_determinant(const IntMatrix& m);

// True iff `target` is a rational linear combination of `columns`.
// `columns[i]` is one column vector; all have target.size() entries.
bool in_column_span(const IntRows& columns, const std::vector<std::int64_t>& target);

}  // namespace chipfire

#pragma once

#include "ciflie/cif_set.hpp"

namespace ciflie::fixtures {

/// Heisenberg-type superalgebra over GF(p): even basis e, odd basis
/// a_1..a_n, b_1..b_n, with [a_i,b_i] = [b_i,a_i] = e and all other basis
/// brackets zero.
AlgebraPtr heisenberg(std::int64_t p, std::size_t n);

/// Zero bracket on a (d0, d1)-graded space.
AlgebraPtr abelian(std::int64_t p, std::size_t d0, std::size_t d1);

/// Canonical worked example on heisenberg(5, 1): membership magnitudes and
/// phases 1 at 0, 7/10 on the rest of the even line, 1/2 elsewhere;
/// non-membership 0, 1/5, 2/5 on the same three layers.
CIFSet paper_example();

} // namespace ciflie::fixtures

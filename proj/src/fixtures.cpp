#include "ciflie/fixtures.hpp"

namespace ciflie::fixtures {

AlgebraPtr heisenberg(std::int64_t p, std::size_t n) {
    std::vector<ScEntry> sc;
    // basis: e = 0 (even), a_i = 1..n, b_i = n+1..2n (odd)
    for (std::size_t i = 1; i <= n; ++i) {
        sc.push_back({i, n + i, 0, 1});
        sc.push_back({n + i, i, 0, 1});
    }
    return make_superalgebra(p, 1, 2 * n, sc);
}

AlgebraPtr abelian(std::int64_t p, std::size_t d0, std::size_t d1) {
    return make_superalgebra(p, d0, d1, {});
}

CIFSet paper_example() {
    const AlgebraPtr alg = heisenberg(5, 1);
    const CIFValue on_even_line(UnitValue(7, 10, 7, 10), UnitValue(1, 5, 1, 5));
    const CIFValue elsewhere(UnitValue(1, 2, 1, 2), UnitValue(2, 5, 2, 5));
    return CIFSet::build(alg, [&](std::uint64_t i) {
        if (i == 0) return CIFValue::member_top();
        const SuperVector x = alg->element_at(i);
        const auto parity = alg->parity_of(x);
        if (parity.has_value() && *parity == 0) return on_even_line;
        return elsewhere;
    });
}

} // namespace ciflie::fixtures

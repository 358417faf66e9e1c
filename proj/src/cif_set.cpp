#include "ciflie/cif_set.hpp"

#include "ciflie/config.hpp"

namespace ciflie {

CIFSet::CIFSet(AlgebraPtr ambient, std::vector<CIFValue> table)
    : ambient_(std::move(ambient)), table_(std::move(table)) {
    const std::uint64_t n = ambient_->checked_universe_size();
    if (table_.size() != n)
        throw DimensionMismatch("table covers " + std::to_string(table_.size()) +
                                " of " + std::to_string(n) + " elements");
}

CIFSet CIFSet::build(const AlgebraPtr& ambient,
                     const std::function<CIFValue(std::uint64_t)>& fn) {
    const std::uint64_t n = ambient->checked_universe_size();
    std::vector<CIFValue> table;
    table.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) table.push_back(fn(i));
    return CIFSet(ambient, std::move(table));
}

CIFSet CIFSet::with_value(std::uint64_t index, CIFValue v) const {
    std::vector<CIFValue> t = table_;
    t.at(index) = v;
    return CIFSet(ambient_, std::move(t));
}

CIFSet trivial_set(const AlgebraPtr& ambient) {
    return CIFSet::build(ambient, [](std::uint64_t i) {
        return i == 0 ? CIFValue::member_top() : CIFValue::member_bottom();
    });
}

void check_same_ambient(const CIFSet& a, const CIFSet& b) {
    if (!a.ambient()->structurally_equal(*b.ambient()))
        throw AmbientMismatch("operands live over different algebras");
}

bool cifset_equal(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    return a.table() == b.table();
}

namespace {

// Checks r(x) <= r(y) <=> w(x) <= w(y) over all ordered pairs drawn from
// the two tables, for lambda and rho separately.
HomogeneityResult check_order_agreement(const CIFSet& a, const CIFSet& b) {
    HomogeneityResult res;
    const std::uint64_t n = a.size();
    const std::uint64_t m = b.size();
    for (std::uint64_t x = 0; x < n; ++x) {
        const CIFValue& va = a.at_index(x);
        for (std::uint64_t y = 0; y < m; ++y) {
            const CIFValue& vb = b.at_index(y);
            ++res.checked_pairs;
            if ((va.lambda.r <= vb.lambda.r) != (va.lambda.w <= vb.lambda.w)) {
                res.holds = false;
                res.witness = HomogeneityWitness{x, y, false};
                return res;
            }
            if ((va.rho.r <= vb.rho.r) != (va.rho.w <= vb.rho.w)) {
                res.holds = false;
                res.witness = HomogeneityWitness{x, y, true};
                return res;
            }
        }
    }
    return res;
}

} // namespace

HomogeneityResult homogeneity(const CIFSet& a) {
    return check_order_agreement(a, a);
}

bool is_homogeneous(const CIFSet& a) { return homogeneity(a).holds; }

HomogeneityResult homogeneity_with(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    return check_order_agreement(a, b);
}

bool is_homogeneous_with(const CIFSet& a, const CIFSet& b) {
    return homogeneity_with(a, b).holds;
}

} // namespace ciflie

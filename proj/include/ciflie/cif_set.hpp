#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ciflie/superalgebra.hpp"
#include "ciflie/unit_value.hpp"

namespace ciflie {

/// Total assignment of a CIFValue to every element of the ambient space,
/// stored densely in lexicographic element order. Immutable once built.
class CIFSet {
public:
    CIFSet(AlgebraPtr ambient, std::vector<CIFValue> table);

    /// Builds the table by evaluating fn at every element index.
    static CIFSet build(const AlgebraPtr& ambient,
                        const std::function<CIFValue(std::uint64_t)>& fn);

    const AlgebraPtr& ambient() const { return ambient_; }
    std::uint64_t size() const { return table_.size(); }

    const CIFValue& at_index(std::uint64_t i) const { return table_[i]; }
    const CIFValue& at(const SuperVector& x) const {
        return table_[ambient_->index_of(x)];
    }
    const std::vector<CIFValue>& table() const { return table_; }

    /// Copy with one entry replaced; used by mutation testing.
    CIFSet with_value(std::uint64_t index, CIFValue v) const;

private:
    AlgebraPtr ambient_;
    std::vector<CIFValue> table_;
};

/// Identity of the complex intuitionistic sum: full membership at 0 and
/// none elsewhere.
CIFSet trivial_set(const AlgebraPtr& ambient);

/// Requires structurally equal ambients; throws AmbientMismatch otherwise.
void check_same_ambient(const CIFSet& a, const CIFSet& b);

/// Exact table equality over structurally equal ambients.
bool cifset_equal(const CIFSet& a, const CIFSet& b);

/// Counterexample to a homogeneity biconditional, when one exists.
struct HomogeneityWitness {
    std::uint64_t x = 0;      // element index in the first set
    std::uint64_t y = 0;      // element index in the second set
    bool rho_side = false;    // failed on the (rho) biconditional
};

struct HomogeneityResult {
    bool holds = true;
    std::optional<HomogeneityWitness> witness;
    std::uint64_t checked_pairs = 0;
};

/// Single-set homogeneity: over all pairs x,y the magnitude order agrees
/// with the phase order, for the membership and non-membership functions
/// separately. Exhaustive O(|V|^2) check.
HomogeneityResult homogeneity(const CIFSet& a);
bool is_homogeneous(const CIFSet& a);

/// Pairwise form: magnitude/phase order agreement across the two tables.
HomogeneityResult homogeneity_with(const CIFSet& a, const CIFSet& b);
bool is_homogeneous_with(const CIFSet& a, const CIFSet& b);

} // namespace ciflie

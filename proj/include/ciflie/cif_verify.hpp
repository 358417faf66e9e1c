#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ciflie/cif_ops.hpp"

namespace ciflie {

/// Finite subset of the ambient universe, stored as sorted element indices.
struct CrispSubset {
    AlgebraPtr ambient;
    std::vector<std::uint64_t> members; // sorted, unique

    bool contains_index(std::uint64_t i) const;
    bool contains(const SuperVector& x) const {
        return contains_index(ambient->index_of(x));
    }
    std::size_t size() const { return members.size(); }

    static CrispSubset from_indices(AlgebraPtr ambient,
                                    std::vector<std::uint64_t> idx);
};

/// Counterexample for a failed verdict.
struct Witness {
    std::string kind; // e.g. "normalization", "additive", "scalar", "bracket"
    std::vector<SuperVector> elements;
    std::optional<FieldElem> alpha;
    std::string note;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;
    std::uint64_t checked = 0;

    explicit operator bool() const { return holds; }
};

/// Membership closed under addition and scalar action (componentwise, in
/// the unit-value order), non-membership dually, and the assumed value at
/// 0: lambda (1,1), rho (0,0). Exhaustive; first witness in lexicographic
/// order.
Verdict is_cif_subspace(const CIFSet& a);

/// CIF subspace + graded + bracket condition with meet/join:
/// lambda([x,y]) >= lambda(x) ^ lambda(y), rho([x,y]) <= rho(x) v rho(y).
Verdict is_cif_subsuperalgebra(const CIFSet& a);
/// Ideal variant: lambda([x,y]) >= lambda(x) v lambda(y), rho dual.
Verdict is_cif_ideal(const CIFSet& a);

/// Same conditions with -[x,y] in place of [x,y].
Verdict is_anti_cif_subsuperalgebra(const CIFSet& a);
Verdict is_anti_cif_ideal(const CIFSet& a);

/// Attained (magnitude, phase) pairs of the membership and non-membership
/// functions, each sorted, plus their intersection.
struct ImageSet {
    std::vector<std::pair<Rational, Rational>> lambda_image;
    std::vector<std::pair<Rational, Rational>> rho_image;
    std::vector<std::pair<Rational, Rational>> common;
};

ImageSet image_set(const CIFSet& a);

/// {x : r(x) >= t and w(x) >= s} on the membership function.
CrispSubset upper_cut(const CIFSet& a, const CutThreshold& th);
/// {x : r(x) <= t and w(x) <= s} on the non-membership function.
CrispSubset lower_cut(const CIFSet& a, const CutThreshold& th);

/// Closed under +, scalar multiples, and graded parts; nonempty.
bool crisp_is_graded_subspace(const CrispSubset& s);
/// Graded subspace closed under the bracket of its own members.
bool crisp_is_subsuperalgebra(const CrispSubset& s);
/// Graded subspace with [x,y] in S for every x in S and y in V.
bool crisp_is_ideal(const CrispSubset& s);

} // namespace ciflie

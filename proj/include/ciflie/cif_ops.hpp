#pragma once

#include "ciflie/cif_set.hpp"

namespace ciflie {

/// Pointwise containment: a's membership below b's and non-membership above.
bool is_contained_in(const CIFSet& a, const CIFSet& b);

/// Pointwise (meet on lambda, join on rho).
CIFSet intersect(const CIFSet& a, const CIFSet& b);
/// Pointwise (join on lambda, meet on rho).
CIFSet cif_union(const CIFSet& a, const CIFSet& b);

/// Complex intuitionistic sum. For every x, the membership magnitude is the
/// sup over decompositions x = a + b of min(r_A(a), r_B(b)), the phase the
/// sup of min(w_A(a), w_B(b)) taken independently; non-membership is the
/// inf of max, dually. Requires is_homogeneous_with(a, b); throws
/// NotHomogeneousPair otherwise. O(|V|^2).
CIFSet sum(const CIFSet& a, const CIFSet& b);

/// True iff intersect(a, b) is the trivial set, making a + b a direct sum.
bool is_direct(const CIFSet& a, const CIFSet& b);

/// For alpha != 0 relabels by alpha^{-1}; for alpha = 0 collapses to the
/// trivial set.
CIFSet scalar_transform(FieldElem alpha, const CIFSet& a);

/// CIF data restricted to one parity's subspace, indexed in that part's
/// lexicographic order.
struct PartTable {
    int parity = 0;
    std::vector<CIFValue> values; // one entry per element of V_parity
};

/// Copies the values a takes on V_parity.
PartTable restrict_to_part(const CIFSet& a, int parity);

/// Extends part data to the whole space with no membership off the part
/// (lambda bottom, rho top).
CIFSet extend_from_part(const AlgebraPtr& ambient, const PartTable& part);

struct GradedComponents {
    PartTable even;
    PartTable odd;
    bool is_graded = false;
};

/// Restrictions to both parts plus the graded test: a is graded iff the sum
/// of the two extensions reproduces a exactly and the extensions intersect
/// trivially. Propagates NotHomogeneousPair from the inner sum.
GradedComponents graded_components(const CIFSet& a);

/// (lambda, lambda^c): the membership function paired with its complement
/// (1-r, 1-w) in the non-membership role.
CIFSet complement_c(const CIFSet& a);
/// (rho^c, rho): the complemented non-membership in the membership role.
CIFSet complement_l(const CIFSet& a);

/// Pullback along phi: value at x is b's value at phi(x).
CIFSet preimage(const LinearMap& phi, const CIFSet& b);

/// Pushforward along phi: at y, componentwise sup of lambda (inf of rho)
/// over the fiber; lambda bottom / rho top off the range.
CIFSet image(const LinearMap& phi, const CIFSet& a);

} // namespace ciflie

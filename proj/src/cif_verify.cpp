#include "ciflie/cif_verify.hpp"

#include <algorithm>

#include "ciflie/config.hpp"

namespace ciflie {

bool CrispSubset::contains_index(std::uint64_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

CrispSubset CrispSubset::from_indices(AlgebraPtr ambient,
                                      std::vector<std::uint64_t> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return CrispSubset{std::move(ambient), std::move(idx)};
}

Verdict is_cif_subspace(const CIFSet& a) {
    Verdict v;
    const auto& alg = *a.ambient();
    const std::uint64_t n = alg.checked_universe_size();

    const CIFValue& at_zero = a.at_index(0);
    if (at_zero != CIFValue::member_top()) {
        v.holds = false;
        v.witness = Witness{"normalization",
                            {alg.zero_vector()},
                            std::nullopt,
                            "value at 0 is " + at_zero.str() +
                                ", expected ((1,1),(0,0))"};
        return v;
    }

    for (std::uint64_t xi = 0; xi < n; ++xi) {
        const SuperVector x = alg.element_at(xi);
        for (std::uint64_t yi = 0; yi < n; ++yi) {
            const SuperVector y = alg.element_at(yi);
            const CIFValue& vs = a.at_index(alg.index_of(alg.add(x, y)));
            const CIFValue& vx = a.at_index(xi);
            const CIFValue& vy = a.at_index(yi);
            ++v.checked;
            if (!uv_geq(vs.lambda, uv_meet(vx.lambda, vy.lambda)) ||
                !uv_leq(vs.rho, uv_join(vx.rho, vy.rho))) {
                v.holds = false;
                v.witness = Witness{"additive", {x, y}, std::nullopt,
                                    "value at x+y not between the meet/join"};
                return v;
            }
        }
    }

    for (FieldElem alpha = 0; alpha < alg.field().p; ++alpha) {
        for (std::uint64_t xi = 0; xi < n; ++xi) {
            const SuperVector x = alg.element_at(xi);
            const CIFValue& vax = a.at_index(alg.index_of(alg.scale(alpha, x)));
            const CIFValue& vx = a.at_index(xi);
            ++v.checked;
            if (!uv_geq(vax.lambda, vx.lambda) || !uv_leq(vax.rho, vx.rho)) {
                v.holds = false;
                v.witness = Witness{"scalar", {x}, alpha,
                                    "value at alpha*x drops below value at x"};
                return v;
            }
        }
    }
    return v;
}

namespace {

enum class BracketMode { Meet, Join };

// Shared body of the four (anti-)structure verifiers. mode selects the
// sub-superalgebra (meet) or ideal (join) inequality; negate applies the
// anti variant's -[x,y].
Verdict structure_verdict(const CIFSet& a, BracketMode mode, bool negate) {
    Verdict v = is_cif_subspace(a);
    if (!v.holds) return v;

    // Z2-graded structure. The sum of the part extensions is undefined for
    // a pair of extensions that is not pairwise homogeneous; such a set
    // cannot be graded, so report that instead of erroring.
    try {
        if (!graded_components(a).is_graded) {
            v.holds = false;
            v.witness = Witness{"graded", {}, std::nullopt,
                                "not the direct sum of its part extensions"};
            return v;
        }
    } catch (const NotHomogeneousPair& e) {
        v.holds = false;
        v.witness = Witness{"graded", {}, std::nullopt,
                            std::string("part extensions not pairwise "
                                        "homogeneous: ") +
                                e.what()};
        return v;
    }

    const auto& alg = *a.ambient();
    const std::uint64_t n = alg.universe_size();
    for (std::uint64_t xi = 0; xi < n; ++xi) {
        const SuperVector x = alg.element_at(xi);
        for (std::uint64_t yi = 0; yi < n; ++yi) {
            const SuperVector y = alg.element_at(yi);
            SuperVector br = alg.bracket(x, y);
            if (negate) br = alg.negate(br);
            const CIFValue& vb = a.at_index(alg.index_of(br));
            const CIFValue& vx = a.at_index(xi);
            const CIFValue& vy = a.at_index(yi);
            const UnitValue lam_bound = mode == BracketMode::Meet
                                            ? uv_meet(vx.lambda, vy.lambda)
                                            : uv_join(vx.lambda, vy.lambda);
            const UnitValue rho_bound = mode == BracketMode::Meet
                                            ? uv_join(vx.rho, vy.rho)
                                            : uv_meet(vx.rho, vy.rho);
            ++v.checked;
            if (!uv_geq(vb.lambda, lam_bound) || !uv_leq(vb.rho, rho_bound)) {
                v.holds = false;
                v.witness = Witness{
                    "bracket", {x, y}, std::nullopt,
                    std::string(negate ? "-[x,y]" : "[x,y]") +
                        " value violates the " +
                        (mode == BracketMode::Meet ? "meet" : "join") +
                        " bound"};
                return v;
            }
        }
    }
    return v;
}

} // namespace

Verdict is_cif_subsuperalgebra(const CIFSet& a) {
    return structure_verdict(a, BracketMode::Meet, false);
}

Verdict is_cif_ideal(const CIFSet& a) {
    return structure_verdict(a, BracketMode::Join, false);
}

Verdict is_anti_cif_subsuperalgebra(const CIFSet& a) {
    return structure_verdict(a, BracketMode::Meet, true);
}

Verdict is_anti_cif_ideal(const CIFSet& a) {
    return structure_verdict(a, BracketMode::Join, true);
}

namespace {

std::vector<std::pair<Rational, Rational>>
attained_pairs(const CIFSet& a, bool rho_side) {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const UnitValue& u = rho_side ? a.at_index(i).rho : a.at_index(i).lambda;
        out.emplace_back(u.r, u.w);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) {
                  if (p.first != q.first) return p.first < q.first;
                  return p.second < q.second;
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ImageSet image_set(const CIFSet& a) {
    ImageSet im;
    im.lambda_image = attained_pairs(a, false);
    im.rho_image = attained_pairs(a, true);
    std::set_intersection(im.lambda_image.begin(), im.lambda_image.end(),
                          im.rho_image.begin(), im.rho_image.end(),
                          std::back_inserter(im.common),
                          [](const auto& p, const auto& q) {
                              if (p.first != q.first) return p.first < q.first;
                              return p.second < q.second;
                          });
    return im;
}

CrispSubset upper_cut(const CIFSet& a, const CutThreshold& th) {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const UnitValue& l = a.at_index(i).lambda;
        if (l.r >= th.t && l.w >= th.s) idx.push_back(i);
    }
    return CrispSubset{a.ambient(), std::move(idx)};
}

CrispSubset lower_cut(const CIFSet& a, const CutThreshold& th) {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const UnitValue& rho = a.at_index(i).rho;
        if (rho.r <= th.t && rho.w <= th.s) idx.push_back(i);
    }
    return CrispSubset{a.ambient(), std::move(idx)};
}

bool crisp_is_graded_subspace(const CrispSubset& s) {
    if (s.members.empty()) return false;
    const auto& alg = *s.ambient;
    for (std::uint64_t xi : s.members) {
        const SuperVector x = alg.element_at(xi);
        for (std::uint64_t yi : s.members)
            if (!s.contains_index(
                    alg.index_of(alg.add(x, alg.element_at(yi)))))
                return false;
        for (FieldElem alpha = 0; alpha < alg.field().p; ++alpha)
            if (!s.contains_index(alg.index_of(alg.scale(alpha, x))))
                return false;
        const auto [even, odd] = alg.graded_parts(x);
        if (!s.contains(even) || !s.contains(odd)) return false;
    }
    return true;
}

bool crisp_is_subsuperalgebra(const CrispSubset& s) {
    if (!crisp_is_graded_subspace(s)) return false;
    const auto& alg = *s.ambient;
    for (std::uint64_t xi : s.members)
        for (std::uint64_t yi : s.members)
            if (!s.contains_index(alg.index_of(
                    alg.bracket(alg.element_at(xi), alg.element_at(yi)))))
                return false;
    return true;
}

bool crisp_is_ideal(const CrispSubset& s) {
    if (!crisp_is_graded_subspace(s)) return false;
    const auto& alg = *s.ambient;
    const std::uint64_t n = alg.checked_universe_size();
    for (std::uint64_t xi : s.members) {
        const SuperVector x = alg.element_at(xi);
        for (std::uint64_t yi = 0; yi < n; ++yi)
            if (!s.contains_index(
                    alg.index_of(alg.bracket(x, alg.element_at(yi)))))
                return false;
    }
    return true;
}

} // namespace ciflie

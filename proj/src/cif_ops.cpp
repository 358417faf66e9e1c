#include "ciflie/cif_ops.hpp"

#include "ciflie/config.hpp"

namespace ciflie {

bool is_contained_in(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const CIFValue& va = a.at_index(i);
        const CIFValue& vb = b.at_index(i);
        if (!uv_leq(va.lambda, vb.lambda) || !uv_geq(va.rho, vb.rho))
            return false;
    }
    return true;
}

CIFSet intersect(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    return CIFSet::build(a.ambient(), [&](std::uint64_t i) {
        return CIFValue(uv_meet(a.at_index(i).lambda, b.at_index(i).lambda),
                        uv_join(a.at_index(i).rho, b.at_index(i).rho));
    });
}

CIFSet cif_union(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    return CIFSet::build(a.ambient(), [&](std::uint64_t i) {
        return CIFValue(uv_join(a.at_index(i).lambda, b.at_index(i).lambda),
                        uv_meet(a.at_index(i).rho, b.at_index(i).rho));
    });
}

CIFSet sum(const CIFSet& a, const CIFSet& b) {
    check_same_ambient(a, b);
    const auto hom = homogeneity_with(a, b);
    if (!hom.holds) {
        const auto& w = *hom.witness;
        throw NotHomogeneousPair(
            "order disagreement at element indices (" + std::to_string(w.x) +
            ", " + std::to_string(w.y) + ") on the " +
            (w.rho_side ? "non-membership" : "membership") + " side");
    }
    const auto& alg = *a.ambient();
    const std::uint64_t n = alg.checked_universe_size();
    std::vector<CIFValue> out;
    out.reserve(n);
    // Every x decomposes as x = u + (x - u); the sups/infs run over all u.
    for (std::uint64_t xi = 0; xi < n; ++xi) {
        const SuperVector x = alg.element_at(xi);
        Rational lr(0), lw(0), rr(1), rw(1);
        for (std::uint64_t ui = 0; ui < n; ++ui) {
            const SuperVector u = alg.element_at(ui);
            const std::uint64_t vi = alg.index_of(alg.sub(x, u));
            const CIFValue& va = a.at_index(ui);
            const CIFValue& vb = b.at_index(vi);
            lr = rat_max(lr, rat_min(va.lambda.r, vb.lambda.r));
            lw = rat_max(lw, rat_min(va.lambda.w, vb.lambda.w));
            rr = rat_min(rr, rat_max(va.rho.r, vb.rho.r));
            rw = rat_min(rw, rat_max(va.rho.w, vb.rho.w));
        }
        out.emplace_back(UnitValue(lr, lw), UnitValue(rr, rw));
    }
    return CIFSet(a.ambient(), std::move(out));
}

bool is_direct(const CIFSet& a, const CIFSet& b) {
    return cifset_equal(intersect(a, b), trivial_set(a.ambient()));
}

CIFSet scalar_transform(FieldElem alpha, const CIFSet& a) {
    const auto& alg = *a.ambient();
    alpha = alg.field().reduce(alpha);
    if (alpha == 0) return trivial_set(a.ambient());
    const FieldElem inv = alg.field().inv(alpha);
    return CIFSet::build(a.ambient(), [&](std::uint64_t i) {
        const SuperVector x = alg.element_at(i);
        return a.at_index(alg.index_of(alg.scale(inv, x)));
    });
}

PartTable restrict_to_part(const CIFSet& a, int parity) {
    const auto& alg = *a.ambient();
    PartTable part;
    part.parity = parity;
    for (const SuperVector& x : alg.enumerate_part(parity))
        part.values.push_back(a.at(x));
    return part;
}

CIFSet extend_from_part(const AlgebraPtr& ambient, const PartTable& part) {
    const auto& alg = *ambient;
    if (part.values.size() != alg.part_size(part.parity))
        throw DimensionMismatch("part table size mismatch");
    return CIFSet::build(ambient, [&](std::uint64_t i) {
        const SuperVector x = alg.element_at(i);
        const auto [even, odd] = alg.graded_parts(x);
        const SuperVector& off = part.parity == 0 ? odd : even;
        if (!off.is_zero()) return CIFValue::member_bottom();
        return part.values[alg.part_index_of(x, part.parity)];
    });
}

GradedComponents graded_components(const CIFSet& a) {
    GradedComponents gc;
    gc.even = restrict_to_part(a, 0);
    gc.odd = restrict_to_part(a, 1);
    const CIFSet ext0 = extend_from_part(a.ambient(), gc.even);
    const CIFSet ext1 = extend_from_part(a.ambient(), gc.odd);
    gc.is_graded =
        cifset_equal(sum(ext0, ext1), a) && is_direct(ext0, ext1);
    return gc;
}

CIFSet complement_c(const CIFSet& a) {
    return CIFSet::build(a.ambient(), [&](std::uint64_t i) {
        const UnitValue& l = a.at_index(i).lambda;
        return CIFValue(l, uv_complement(l));
    });
}

CIFSet complement_l(const CIFSet& a) {
    return CIFSet::build(a.ambient(), [&](std::uint64_t i) {
        const UnitValue& rho = a.at_index(i).rho;
        return CIFValue(uv_complement(rho), rho);
    });
}

CIFSet preimage(const LinearMap& phi, const CIFSet& b) {
    if (!b.ambient()->structurally_equal(*phi.target))
        throw AmbientMismatch("set does not live over the map's target");
    const auto& src = *phi.source;
    const auto& tgt = *phi.target;
    return CIFSet::build(phi.source, [&](std::uint64_t i) {
        const SuperVector x = src.element_at(i);
        return b.at_index(tgt.index_of(phi.apply(x)));
    });
}

CIFSet image(const LinearMap& phi, const CIFSet& a) {
    if (!a.ambient()->structurally_equal(*phi.source))
        throw AmbientMismatch("set does not live over the map's source");
    const auto& src = *phi.source;
    const auto& tgt = *phi.target;
    const std::uint64_t nsrc = src.checked_universe_size();
    const std::uint64_t ntgt = tgt.checked_universe_size();

    std::vector<CIFValue> out(ntgt, CIFValue::member_bottom());
    std::vector<bool> in_range(ntgt, false);
    for (std::uint64_t i = 0; i < nsrc; ++i) {
        const std::uint64_t yi = tgt.index_of(phi.apply(src.element_at(i)));
        const CIFValue& v = a.at_index(i);
        if (!in_range[yi]) {
            in_range[yi] = true;
            out[yi] = v;
            continue;
        }
        out[yi] = CIFValue(uv_join(out[yi].lambda, v.lambda),
                           uv_meet(out[yi].rho, v.rho));
    }
    return CIFSet(phi.target, std::move(out));
}

} // namespace ciflie

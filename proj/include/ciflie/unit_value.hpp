#pragma once

#include "ciflie/errors.hpp"
#include "ciflie/rational.hpp"

namespace ciflie {

/// Outcome of comparing two unit values under the componentwise order.
enum class Cmp { LT, GT, EQ, INCOMPARABLE };

/// A complex value in polar normal form: magnitude r and phase w, both exact
/// rationals in [0,1], with the phase measured as a fraction of a full turn.
struct UnitValue {
    Rational r;
    Rational w;

    UnitValue() = default;
    UnitValue(Rational mag, Rational phase) : r(mag), w(phase) {
        static const Rational one(1);
        if (r < Rational(0) || r > one || w < Rational(0) || w > one)
            throw ParseError("unit value outside [0,1]x[0,1]: (" + r.str() +
                             "," + w.str() + ")");
    }
    UnitValue(std::int64_t rn, std::int64_t rd, std::int64_t wn, std::int64_t wd)
        : UnitValue(Rational(rn, rd), Rational(wn, wd)) {}

    bool operator==(const UnitValue& o) const { return r == o.r && w == o.w; }
    bool operator!=(const UnitValue& o) const { return !(*this == o); }

    std::string str() const { return "(" + r.str() + "," + w.str() + ")"; }

    static UnitValue top() { return UnitValue(Rational(1), Rational(1)); }
    static UnitValue bottom() { return UnitValue(Rational(0), Rational(0)); }
};

/// Componentwise comparison: both components decide.
inline Cmp uv_compare(const UnitValue& u, const UnitValue& v) {
    const bool le = u.r <= v.r && u.w <= v.w;
    const bool ge = u.r >= v.r && u.w >= v.w;
    if (le && ge) return Cmp::EQ;
    if (le) return Cmp::LT;
    if (ge) return Cmp::GT;
    return Cmp::INCOMPARABLE;
}

inline bool uv_leq(const UnitValue& u, const UnitValue& v) {
    return u.r <= v.r && u.w <= v.w;
}
inline bool uv_geq(const UnitValue& u, const UnitValue& v) {
    return u.r >= v.r && u.w >= v.w;
}

inline UnitValue uv_meet(const UnitValue& u, const UnitValue& v) {
    return UnitValue(rat_min(u.r, v.r), rat_min(u.w, v.w));
}
inline UnitValue uv_join(const UnitValue& u, const UnitValue& v) {
    return UnitValue(rat_max(u.r, v.r), rat_max(u.w, v.w));
}
inline UnitValue uv_complement(const UnitValue& u) {
    return UnitValue(Rational(1) - u.r, Rational(1) - u.w);
}

/// Membership/non-membership pair attached to one element: lambda is the
/// degree of membership, rho the degree of non-membership, with the
/// magnitudes summing to at most 1.
struct CIFValue {
    UnitValue lambda;
    UnitValue rho;

    CIFValue() : lambda(UnitValue::bottom()), rho(UnitValue::top()) {}
    CIFValue(UnitValue l, UnitValue nr) : lambda(l), rho(nr) {
        if (Rational(1) < lambda.r + rho.r)
            throw ParseError("membership magnitudes exceed 1: " +
                             lambda.str() + " + " + rho.str());
    }

    bool operator==(const CIFValue& o) const {
        return lambda == o.lambda && rho == o.rho;
    }
    bool operator!=(const CIFValue& o) const { return !(*this == o); }

    std::string str() const { return lambda.str() + "/" + rho.str(); }

    /// Full membership: lambda (1,1), rho (0,0). The assumed value at 0.
    static CIFValue member_top() {
        return CIFValue(UnitValue::top(), UnitValue::bottom());
    }
    /// No membership: lambda (0,0), rho (1,1).
    static CIFValue member_bottom() {
        return CIFValue(UnitValue::bottom(), UnitValue::top());
    }
};

/// Threshold pair for level cuts.
struct CutThreshold {
    Rational t;
    Rational s;

    CutThreshold(Rational t_, Rational s_) : t(t_), s(s_) {
        static const Rational one(1);
        if (t < Rational(0) || t > one || s < Rational(0) || s > one)
            throw ParseError("cut threshold outside [0,1]");
    }
};

} // namespace ciflie

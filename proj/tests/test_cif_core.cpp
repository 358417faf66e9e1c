#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ciflie/cif_set.hpp"
#include "ciflie/fixtures.hpp"
#include "ciflie/oracle.hpp"

using namespace ciflie;

namespace {

UnitValue uv(std::int64_t rn, std::int64_t rd, std::int64_t wn, std::int64_t wd) {
    return UnitValue(Rational(rn, rd), Rational(wn, wd));
}

UnitValue random_uv(oracle::Rng& rng) {
    return UnitValue(Rational(static_cast<std::int64_t>(rng.bounded(21)), 20),
                     Rational(static_cast<std::int64_t>(rng.bounded(21)), 20));
}

} // namespace

TEST_CASE("unit values stay in the unit square") {
    CHECK_THROWS_AS(UnitValue(Rational(3, 2), Rational(0)), ParseError);
    CHECK_THROWS_AS(UnitValue(Rational(1, 2), Rational(-1, 2)), ParseError);
}

TEST_CASE("componentwise comparison") {
    CHECK(uv_compare(uv(1, 2, 1, 2), uv(7, 10, 7, 10)) == Cmp::LT);
    CHECK(uv_compare(uv(7, 10, 7, 10), uv(1, 2, 1, 2)) == Cmp::GT);
    CHECK(uv_compare(uv(7, 10, 1, 5), uv(7, 10, 1, 5)) == Cmp::EQ);
    CHECK(uv_compare(uv(7, 10, 1, 5), uv(1, 5, 7, 10)) == Cmp::INCOMPARABLE);
}

TEST_CASE("meet, join, complement") {
    CHECK(uv_meet(uv(7, 10, 7, 10), uv(1, 2, 1, 2)) == uv(1, 2, 1, 2));
    CHECK(uv_join(uv(7, 10, 1, 5), uv(1, 5, 7, 10)) == uv(7, 10, 7, 10));
    CHECK(uv_complement(uv(7, 10, 7, 10)) == uv(3, 10, 3, 10));
    CHECK(uv_complement(UnitValue::top()) == UnitValue::bottom());
}

TEST_CASE("lattice laws over random values") {
    oracle::Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        const UnitValue a = random_uv(rng);
        const UnitValue b = random_uv(rng);
        const UnitValue c = random_uv(rng);
        CHECK(uv_meet(a, a) == a);
        CHECK(uv_join(a, a) == a);
        CHECK(uv_meet(a, b) == uv_meet(b, a));
        CHECK(uv_join(a, b) == uv_join(b, a));
        CHECK(uv_meet(a, uv_meet(b, c)) == uv_meet(uv_meet(a, b), c));
        CHECK(uv_join(a, uv_join(b, c)) == uv_join(uv_join(a, b), c));
        CHECK(uv_meet(a, uv_join(a, b)) == a); // absorption
        CHECK(uv_join(a, uv_meet(a, b)) == a);

        // complement is an order-reversing involution
        CHECK(uv_complement(uv_complement(a)) == a);
        if (uv_leq(a, b)) CHECK(uv_leq(uv_complement(b), uv_complement(a)));
    }
}

TEST_CASE("intersection-style pairing preserves the magnitude constraint") {
    oracle::Rng rng(13);
    for (int i = 0; i < 400; ++i) {
        const Rational l1(static_cast<std::int64_t>(rng.bounded(11)), 10);
        const Rational l2(static_cast<std::int64_t>(rng.bounded(11)), 10);
        const Rational r1 = Rational(1) - l1;
        const Rational r2 = Rational(1) - l2;
        CHECK(rat_min(l1, l2) + rat_max(r1, r2) <= Rational(1));
    }
}

TEST_CASE("cif values enforce the magnitude bound") {
    CHECK_THROWS_AS(CIFValue(uv(7, 10, 0, 1), uv(2, 5, 0, 1)), ParseError);
    CHECK_NOTHROW(CIFValue(uv(7, 10, 1, 1), uv(3, 10, 1, 1)));
    CHECK(CIFValue::member_top().lambda == UnitValue::top());
    CHECK(CIFValue::member_bottom().rho == UnitValue::top());
}

TEST_CASE("homogeneity of the worked example and of diagonal tables") {
    const CIFSet paper = fixtures::paper_example();
    CHECK(is_homogeneous(paper));
    CHECK(is_homogeneous_with(paper, paper));
    CHECK(is_homogeneous_with(paper, trivial_set(paper.ambient())));

    // every value with r == w and rho.r == rho.w gives a homogeneous table
    const auto alg = fixtures::abelian(3, 1, 1);
    const CIFSet diag = oracle::random_cif_structure(
        alg, oracle::ValueGrid::standard(), oracle::StructureKind::Set, 17);
    CHECK(is_homogeneous(diag));
}

TEST_CASE("a magnitude/phase order disagreement breaks homogeneity") {
    const auto alg = fixtures::abelian(3, 1, 0);
    std::vector<CIFValue> table{
        CIFValue::member_top(),
        CIFValue(uv(1, 2, 9, 10), UnitValue::bottom()),
        CIFValue(uv(3, 5, 1, 10), UnitValue::bottom()),
    };
    const CIFSet a(alg, std::move(table));
    const HomogeneityResult res = homogeneity(a);
    CHECK_FALSE(res.holds);
    REQUIRE(res.witness.has_value());
    // the witness pair really does disagree
    const CIFValue& vx = a.at_index(res.witness->x);
    const CIFValue& vy = a.at_index(res.witness->y);
    if (res.witness->rho_side)
        CHECK((vx.rho.r <= vy.rho.r) != (vx.rho.w <= vy.rho.w));
    else
        CHECK((vx.lambda.r <= vy.lambda.r) != (vx.lambda.w <= vy.lambda.w));
}

TEST_CASE("set equality is exact") {
    const CIFSet paper = fixtures::paper_example();
    CHECK(cifset_equal(paper, paper));

    const CIFValue orig = paper.at_index(1);
    const CIFSet tweaked = paper.with_value(
        1, CIFValue(UnitValue(orig.lambda.r,
                              orig.lambda.w + Rational(1, 1000)),
                    orig.rho));
    CHECK_FALSE(cifset_equal(paper, tweaked));

    const CIFSet other = trivial_set(fixtures::abelian(5, 1, 1));
    CHECK_THROWS_AS(cifset_equal(paper, other), AmbientMismatch);
}

TEST_CASE("tables must be total and within the cap") {
    const auto alg = fixtures::abelian(3, 1, 0);
    CHECK_THROWS_AS(CIFSet(alg, std::vector<CIFValue>(2)), DimensionMismatch);
}

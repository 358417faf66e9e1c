#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ciflie/cif_verify.hpp"
#include "ciflie/fixtures.hpp"
#include "ciflie/oracle.hpp"

using namespace ciflie;

namespace {

UnitValue uv(std::int64_t rn, std::int64_t rd, std::int64_t wn, std::int64_t wd) {
    return UnitValue(Rational(rn, rd), Rational(wn, wd));
}

CIFSet constant_top(const AlgebraPtr& alg) {
    return CIFSet::build(alg, [](std::uint64_t) { return CIFValue::member_top(); });
}

} // namespace

TEST_CASE("subspace verdicts") {
    const CIFSet paper = fixtures::paper_example();
    CHECK(is_cif_subspace(paper).holds);
    CHECK(is_cif_subspace(trivial_set(paper.ambient())).holds);

    // lowering the value on e breaks scalar invariance along the even line
    const CIFSet broken =
        paper.with_value(25, CIFValue(uv(1, 10, 1, 10), uv(1, 5, 1, 5)));
    const Verdict v = is_cif_subspace(broken);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    const auto& alg = *paper.ambient();
    if (w.kind == "additive") {
        REQUIRE(w.elements.size() == 2);
        const CIFValue& vs =
            broken.at(alg.add(w.elements[0], w.elements[1]));
        const CIFValue& vx = broken.at(w.elements[0]);
        const CIFValue& vy = broken.at(w.elements[1]);
        CHECK((!uv_geq(vs.lambda, uv_meet(vx.lambda, vy.lambda)) ||
               !uv_leq(vs.rho, uv_join(vx.rho, vy.rho))));
    } else {
        REQUIRE(w.kind == "scalar");
        REQUIRE(w.elements.size() == 1);
        REQUIRE(w.alpha.has_value());
        const CIFValue& vax = broken.at(alg.scale(*w.alpha, w.elements[0]));
        const CIFValue& vx = broken.at(w.elements[0]);
        CHECK((!uv_geq(vax.lambda, vx.lambda) || !uv_leq(vax.rho, vx.rho)));
    }

    // the normalization at 0 is part of the verdict
    const CIFSet denorm =
        paper.with_value(0, CIFValue(uv(9, 10, 1, 1), UnitValue::bottom()));
    const Verdict nv = is_cif_subspace(denorm);
    CHECK_FALSE(nv.holds);
    CHECK(nv.witness->kind == "normalization");
}

TEST_CASE("structure verdicts on the worked example") {
    const CIFSet paper = fixtures::paper_example();
    CHECK(is_cif_subsuperalgebra(paper).holds);
    CHECK(is_cif_ideal(paper).holds);
    CHECK(is_anti_cif_subsuperalgebra(paper).holds);
    CHECK(is_anti_cif_ideal(paper).holds);
}

TEST_CASE("constant-top tables satisfy everything") {
    const auto h = fixtures::heisenberg(5, 1);
    const CIFSet top = constant_top(h);
    CHECK(is_cif_subspace(top).holds);
    CHECK(is_cif_subsuperalgebra(top).holds);
    CHECK(is_cif_ideal(top).holds);
    CHECK(is_anti_cif_ideal(top).holds);
}

TEST_CASE("every generated ideal is also a sub-superalgebra") {
    const auto h = fixtures::heisenberg(5, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CIFSet a = oracle::random_cif_structure(
            h, oracle::ValueGrid::standard(), oracle::StructureKind::Ideal,
            seed);
        CHECK(is_cif_ideal(a).holds);
        CHECK(is_cif_subsuperalgebra(a).holds);
    }
}

TEST_CASE("anti and plain verdicts agree over an abelian algebra") {
    const auto ab = fixtures::abelian(5, 1, 1);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const CIFSet a = oracle::random_cif_structure(
            ab, oracle::ValueGrid::standard(),
            seed % 2 ? oracle::StructureKind::Ideal
                     : oracle::StructureKind::Set,
            seed);
        CHECK(is_cif_ideal(a).holds == is_anti_cif_ideal(a).holds);
        CHECK(is_cif_subsuperalgebra(a).holds ==
              is_anti_cif_subsuperalgebra(a).holds);
    }
}

TEST_CASE("a non-graded table is rejected by the structure verifiers") {
    const CIFSet paper = fixtures::paper_example();
    const CIFSet broken =
        paper.with_value(30, CIFValue(uv(9, 10, 9, 10), uv(1, 10, 1, 10)));
    const Verdict v = is_cif_ideal(broken);
    CHECK_FALSE(v.holds);
}

TEST_CASE("image sets") {
    const CIFSet paper = fixtures::paper_example();
    const ImageSet im = image_set(paper);
    REQUIRE(im.lambda_image.size() == 3);
    CHECK(im.lambda_image[0] == std::pair{Rational(1, 2), Rational(1, 2)});
    CHECK(im.lambda_image[1] == std::pair{Rational(7, 10), Rational(7, 10)});
    CHECK(im.lambda_image[2] == std::pair{Rational(1), Rational(1)});
    REQUIRE(im.rho_image.size() == 3);
    CHECK(im.rho_image[0] == std::pair{Rational(0), Rational(0)});
    CHECK(im.rho_image[2] == std::pair{Rational(2, 5), Rational(2, 5)});
    CHECK(im.common.empty());

    const ImageSet top_im = image_set(constant_top(paper.ambient()));
    REQUIRE(top_im.lambda_image.size() == 1);
    CHECK(top_im.lambda_image[0] == std::pair{Rational(1), Rational(1)});
}

TEST_CASE("level cuts") {
    const CIFSet paper = fixtures::paper_example();
    const auto& alg = *paper.ambient();

    const CrispSubset n0 =
        upper_cut(paper, CutThreshold(Rational(7, 10), Rational(7, 10)));
    CHECK(n0.members == std::vector<std::uint64_t>{0, 25, 50, 75, 100});

    CHECK(upper_cut(paper, CutThreshold(Rational(0), Rational(0))).size() ==
          125);
    const CrispSubset only_zero =
        lower_cut(paper, CutThreshold(Rational(0), Rational(0)));
    CHECK(only_zero.members == std::vector<std::uint64_t>{0});

    // monotonicity: higher thresholds cut smaller sets
    const std::vector<Rational> grid{Rational(0), Rational(1, 2),
                                     Rational(7, 10), Rational(1)};
    for (const Rational& t1 : grid)
        for (const Rational& s1 : grid)
            for (const Rational& t2 : grid)
                for (const Rational& s2 : grid) {
                    if (!(t1 <= t2 && s1 <= s2)) continue;
                    const CrispSubset big =
                        upper_cut(paper, CutThreshold(t1, s1));
                    const CrispSubset small =
                        upper_cut(paper, CutThreshold(t2, s2));
                    for (std::uint64_t m : small.members)
                        CHECK(big.contains_index(m));
                }
    (void)alg;
}

TEST_CASE("crisp checkers") {
    const auto h = fixtures::heisenberg(5, 1);
    std::vector<std::uint64_t> n0_idx;
    for (std::uint64_t c = 0; c < 5; ++c) n0_idx.push_back(c * 25);
    const CrispSubset n0 = CrispSubset::from_indices(h, n0_idx);
    CHECK(crisp_is_graded_subspace(n0));
    CHECK(crisp_is_subsuperalgebra(n0));
    CHECK(crisp_is_ideal(n0));

    const CrispSubset zero = CrispSubset::from_indices(h, {0});
    CHECK(crisp_is_graded_subspace(zero));
    CHECK(crisp_is_subsuperalgebra(zero));
    CHECK(crisp_is_ideal(zero));

    // {0, a} misses 2a
    const CrispSubset incomplete = CrispSubset::from_indices(h, {0, 5});
    CHECK_FALSE(crisp_is_graded_subspace(incomplete));

    // the odd line through a is a sub-superalgebra but not an ideal
    std::vector<std::uint64_t> a_line;
    for (std::uint64_t c = 0; c < 5; ++c) a_line.push_back(c * 5);
    const CrispSubset odd_line = CrispSubset::from_indices(h, a_line);
    CHECK(crisp_is_subsuperalgebra(odd_line));
    CHECK_FALSE(crisp_is_ideal(odd_line));

    const CrispSubset empty = CrispSubset::from_indices(h, {});
    CHECK_FALSE(crisp_is_graded_subspace(empty));
}

TEST_CASE("low characteristic works end to end, flagged not fatal") {
    for (std::int64_t p : {2, 3}) {
        const auto alg = fixtures::abelian(p, 1, 1);
        CHECK(alg->low_characteristic_warning());
        const CIFSet a = oracle::random_cif_structure(
            alg, oracle::ValueGrid::standard(), oracle::StructureKind::Ideal,
            9);
        CHECK(is_cif_ideal(a).holds);
        CHECK(is_anti_cif_ideal(a).holds);
        CHECK(graded_components(a).is_graded);
    }
    // heisenberg over GF(2): [a,b] = e = -e, so the table still validates
    const auto h2 = fixtures::heisenberg(2, 1);
    CHECK(h2->low_characteristic_warning());
    CHECK(is_cif_ideal(trivial_set(h2)).holds);
}

TEST_CASE("whole universe is an ideal") {
    const auto h = fixtures::heisenberg(5, 1);
    std::vector<std::uint64_t> all(h->universe_size());
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
    const CrispSubset v = CrispSubset::from_indices(h, std::move(all));
    CHECK(crisp_is_ideal(v));
}

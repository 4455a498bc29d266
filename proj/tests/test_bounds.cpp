#include "heightlab/bounds.hpp"
#include "heightlab/errors.hpp"
#include "heightlab/families.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace heightlab;

namespace {

double mid(const Interval& x)
{
    return x.midpoint().to_double();
}

std::map<std::string, BoundReport> by_name(const std::vector<BoundReport>& reports)
{
    std::map<std::string, BoundReport> out;
    for (const auto& r : reports) {
        out.emplace(r.name, r);
    }
    return out;
}

} // namespace

TEST_CASE("report verdicts follow the certified margin")
{
    const Interval one(1L, 64);
    const Interval two(2L, 64);
    CHECK(compare_report("a", two, one, Relation::GreaterEqual).verdict == Verdict::Pass);
    CHECK(compare_report("b", one, two, Relation::GreaterEqual).verdict == Verdict::Fail);
    CHECK(compare_report("c", one, two, Relation::LessEqual).verdict == Verdict::Pass);
    const Interval wide(BigFloat(0.5, 64), BigFloat(1.5, 64));
    CHECK(compare_report("d", wide, one, Relation::GreaterEqual).verdict == Verdict::Indeterminate);
    CHECK(compare_report("e", one, one, Relation::Equal).verdict == Verdict::Pass);
    CHECK(compare_report("f", wide, one, Relation::Equal, 0.6).verdict == Verdict::Pass);
    CHECK(compare_report("g", two, one, Relation::Equal, 0.1).verdict == Verdict::Fail);
    CHECK(exact_report("h", mpq_class(1, 3), mpq_class(1, 3), Relation::Equal).verdict == Verdict::Pass);
    CHECK(exact_report("i", mpq_class(1, 3), mpq_class(1, 2), Relation::GreaterEqual).verdict == Verdict::Fail);
    const BoundReport inf = compare_report("j", one, Interval::negative_infinity(64), Relation::GreaterEqual);
    CHECK(inf.verdict == Verdict::Pass);
}

TEST_CASE("norm lower bound for multiplicative combinations")
{
    const Interval log_norm = log(Interval(laguerre_norm(8), 128));
    const Interval b = thm12_bound(8, {1, 2, 3, 4, 5, 6, 7, 8}, log_norm);
    CHECK(std::abs(mid(b) - 47.720713062353626028) < 1e-12);
    CHECK(thm12_bound(3, {1, -1, 0}, log_norm).is_point());
    CHECK(mid(thm12_bound(3, {1, 2, 3}, Interval(64))) == 0.0);
    CHECK_THROWS_AS(thm12_bound(3, {1, 2, 3}, Interval(-1L, 64)), DomainError);
}

TEST_CASE("reference bounds")
{
    CHECK(std::abs(mid(thm13_asymptotic_bound(100)) - 0.014549342822146614538) < 1e-15);
    CHECK(thm13_asymptotic_bound(5).certainly_positive());
    for (std::size_t n = 20; n < 400; n += 20) {
        CHECK(thm13_asymptotic_bound(n + 20).lower() > thm13_asymptotic_bound(n).upper());
    }
    CHECK_THROWS_AS(thm13_asymptotic_bound(4), DomainError);

    CHECK(thm14_bound(9).contains_zero());
    CHECK(std::abs(mid(thm14_bound(18)) - 0.0028881132523331054559) < 1e-15);
    CHECK(thm14_bound(8).certainly_negative());
    CHECK_THROWS_AS(thm14_bound(4), DomainError);
}

TEST_CASE("discriminant lower bound")
{
    CHECK(prop54_lower(5, 0, 100).is_negative_infinity());
    CHECK(std::abs(mid(prop54_lower(5, 1, 1)) - -3.6516888622282346769) < 1e-15);
    const Interval lag5 = prop54_lower(5, 288, abs(discriminant(laguerre_poly(5))));
    CHECK_FALSE(lag5.is_negative_infinity());
    const ConjugateSet cs = find_roots(laguerre_poly(5), 128);
    const HeightValue h = height_additive(cs, {0, 1, 2, 3, 4}, GroupTag::Alternating);
    CHECK(h.enclosure().scaled(60).lower() > lag5.upper());
    CHECK_THROWS_AS(prop54_lower(4, 1, 1), DomainError);
}

TEST_CASE("Mahler measure through s_n in rational arithmetic")
{
    const CenteredVector zero(std::vector<mpq_class>(5, mpq_class(0)));
    CHECK(prop34_identity_check(zero, {0, 1, 2, 3, 4}).verdict == Verdict::Pass);
    const CenteredVector x({2, mpq_class(-1, 2), mpq_class(-1, 2), mpq_class(-1, 2), mpq_class(-1, 2)});
    const BoundReport r = prop34_identity_check(x, {0, 1, 2, 3, 4});
    CHECK(r.verdict == Verdict::Pass);
    REQUIRE(r.exact_lhs);
    CHECK(*r.exact_lhs == *r.exact_rhs);
    CHECK_THROWS_AS(prop34_identity_check(CenteredVector(std::vector<mpq_class>(9, mpq_class(0))),
                                          {0, 0, 0, 0, 0, 0, 0, 0, 0}),
                    DomainError);
}

TEST_CASE("Mahler measure sandwich")
{
    auto rng = testing_support::make_rng(37);
    const auto [u0, l0] = prop31_sandwich_check_exact(testing_support::random_centered(rng, 5), {2, 2, 2, 2, 2});
    CHECK(u0.verdict == Verdict::Pass);
    CHECK(l0.verdict == Verdict::Pass);
    CHECK(*u0.exact_lhs == 0);

    for (int trial = 0; trial < 5; ++trial) {
        const auto [u, l] = prop31_sandwich_check_exact(testing_support::random_centered(rng, 6),
                                                        testing_support::random_exponents(rng, 6));
        CHECK(u.verdict == Verdict::Pass);
        CHECK(l.verdict == Verdict::Pass);
    }
    const auto [u5, l5] =
        prop31_sandwich_check_exact(testing_support::random_centered(rng, 5), {1, 2, 3, 4, 5});
    CHECK(u5.verdict == Verdict::Pass);
    CHECK(l5.verdict == Verdict::Pass);

    // certified path on a unit of degree 5
    const ConjugateSet cs = find_roots(IntPoly{-1, 1, 0, 0, 0, 1}, 128);
    const auto [uc, lc] = prop31_sandwich_check(cs, {1, 2, 3, 4, 5});
    CHECK(uc.verdict == Verdict::Pass);
    CHECK(lc.verdict == Verdict::Pass);
    CHECK_THROWS_AS(prop31_sandwich_check(find_roots(laguerre_poly(4), 64), {1, 2, 3, 4}), DomainError);
}

TEST_CASE("upper bound from the degree and log M(beta)")
{
    const IntPoly p4 = laguerre_poly(4);
    const ConjugateSet cs4 = find_roots(p4, 128);
    const Interval log_m = mahler_from_poly(p4, cs4).enclosure();
    const ExponentVector a{0, 1, 2, 3};
    CHECK(prop51_upper_check(height_additive(cs4, a, GroupTag::Alternating), log_m, a).verdict == Verdict::Pass);
    const ExponentVector z{0, 0, 0, 0};
    const BoundReport degenerate = prop51_upper_check(height_additive(cs4, z, GroupTag::Alternating), log_m, z);
    CHECK(degenerate.verdict == Verdict::Indeterminate);
    CHECK(degenerate.lhs.is_negative_infinity());
}

TEST_CASE("transposed and shifted combinations")
{
    const ConjugateSet cs4 = find_roots(laguerre_poly(4), 128);
    CHECK(lemma53_check(cs4, {3, 3, 3, 3}, Permutation::transposition(4, 0, 1)).verdict == Verdict::Pass);
    CHECK(lemma53_check(cs4, {0, 1, 2, 3}, Permutation::transposition(4, 0, 1)).verdict == Verdict::Pass);
    CHECK_THROWS_AS(lemma53_check(cs4, {0, 1, 2, 3}, Permutation({1, 2, 0, 3})), DomainError);

    const ConjugateSet cs8 = find_roots(laguerre_poly(8), 128);
    const ExponentVector a8{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(lemma53_check(cs8, a8, Permutation::transposition(8, 2, 6)).verdict == Verdict::Pass);
    CHECK(lemma56_check(cs8, a8, 2, 2, 0, 5).verdict == Verdict::Pass);
    CHECK(lemma56_check(cs8, a8, 0, 1, 2, 3).verdict == Verdict::Pass);
    CHECK(lemma56_check(cs8, a8, 7, 0, 0, 7).verdict == Verdict::Pass);
    CHECK_THROWS_AS(lemma56_check(cs8, a8, 0, 1, 2, 8), DomainError);
}

TEST_CASE("side of the unit circle")
{
    const ConjugateSet cs4 = find_roots(laguerre_poly(4), 128);
    CHECK(conjugate_side(cs4, {1, 2, 3, 4}, GroupTag::Alternating) == 1);
    CHECK(conjugate_side(cs4, {-1, 0, 0, 0}, GroupTag::Alternating) == -1);
    CHECK(conjugate_side(cs4, {1, -1, 0, 0}, GroupTag::Alternating) == 0);
}

TEST_CASE("verification suite")
{
    const auto mult = by_name(verify_suite(laguerre_poly(4), {1, 2, 3, 4}, GroupTag::Alternating,
                                           CombinationMode::Multiplicative));
    CHECK(mult.at("norm_identity").verdict == Verdict::Pass);
    // every conjugate of alpha lies outside the unit disk, so the bound is attained exactly
    CHECK(mult.at("thm12").verdict == Verdict::Pass);
    CHECK(mult.at("thm12").margin.contains_zero());
    CHECK(mult.at("thm12").note.find("attained with equality") != std::string::npos);

    const auto mult8 = by_name(verify_suite(laguerre_poly(8), {1, 2, 3, 4, 5, 6, 7, 8}, GroupTag::Alternating,
                                            CombinationMode::Multiplicative));
    CHECK(mult8.at("thm12").verdict == Verdict::Pass);
    CHECK(mult8.at("norm_identity").verdict == Verdict::Pass);
    CHECK(mult8.at("thm13_reference").verdict == Verdict::Reference);
    CHECK(mult.at("generator_criterion").verdict == Verdict::Skipped);

    const auto add8 = verify_suite(laguerre_poly(8), {0, 1, 2, 3, 4, 5, 6, 7}, GroupTag::Alternating,
                                   CombinationMode::Additive);
    const auto add = by_name(add8);
    CHECK(add.at("generator_criterion").verdict == Verdict::Pass);
    CHECK(add.at("generator_criterion").note.find("generator: true") == 0);
    CHECK(add.at("prop51_upper").verdict == Verdict::Pass);
    CHECK(add.at("thm14").verdict == Verdict::Pass);
    CHECK(add.at("thm14").vacuous);
    CHECK_FALSE(any_failure(add8));

    const auto zero = verify_suite(laguerre_poly(4), {0, 0, 0, 0}, GroupTag::Alternating, CombinationMode::Additive);
    CHECK_FALSE(any_failure(zero));
    CHECK(by_name(zero).at("prop51_upper").verdict == Verdict::Indeterminate);

    CHECK_THROWS_AS(verify_suite(laguerre_poly(4), {1, 2, 3}, GroupTag::Alternating, CombinationMode::Additive),
                    DomainError);
}

#include "heightlab/errors.hpp"
#include "heightlab/roots.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace heightlab;

namespace {

bool contains(const ConjugateSet& cs, std::size_t k, const BigFloat& re, const BigFloat& im)
{
    const BigComplex diff = BigComplex(re, im) - cs[k].center;
    return diff.modulus() <= cs[k].radius;
}

BigFloat decimal(const char* text)
{
    return BigFloat::parse(text, 256);
}

void check_disjoint(const ConjugateSet& cs)
{
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const Interval dist = abs(ComplexInterval(cs[i].center) - ComplexInterval(cs[j].center));
            CHECK(dist.lower() > cs[i].radius + cs[j].radius);
        }
    }
}

void check_radius_contract(const ConjugateSet& cs, long bits)
{
    for (const auto& d : cs.disks()) {
        BigFloat bound = d.center.modulus();
        if (bound < BigFloat(1L, bound.precision())) {
            bound = BigFloat(1L, bound.precision());
        }
        mpfr_mul_2si(bound.get(), bound.get(), -bits, MPFR_RNDU);
        CHECK(d.radius <= bound);
    }
}

void check_canonical_order(const ConjugateSet& cs)
{
    for (std::size_t k = 1; k < cs.size(); ++k) {
        const int c = compare(cs[k - 1].center.re, cs[k].center.re);
        CHECK((c < 0 || (c == 0 && cs[k - 1].center.im <= cs[k].center.im)));
    }
}

} // namespace

TEST_CASE("golden ratio roots")
{
    const ConjugateSet cs = find_roots(IntPoly{-1, -1, 1}, 60);
    REQUIRE(cs.size() == 2);
    BigFloat phi(256);
    mpfr_sqrt_ui(phi.get(), 5, MPFR_RNDN);
    phi = (phi + BigFloat(1L, 256)) / BigFloat(2L, 256);
    CHECK(contains(cs, 1, phi, BigFloat(256)));
    CHECK(contains(cs, 0, BigFloat(1L, 256) - phi, BigFloat(256)));
    CHECK(cs[0].center.im.is_zero());
    CHECK(cs[1].center.im.is_zero());
    check_radius_contract(cs, 60);
}

TEST_CASE("fourth roots of unity")
{
    const ConjugateSet cs = find_roots(IntPoly{-1, 0, 0, 0, 1}, 60);
    REQUIRE(cs.size() == 4);
    const BigFloat zero(256);
    const BigFloat one(1L, 256);
    CHECK(contains(cs, 0, -one, zero));
    CHECK(contains(cs, 1, zero, -one));
    CHECK(contains(cs, 2, zero, one));
    CHECK(contains(cs, 3, one, zero));
}

TEST_CASE("truncated exponential quartic in canonical order")
{
    const ConjugateSet cs = find_roots(IntPoly{24, 24, 12, 4, 1}, 100);
    REQUIRE(cs.size() == 4);
    const char* re[] = {"-1.7294442310677054566", "-1.7294442310677054566", "-0.2705557689322945434",
                        "-0.2705557689322945434"};
    const char* im[] = {"-0.8889743761218658272", "0.8889743761218658272", "-2.5047759043624344897",
                        "2.5047759043624344897"};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs((cs[k].center.re - decimal(re[k])).to_double()) < 1e-18);
        CHECK(std::abs((cs[k].center.im - decimal(im[k])).to_double()) < 1e-18);
    }
    Interval product(1L, cs.precision_bits());
    for (std::size_t k = 0; k < 4; ++k) {
        product = product * cs.modulus(k);
    }
    CHECK(product.contains(BigFloat(24L, 256)));
    CHECK(product.width_double() < 1e-25);
    // conjugate pairs are exactly conjugate
    CHECK(cs[0].center.re == cs[1].center.re);
    CHECK(cs[0].center.im == -cs[1].center.im);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(find_roots(IntPoly::zero(), 60), DomainError);
    CHECK_THROWS_AS(find_roots(IntPoly{5}, 60), DomainError);
    CHECK_THROWS_WITH_AS(find_roots(IntPoly{1, 2, 1}, 60), doctest::Contains("repeated factor"), DomainError);
    CHECK_THROWS_AS(find_roots(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 0, 1}, 60), DomainError);
}

TEST_CASE("linear polynomials")
{
    const ConjugateSet cs = find_roots(IntPoly{-3, 2}, 80);
    REQUIRE(cs.size() == 1);
    CHECK(contains(cs, 0, BigFloat(mpq_class(3, 2), 256), BigFloat(256)));
}

TEST_CASE("battery: disjointness, contract, Vieta consistency")
{
    for (const IntPoly& p : testing_support::polynomial_battery()) {
        CAPTURE(p.to_string());
        const long bits = 90;
        const ConjugateSet cs = find_roots(p, bits);
        const mpfr_prec_t prec = cs.precision_bits();
        REQUIRE(cs.size() == p.degree());
        check_disjoint(cs);
        check_radius_contract(cs, bits);
        check_canonical_order(cs);

        // prod |beta_i| = |a_0 / a_n|
        Interval product(1L, prec);
        ComplexInterval sum(prec);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            product = product * cs.modulus(k);
            sum += cs.box(k);
        }
        const mpq_class norm = norm_of_root(p);
        CHECK(product.lower() <= BigFloat(norm, prec, MPFR_RNDU));
        CHECK(product.upper() >= BigFloat(norm, prec, MPFR_RNDD));
        CHECK(product.width_double() < 1e-20);

        // sum beta_i = -a_{n-1} / a_n
        const mpq_class trace(-p.coeff(p.degree() - 1), p.leading());
        CHECK(sum.re.lower() <= BigFloat(trace, prec, MPFR_RNDU));
        CHECK(sum.re.upper() >= BigFloat(trace, prec, MPFR_RNDD));
        CHECK(sum.im.contains_zero());
    }
}

TEST_CASE("certified root differences reproduce the exact discriminant")
{
    for (const IntPoly& p : testing_support::polynomial_battery()) {
        if (!p.is_monic() || p.degree() < 2) {
            continue;
        }
        CAPTURE(p.to_string());
        const ConjugateSet cs = find_roots(p, 100);
        ComplexInterval prod(Interval(1L, cs.precision_bits()), Interval(cs.precision_bits()));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                const ComplexInterval d = cs.box(i) - cs.box(j);
                prod = prod * d * d;
            }
        }
        const mpz_class disc = discriminant(p);
        CHECK(prod.re.lower() <= BigFloat(disc, cs.precision_bits(), MPFR_RNDU));
        CHECK(prod.re.upper() >= BigFloat(disc, cs.precision_bits(), MPFR_RNDD));
        CHECK(prod.im.contains_zero());
        CHECK(prod.re.width_double() < 1e-15);
    }
}

TEST_CASE("refine tightens without permuting")
{
    const ConjugateSet golden = find_roots(IntPoly{-1, -1, 1}, 60);
    const ConjugateSet finer = refine(golden, 40);
    CHECK(finer.target_bits() == 100);
    check_radius_contract(finer, 100);
    for (std::size_t k = 0; k < golden.size(); ++k) {
        CHECK(contains(golden, k, finer[k].center.re, finer[k].center.im));
        BigFloat limit = golden[k].radius;
        mpfr_mul_2si(limit.get(), limit.get(), -40, MPFR_RNDU);
        CHECK(finer[k].radius <= limit);
    }

    const ConjugateSet same = refine(golden, 0);
    for (std::size_t k = 0; k < golden.size(); ++k) {
        CHECK(same[k].radius <= golden[k].radius);
    }

    const ConjugateSet cube = refine(find_roots(IntPoly{-2, 0, 0, 1}, 60), 60);
    BigFloat cbrt2(256);
    mpfr_cbrt(cbrt2.get(), BigFloat(2L, 256).get(), MPFR_RNDN);
    std::size_t real_index = 0;
    for (std::size_t k = 0; k < cube.size(); ++k) {
        if (cube[k].center.im.is_zero()) {
            real_index = k;
        }
    }
    CHECK(contains(cube, real_index, cbrt2, BigFloat(256)));
    CHECK(cube[real_index].radius.to_double() < 1e-18);

    for (const IntPoly& p : testing_support::polynomial_battery()) {
        const ConjugateSet a = find_roots(p, 64);
        const ConjugateSet b = refine(a, 50);
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(contains(a, k, b[k].center.re, b[k].center.im));
        }
    }
}

TEST_CASE("coefficients beyond double range")
{
    // x^3 - 2(A x - 1)^2 with A = 10^200: two roots within 10^-500 of 1/A, one near 2A^2
    mpz_class a;
    mpz_ui_pow_ui(a.get_mpz_t(), 10, 200);
    const IntPoly p(std::vector<mpz_class>{-2, 4 * a, -2 * a * a, 1});
    const ConjugateSet cs = find_roots(p, 64);
    REQUIRE(cs.size() == 3);
    const BigFloat inv_a(mpq_class(1, a), 4096, MPFR_RNDN);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(abs(cs[k].center.re - inv_a) <= inv_a * BigFloat(1e-200, 4096));
    }
    const BigFloat big(mpz_class(2 * a * a), 4096, MPFR_RNDN);
    CHECK(abs(cs[2].center.re - big) <= big * BigFloat(1e-100, 4096));

    mpz_ui_pow_ui(a.get_mpz_t(), 10, 1000);
    CHECK_THROWS_AS(find_roots(IntPoly(std::vector<mpz_class>{-2, 4 * a, -2 * a * a, 1}), 64), PrecisionExhausted);
}

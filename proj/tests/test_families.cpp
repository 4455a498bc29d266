#include "heightlab/errors.hpp"
#include "heightlab/families.hpp"

#include <doctest.h>

using namespace heightlab;

TEST_CASE("truncated exponential polynomials")
{
    CHECK(laguerre_poly(2) == IntPoly{2, 2, 1});
    CHECK(laguerre_poly(4) == IntPoly{24, 24, 12, 4, 1});
    for (unsigned long n = 1; n <= 20; ++n) {
        const IntPoly p = laguerre_poly(n);
        CHECK(p.degree() == n);
        CHECK(p.is_monic());
        CHECK(p.coeff(0) == factorial(n));
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(p.coeff(j) > 0);
            CHECK(p.coeff(j) * factorial(j) == factorial(n));
        }
    }
    CHECK_THROWS_AS(laguerre_poly(0), DomainError);
}

TEST_CASE("norms")
{
    CHECK(laguerre_norm(4) == 24);
    CHECK(laguerre_norm(8) == 40320);
    CHECK(laguerre_norm(1) == 1);
    for (unsigned long n = 1; n <= 12; ++n) {
        CHECK(norm_of_root(laguerre_poly(n)) == mpq_class(laguerre_norm(n)));
    }
}

TEST_CASE("discriminants of the family")
{
    const char* expected[] = {"-4", "-216", "331776", "24883200000", "-139314069504000000",
                              "-82606411253903523840000000", "6984964247141514123629140377600000000"};
    for (unsigned long n = 2; n <= 8; ++n) {
        CHECK(discriminant(laguerre_poly(n)) == mpz_class(expected[n - 2]));
    }
    for (unsigned long n = 4; n <= 8; ++n) {
        const mpz_class d = discriminant(laguerre_poly(n));
        CHECK((d != 0 && is_perfect_square(d)) == (n % 4 == 0));
    }
}

TEST_CASE("necessary conditions for the alternating group")
{
    const AlternatingEvidence four = an_necessary_conditions(laguerre_poly(4));
    CHECK(four.squarefree);
    CHECK(four.disc_is_square);
    REQUIRE(four.irreducibility);
    CHECK(four.irreducibility->verdict == IrreducibilityVerdict::ProvedIrreducible);

    const AlternatingEvidence five = an_necessary_conditions(laguerre_poly(5));
    CHECK(five.squarefree);
    CHECK_FALSE(five.disc_is_square);

    const AlternatingEvidence eight = an_necessary_conditions(laguerre_poly(8));
    CHECK(eight.disc_is_square);
    CHECK(eight.irreducibility->verdict == IrreducibilityVerdict::ProvedIrreducible);

    const AlternatingEvidence root2 = an_necessary_conditions(IntPoly{-2, 0, 1});
    CHECK(root2.discriminant == 8);
    CHECK_FALSE(root2.disc_is_square);

    const AlternatingEvidence repeated = an_necessary_conditions(IntPoly{1, 2, 1});
    CHECK_FALSE(repeated.squarefree);
    CHECK_FALSE(repeated.irreducibility);
}

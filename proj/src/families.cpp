#include "heightlab/families.hpp"

#include "heightlab/errors.hpp"

namespace heightlab {

IntPoly laguerre_poly(unsigned long n)
{
    if (n < 1) {
        throw DomainError("laguerre_poly needs n >= 1");
    }
    std::vector<mpz_class> coeffs(n + 1);
    // n!/j! = (j+1) * n!/(j+1)!
    coeffs[n] = 1;
    for (unsigned long j = n; j-- > 0;) {
        coeffs[j] = coeffs[j + 1] * (j + 1);
    }
    return IntPoly(std::move(coeffs));
}

mpz_class laguerre_norm(unsigned long n)
{
    if (n < 1) {
        throw DomainError("laguerre_norm needs n >= 1");
    }
    return factorial(n);
}

AlternatingEvidence an_necessary_conditions(const IntPoly& p, std::size_t prime_budget)
{
    AlternatingEvidence out;
    out.discriminant = discriminant(p);
    out.squarefree = out.discriminant != 0;
    out.disc_is_square = out.squarefree && is_perfect_square(out.discriminant);
    if (out.squarefree) {
        out.irreducibility = irreducibility_evidence(p, prime_budget);
    }
    return out;
}

} // namespace heightlab

#pragma once

#include "heightlab/common.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace heightlab {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored constant term first. A nonzero polynomial always
/// has a nonzero leading coefficient. The zero polynomial is explicitly
/// tagged: is_zero() is true, coeffs() is {0}, and it has no degree.
class IntPoly {
public:
    /// The zero polynomial.
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const noexcept { return zero_; }
    /// Degree; throws DomainError for the zero polynomial.
    std::size_t degree() const;
    const mpz_class& leading() const;
    /// Coefficient of x^k (zero beyond the degree).
    mpz_class coeff(std::size_t k) const;
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    bool is_monic() const;

    IntPoly derivative() const;
    mpz_class evaluate(const mpz_class& x) const;

    /// Human readable form, highest degree first: "x^2 - x - 1".
    std::string to_string() const;

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend bool operator==(const IntPoly& p, const IntPoly& q)
    {
        return p.zero_ == q.zero_ && p.coeffs_ == q.coeffs_;
    }

private:
    void normalize();

    std::vector<mpz_class> coeffs_{0};
    bool zero_ = true;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);

/// Resultant of p and q via the Sylvester determinant (fraction-free Bareiss).
mpz_class resultant(const IntPoly& p, const IntPoly& q);

/// disc(p) = (-1)^{n(n-1)/2} Res(p, p') / a_n, which equals
/// a_n^{2n-2} prod_{i<j} (beta_i - beta_j)^2. Requires degree >= 2.
mpz_class discriminant(const IntPoly& p);

/// prod_{i<j} (a_j - a_i).
mpz_class vandermonde_product(const ExponentVector& a);

/// True iff m >= 0 and floor(sqrt(m))^2 == m.
bool is_perfect_square(const mpz_class& m);

/// |a_0 / a_n|, the absolute norm of a root when p is irreducible.
mpq_class norm_of_root(const IntPoly& p);

/// Content-free gcd over Q, returned as a primitive integer polynomial.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

enum class IrreducibilityVerdict { ProvedIrreducible, Inconclusive };

struct PrimeFactorPattern {
    unsigned long prime;
    /// Degrees of the irreducible factors mod prime, ascending.
    std::vector<std::size_t> factor_degrees;
};

struct IrreducibilityEvidence {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
    std::vector<PrimeFactorPattern> patterns;
    /// Primes skipped because p mod prime is not squarefree.
    std::vector<unsigned long> skipped_primes;
    /// Degrees d for which a factor of degree d over Z is still possible.
    std::vector<std::size_t> possible_factor_degrees;
};

/// Factors p modulo the first `prime_budget` primes not dividing the leading
/// coefficient and intersects the achievable factor-degree sets. Requires a
/// squarefree polynomial of degree >= 1.
IrreducibilityEvidence irreducibility_evidence(const IntPoly& p, std::size_t prime_budget);

const char* to_string(IrreducibilityVerdict v);

} // namespace heightlab

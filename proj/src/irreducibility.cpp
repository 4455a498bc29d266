#include "heightlab/errors.hpp"
#include "heightlab/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace heightlab {

namespace {

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Coeffs = std::vector<std::uint64_t>;

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }

    std::uint64_t inv(std::uint64_t a) const
    {
        // Fermat; p is prime and a != 0
        std::uint64_t result = 1;
        std::uint64_t base = a % p_;
        std::uint64_t e = p_ - 2;
        while (e) {
            if (e & 1) {
                result = mul(result, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    static void trim(Coeffs& f)
    {
        while (!f.empty() && f.back() == 0) {
            f.pop_back();
        }
    }

    Coeffs reduce(const IntPoly& poly) const
    {
        Coeffs out;
        for (const auto& c : poly.coeffs()) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
            out.push_back(r.get_ui());
        }
        trim(out);
        return out;
    }

    Coeffs make_monic(Coeffs f) const
    {
        const std::uint64_t li = inv(f.back());
        for (auto& c : f) {
            c = mul(c, li);
        }
        return f;
    }

    Coeffs derivative(const Coeffs& f) const
    {
        Coeffs d;
        for (std::size_t k = 1; k < f.size(); ++k) {
            d.push_back(mul(f[k], k % p_));
        }
        trim(d);
        return d;
    }

    Coeffs sub(Coeffs a, const Coeffs& b) const
    {
        if (a.size() < b.size()) {
            a.resize(b.size(), 0);
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[k] = sub(a[k], b[k]);
        }
        trim(a);
        return a;
    }

    Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const
    {
        if (a.empty() || b.empty()) {
            return {};
        }
        Coeffs prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                prod[i + j] = add(prod[i + j], mul(a[i], b[j]));
            }
        }
        return rem(std::move(prod), m);
    }

    Coeffs rem(Coeffs a, const Coeffs& m) const
    {
        trim(a);
        const std::uint64_t li = inv(m.back());
        while (a.size() >= m.size()) {
            const std::uint64_t factor = mul(a.back(), li);
            const std::size_t shift = a.size() - m.size();
            for (std::size_t k = 0; k < m.size(); ++k) {
                a[shift + k] = sub(a[shift + k], mul(factor, m[k]));
            }
            trim(a);
        }
        return a;
    }

    Coeffs quotient(Coeffs a, const Coeffs& m) const
    {
        const std::uint64_t li = inv(m.back());
        Coeffs q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
        while (a.size() >= m.size()) {
            const std::uint64_t factor = mul(a.back(), li);
            const std::size_t shift = a.size() - m.size();
            q[shift] = factor;
            for (std::size_t k = 0; k < m.size(); ++k) {
                a[shift + k] = sub(a[shift + k], mul(factor, m[k]));
            }
            trim(a);
        }
        trim(q);
        return q;
    }

    Coeffs gcd(Coeffs a, Coeffs b) const
    {
        while (!b.empty()) {
            Coeffs r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : make_monic(a);
    }

    Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m) const
    {
        Coeffs result{1};
        base = rem(std::move(base), m);
        while (e) {
            if (e & 1) {
                result = mulmod(result, base, m);
            }
            base = mulmod(base, base, m);
            e >>= 1;
        }
        return result;
    }

    std::uint64_t prime() const { return p_; }

private:
    std::uint64_t p_;
};

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::size_t> factor_degrees(const PrimeField& field, Coeffs f)
{
    std::vector<std::size_t> degrees;
    Coeffs h{0, 1};
    for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
        h = field.powmod(h, field.prime(), f);
        Coeffs g = field.gcd(field.sub(h, Coeffs{0, 1}), f);
        if (g.size() > 1) {
            const std::size_t count = (g.size() - 1) / d;
            degrees.insert(degrees.end(), count, d);
            f = field.quotient(f, g);
            h = field.rem(h, f);
        }
    }
    if (f.size() > 1) {
        degrees.push_back(f.size() - 1);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::set<std::size_t> subset_sums(const std::vector<std::size_t>& parts)
{
    std::set<std::size_t> sums{0};
    for (std::size_t part : parts) {
        std::set<std::size_t> next = sums;
        for (std::size_t s : sums) {
            next.insert(s + part);
        }
        sums = std::move(next);
    }
    return sums;
}

} // namespace

IrreducibilityEvidence irreducibility_evidence(const IntPoly& p, std::size_t prime_budget)
{
    if (p.is_zero() || p.degree() < 1) {
        throw DomainError("irreducibility_evidence requires degree >= 1");
    }
    const std::size_t n = p.degree();
    if (n >= 2 && gcd(p, p.derivative()).degree() > 0) {
        throw DomainError("irreducibility_evidence requires a squarefree polynomial");
    }

    IrreducibilityEvidence report;
    std::set<std::size_t> possible;
    for (std::size_t d = 0; d <= n; ++d) {
        possible.insert(d);
    }
    if (n == 1) {
        report.verdict = IrreducibilityVerdict::ProvedIrreducible;
        report.possible_factor_degrees = {0, 1};
        return report;
    }

    mpz_class prime = 1;
    std::size_t used = 0;
    while (used < prime_budget) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        if (mpz_divisible_p(p.leading().get_mpz_t(), prime.get_mpz_t())) {
            continue;
        }
        ++used;
        const PrimeField field(prime.get_ui());
        Coeffs f = field.make_monic(field.reduce(p));
        if (field.gcd(f, field.derivative(f)).size() > 1) {
            report.skipped_primes.push_back(prime.get_ui());
            continue;
        }
        PrimeFactorPattern pattern{prime.get_ui(), factor_degrees(field, f)};
        const std::set<std::size_t> sums = subset_sums(pattern.factor_degrees);
        std::set<std::size_t> kept;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(kept, kept.begin()));
        possible = std::move(kept);
        const bool single = pattern.factor_degrees.size() == 1;
        report.patterns.push_back(std::move(pattern));
        if (single || possible == std::set<std::size_t>{0, n}) {
            report.verdict = IrreducibilityVerdict::ProvedIrreducible;
            break;
        }
    }
    report.possible_factor_degrees.assign(possible.begin(), possible.end());
    return report;
}

} // namespace heightlab

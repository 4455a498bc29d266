#include "heightlab/roots.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace heightlab {

ConjugateSet::ConjugateSet(IntPoly source, std::vector<RootDisk> disks, long precision_bits, long target_bits)
    : source_(std::move(source)), disks_(std::move(disks)), precision_bits_(precision_bits),
      target_bits_(target_bits)
{
}

ComplexInterval ConjugateSet::box(std::size_t k) const
{
    const RootDisk& d = disks_[k];
    const mpfr_prec_t p = precision_bits_;
    auto widen = [&](const BigFloat& c) {
        BigFloat lo(p);
        BigFloat hi(p);
        mpfr_sub(lo.get(), c.get(), d.radius.get(), MPFR_RNDD);
        mpfr_add(hi.get(), c.get(), d.radius.get(), MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
    };
    return {widen(d.center.re), widen(d.center.im)};
}

Interval ConjugateSet::modulus(std::size_t k) const
{
    const RootDisk& d = disks_[k];
    const Interval centre_abs = abs(ComplexInterval(d.center));
    BigFloat lo(precision_bits_);
    BigFloat hi(precision_bits_);
    mpfr_sub(lo.get(), centre_abs.lower().get(), d.radius.get(), MPFR_RNDD);
    if (lo.sign() < 0) {
        mpfr_set_zero(lo.get(), 1);
    }
    mpfr_add(hi.get(), centre_abs.upper().get(), d.radius.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

namespace {

struct Evaluation {
    BigComplex value;
    BigComplex derivative;
};

Evaluation horner(const std::vector<BigFloat>& coeffs, const BigComplex& z)
{
    const mpfr_prec_t prec = z.precision();
    BigComplex value(prec);
    BigComplex deriv(prec);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + BigComplex(coeffs[k], BigFloat(prec));
    }
    return {std::move(value), std::move(deriv)};
}

ComplexInterval horner_interval(const IntPoly& p, const BigComplex& z, mpfr_prec_t prec)
{
    const ComplexInterval point(z);
    ComplexInterval acc(prec);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = acc * point;
        acc.re += Interval(p.coeffs()[k], prec);
    }
    return acc;
}

// log2 |m| for m != 0, without overflowing a double
double log2_abs(const mpz_class& m)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
    return std::log2(std::abs(mant)) + static_cast<double>(exp);
}

std::vector<BigComplex> initial_guesses(const IntPoly& p, mpfr_prec_t prec)
{
    const std::size_t n = p.degree();
    const double log_lead = log2_abs(p.leading());
    // Fujiwara-style bound on the root moduli, kept in log2 form so huge
    // coefficients do not overflow
    double log_bound = -10.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const mpz_class c = p.coeff(n - k);
        if (c == 0) {
            continue;
        }
        const double log_c = log2_abs(c) - log_lead - (k == n ? 1.0 : 0.0);
        log_bound = std::max(log_bound, log_c / static_cast<double>(k));
    }
    BigFloat radius(1L, prec);
    mpfr_mul_2si(radius.get(), radius.get(), static_cast<long>(std::floor(log_bound)), MPFR_RNDN);
    radius *= BigFloat(std::exp2(log_bound - std::floor(log_bound)), prec);

    BigFloat centre(exact_ratio(-p.coeff(n - 1), p.leading() * static_cast<unsigned long>(n)), prec, MPFR_RNDN);
    std::vector<BigComplex> z;
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.7;
        z.emplace_back(centre + radius * BigFloat(std::cos(angle), prec), radius * BigFloat(std::sin(angle), prec));
    }
    return z;
}

void aberth(const IntPoly& p, std::vector<BigComplex>& z, mpfr_prec_t prec)
{
    const std::size_t n = z.size();
    std::vector<BigFloat> coeffs;
    for (const auto& c : p.coeffs()) {
        coeffs.emplace_back(c, prec);
    }
    for (auto& zi : z) {
        zi = BigComplex(BigFloat::rounded(zi.re, prec), BigFloat::rounded(zi.im, prec));
    }
    const BigFloat one(1L, prec);
    BigFloat tolerance(1L, prec);
    mpfr_div_2si(tolerance.get(), tolerance.get(), static_cast<long>(prec) - 8, MPFR_RNDN);

    const int max_iterations = 60 + 4 * static_cast<int>(prec);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Evaluation ev = horner(coeffs, z[i]);
            if (ev.value.re.is_zero() && ev.value.im.is_zero()) {
                continue;
            }
            if (ev.derivative.re.is_zero() && ev.derivative.im.is_zero()) {
                // nudge off a critical point
                z[i].re += tolerance;
                z[i].im += tolerance;
                converged = false;
                continue;
            }
            const BigComplex newton = ev.value / ev.derivative;
            BigComplex repulsion(prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    repulsion += BigComplex(one, BigFloat(prec)) / (z[i] - z[j]);
                }
            }
            const BigComplex step = newton / (BigComplex(one, BigFloat(prec)) - newton * repulsion);
            z[i] -= step;
            const BigFloat scale = std::max(one, z[i].modulus());
            if (step.modulus() > tolerance * scale) {
                converged = false;
            }
        }
        if (converged) {
            return;
        }
    }
}

BigFloat max_one(const BigFloat& x)
{
    const BigFloat one(1L, x.precision());
    return x < one ? one : x;
}

bool certainly_disjoint(const BigComplex& c1, const BigFloat& r1, const BigComplex& c2, const BigFloat& r2,
                        mpfr_prec_t prec)
{
    const ComplexInterval diff = ComplexInterval(c1) - ComplexInterval(c2);
    const Interval dist = abs(diff);
    BigFloat reach(prec);
    mpfr_add(reach.get(), r1.get(), r2.get(), MPFR_RNDU);
    return dist.lower() > reach;
}

// Returns nullopt when the current approximations cannot be certified.
std::optional<std::vector<RootDisk>> certify(const IntPoly& p, const std::vector<BigComplex>& z,
                                             mpfr_prec_t prec, long target_bits)
{
    const std::size_t n = z.size();
    std::vector<RootDisk> disks;
    disks.reserve(n);
    const Interval lead(p.leading(), prec);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexInterval num = horner_interval(p, z[i], prec);
        ComplexInterval den(lead, Interval(prec));
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                den = den * (ComplexInterval(z[i]) - ComplexInterval(z[j]));
            }
        }
        const Interval den_abs = abs(den);
        if (!den_abs.certainly_positive()) {
            return std::nullopt;
        }
        const Interval num_abs = abs(num);
        BigFloat radius(prec);
        mpfr_div(radius.get(), num_abs.upper().get(), den_abs.lower().get(), MPFR_RNDU);
        mpfr_mul_ui(radius.get(), radius.get(), n, MPFR_RNDU);
        disks.push_back({z[i], std::move(radius)});
    }

    // The polynomial is real: pair every disk with the disk holding the
    // conjugate root, then make the pair exactly conjugate (or the disk real).
    std::vector<RootDisk> sym;
    sym.reserve(n);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) {
            continue;
        }
        const BigComplex mirror = disks[i].center.conj();
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < n; ++j) {
            if (!certainly_disjoint(mirror, disks[i].radius, disks[j].center, disks[j].radius, prec)) {
                candidates.push_back(j);
            }
        }
        if (candidates.size() != 1) {
            return std::nullopt;
        }
        const std::size_t j = candidates.front();
        if (j == i) {
            BigFloat radius(prec);
            BigFloat im_abs = abs(disks[i].center.im);
            mpfr_add(radius.get(), disks[i].radius.get(), im_abs.get(), MPFR_RNDU);
            sym.push_back({BigComplex(disks[i].center.re, BigFloat(prec)), std::move(radius)});
            done[i] = true;
        } else {
            if (done[j]) {
                return std::nullopt;
            }
            const std::size_t upper = disks[i].center.im.sign() > 0 ? i : j;
            const std::size_t lower = upper == i ? j : i;
            if (disks[upper].center.im.sign() <= 0 || disks[lower].center.im.sign() >= 0) {
                return std::nullopt;
            }
            // Both disks D_upper and conj(D_upper) enclose their roots.
            sym.push_back({disks[upper].center, disks[upper].radius});
            sym.push_back({disks[upper].center.conj(), disks[upper].radius});
            done[i] = done[j] = true;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!certainly_disjoint(sym[i].center, sym[i].radius, sym[j].center, sym[j].radius, prec)) {
                return std::nullopt;
            }
        }
        BigFloat allowed = max_one(sym[i].center.modulus());
        // modulus() rounds to nearest; shave a little to stay conservative
        mpfr_mul_2si(allowed.get(), allowed.get(), -target_bits - 1, MPFR_RNDD);
        if (sym[i].radius > allowed) {
            return std::nullopt;
        }
    }

    std::sort(sym.begin(), sym.end(), [](const RootDisk& a, const RootDisk& b) {
        if (int c = compare(a.center.re, b.center.re); c != 0) {
            return c < 0;
        }
        if (int c = compare(a.center.im, b.center.im); c != 0) {
            return c < 0;
        }
        return a.radius < b.radius;
    });
    return sym;
}

void check_input(const IntPoly& p)
{
    if (p.is_zero()) {
        throw DomainError("find_roots: the zero polynomial has no finite root set");
    }
    if (p.degree() < 1) {
        throw DomainError("find_roots: constant polynomial has no roots");
    }
    if (p.degree() >= 2 && discriminant(p) == 0) {
        throw DomainError("find_roots: polynomial is not squarefree (repeated factor " +
                          gcd(p, p.derivative()).to_string() + ")");
    }
}

} // namespace

ConjugateSet find_roots(const IntPoly& p, long target_bits)
{
    check_input(p);
    if (target_bits < 1) {
        throw DomainError("find_roots: target_bits must be positive");
    }
    long prec = kInitialPrecisionBits;
    std::vector<BigComplex> z = initial_guesses(p, prec);
    while (true) {
        aberth(p, z, prec);
        if (auto disks = certify(p, z, prec, target_bits)) {
            return ConjugateSet(p, std::move(*disks), prec, target_bits);
        }
        if (prec * 2 > kMaxPrecisionBits) {
            throw PrecisionExhausted("find_roots: certification failed at " + std::to_string(prec) + " bits", prec);
        }
        prec *= 2;
    }
}

ConjugateSet refine(const ConjugateSet& cs, long extra_bits)
{
    if (extra_bits < 0) {
        throw DomainError("refine: extra_bits must be nonnegative");
    }
    if (extra_bits == 0) {
        return cs;
    }
    const std::size_t n = cs.size();
    const long target = cs.target_bits() + extra_bits;
    long prec = cs.precision_bits();
    std::vector<BigComplex> z;
    for (const auto& d : cs.disks()) {
        z.push_back(d.center);
    }
    while (true) {
        prec = std::min(prec * 2, kMaxPrecisionBits);
        std::vector<BigComplex> trial = z;
        aberth(cs.source(), trial, prec);
        if (auto disks = certify(cs.source(), trial, prec, target)) {
            // Re-associate each new disk with the unique old disk it meets.
            std::vector<std::optional<RootDisk>> ordered(n);
            bool ok = true;
            for (auto& disk : *disks) {
                std::optional<std::size_t> owner;
                for (std::size_t k = 0; k < n && ok; ++k) {
                    if (!certainly_disjoint(disk.center, disk.radius, cs[k].center, cs[k].radius, prec)) {
                        ok = !owner.has_value();
                        owner = k;
                    }
                }
                if (!ok || !owner || ordered[*owner]) {
                    ok = false;
                    break;
                }
                ordered[*owner] = std::move(disk);
            }
            for (std::size_t k = 0; ok && k < n; ++k) {
                const BigFloat& old_r = cs[k].radius;
                BigFloat limit(prec);
                mpfr_mul_2si(limit.get(), old_r.get(), -extra_bits, MPFR_RNDD);
                if (ordered[k]->radius > limit && !old_r.is_zero()) {
                    ok = false;
                }
                // old disk is exact (radius 0): keep it
                if (old_r.is_zero()) {
                    ordered[k] = RootDisk{cs[k].center, cs[k].radius};
                }
            }
            if (ok) {
                std::vector<RootDisk> out;
                for (auto& d : ordered) {
                    out.push_back(std::move(*d));
                }
                return ConjugateSet(cs.source(), std::move(out), prec, target);
            }
        }
        if (prec >= kMaxPrecisionBits) {
            throw PrecisionExhausted("refine: certification failed at " + std::to_string(prec) + " bits", prec);
        }
    }
}

} // namespace heightlab

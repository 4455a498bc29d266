#include "heightlab/snfun.hpp"

#include "heightlab/bigfloat.hpp"
#include "heightlab/errors.hpp"
#include "heightlab/perms.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace heightlab {

CenteredVector::CenteredVector(std::vector<mpq_class> entries) : entries_(std::move(entries))
{
    mpq_class s = 0;
    for (auto& e : entries_) {
        e.canonicalize();
        s += e;
    }
    if (s != 0) {
        throw DomainError("vector does not sum to zero (sum = " + s.get_str() + ")");
    }
}

bool CenteredVector::is_zero() const
{
    for (const auto& e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

CenteredVector CenteredVector::scaled(const mpq_class& c) const
{
    std::vector<mpq_class> out;
    out.reserve(size());
    for (const auto& e : entries_) {
        out.push_back(e * c);
    }
    return CenteredVector(std::move(out));
}

CenteredVector CenteredVector::permuted(const std::vector<std::size_t>& sigma) const
{
    if (sigma.size() != size()) {
        throw DomainError("permutation length does not match vector length");
    }
    std::vector<mpq_class> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(entries_.at(sigma[i]));
    }
    return CenteredVector(std::move(out));
}

mpq_class l1_norm(const CenteredVector& x)
{
    if (x.size() == 0) {
        return 0;
    }
    mpq_class s = 0;
    for (const auto& e : x.entries()) {
        s += abs(e);
    }
    return s / static_cast<unsigned long>(x.size());
}

CenteredVector center(const ExponentVector& a)
{
    if (a.size() == 0) {
        throw DomainError("center: empty exponent vector");
    }
    const mpq_class mean(a.sum(), static_cast<unsigned long>(a.size()));
    std::vector<mpq_class> y;
    for (long v : a) {
        y.push_back(mpq_class(v) - mean);
    }
    return CenteredVector(std::move(y));
}

namespace {

struct IntegerScaled {
    std::vector<mpz_class> values;
    mpz_class scale; // values = scale * original
};

IntegerScaled to_integers(const CenteredVector& x)
{
    mpz_class l = 1;
    for (const auto& e : x.entries()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    }
    IntegerScaled out{{}, l};
    for (const auto& e : x.entries()) {
        out.values.push_back(e.get_num() * (l / e.get_den()));
    }
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace

mpq_class s_n_bruteforce(const CenteredVector& x, const CenteredVector& y, GroupTag g)
{
    const std::size_t n = x.size();
    if (y.size() != n) {
        throw DomainError("s_n: x and y have different lengths");
    }
    if (n < 2 || n > kMaxBruteForceDegree) {
        throw DomainError("s_n brute force needs 2 <= n <= 9, got n = " + std::to_string(n));
    }
    const IntegerScaled xs = to_integers(x);
    const IntegerScaled ys = to_integers(y);
    mpz_class total = 0;
    mpz_class inner;
    for_each_element(n, g, [&](std::span<const std::uint8_t> s) {
        inner = 0;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_addmul(inner.get_mpz_t(), xs.values[s[j]].get_mpz_t(), ys.values[j].get_mpz_t());
        }
        mpz_abs(inner.get_mpz_t(), inner.get_mpz_t());
        total += inner;
    });
    const mpz_class prefactor_num = g == GroupTag::Alternating ? 2 : 1;
    mpq_class result(prefactor_num * total, factorial(n) * n * xs.scale * ys.scale);
    result.canonicalize();
    return result;
}

CenteredVector z_vector(std::size_t n, std::size_t h)
{
    if (h < 1 || h + 1 > n) {
        throw DomainError("z_vector needs 1 <= h <= n-1");
    }
    std::vector<mpq_class> z;
    const unsigned long nn = n;
    for (std::size_t j = 0; j < n; ++j) {
        z.push_back(j < h ? exact_ratio(nn, 2 * h) : exact_ratio(-mpz_class(nn), 2 * (n - h)));
    }
    return CenteredVector(std::move(z));
}

mpq_class s_n_closed_zy(std::size_t n, std::size_t h, const CenteredVector& y)
{
    if (y.size() != n) {
        throw DomainError("s_n_closed_zy: y has the wrong length");
    }
    if (h < 1 || h + 1 > n) {
        throw DomainError("s_n_closed_zy needs 1 <= h <= n-1");
    }
    if (n > 22) {
        throw DomainError("s_n_closed_zy subset enumeration is limited to n <= 22");
    }
    const IntegerScaled ys = to_integers(y);
    // Gosper's hack over all h-subsets of n bits.
    mpz_class total = 0;
    mpz_class partial;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = (std::uint32_t{1} << h) - 1; mask < limit;) {
        partial = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1U) {
                partial += ys.values[j];
            }
        }
        total += abs(partial);
        const std::uint32_t c = mask & -mask;
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    mpq_class result(mpz_class(static_cast<unsigned long>(n)) * total,
                     mpz_class(2 * h * (n - h)) * binomial(n, h) * ys.scale);
    result.canonicalize();
    return result;
}

mpq_class s_n_closed_zz(std::size_t n, std::size_t h, std::size_t k)
{
    if (h < 1 || k < 1 || h + 1 > n || k + 1 > n) {
        throw DomainError("s_n_closed_zz needs 1 <= h, k <= n-1");
    }
    const std::size_t m = h * k / n;
    mpz_class num = mpz_class(static_cast<unsigned long>(n * n)) * (h - m) * (k - m) * binomial(k, m) *
                    binomial(n - k, h - m);
    mpz_class den = mpz_class(static_cast<unsigned long>(2 * h * k)) * (n - h) * (n - k) * binomial(n, h);
    mpq_class result(num, den);
    result.canonicalize();
    return result;
}

namespace {

double log_closed_zz(std::size_t n, std::size_t h, std::size_t k)
{
    auto lbinom = [](double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
    const std::size_t m = h * k / n;
    const double N = static_cast<double>(n);
    const double H = static_cast<double>(h);
    const double K = static_cast<double>(k);
    const double M = static_cast<double>(m);
    return 2 * std::log(N) + std::log(H - M) + std::log(K - M) - std::log(2.0) - std::log(H) - std::log(K) -
           std::log(N - H) - std::log(N - K) - lbinom(N, H) + lbinom(K, M) + lbinom(N - K, H - M);
}

} // namespace

CnResult c_n(std::size_t n)
{
    if (n < 2) {
        throw DomainError("c_n needs n >= 2");
    }
    // Floating-point screen, then exact comparison of every near-minimal pair.
    std::vector<double> logs((n - 1) * (n - 1));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t h = 1; h < n; ++h) {
        for (std::size_t k = 1; k < n; ++k) {
            const double v = log_closed_zz(n, h, k);
            logs[(h - 1) * (n - 1) + (k - 1)] = v;
            best = std::min(best, v);
        }
    }
    constexpr double kScreenSlack = 1e-6;
    CnResult result{n, 0, 0, 0, 0.0};
    bool have = false;
    for (std::size_t h = 1; h < n; ++h) {
        for (std::size_t k = 1; k < n; ++k) {
            if (logs[(h - 1) * (n - 1) + (k - 1)] > best + kScreenSlack) {
                continue;
            }
            mpq_class v = s_n_closed_zz(n, h, k);
            if (!have || v < result.value) {
                result.value = std::move(v);
                result.argmin_h = h;
                result.argmin_k = k;
                have = true;
            }
        }
    }
    constexpr mpfr_prec_t kRatioBits = 192;
    BigFloat scale(kRatioBits);
    mpfr_const_pi(scale.get(), MPFR_RNDN);
    mpfr_mul_ui(scale.get(), scale.get(), n, MPFR_RNDN);
    mpfr_div_ui(scale.get(), scale.get(), 2, MPFR_RNDN);
    mpfr_sqrt(scale.get(), scale.get(), MPFR_RNDN);
    result.ratio = (BigFloat(result.value, kRatioBits) * scale).to_double();
    return result;
}

SandwichResult sandwich_check(const CenteredVector& x, const CenteredVector& y)
{
    if (x.is_zero() || y.is_zero()) {
        throw DomainError("sandwich_check: x and y must be nonzero");
    }
    SandwichResult r;
    r.ratio = s_n_bruteforce(x, y) / (l1_norm(x) * l1_norm(y));
    r.c_n = c_n(x.size()).value;
    r.lower_margin = r.ratio - r.c_n;
    r.upper_margin = 1 - r.ratio;
    return r;
}

CenteredVector stabilizer_average(const CenteredVector& x, std::size_t h)
{
    const std::size_t n = x.size();
    if (n < 4 || n > 8) {
        throw DomainError("stabilizer_average needs 4 <= n <= 8");
    }
    if (h < 1 || h + 1 > n) {
        throw DomainError("stabilizer_average needs 1 <= h <= n-1");
    }
    if (l1_norm(x) != 1) {
        throw DomainError("stabilizer_average needs |x|_1 = 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if ((j < h && sgn(x[j]) < 0) || (j >= h && sgn(x[j]) >= 0)) {
            throw DomainError("stabilizer_average needs x_j >= 0 exactly on the first h slots");
        }
    }
    std::vector<mpq_class> acc(n, mpq_class(0));
    unsigned long count = 0;
    for_each_element(n, GroupTag::Alternating, [&](std::span<const std::uint8_t> s) {
        for (std::size_t j = 0; j < h; ++j) {
            if (s[j] >= h) {
                return;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            acc[j] += x[s[j]];
        }
        ++count;
    });
    for (auto& v : acc) {
        v /= count;
    }
    return CenteredVector(std::move(acc));
}

mpq_class lemma46_lower_bound(const CenteredVector& y, Lemma46Case which)
{
    const std::size_t n = y.size();
    if (n < 3) {
        throw DomainError("lemma46_lower_bound needs n >= 3");
    }
    const std::size_t strict_gaps = which == Lemma46Case::Strict ? n - 1 : n - 2;
    for (std::size_t j = 0; j + 1 <= strict_gaps; ++j) {
        if (y[j + 1] - y[j] < 1) {
            throw DomainError("lemma46_lower_bound: consecutive gap below 1 at position " + std::to_string(j + 1));
        }
    }
    if (which == Lemma46Case::Tied) {
        if (y[n - 2] != y[n - 1]) {
            throw DomainError("lemma46_lower_bound: tied case needs the last two entries equal");
        }
        return exact_ratio(static_cast<long>(n) - 3, 5);
    }
    return exact_ratio(static_cast<long>(n) - 2, 4);
}

} // namespace heightlab

#include "heightlab/poly.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace heightlab {

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.clear();
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree)
{
    std::vector<mpz_class> coeffs(degree + 1, mpz_class(0));
    coeffs[degree] = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    zero_ = coeffs_.empty();
    if (zero_) {
        coeffs_.assign(1, mpz_class(0));
    }
}

std::size_t IntPoly::degree() const
{
    if (zero_) {
        throw DomainError("the zero polynomial has no degree");
    }
    return coeffs_.size() - 1;
}

const mpz_class& IntPoly::leading() const
{
    if (zero_) {
        throw DomainError("the zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

mpz_class IntPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

bool IntPoly::is_monic() const { return !zero_ && coeffs_.back() == 1; }

IntPoly IntPoly::derivative() const
{
    if (zero_ || coeffs_.size() == 1) {
        return IntPoly();
    }
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return IntPoly(std::move(d));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string IntPoly::to_string() const
{
    if (zero_) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const mpz_class mag = abs(c);
        if (first) {
            out << (c < 0 ? "-" : "");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) {
            out << mag.get_str();
        }
        if (k >= 1) {
            out << "x";
        }
        if (k >= 2) {
            out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

IntPoly operator+(const IntPoly& p, const IntPoly& q)
{
    std::vector<mpz_class> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = p.coeff(k) + q.coeff(k);
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q)
{
    std::vector<mpz_class> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = p.coeff(k) - q.coeff(k);
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q)
{
    if (p.zero_ || q.zero_) {
        return IntPoly();
    }
    std::vector<mpz_class> out(p.coeffs_.size() + q.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

namespace {

// Fraction-free Gaussian elimination; every division is exact.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

mpz_class resultant(const IntPoly& p, const IntPoly& q)
{
    if (p.is_zero() || q.is_zero()) {
        return 0;
    }
    const std::size_t n = p.degree();
    const std::size_t m = q.degree();
    if (n == 0 && m == 0) {
        return 1;
    }
    const std::size_t size = n + m;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, mpz_class(0)));
    // m shifted copies of p, then n shifted copies of q, highest degree first
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t k = 0; k <= n; ++k) {
            s[row][row + k] = p.coeff(n - k);
        }
    }
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= m; ++k) {
            s[m + row][row + k] = q.coeff(m - k);
        }
    }
    return bareiss_determinant(std::move(s));
}

mpz_class discriminant(const IntPoly& p)
{
    if (p.is_zero() || p.degree() < 2) {
        throw DomainError("discriminant requires degree >= 2");
    }
    const std::size_t n = p.degree();
    mpz_class res = resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) {
        out = -out;
    }
    return out;
}

mpz_class vandermonde_product(const ExponentVector& a)
{
    if (a.size() < 2) {
        throw DomainError("vandermonde_product requires at least two entries");
    }
    mpz_class out = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            out *= mpz_class(a[j]) - a[i];
        }
    }
    return out;
}

bool is_perfect_square(const mpz_class& m)
{
    if (m < 0) {
        return false;
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    return root * root == m;
}

mpq_class norm_of_root(const IntPoly& p)
{
    if (p.is_zero() || p.degree() < 1) {
        throw DomainError("norm_of_root requires degree >= 1");
    }
    mpq_class out(abs(p.coeff(0)), abs(p.leading()));
    out.canonicalize();
    return out;
}

namespace {

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero()) {
        return p;
    }
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        content = gcd(content, c);
    }
    if (p.leading() < 0) {
        content = -content;
    }
    std::vector<mpz_class> out(p.coeffs());
    for (auto& c : out) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

// a_n(q)^{deg p - deg q + 1} p = s q + r
IntPoly pseudo_remainder(IntPoly p, const IntPoly& q)
{
    const std::size_t dq = q.degree();
    const mpz_class& lq = q.leading();
    while (!p.is_zero() && p.degree() >= dq) {
        const std::size_t shift = p.degree() - dq;
        const mpz_class lp = p.leading();
        IntPoly scaled = p * IntPoly(std::vector<mpz_class>{lq});
        p = scaled - IntPoly::monomial(lp, shift) * q;
    }
    return p;
}

} // namespace

IntPoly gcd(const IntPoly& p, const IntPoly& q)
{
    IntPoly a = primitive_part(p);
    IntPoly b = primitive_part(q);
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

const char* to_string(IrreducibilityVerdict v)
{
    return v == IrreducibilityVerdict::ProvedIrreducible ? "PROVED_IRREDUCIBLE" : "INCONCLUSIVE";
}

} // namespace heightlab

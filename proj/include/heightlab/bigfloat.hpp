#pragma once

#include <mpfr.h>

#include <gmpxx.h>
#include <string>
#include <utility>

namespace heightlab {

/// Owning wrapper around an MPFR floating point value.
///
/// Arithmetic operators round to nearest and produce a result at the larger
/// of the two operand precisions. Certified computations go through Interval
/// instead; BigFloat is the carrier for approximate iterations and for
/// interval endpoints.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(long value, mpfr_prec_t prec);
    BigFloat(const mpz_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(double value, mpfr_prec_t prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Copy of `other` rounded to `prec` bits.
    static BigFloat rounded(const BigFloat& other, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat parse(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Decimal rendering with enough digits to round-trip at this precision.
    std::string to_string(mpfr_rnd_t rnd = MPFR_RNDN) const;
    std::string to_string(int digits, mpfr_rnd_t rnd) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
    BigFloat operator-() const;

    friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);

/// Approximate complex number on BigFloat components (round to nearest).
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return re.precision(); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigFloat norm() const; ///< |z|^2
    BigFloat modulus() const;
    BigComplex conj() const { return BigComplex(re, -im); }
};

} // namespace heightlab

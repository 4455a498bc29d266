#include "heightlab/bigfloat.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace heightlab {

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(const BigFloat& other, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    BigFloat out(prec);
    mpfr_set(out.value_, other.value_, rnd);
    return out;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    BigFloat out(prec);
    if (mpfr_set_str(out.value_, text.c_str(), 10, rnd) != 0) {
        throw DomainError("not a decimal number: '" + text + "'");
    }
    return out;
}

std::string BigFloat::to_string(mpfr_rnd_t rnd) const
{
    // digits needed to distinguish neighbouring values at this precision
    const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    return to_string(digits, rnd);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const
{
    if (mpfr_zero_p(value_)) {
        return "0";
    }
    if (mpfr_inf_p(value_)) {
        return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    }
    if (mpfr_nan_p(value_)) {
        return "nan";
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*R*g", digits, rnd, value_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    if (rhs.precision() > precision()) {
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    }
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    if (rhs.precision() > precision()) {
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    }
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    if (rhs.precision() > precision()) {
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    }
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    if (rhs.precision() > precision()) {
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    }
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x)
{
    BigFloat out(x);
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x)
{
    BigFloat out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs)
{
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs)
{
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b)
{
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b)
{
    const BigFloat d = b.norm();
    return BigComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

BigFloat BigComplex::modulus() const
{
    BigFloat out(precision());
    mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
    return out;
}

} // namespace heightlab

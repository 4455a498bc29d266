#include "heightlab/interval.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <array>

namespace heightlab {

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, mpfr_prec_t prec) : lo_(prec), hi_(prec)
{
    mpfr_set_si(lo_.get(), value, MPFR_RNDD);
    mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, mpfr_prec_t prec)
    : lo_(value, prec, MPFR_RNDD), hi_(value, prec, MPFR_RNDU)
{
}

Interval::Interval(const mpq_class& value, mpfr_prec_t prec)
    : lo_(value, prec, MPFR_RNDD), hi_(value, prec, MPFR_RNDU)
{
}

Interval::Interval(const BigFloat& point) : lo_(point), hi_(point) {}

Interval::Interval(BigFloat lower, BigFloat upper) : lo_(std::move(lower)), hi_(std::move(upper))
{
    if (hi_ < lo_) {
        throw DomainError("interval with lower > upper");
    }
    if (lo_.precision() != hi_.precision()) {
        const mpfr_prec_t p = std::max(lo_.precision(), hi_.precision());
        lo_ = BigFloat::rounded(lo_, p, MPFR_RNDD);
        hi_ = BigFloat::rounded(hi_, p, MPFR_RNDU);
    }
}

Interval Interval::negative_infinity(mpfr_prec_t prec)
{
    Interval out(prec);
    mpfr_set_inf(out.lo_.get(), -1);
    mpfr_set_inf(out.hi_.get(), -1);
    return out;
}

bool Interval::is_negative_infinity() const
{
    return mpfr_inf_p(hi_.get()) && hi_.sign() < 0;
}

Interval Interval::hull(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = joint(a, b);
    BigFloat lo = BigFloat::rounded(a.lo_ < b.lo_ ? a.lo_ : b.lo_, p, MPFR_RNDD);
    BigFloat hi = BigFloat::rounded(a.hi_ > b.hi_ ? a.hi_ : b.hi_, p, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

BigFloat Interval::midpoint() const
{
    BigFloat mid(precision());
    mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    return mid;
}

BigFloat Interval::radius() const
{
    const BigFloat mid = midpoint();
    BigFloat up(precision());
    BigFloat down(precision());
    mpfr_sub(up.get(), hi_.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(down.get(), mid.get(), lo_.get(), MPFR_RNDU);
    return up > down ? up : down;
}

double Interval::width_double() const
{
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

Interval& Interval::operator+=(const Interval& rhs)
{
    const mpfr_prec_t p = joint(*this, rhs);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_add(lo.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs)
{
    const mpfr_prec_t p = joint(*this, rhs);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    return *this;
}

Interval operator*(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = joint(a, b);
    const std::array<mpfr_srcptr, 2> xs{a.lo_.get(), a.hi_.get()};
    const std::array<mpfr_srcptr, 2> ys{b.lo_.get(), b.hi_.get()};
    BigFloat lo(p);
    BigFloat hi(p);
    BigFloat t(p);
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || t < lo) {
                lo = t;
            }
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || t > hi) {
                hi = t;
            }
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) {
        throw DomainError("interval division by an interval containing zero");
    }
    const mpfr_prec_t p = joint(a, b);
    BigFloat lo(p);
    BigFloat hi(p);
    mpfr_ui_div(lo.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(hi.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const
{
    BigFloat lo(precision());
    BigFloat hi(precision());
    mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::scaled(long factor) const
{
    BigFloat lo(precision());
    BigFloat hi(precision());
    if (factor >= 0) {
        mpfr_mul_si(lo.get(), lo_.get(), factor, MPFR_RNDD);
        mpfr_mul_si(hi.get(), hi_.get(), factor, MPFR_RNDU);
    } else {
        mpfr_mul_si(lo.get(), hi_.get(), factor, MPFR_RNDD);
        mpfr_mul_si(hi.get(), lo_.get(), factor, MPFR_RNDU);
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x)
{
    if (x.certainly_nonnegative()) {
        return x;
    }
    if (x.upper().sign() <= 0) {
        return -x;
    }
    BigFloat hi = -x.lower();
    if (hi < x.upper()) {
        hi = x.upper();
    }
    return Interval(BigFloat(x.precision()), std::move(hi));
}

Interval square(const Interval& x)
{
    const Interval a = abs(x);
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_sqr(lo.get(), a.lower().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.upper().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x)
{
    if (x.upper().sign() < 0) {
        throw DomainError("sqrt of a negative interval");
    }
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    if (x.lower().sign() > 0) {
        mpfr_sqrt(lo.get(), x.lower().get(), MPFR_RNDD);
    }
    mpfr_sqrt(hi.get(), x.upper().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x)
{
    if (!x.certainly_positive()) {
        throw DomainError("log of an interval that is not strictly positive");
    }
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_log(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_log(hi.get(), x.upper().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& x)
{
    BigFloat lo(x.precision());
    BigFloat hi(x.precision());
    mpfr_exp(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), x.upper().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval max_with_one(const Interval& x)
{
    const BigFloat one(1L, x.precision());
    BigFloat lo = x.lower() < one ? one : x.lower();
    BigFloat hi = x.upper() < one ? one : x.upper();
    return Interval(std::move(lo), std::move(hi));
}

Interval max(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = joint(a, b);
    BigFloat lo = BigFloat::rounded(a.lower() > b.lower() ? a.lower() : b.lower(), p, MPFR_RNDD);
    BigFloat hi = BigFloat::rounded(a.upper() > b.upper() ? a.upper() : b.upper(), p, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval pi_interval(mpfr_prec_t prec)
{
    BigFloat lo(prec);
    BigFloat hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& rhs)
{
    re += rhs.re;
    im += rhs.im;
    return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& rhs)
{
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Interval abs(const ComplexInterval& z)
{
    return sqrt(square(z.re) + square(z.im));
}

} // namespace heightlab

#pragma once

#include "heightlab/bigfloat.hpp"

#include <gmpxx.h>

namespace heightlab {

/// Closed real interval [lower, upper] with outward-rounded MPFR endpoints.
///
/// Every operation returns an interval guaranteed to contain the exact result
/// for all inputs drawn from the operand intervals. The result precision is
/// the larger of the operand precisions.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(long value, mpfr_prec_t prec);
    Interval(const mpz_class& value, mpfr_prec_t prec);
    Interval(const mpq_class& value, mpfr_prec_t prec);
    explicit Interval(const BigFloat& point);
    Interval(BigFloat lower, BigFloat upper);

    /// [-inf, -inf]; used as the value of a logarithm of zero.
    static Interval negative_infinity(mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b);

    const BigFloat& lower() const noexcept { return lo_; }
    const BigFloat& upper() const noexcept { return hi_; }
    mpfr_prec_t precision() const noexcept { return lo_.precision(); }

    BigFloat midpoint() const;
    /// Upper bound on max(upper - mid, mid - lower) for mid = midpoint().
    BigFloat radius() const;
    double width_double() const;

    bool contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool is_point() const { return lo_ == hi_; }
    bool is_negative_infinity() const;
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_nonnegative() const { return lo_.sign() >= 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    /// Exact-integer scaling, cheaper than a full interval product.
    Interval scaled(long factor) const;

private:
    BigFloat lo_;
    BigFloat hi_;
};

Interval abs(const Interval& x);
Interval square(const Interval& x);
Interval sqrt(const Interval& x);
/// Natural logarithm; throws DomainError unless the interval is positive.
Interval log(const Interval& x);
Interval exp(const Interval& x);
/// Elementwise max(1, x) over the interval.
Interval max_with_one(const Interval& x);
Interval max(const Interval& a, const Interval& b);
Interval pi_interval(mpfr_prec_t prec);

/// Rectangular complex interval.
struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexInterval(const BigComplex& point) : re(point.re), im(point.im) {}

    mpfr_prec_t precision() const { return re.precision(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    ComplexInterval& operator+=(const ComplexInterval& rhs);
    ComplexInterval& operator-=(const ComplexInterval& rhs);
    friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
    friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    ComplexInterval scaled(long factor) const { return {re.scaled(factor), im.scaled(factor)}; }
    ComplexInterval conj() const { return {re, -im}; }
};

/// Enclosure of |z| over the rectangle.
Interval abs(const ComplexInterval& z);

} // namespace heightlab

#include "heightlab/heights.hpp"

#include "heightlab/errors.hpp"
#include "heightlab/perms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace heightlab {

HeightValue::HeightValue(Interval enclosure, bool nonnegative)
    : enclosure_(std::move(enclosure)), value_(enclosure_.precision()), radius_(enclosure_.precision())
{
    if (nonnegative && enclosure_.lower().sign() < 0) {
        if (enclosure_.certainly_negative()) {
            throw DomainError("a nonnegative quantity was certified negative");
        }
        enclosure_ = Interval(BigFloat(enclosure_.precision()), enclosure_.upper());
    }
    value_ = enclosure_.midpoint();
    radius_ = enclosure_.radius();
    if (nonnegative && value_ < radius_) {
        // Rounding pushed value - radius below zero; widen symmetrically.
        mpfr_div_2ui(radius_.get(), enclosure_.upper().get(), 1, MPFR_RNDU);
        value_ = radius_;
    }
}

unsigned worker_threads()
{
    if (const char* env = std::getenv("HEIGHTLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Sum of term(sigma) over G. Elements are split into chunks by sigma(0);
// each chunk is summed in lexicographic order and the chunk sums are added
// in chunk order, so the result does not depend on the thread count.
template <class Term>
Interval orbit_sum(std::size_t n, GroupTag g, mpfr_prec_t prec, const Term& term)
{
    std::vector<std::optional<Interval>> partial(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t chunk; (chunk = next.fetch_add(1)) < n;) {
            try {
                Interval acc(prec);
                for_each_with_first(n, g, chunk, [&](std::span<const std::uint8_t> s) { acc += term(s); });
                partial[chunk] = std::move(acc);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(n));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    Interval total(prec);
    for (auto& p : partial) {
        total += *p;
    }
    return total;
}

void check_length(const ConjugateSet& cs, const ExponentVector& a)
{
    if (a.size() != cs.size()) {
        throw DomainError("exponent vector has length " + std::to_string(a.size()) + " but there are " +
                          std::to_string(cs.size()) + " conjugates");
    }
}

bool is_unit(const IntPoly& p)
{
    return abs(p.leading()) == 1 && abs(p.coeff(0)) == 1;
}

Interval divide_by_order(const Interval& total, std::size_t n, GroupTag g, unsigned long extra_factor = 1)
{
    return total / Interval(mpz_class(group_order(n, g) * extra_factor), total.precision());
}

std::vector<Interval> log_moduli(const ConjugateSet& cs)
{
    std::vector<Interval> x;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Interval m = cs.modulus(k);
        if (!m.certainly_positive()) {
            throw DomainError("a root enclosure contains zero; its logarithm is unbounded");
        }
        x.push_back(log(m));
    }
    return x;
}

Interval linear_form(std::span<const Interval> x, const ExponentVector& a, std::span<const std::uint8_t> s,
                     mpfr_prec_t prec)
{
    Interval v(prec);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (a[j] != 0) {
            v += x[s[j]].scaled(a[j]);
        }
    }
    return v;
}

ComplexInterval linear_combination(std::span<const ComplexInterval> boxes, const ExponentVector& a,
                                   std::span<const std::uint8_t> s, mpfr_prec_t prec)
{
    ComplexInterval v(prec);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (a[i] != 0) {
            v += boxes[s[i]].scaled(a[i]);
        }
    }
    return v;
}

std::vector<ComplexInterval> all_boxes(const ConjugateSet& cs)
{
    std::vector<ComplexInterval> boxes;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        boxes.push_back(cs.box(k));
    }
    return boxes;
}

Interval height_multiplicative_once(const ConjugateSet& cs, const ExponentVector& a, GroupTag g)
{
    const mpfr_prec_t prec = cs.precision_bits();
    const std::vector<Interval> x = log_moduli(cs);
    const Interval total =
        orbit_sum(cs.size(), g, prec, [&](std::span<const std::uint8_t> s) { return abs(linear_form(x, a, s, prec)); });
    return divide_by_order(total, cs.size(), g, 2);
}

Interval height_additive_once(const ConjugateSet& cs, const ExponentVector& a, GroupTag g)
{
    const mpfr_prec_t prec = cs.precision_bits();
    const std::vector<ComplexInterval> boxes = all_boxes(cs);
    const Interval total = orbit_sum(cs.size(), g, prec, [&](std::span<const std::uint8_t> s) {
        return log(max_with_one(abs(linear_combination(boxes, a, s, prec))));
    });
    return divide_by_order(total, cs.size(), g);
}

// Runs `compute`, and if the certified radius is above tolerance, once more
// on refined roots.
template <class Compute>
HeightValue with_retry(const ConjugateSet& cs, double tolerance, const Compute& compute)
{
    HeightValue first(compute(cs));
    const double err = first.error_radius().to_double();
    if (err <= tolerance || tolerance <= 0) {
        return first;
    }
    const long extra = std::max(32L, static_cast<long>(std::ceil(std::log2(err / tolerance))) + 16);
    const ConjugateSet finer = refine(cs, extra);
    return HeightValue(compute(finer));
}

} // namespace

HeightValue mahler_from_poly(const IntPoly& p, const ConjugateSet& cs)
{
    if (!(p == cs.source())) {
        throw DomainError("mahler_from_poly: root set belongs to a different polynomial");
    }
    const mpfr_prec_t prec = cs.precision_bits();
    Interval total = log(Interval(mpz_class(abs(p.leading())), prec));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        total += log(max_with_one(cs.modulus(k)));
    }
    return HeightValue(std::move(total));
}

LogEmbedding log_embedding(const ConjugateSet& cs, double tolerance)
{
    LogEmbedding out{log_moduli(cs), Interval(cs.precision_bits()), false};
    for (const auto& xi : out.x) {
        out.sum += xi;
    }
    const BigFloat tol(tolerance, cs.precision_bits());
    const Interval mag = abs(out.sum);
    out.sum_within_tolerance = mag.upper() <= tol;
    return out;
}

HeightValue height_multiplicative(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, double tolerance)
{
    check_length(cs, a);
    if (!is_unit(cs.source())) {
        throw DomainError("height_multiplicative needs a unit (monic, constant term +-1); "
                          "for non-units use the norm lower bound (thm12)");
    }
    return with_retry(cs, tolerance, [&](const ConjugateSet& c) { return height_multiplicative_once(c, a, g); });
}

HeightValue height_additive(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, double tolerance)
{
    check_length(cs, a);
    if (!cs.source().is_monic()) {
        throw DomainError("height_additive needs a monic polynomial (an algebraic integer)");
    }
    return with_retry(cs, tolerance, [&](const ConjugateSet& c) { return height_additive_once(c, a, g); });
}

Interval norm_of_combination(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, CombinationMode mode)
{
    check_length(cs, a);
    const mpfr_prec_t prec = cs.precision_bits();
    if (mode == CombinationMode::Multiplicative) {
        bool any = false;
        for (long v : a) {
            any = any || v != 0;
        }
        if (!any) {
            return Interval(prec);
        }
        const std::vector<Interval> x = log_moduli(cs);
        return divide_by_order(
            orbit_sum(cs.size(), g, prec, [&](std::span<const std::uint8_t> s) { return linear_form(x, a, s, prec); }),
            cs.size(), g);
    }
    if (!cs.source().is_monic()) {
        throw DomainError("norm_of_combination (additive) needs a monic polynomial");
    }
    const std::vector<ComplexInterval> boxes = all_boxes(cs);
    const Interval total = orbit_sum(cs.size(), g, prec, [&](std::span<const std::uint8_t> s) {
        const Interval m = abs(linear_combination(boxes, a, s, prec));
        if (!m.certainly_positive()) {
            throw DomainError("a conjugate of alpha cannot be separated from zero at " + std::to_string(prec) +
                              " bits; the norm is zero or needs more precision");
        }
        return log(m);
    });
    return divide_by_order(total, cs.size(), g);
}

Interval archimedean_part(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, CombinationMode mode,
                          bool inverted)
{
    check_length(cs, a);
    const mpfr_prec_t prec = cs.precision_bits();
    if (mode == CombinationMode::Multiplicative) {
        const std::vector<Interval> x = log_moduli(cs);
        const Interval zero(prec);
        return divide_by_order(orbit_sum(cs.size(), g, prec,
                                         [&](std::span<const std::uint8_t> s) {
                                             Interval v = linear_form(x, a, s, prec);
                                             return max(inverted ? -v : v, zero);
                                         }),
                               cs.size(), g);
    }
    const std::vector<ComplexInterval> boxes = all_boxes(cs);
    const Interval zero(prec);
    return divide_by_order(orbit_sum(cs.size(), g, prec,
                                     [&](std::span<const std::uint8_t> s) {
                                         const Interval m = abs(linear_combination(boxes, a, s, prec));
                                         if (!inverted) {
                                             return log(max_with_one(m));
                                         }
                                         if (!m.certainly_positive()) {
                                             throw DomainError("alpha_sigma not separated from zero");
                                         }
                                         return max(-log(m), zero);
                                     }),
                           cs.size(), g);
}

int conjugate_side(const ConjugateSet& cs, const ExponentVector& a, GroupTag g)
{
    check_length(cs, a);
    const mpfr_prec_t prec = cs.precision_bits();
    const std::vector<Interval> x = log_moduli(cs);
    // counts (outside, inside) as exact small integers in an interval's endpoints
    const Interval counts = orbit_sum(cs.size(), g, prec, [&](std::span<const std::uint8_t> s) {
        const Interval v = linear_form(x, a, s, prec);
        return Interval(BigFloat(v.certainly_nonnegative() ? 1L : 0L, prec),
                        BigFloat(v.upper().sign() <= 0 ? 2L : 1L, prec));
    });
    const mpz_class order = group_order(cs.size(), g);
    const BigFloat all(order, prec, MPFR_RNDN);
    if (counts.lower() == all) {
        return 1;
    }
    if (counts.upper() == BigFloat(mpz_class(2 * order), prec, MPFR_RNDN)) {
        return -1;
    }
    return 0;
}

mpq_class log_mahler_multiplicative_exact(const CenteredVector& x, const ExponentVector& a)
{
    const std::size_t n = x.size();
    if (a.size() != n) {
        throw DomainError("exponent vector and embedding differ in length");
    }
    if (n > 8) {
        throw DomainError("exact orbit enumeration is limited to n <= 8");
    }
    mpz_class scale = 1;
    for (const auto& e : x.entries()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
    }
    std::vector<mpz_class> xs;
    for (const auto& e : x.entries()) {
        xs.push_back(e.get_num() * (scale / e.get_den()));
    }
    mpz_class total = 0;
    mpz_class inner;
    for_each_element(n, GroupTag::Alternating, [&](std::span<const std::uint8_t> s) {
        inner = 0;
        for (std::size_t j = 0; j < n; ++j) {
            inner += xs[s[j]] * a[j];
        }
        total += abs(inner);
    });
    mpq_class out(total, 2 * scale);
    out.canonicalize();
    return out;
}

Interval dobrowolski_voutier(long d, mpfr_prec_t prec)
{
    if (d < 3) {
        throw DomainError("dobrowolski_voutier needs d >= 3 (log log d must be positive)");
    }
    const Interval ld = log(Interval(d, prec));
    const Interval q = log(ld) / ld;
    return q * q * q / Interval(4L, prec);
}

} // namespace heightlab

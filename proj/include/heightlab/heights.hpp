#pragma once

#include "heightlab/common.hpp"
#include "heightlab/interval.hpp"
#include "heightlab/roots.hpp"
#include "heightlab/snfun.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace heightlab {

/// Certified value of a nonnegative or signed real quantity.
///
/// Stored as an enclosure; value() and error_radius() describe the same set
/// as a midpoint-radius pair. For quantities known to be >= 0 the enclosure
/// is clipped at zero so that value - error_radius >= 0.
class HeightValue {
public:
    explicit HeightValue(Interval enclosure, bool nonnegative = true);

    const Interval& enclosure() const noexcept { return enclosure_; }
    const BigFloat& value() const noexcept { return value_; }
    const BigFloat& error_radius() const noexcept { return radius_; }
    long precision_bits() const noexcept { return enclosure_.precision(); }
    double to_double() const { return value_.to_double(); }

private:
    Interval enclosure_;
    BigFloat value_;
    BigFloat radius_;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// log M(p) = log|a_n| + sum log max(1, |beta_i|).
HeightValue mahler_from_poly(const IntPoly& p, const ConjugateSet& cs);

struct LogEmbedding {
    std::vector<Interval> x; ///< x_i = log|beta_i|
    Interval sum;
    bool sum_within_tolerance;
};

/// Throws DomainError if some disk contains zero.
LogEmbedding log_embedding(const ConjugateSet& cs, double tolerance = kDefaultTolerance);

/// h(prod beta_i^{a_i}) = (1/(2|G|)) sum_G |sum_j a_j log|beta_{sigma(j)}||.
/// Requires a unit: monic with constant term +-1.
///
/// When the certified error exceeds `tolerance` the roots are refined once
/// and the orbit sum recomputed.
HeightValue height_multiplicative(const ConjugateSet& cs, const ExponentVector& a, GroupTag g,
                                  double tolerance = kDefaultTolerance);

/// h(sum a_i beta_i) = (1/|G|) sum_G log max(1, |sum_i a_i beta_{sigma(i)}|).
/// Requires a monic source polynomial.
HeightValue height_additive(const ConjugateSet& cs, const ExponentVector& a, GroupTag g,
                            double tolerance = kDefaultTolerance);

/// (1/|G|) log |prod_G alpha_sigma|, accumulated in log space.
/// The multiplicative mode accepts non-units; the additive mode needs a monic
/// source and throws DomainError when some alpha_sigma cannot be separated
/// from zero.
Interval norm_of_combination(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, CombinationMode mode);

/// Archimedean contribution (1/|G|) sum_G log max(1, |alpha_sigma|^{+-1}).
/// For a non-unit, max over both signs is a certified lower bound for h(alpha).
Interval archimedean_part(const ConjugateSet& cs, const ExponentVector& a, GroupTag g, CombinationMode mode,
                          bool inverted = false);

/// +1 when every |alpha_sigma| >= 1 is certified, -1 when every
/// |alpha_sigma| <= 1 is, 0 otherwise. Multiplicative combinations only.
int conjugate_side(const ConjugateSet& cs, const ExponentVector& a, GroupTag g);

/// Exact log M(alpha) = (1/2) sum_{A_n} |sum_j a_j x_{sigma(j)}| for a
/// synthetic rational log-embedding x.
mpq_class log_mahler_multiplicative_exact(const CenteredVector& x, const ExponentVector& a);

/// (1/4) (log log d / log d)^3; d >= 3.
Interval dobrowolski_voutier(long d, mpfr_prec_t prec = 128);

/// Worker count for orbit sums: HEIGHTLAB_THREADS if set, else the hardware
/// concurrency.
unsigned worker_threads();

} // namespace heightlab

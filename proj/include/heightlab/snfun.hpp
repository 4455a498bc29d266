#pragma once

#include "heightlab/common.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace heightlab {

/// Exact rational vector whose coordinates sum to zero.
class CenteredVector {
public:
    CenteredVector() = default;
    /// Throws DomainError unless the entries sum to zero exactly.
    explicit CenteredVector(std::vector<mpq_class> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const mpq_class& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<mpq_class>& entries() const noexcept { return entries_; }
    bool is_zero() const;

    CenteredVector scaled(const mpq_class& c) const;
    /// (x_{sigma(0)}, ..., x_{sigma(n-1)}).
    CenteredVector permuted(const std::vector<std::size_t>& sigma) const;

    friend bool operator==(const CenteredVector&, const CenteredVector&) = default;

private:
    std::vector<mpq_class> entries_;
};

/// (1/n) sum |x_j|.
mpq_class l1_norm(const CenteredVector& x);

/// y_j = a_j - mean(a).
CenteredVector center(const ExponentVector& a);

inline constexpr std::size_t kMaxBruteForceDegree = 9;

/// prefactor * sum_{sigma in G} |(1/n) sum_j x_{sigma(j)} y_j| with prefactor
/// 2/n! over A_n and 1/n! over S_n. Requires 2 <= n <= 9.
mpq_class s_n_bruteforce(const CenteredVector& x, const CenteredVector& y, GroupTag g = GroupTag::Alternating);

/// The two-level vector: n/(2h) on the first h slots, -n/(2(n-h)) after.
CenteredVector z_vector(std::size_t n, std::size_t h);

/// Subset-sum form of s_n(z^(n,h), y); n <= 22.
mpq_class s_n_closed_zy(std::size_t n, std::size_t h, const CenteredVector& y);

/// Closed product-of-binomials form of s_n(z^(n,h), z^(n,k)).
mpq_class s_n_closed_zz(std::size_t n, std::size_t h, std::size_t k);

struct CnResult {
    std::size_t n;
    mpq_class value;
    std::size_t argmin_h;
    std::size_t argmin_k;
    /// value * sqrt(pi n / 2), rounded to double from a 192-bit evaluation.
    double ratio;
};

/// Minimum of s_n(z^(n,h), z^(n,k)) over 0 < h, k < n, lexicographically
/// smallest argmin on ties.
CnResult c_n(std::size_t n);

struct SandwichResult {
    mpq_class ratio;        ///< s_n(x,y) / (|x|_1 |y|_1)
    mpq_class c_n;
    mpq_class lower_margin; ///< ratio - c_n
    mpq_class upper_margin; ///< 1 - ratio
    bool holds() const { return lower_margin >= 0 && upper_margin >= 0; }
};

SandwichResult sandwich_check(const CenteredVector& x, const CenteredVector& y);

/// Average of sigma(x) over the even permutations preserving {0..h-1}.
/// Requires 4 <= n <= 8, |x|_1 = 1, x_j >= 0 for j < h and x_j < 0 otherwise.
CenteredVector stabilizer_average(const CenteredVector& x, std::size_t h);

enum class Lemma46Case { Strict, Tied };

/// (n-2)/4 for the strict case, (n-3)/5 for the tied case, after checking
/// the gap hypotheses on y (sorted ascending).
mpq_class lemma46_lower_bound(const CenteredVector& y, Lemma46Case which);

} // namespace heightlab

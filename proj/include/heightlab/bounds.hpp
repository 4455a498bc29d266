#pragma once

#include "heightlab/common.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/interval.hpp"
#include "heightlab/perms.hpp"
#include "heightlab/roots.hpp"
#include "heightlab/snfun.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heightlab {

enum class Relation { GreaterEqual, LessEqual, Equal };

/// SKIPPED marks a check whose hypotheses do not apply to the input;
/// REFERENCE marks a value reported for information only.
enum class Verdict { Pass, Fail, Indeterminate, Skipped, Reference };

const char* to_string(Relation r);
const char* to_string(Verdict v);

struct BoundReport {
    std::string name;
    Interval lhs;
    Interval rhs;
    Relation relation = Relation::GreaterEqual;
    Verdict verdict = Verdict::Indeterminate;
    /// The bound side is <= 0 or -inf, so the inequality holds for free.
    bool vacuous = false;
    /// lhs - rhs for >= and =, rhs - lhs for <=.
    Interval margin;
    std::string note;
    /// Exact values when the check ran in rational arithmetic.
    std::optional<mpq_class> exact_lhs;
    std::optional<mpq_class> exact_rhs;
};

/// Certified comparison. For Relation::Equal the verdict is PASS when the
/// margin lies within [-tolerance, tolerance].
BoundReport compare_report(std::string name, Interval lhs, Interval rhs, Relation rel, double tolerance = 0.0);
/// Comparison of exact rationals.
BoundReport exact_report(std::string name, const mpq_class& lhs, const mpq_class& rhs, Relation rel);
BoundReport skipped_report(std::string name, std::string why);

/// (|sum a_i| / n) log|N(beta)|.
Interval thm12_bound(std::size_t n, const ExponentVector& a, const Interval& log_norm_beta);

/// The two sides of the sandwich
///   log M(beta) |y|_1 >= (2/n!) log M(alpha) >= c_n |y|_1 log M(beta).
std::pair<BoundReport, BoundReport> prop31_sandwich_check(const Interval& log_M_beta, const Interval& log_M_alpha,
                                                          std::size_t n, const CenteredVector& y);
/// Same, with log M(beta) = (1/2) sum |x_j| and log M(alpha) by exact orbit
/// enumeration for a synthetic rational embedding x.
std::pair<BoundReport, BoundReport> prop31_sandwich_check_exact(const CenteredVector& x, const ExponentVector& a);
/// Same, computed from certified roots; throws DomainError for a non-unit.
std::pair<BoundReport, BoundReport> prop31_sandwich_check(const ConjugateSet& cs, const ExponentVector& a);

/// log M(alpha) by orbit enumeration against (n n!/4) s_n(x, center(a)).
BoundReport prop34_identity_check(const CenteredVector& x, const ExponentVector& a);

/// sqrt(n / (200 pi)) (log log n / log n)^3, n >= 5. Reference value only.
Interval thm13_asymptotic_bound(std::size_t n, mpfr_prec_t prec = 128);

/// log(n/9) / 240, n >= 5; negative (vacuous) for n < 9.
Interval thm14_bound(std::size_t n, mpfr_prec_t prec = 128);

/// log(M(beta) sum |a_i|) >= h(alpha).
BoundReport prop51_upper_check(const HeightValue& h_alpha, const Interval& log_M_beta, const ExponentVector& a);

/// log M(alpha_tau) <= n log 5 + 5 log M(alpha), both by orbit enumeration
/// over A_n (log M = |A_n| h). Requires a transposition tau.
BoundReport lemma53_check(const ConjugateSet& cs, const ExponentVector& a, const Permutation& tau,
                          double tolerance = kDefaultTolerance);

/// log of 5^{-n/6} (2^{-T_n} |V| |disc|^{1/2})^{Lambda_{n-2}/6}; -inf when V or disc is 0.
Interval prop54_lower(std::size_t n, const mpz_class& v_abs, const mpz_class& abs_disc, mpfr_prec_t prec = 128);

/// h(alpha') <= 5 h(alpha) + log 16 where a'_k += 2(a_i - a_j), a'_l -= 2(a_i - a_j).
/// Indices are 0-based.
BoundReport lemma56_check(const ConjugateSet& cs, const ExponentVector& a, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t l, double tolerance = kDefaultTolerance);

struct VerifyOptions {
    long bits = 256;
    double tolerance = kDefaultTolerance;
    /// Relative tolerance for the norm identity.
    double identity_tolerance = 1e-6;
};

/// Runs every applicable check; per-check errors become INDETERMINATE
/// entries. Any INDETERMINATE triggers one rerun on refined roots.
std::vector<BoundReport> verify_suite(const IntPoly& p, const ExponentVector& a, GroupTag g, CombinationMode mode,
                                      const VerifyOptions& options = {});

bool any_failure(const std::vector<BoundReport>& reports);

} // namespace heightlab

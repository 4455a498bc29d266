#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace heightlab {

/// Integer tuple (a_1, ..., a_n) defining a combination of conjugates,
/// either multiplicatively (prod beta_i^a_i) or additively (sum a_i beta_i).
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<long> values) : values_(values) {}
    explicit ExponentVector(std::vector<long> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    long operator[](std::size_t i) const { return values_[i]; }
    long& operator[](std::size_t i) { return values_[i]; }
    std::span<const long> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    mpz_class sum() const;
    mpz_class abs_sum() const;
    std::size_t distinct_count() const;
    bool all_equal() const;

    /// Comma separated rendering, e.g. "0,1,2".
    std::string to_string() const;
    /// Parses "a,b,c"; throws DomainError on malformed input.
    static ExponentVector parse(const std::string& text);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<long> values_;
};

/// The asserted Galois group of the splitting field, acting on root indices.
enum class GroupTag { Alternating, Symmetric };

/// Multiplicative (prod beta_i^a_i) or additive (sum a_i beta_i) combination.
enum class CombinationMode { Multiplicative, Additive };

const char* to_string(GroupTag g);
const char* to_string(CombinationMode m);
GroupTag parse_group(const std::string& text);
CombinationMode parse_mode(const std::string& text);

mpz_class factorial(unsigned long n);

// num/den in lowest terms; gmpxx's two-argument constructor does not reduce
mpq_class exact_ratio(const mpz_class& num, const mpz_class& den);
/// n! or n!/2.
mpz_class group_order(std::size_t n, GroupTag g);

} // namespace heightlab

#pragma once

#include "heightlab/common.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace heightlab {

/// Bijection of {0, ..., n-1}; image(i) is sigma(i).
class Permutation {
public:
    /// Validates that `images` is a bijection; throws DomainError otherwise.
    explicit Permutation(std::vector<std::uint8_t> images);

    static Permutation identity(std::size_t n);
    /// The transposition swapping i and j (0-based, i != j).
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    std::span<const std::uint8_t> images() const noexcept { return images_; }
    bool is_even() const noexcept { return even_; }

    bool is_transposition() const;
    /// (sigma * tau)(i) = sigma(tau(i)).
    Permutation compose(const Permutation& tau) const;
    Permutation inverse() const;

    /// Cycle notation on 1-based labels, e.g. "(1 2 3)"; identity is "()".
    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
    std::vector<std::uint8_t> images_;
    bool even_;
};

inline constexpr std::size_t kMaxEnumerationDegree = 10;

/// Lexicographic single-pass stream over A_n or S_n (2 <= n <= 10).
class GroupStream {
public:
    GroupStream(std::size_t n, GroupTag g);
    /// Next element, or nullopt once the group is exhausted.
    std::optional<Permutation> next();

private:
    std::vector<std::uint8_t> current_;
    GroupTag group_;
    bool exhausted_ = false;
};

GroupStream enumerate_group(std::size_t n, GroupTag g);

/// Visits, in lexicographic order, the images of every element whose first
/// image is `first`. Allocation-free; the span is only valid during the call.
void for_each_with_first(std::size_t n, GroupTag g, std::size_t first,
                         const std::function<void(std::span<const std::uint8_t>)>& visit);

/// Visits every group element in lexicographic order.
void for_each_element(std::size_t n, GroupTag g, const std::function<void(std::span<const std::uint8_t>)>& visit);

/// A_n (n >= 5): at least n-1 distinct entries. S_n (n >= 3): all distinct.
bool generator_criterion(const ExponentVector& a, GroupTag g);

/// Number of sigma in G with a[sigma(i)] == a[i] for every i.
std::size_t stabilizer_of_vector(const ExponentVector& a, GroupTag g);

mpz_class derangement_count(unsigned long n);
/// Permutations of n points all of whose cycles have length >= 3.
mpz_class lambda_count(unsigned long n);
mpz_class transposition_count(unsigned long n);
/// Number of sigma in G with sigma(k) == i (0-based); equals |G|/n for transitive G.
std::size_t transitive_count_check(std::size_t n, GroupTag g, std::size_t i, std::size_t k);

} // namespace heightlab

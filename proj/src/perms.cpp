#include "heightlab/perms.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace heightlab {

namespace {

bool even_parity(std::span<const std::uint8_t> images)
{
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            inversions += images[i] > images[j];
        }
    }
    return inversions % 2 == 0;
}

void check_degree(std::size_t n)
{
    if (n < 2 || n > kMaxEnumerationDegree) {
        throw DomainError("group enumeration needs 2 <= n <= 10, got n = " + std::to_string(n));
    }
}

} // namespace

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw DomainError("permutation images are not a bijection");
        }
        seen[v] = true;
    }
    even_ = even_parity(images_);
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::uint8_t> id(n);
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    return Permutation(std::move(id));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j)
{
    if (i == j || i >= n || j >= n) {
        throw DomainError("transposition needs two distinct indices below n");
    }
    std::vector<std::uint8_t> images(n);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    std::swap(images[i], images[j]);
    return Permutation(std::move(images));
}

bool Permutation::is_transposition() const
{
    std::size_t moved = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        moved += images_[i] != i;
    }
    return moved == 2;
}

Permutation Permutation::compose(const Permutation& tau) const
{
    if (tau.size() != size()) {
        throw DomainError("cannot compose permutations of different degree");
    }
    std::vector<std::uint8_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = images_[tau.images_[i]];
    }
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const
{
    std::vector<std::uint8_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const
{
    std::string out;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        out += '(';
        for (std::size_t i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            out += (i == start ? "" : " ") + std::to_string(i + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

GroupStream::GroupStream(std::size_t n, GroupTag g) : current_(n), group_(g)
{
    check_degree(n);
    std::iota(current_.begin(), current_.end(), std::uint8_t{0});
}

std::optional<Permutation> GroupStream::next()
{
    while (!exhausted_) {
        std::vector<std::uint8_t> candidate = current_;
        exhausted_ = !std::next_permutation(current_.begin(), current_.end());
        if (group_ == GroupTag::Symmetric || even_parity(candidate)) {
            return Permutation(std::move(candidate));
        }
    }
    return std::nullopt;
}

GroupStream enumerate_group(std::size_t n, GroupTag g)
{
    return GroupStream(n, g);
}

void for_each_with_first(std::size_t n, GroupTag g, std::size_t first,
                         const std::function<void(std::span<const std::uint8_t>)>& visit)
{
    check_degree(n);
    if (first >= n) {
        throw DomainError("first image out of range");
    }
    std::vector<std::uint8_t> images(n);
    images[0] = static_cast<std::uint8_t>(first);
    for (std::size_t i = 1, v = 0; i < n; ++i, ++v) {
        if (v == first) {
            ++v;
        }
        images[i] = static_cast<std::uint8_t>(v);
    }
    do {
        if (g == GroupTag::Symmetric || even_parity(images)) {
            visit(images);
        }
    } while (std::next_permutation(images.begin() + 1, images.end()));
}

void for_each_element(std::size_t n, GroupTag g, const std::function<void(std::span<const std::uint8_t>)>& visit)
{
    for (std::size_t first = 0; first < n; ++first) {
        for_each_with_first(n, g, first, visit);
    }
}

bool generator_criterion(const ExponentVector& a, GroupTag g)
{
    const std::size_t n = a.size();
    if (g == GroupTag::Alternating) {
        if (n < 5) {
            throw DomainError("the alternating-group generator criterion is only established for n >= 5");
        }
        return a.distinct_count() + 1 >= n;
    }
    if (n < 3) {
        throw DomainError("the symmetric-group generator criterion is only established for n >= 3");
    }
    return a.distinct_count() == n;
}

std::size_t stabilizer_of_vector(const ExponentVector& a, GroupTag g)
{
    std::size_t count = 0;
    for_each_element(a.size(), g, [&](std::span<const std::uint8_t> s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (a[s[i]] != a[i]) {
                return;
            }
        }
        ++count;
    });
    return count;
}

mpz_class derangement_count(unsigned long n)
{
    mpz_class prev2 = 1; // d_0
    mpz_class prev1 = 0; // d_1
    if (n == 0) {
        return prev2;
    }
    for (unsigned long k = 2; k <= n; ++k) {
        mpz_class next = (k - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

namespace {

// Sum over partitions of `remaining` into parts >= min_part of
// n! / prod_k (k^{m_k} m_k!), accumulated as a running denominator.
void sum_cycle_types(unsigned long remaining, unsigned long min_part, std::map<unsigned long, unsigned long>& mult,
                     const mpz_class& n_fact, mpz_class& total)
{
    if (remaining == 0) {
        mpz_class denom = 1;
        for (const auto& [part, m] : mult) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
            denom *= pw * factorial(m);
        }
        total += n_fact / denom;
        return;
    }
    for (unsigned long part = min_part; part <= remaining; ++part) {
        ++mult[part];
        sum_cycle_types(remaining - part, part, mult, n_fact, total);
        if (--mult[part] == 0) {
            mult.erase(part);
        }
    }
}

} // namespace

mpz_class lambda_count(unsigned long n)
{
    mpz_class total = 0;
    std::map<unsigned long, unsigned long> mult;
    sum_cycle_types(n, 3, mult, factorial(n), total);
    return total;
}

mpz_class transposition_count(unsigned long n)
{
    if (n < 2) {
        throw DomainError("transposition_count needs n >= 2");
    }
    return mpz_class(n) * (n - 1) / 2;
}

std::size_t transitive_count_check(std::size_t n, GroupTag g, std::size_t i, std::size_t k)
{
    if (i >= n || k >= n) {
        throw DomainError("transitive_count_check: index out of range");
    }
    std::size_t count = 0;
    for_each_element(n, g, [&](std::span<const std::uint8_t> s) { count += s[k] == i; });
    return count;
}

} // namespace heightlab

#include "heightlab/errors.hpp"
#include "heightlab/perms.hpp"
#include "heightlab/snfun.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace heightlab;

namespace {

CenteredVector rationals(std::initializer_list<mpq_class> values)
{
    return CenteredVector(std::vector<mpq_class>(values));
}

} // namespace

TEST_CASE("centered vectors and the l1 norm")
{
    CHECK_THROWS_AS(rationals({1, 1}), DomainError);
    CHECK(l1_norm(z_vector(4, 2)) == 1);
    CHECK(l1_norm(rationals({0, 0, 0})) == 0);
    CHECK(l1_norm(rationals({3, -1, -1, -1})) == mpq_class(3, 2));

    CHECK(center({1, 2, 3}) == rationals({-1, 0, 1}));
    CHECK(center({5, 5, 5}) == rationals({0, 0, 0}));
    CHECK(center({0, 1, 2, 4}) == rationals({mpq_class(-7, 4), mpq_class(-3, 4), mpq_class(1, 4), mpq_class(9, 4)}));
}

TEST_CASE("two-level vectors")
{
    CHECK(z_vector(4, 2) == rationals({1, 1, -1, -1}));
    CHECK(z_vector(3, 1) == rationals({mpq_class(3, 2), mpq_class(-3, 4), mpq_class(-3, 4)}));
    for (std::size_t n = 2; n <= 15; ++n) {
        for (std::size_t h = 1; h < n; ++h) {
            CHECK(l1_norm(z_vector(n, h)) == 1);
        }
    }
    CHECK_THROWS_AS(z_vector(4, 0), DomainError);
    CHECK_THROWS_AS(z_vector(4, 4), DomainError);
}

TEST_CASE("s_n by enumeration")
{
    const CenteredVector z42 = z_vector(4, 2);
    CHECK(s_n_bruteforce(rationals({0, 0, 0, 0}), z42) == 0);
    CHECK(s_n_bruteforce(z42, z42) == mpq_class(1, 3));
    CHECK(s_n_bruteforce(z42, rationals({-1, 0, 0, 1})) == mpq_class(1, 3));
    CHECK_THROWS_AS(s_n_bruteforce(z42, z_vector(5, 2)), DomainError);
    CHECK_THROWS_AS(s_n_bruteforce(z_vector(10, 5), z_vector(10, 5)), DomainError);
}

TEST_CASE("s_n symmetry, scaling and invariance")
{
    auto rng = testing_support::make_rng(3);
    for (std::size_t n = 3; n <= 7; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const CenteredVector x = testing_support::random_centered(rng, n);
            const CenteredVector y = testing_support::random_centered(rng, n);
            const mpq_class s = s_n_bruteforce(x, y);
            CHECK(s == s_n_bruteforce(y, x));
            const mpq_class c = exact_ratio(testing_support::uniform(rng, 1, 9), testing_support::uniform(rng, 1, 5));
            const mpq_class d = exact_ratio(testing_support::uniform(rng, 1, 9), 7);
            CHECK(s_n_bruteforce(x.scaled(c), y.scaled(d)) == c * d * s);
        }
    }
    for (std::size_t n = 3; n <= 6; ++n) {
        const CenteredVector x = testing_support::random_centered(rng, n);
        const CenteredVector y = testing_support::random_centered(rng, n);
        const mpq_class s = s_n_bruteforce(x, y);
        for_each_element(n, GroupTag::Alternating, [&](std::span<const std::uint8_t> sigma) {
            const std::vector<std::size_t> perm(sigma.begin(), sigma.end());
            CHECK(s_n_bruteforce(x.permuted(perm), y) == s);
            CHECK(s_n_bruteforce(x, y.permuted(perm)) == s);
        });
    }
}

TEST_CASE("closed forms")
{
    CHECK(s_n_closed_zz(4, 2, 2) == mpq_class(1, 3));
    CHECK(s_n_closed_zy(4, 2, rationals({-1, 0, 0, 1})) == mpq_class(1, 3));
    CHECK(s_n_closed_zy(5, 2, rationals({0, 0, 0, 0, 0})) == 0);
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t h = 1; h < n; ++h) {
            for (std::size_t k = 1; k < n; ++k) {
                CHECK(s_n_closed_zz(n, h, k) == s_n_closed_zz(n, k, h));
                CHECK(s_n_closed_zz(n, h, k) > 0);
            }
        }
    }
    CHECK_THROWS_AS(s_n_closed_zy(23, 3, z_vector(23, 3)), DomainError);
    CHECK_THROWS_AS(s_n_closed_zz(5, 5, 1), DomainError);
}

TEST_CASE("c_n small values")
{
    struct Expected {
        std::size_t n;
        mpq_class value;
        std::size_t h;
        std::size_t k;
    };
    const Expected table[] = {{2, 1, 1, 1},
                              {3, mpq_class(3, 4), 1, 1},
                              {4, mpq_class(1, 3), 2, 2},
                              {5, mpq_class(5, 12), 2, 2},
                              {6, mpq_class(3, 10), 2, 3},
                              {7, mpq_class(7, 20), 2, 3}};
    for (const auto& e : table) {
        const CnResult r = c_n(e.n);
        CHECK(r.value == e.value);
        CHECK(r.argmin_h == e.h);
        CHECK(r.argmin_k == e.k);
    }
    // n = 4 cross-checked against enumeration over A_4
    mpq_class brute = -1;
    for (std::size_t h = 1; h < 4; ++h) {
        for (std::size_t k = 1; k < 4; ++k) {
            const mpq_class v = s_n_bruteforce(z_vector(4, h), z_vector(4, k));
            if (brute < 0 || v < brute) {
                brute = v;
            }
        }
    }
    CHECK(brute == c_n(4).value);
    CHECK_THROWS_AS(c_n(1), DomainError);
}

TEST_CASE("c_n screening agrees with a full exact scan")
{
    for (std::size_t n : {8UL, 13UL, 20UL, 31UL, 64UL}) {
        mpq_class best = -1;
        std::size_t bh = 0;
        std::size_t bk = 0;
        for (std::size_t h = 1; h < n; ++h) {
            for (std::size_t k = 1; k < n; ++k) {
                const mpq_class v = s_n_closed_zz(n, h, k);
                if (best < 0 || v < best) {
                    best = v;
                    bh = h;
                    bk = k;
                }
            }
        }
        const CnResult r = c_n(n);
        CHECK(r.value == best);
        CHECK(r.argmin_h == bh);
        CHECK(r.argmin_k == bk);
    }
}

TEST_CASE("sandwich")
{
    for (std::size_t n = 3; n <= 7; ++n) {
        for (std::size_t h = 1; h < n; ++h) {
            const CenteredVector z = z_vector(n, h);
            CHECK(sandwich_check(z, z).holds());
        }
    }
    std::vector<mpq_class> spike(6, mpq_class(0));
    spike[0] = 5;
    spike[1] = -5;
    const CenteredVector x(spike);
    CHECK(sandwich_check(x, z_vector(6, 2)).holds());
    CHECK_THROWS_AS(sandwich_check(rationals({0, 0, 0}), z_vector(3, 1)), DomainError);
}

TEST_CASE("stabilizer average")
{
    CHECK(stabilizer_average(z_vector(5, 2), 2) == z_vector(5, 2));
    // |x|_1 = 1 forces the positive part to sum to n/2
    const CenteredVector x5 = rationals({2, mpq_class(1, 2), mpq_class(-1, 2), mpq_class(-1, 1), mpq_class(-1, 1)});
    CHECK(stabilizer_average(x5, 2) == z_vector(5, 2));
    const CenteredVector x4 = rationals({2, mpq_class(-1, 2), mpq_class(-3, 4), mpq_class(-3, 4)});
    CHECK(stabilizer_average(x4, 1) == z_vector(4, 1));

    auto rng = testing_support::make_rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing_support::uniform(rng, 4, 7));
        const std::size_t h = static_cast<std::size_t>(testing_support::uniform(rng, 1, static_cast<long>(n) - 1));
        std::vector<mpq_class> v(n);
        mpq_class pos = 0;
        mpq_class neg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = testing_support::uniform(rng, 1, 9);
            (j < h ? pos : neg) += v[j];
        }
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class half_n(static_cast<unsigned long>(n), 2);
            v[j] = j < h ? mpq_class(v[j] * half_n / pos) : mpq_class(-v[j] * half_n / neg);
        }
        CHECK(stabilizer_average(CenteredVector(v), h) == z_vector(n, h));
    }
    CHECK_THROWS_AS(stabilizer_average(z_vector(4, 2).scaled(2), 2), DomainError);
    CHECK_THROWS_AS(stabilizer_average(z_vector(4, 2), 1), DomainError);
    CHECK_THROWS_AS(stabilizer_average(z_vector(3, 1), 1), DomainError);
}

TEST_CASE("lower bounds on |y|_1 for spread vectors")
{
    const CenteredVector y5 = center({1, 2, 3, 4, 5});
    CHECK(l1_norm(y5) == mpq_class(6, 5));
    CHECK(lemma46_lower_bound(y5, Lemma46Case::Strict) == mpq_class(3, 4));
    CHECK(lemma46_lower_bound(rationals({-2, -1, 0, 1, 2}), Lemma46Case::Strict) == mpq_class(3, 4));
    const CenteredVector y6 = center({1, 2, 3, 4, 5, 5});
    CHECK(lemma46_lower_bound(y6, Lemma46Case::Tied) == mpq_class(3, 5));
    CHECK(l1_norm(y6) >= mpq_class(3, 5));
    CHECK_THROWS_AS(lemma46_lower_bound(center({1, 2, 2, 3}), Lemma46Case::Strict), DomainError);
    CHECK_THROWS_AS(lemma46_lower_bound(center({1, 2, 3, 4}), Lemma46Case::Tied), DomainError);
}

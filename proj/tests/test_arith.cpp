#include <random>

#include "doctest.h"
#include "lgd/arith.hpp"
#include "lgd/factor.hpp"
#include "lgd/lattice.hpp"
#include "lgd/sieve.hpp"
#include "lgd/smith.hpp"

using namespace lgd;

namespace {

// Plain, unsegmented sieve used as an oracle for prime_sieve.
std::vector<std::int64_t> naive_primes(std::int64_t limit)
{
    std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!comp[static_cast<std::size_t>(i)]) {
            out.push_back(i);
            for (std::int64_t j = 2 * i; j <= limit; j += i) {
                comp[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    return out;
}

std::int64_t brute_dlog(std::int64_t u, std::int64_t p, std::int64_t big, std::int64_t small)
{
    std::int64_t acc = 1;
    for (std::int64_t x = 0; x < small; ++x) {
        if (acc == u) {
            return x;
        }
        acc = acc * (1 + p) % big;
    }
    return -1;
}

} // namespace

TEST_CASE("mod_pow")
{
    CHECK(mod_pow(ResidueInt(2, 7), 0) == ResidueInt(1, 7));
    CHECK(mod_pow(ResidueInt(7, 125), 4) == ResidueInt(26, 125));
    CHECK(mod_pow(ResidueInt(6, 125), 5) == ResidueInt(26, 125));
}

TEST_CASE("mod_inverse")
{
    CHECK(mod_inverse(ResidueInt(1, 11)) == ResidueInt(1, 11));
    CHECK(mod_inverse(ResidueInt(3, 7)) == ResidueInt(5, 7));
    CHECK_THROWS_AS(mod_inverse(ResidueInt(2, 4)), NotInvertible);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto m = static_cast<std::int64_t>(rng() % 100000) + 2;
        const auto x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
        if (std::gcd(x, m) != 1) {
            continue;
        }
        const ResidueInt r(x, m);
        CHECK((mod_inverse(r) * r).value() == 1 % m);
    }
}

TEST_CASE("residue arithmetic rejects mixed moduli")
{
    CHECK_THROWS_AS(ResidueInt(1, 5) + ResidueInt(1, 7), DomainError);
}

TEST_CASE("legendre symbol and square roots")
{
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(4, 5) == 1);
    CHECK(legendre_symbol(2, 5) == -1);

    CHECK(sqrt_mod(ResidueInt(0, 13)) == ResidueInt(0, 13));
    CHECK(sqrt_mod(ResidueInt(4, 5)) == ResidueInt(2, 5));
    CHECK_FALSE(sqrt_mod(ResidueInt(2, 5)).has_value());

    for (const std::int64_t l : {3, 5, 7, 13, 17, 41, 97, 257, 65537, 1000003}) {
        for (std::int64_t a = 0; a < std::min<std::int64_t>(l, 300); ++a) {
            const auto root = sqrt_mod(ResidueInt(a, l));
            CHECK(root.has_value() == (legendre_symbol(a, l) >= 0));
            if (root) {
                CHECK((*root * *root).value() == a);
                CHECK(root->value() <= l - root->value());
            }
        }
    }
}

TEST_CASE("prime sieve")
{
    CHECK(prime_sieve(1).empty());
    CHECK(prime_sieve(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    const auto thirty = prime_sieve(30);
    CHECK(thirty.size() == 10);
    CHECK(thirty.back() == 29);

    // small segments force many segment boundaries
    for (const std::size_t seg : {1U, 7U, 64U, 1000U}) {
        CHECK(prime_sieve(5000, seg) == naive_primes(5000));
    }
    const auto big = prime_sieve(2'000'000);
    CHECK(big == naive_primes(2'000'000));
    CHECK(big.size() == 148933);
}

TEST_CASE("discrete log in 1 + pZ")
{
    CHECK(discrete_log_1p(ResidueInt(1, 125), 5) == ResidueInt(0, 25));
    CHECK(discrete_log_1p(ResidueInt(26, 125), 5) == ResidueInt(5, 25));
    CHECK(discrete_log_1p(ResidueInt(6, 125), 5) == ResidueInt(1, 25));
    CHECK_THROWS_AS(discrete_log_1p(ResidueInt(2, 125), 5), DomainError);

    // inverse of mod_pow on the whole of 1 + pZ/p^{N+1}, checked by brute force
    for (const std::int64_t p : {3, 5, 7}) {
        for (unsigned n = 1; n <= 4; ++n) {
            const std::int64_t big = checked_pow(p, n + 1);
            const std::int64_t small = checked_pow(p, n);
            for (std::int64_t u = 1; u < big; u += p) {
                const auto x = discrete_log_1p(ResidueInt(u, big), p);
                CHECK(x.modulus() == small);
                CHECK(x.value() == brute_dlog(u, p, big, small));
                CHECK(mod_pow(ResidueInt(1 + p, big), static_cast<std::uint64_t>(x.value())).value() == u);
            }
        }
    }
}

TEST_CASE("rational arithmetic is exact and canonical")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BigRat a(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(static_cast<long>(rng() % 999) + 1));
        const BigRat c(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(static_cast<long>(rng() % 999) + 1));
        CHECK((a + c) - c == a);
        CHECK(denominator(a) > 0);
        CHECK(gcd(numerator(a), denominator(a)) == 1);
    }
    CHECK(BigRat(BigInt(6), BigInt(-4)) == BigRat(BigInt(-3), BigInt(2)));
    CHECK(to_string(BigRat(BigInt(6), BigInt(-4))) == "-3/2");
    CHECK(rational_sqrt(BigRat(BigInt(9), BigInt(4))) == BigRat(BigInt(3), BigInt(2)));
    CHECK_FALSE(rational_sqrt(BigRat(2)).has_value());
}

TEST_CASE("smith normal form examples")
{
    IntMat id = IntMat::Identity(2, 2);
    auto s = smith_normal_form(id);
    CHECK(s.divisors == std::vector<BigInt>{1, 1});

    IntMat m(2, 2);
    m << 2, 4, 6, 8;
    s = smith_normal_form(m);
    CHECK(s.divisors == std::vector<BigInt>{2, 4});
    CHECK(IntMat(s.row_transform * m * s.column_transform) == s.diagonal);

    IntMat z = IntMat::Zero(3, 2);
    CHECK(smith_normal_form(z).divisors.empty());
}

TEST_CASE("smith normal form properties on random matrices")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<Eigen::Index>(rng() % 5 + 1);
        const auto cols = static_cast<Eigen::Index>(rng() % 5 + 1);
        Mat<std::int64_t> small(rows, cols);
        IntMat m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                const auto v = static_cast<long>(rng() % 21) - 10;
                m(i, j) = v;
                small(i, j) = v;
            }
        }
        const auto s = smith_normal_form(m);
        CHECK(IntMat(s.row_transform * m * s.column_transform) == s.diagonal);
        // off-diagonal zero, chain condition
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                if (i != j) {
                    CHECK(s.diagonal(i, j) == 0);
                }
            }
        }
        for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        }
        // unimodular transforms
        CHECK_NOTHROW(inverse_unimodular(s.row_transform));
        CHECK_NOTHROW(inverse_unimodular(s.column_transform));
        // the machine-integer instantiation agrees
        const auto s64 = smith_normal_form(small, false);
        REQUIRE(s64.divisors.size() == s.divisors.size());
        for (std::size_t i = 0; i < s.divisors.size(); ++i) {
            CHECK(BigInt(s64.divisors[i]) == s.divisors[i]);
        }
    }
}

TEST_CASE("factorization")
{
    const auto f = factorize(BigInt(360));
    REQUIRE(f.has_value());
    CHECK(f->at(BigInt(2)) == 3);
    CHECK(f->at(BigInt(3)) == 2);
    CHECK(f->at(BigInt(5)) == 1);

    // product of two primes above the trial division bound
    const BigInt a("1000000007"), b("998244353");
    const auto g = factorize(a * b * 12);
    REQUIRE(g.has_value());
    CHECK(g->at(a) == 1);
    CHECK(g->at(b) == 1);

    const auto d = positive_divisors(BigInt(-12));
    REQUIRE(d.has_value());
    CHECK(*d == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

namespace {

// Elements of (Z/q)^k lying in a submodule, by enumeration.
std::size_t count_members(const Submodule& s)
{
    const auto k = s.dimension();
    const std::int64_t q = s.modulus();
    std::size_t total = 0;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(k), 0);
    while (true) {
        IntVec v(k);
        for (Eigen::Index i = 0; i < k; ++i) {
            v(i) = digits[static_cast<std::size_t>(i)];
        }
        total += s.contains(v) ? 1 : 0;
        Eigen::Index i = 0;
        while (i < k && ++digits[static_cast<std::size_t>(i)] == q) {
            digits[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == k) {
            break;
        }
    }
    return total;
}

} // namespace

TEST_CASE("submodules of (Z/q)^k")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t q = std::vector<std::int64_t>{2, 3, 4, 8, 9}[rng() % 5];
        const Eigen::Index k = static_cast<Eigen::Index>(rng() % 3 + 1);
        IntMat g1(k, 2), g2(k, 1);
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < 2; ++j) {
                g1(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(q));
            }
            g2(i, 0) = static_cast<long>(rng() % static_cast<std::uint64_t>(q));
        }
        const auto a = Submodule::span(g1, q);
        const auto b = Submodule::span(g2, q);
        CHECK(BigInt(count_members(a)) == a.order());
        const auto both = a.intersect(b);
        CHECK(BigInt(count_members(both)) == both.order());
        CHECK(a.contains(both));
        CHECK(b.contains(both));
        const auto total = a.sum(b);
        CHECK(total.order() * both.order() == a.order() * b.order());
        const auto quo = quotient(total, b);
        CHECK(quo.order() * b.order() == total.order());
        for (std::size_t i = 0; i + 1 < quo.divisors.size(); ++i) {
            CHECK(quo.divisors[i + 1] % quo.divisors[i] == 0);
        }
        // each generator has exactly the stated order in the quotient
        for (std::size_t i = 0; i < quo.divisors.size(); ++i) {
            const IntVec g = quo.generators.col(static_cast<Eigen::Index>(i));
            CHECK(total.contains(g));
            CHECK(b.contains(IntVec(g * quo.divisors[i])));
            for (BigInt d = 1; d < quo.divisors[i]; ++d) {
                if (quo.divisors[i] % d == 0) {
                    CHECK_FALSE(b.contains(IntVec(g * d)));
                }
            }
        }
    }
}

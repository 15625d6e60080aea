#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>

#include "omseq/sequence.hpp"

using namespace omseq;

TEST_CASE("window_slice") {
    const FiniteSequence x{0, {3.0, 0.0, 4.0}};
    CHECK(window_slice(x, Window{1, 1}) == std::vector<double>{3.0, 0.0, 4.0});
    CHECK(window_slice(x, Window{0, 2}) == std::vector<double>{0.0, 0.0, 3.0, 0.0, 4.0});
    CHECK(window_slice(FiniteSequence{}, Window{5, 2}) ==
          std::vector<double>{0.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(window_slice(x, Window{-100, 0}) == std::vector<double>{0.0});
}

TEST_CASE("window cardinality") {
    CHECK(Window{3, 0}.cardinality() == 1);
    CHECK(Window{-7, 5}.cardinality() == 11);
    for (long long N : {0ll, 1ll, 13ll, 200ll})
        CHECK(static_cast<long long>(window_slice(FiniteSequence{}, Window{2, N}).size()) ==
              2 * N + 1);
}

TEST_CASE("scale") {
    const FiniteSequence x{0, {1.0, 2.0}};
    CHECK(scale(0.0, x).is_zero());
    CHECK(scale(2.0, x).values == std::vector<double>{2.0, 4.0});
    const FiniteSequence y{3, {1.0, -2.0}};
    const auto s = scale(-1.0, y);
    CHECK(s.offset == 3);
    CHECK(s.values == std::vector<double>{-1.0, 2.0});
}

TEST_CASE("add") {
    const FiniteSequence x{0, {1.0}};
    const FiniteSequence y{1, {1.0}};
    const auto sum = add(x, y);
    CHECK(sum.offset == 0);
    CHECK(sum.values == std::vector<double>{1.0, 1.0});

    CHECK(entrywise_equal(add(x, FiniteSequence{}), x));
    CHECK(add(x, scale(-1.0, x)).support() == std::nullopt);

    const FiniteSequence far{10, {5.0}};
    const auto merged = add(x, far);
    CHECK(merged.at(0) == 1.0);
    CHECK(merged.at(10) == 5.0);
    CHECK(merged.at(5) == 0.0);
}

TEST_CASE("add and scale agree with dense reference on random inputs") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_int_distribution<long long> off(-10, 10);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 100; ++trial) {
        FiniteSequence x{off(rng), {}}, y{off(rng), {}};
        for (int i = len(rng); i > 0; --i) x.values.push_back(u(rng));
        for (int i = len(rng); i > 0; --i) y.values.push_back(u(rng));
        const double a = u(rng);

        std::map<long long, double> dense;
        for (std::size_t i = 0; i < x.values.size(); ++i)
            dense[x.offset + static_cast<long long>(i)] += a * x.values[i];
        for (std::size_t i = 0; i < y.values.size(); ++i)
            dense[y.offset + static_cast<long long>(i)] += y.values[i];

        const auto got = add(scale(a, x), y);
        for (long long k = -30; k <= 30; ++k) {
            const auto it = dense.find(k);
            CHECK(got.at(k) == (it == dense.end() ? 0.0 : it->second));
        }
    }
}

TEST_CASE("support trims stored zeros") {
    const FiniteSequence x{-2, {0.0, 1.0, 0.0, 2.0, 0.0}};
    const auto supp = x.support();
    REQUIRE(supp.has_value());
    CHECK(supp->first == -1);
    CHECK(supp->second == 1);
    CHECK_FALSE(FiniteSequence{5, {0.0, 0.0}}.support().has_value());
}

TEST_CASE("geometric_example") {
    const auto x = geometric_example(2.0, 1.0, 1);
    CHECK(x.at(-1) == 0.25);
    CHECK(x.at(0) == 0.5);
    CHECK(x.at(1) == 0.25);
    CHECK(x.at(2) == 0.0);

    const auto single = geometric_example(2.0, 2.0, 0);
    REQUIRE(single.values.size() == 1);
    CHECK(single.at(0) == Catch::Approx(1.0 / std::sqrt(2.0)));

    const auto y = geometric_example(3.5, 0.7, 20);
    for (long long k = 1; k <= 20; ++k) {
        CHECK(y.at(k) == y.at(-k));
        CHECK(y.at(k) < y.at(k - 1));
    }

    CHECK_THROWS_AS(geometric_example(1.0, 1.0, 3), std::domain_error);
    CHECK_THROWS_AS(geometric_example(2.0, 0.0, 3), std::domain_error);
    CHECK_THROWS_AS(geometric_example(2.0, 1.0, -1), std::domain_error);
}

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "beanbag/ratio.hpp"

using beanbag::Ratio;

TEST_CASE("ratio reduces to canonical form") {
    CHECK(Ratio{2, 4} == Ratio{1, 2});
    CHECK(Ratio{991, 1011}.numerator() == 991);
    CHECK(Ratio{991, 1011}.denominator() == 1011);
    CHECK(Ratio{0, 7} == Ratio::zero());
    CHECK(Ratio{5, 0} == Ratio::infinity());
    CHECK(Ratio{1000, 100} == Ratio{10, 1});
    CHECK_THROWS_AS(Ratio(0, 0), std::invalid_argument);
}

TEST_CASE("ratio multiplication is exact and cross-reduced") {
    CHECK(Ratio{1, 2} * Ratio{2, 3} == Ratio{1, 3});
    CHECK(Ratio{3, 4} * Ratio{4, 3} == Ratio::one());
    CHECK(Ratio{0, 1} * Ratio{7, 9} == Ratio::zero());
    CHECK(Ratio::infinity() * Ratio{7, 9} == Ratio::infinity());
    CHECK_THROWS_AS(Ratio::zero() * Ratio::infinity(), std::domain_error);

    // Telescoping keeps intermediates small even when the raw product of
    // numerators would overflow.
    Ratio odds = Ratio::one();
    for (std::uint64_t k = 1; k <= 100000; ++k) {
        odds *= Ratio{k, k + 1};
    }
    CHECK(odds == Ratio{1, 100001});
}

TEST_CASE("ratio ordering matches rational value") {
    CHECK(Ratio{1, 3} < Ratio{1, 2});
    CHECK(Ratio{2, 3} > Ratio{1, 2});
    CHECK(Ratio{991, 1011} < Ratio::one());
    CHECK(Ratio::zero() < Ratio{1, 1000000});
    CHECK(Ratio{1000000, 1} < Ratio::infinity());

    std::mt19937_64 gen{20240901};
    std::uniform_int_distribution<std::uint64_t> dist{1, 1000000};
    for (int i = 0; i < 2000; ++i) {
        const Ratio a{dist(gen), dist(gen)};
        const Ratio b{dist(gen), dist(gen)};
        const auto exact = static_cast<__int128>(a.numerator()) * b.denominator() <=>
                           static_cast<__int128>(b.numerator()) * a.denominator();
        CHECK((a <=> b) == exact);
    }
}

TEST_CASE("ratio value and formatting") {
    CHECK(Ratio{1, 2}.value() == 0.5);
    CHECK(Ratio{1, 21}.to_string() == "1/21");
    CHECK(Ratio::infinity().to_string() == "1/0");
    CHECK(Ratio::zero().to_string() == "0/1");
    CHECK(Ratio{7, 3}.reciprocal() == Ratio{3, 7});
    CHECK(Ratio::zero().reciprocal() == Ratio::infinity());
}

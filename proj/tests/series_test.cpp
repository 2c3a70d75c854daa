#include <stdexcept>
#include <vector>

#include <combx/series.hpp>
#include <doctest.h>

using namespace combx;

namespace {

PowerSeries geometric(int order) {
    // 1/(1-x) = 1 + x + x^2 + ...
    return (PowerSeries::constant(1, order) - PowerSeries::x(order)).reciprocal();
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    const PowerSeries zero(4);
    CHECK(zero.order() == 4);
    CHECK(zero.coeff(3) == 0);
    CHECK_THROWS_AS(zero.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(zero.coeff(-1), std::out_of_range);
    CHECK_THROWS_AS(PowerSeries(0), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries::x(1), std::invalid_argument);

    const PowerSeries c = PowerSeries::constant(BigRational(3, 2), 3);
    CHECK(c.coeff(0) == BigRational(3, 2));
    CHECK(c.coeff(1) == 0);

    const PowerSeries x = PowerSeries::x(5);
    CHECK(x.coeff(1) == 1);
    CHECK(x.coeff(0) == 0);
}

TEST_CASE("arithmetic truncates to the smaller order") {
    const PowerSeries a({1, 2, 3});        // 1 + 2x + 3x^2
    const PowerSeries b({5, 7});           // 5 + 7x
    const PowerSeries sum = a + b;
    CHECK(sum.order() == 2);
    CHECK(sum.coeff(0) == 6);
    CHECK(sum.coeff(1) == 9);
    const PowerSeries diff = a - b;
    CHECK(diff.coeff(0) == -4);
    const PowerSeries prod = a * b;
    CHECK(prod.order() == 2);
    CHECK(prod.coeff(0) == 5);
    CHECK(prod.coeff(1) == 17);  // 1*7 + 2*5
}

TEST_CASE("multiplication convolves exactly") {
    const PowerSeries sq = geometric(6) * geometric(6);  // 1/(1-x)^2 = sum (k+1) x^k
    for (int k = 0; k < 6; ++k) CHECK(sq.coeff(k) == k + 1);
}

TEST_CASE("reciprocal inverts and demands a unit constant term") {
    const PowerSeries g = geometric(8);
    for (int k = 0; k < 8; ++k) CHECK(g.coeff(k) == 1);

    const PowerSeries product = g * (PowerSeries::constant(1, 8) - PowerSeries::x(8));
    CHECK(product == PowerSeries::constant(1, 8));

    CHECK_THROWS_AS(PowerSeries::x(4).reciprocal(), std::domain_error);

    // non-unit constants work and produce rational coefficients
    const PowerSeries half = PowerSeries::constant(2, 3).reciprocal();
    CHECK(half.coeff(0) == BigRational(1, 2));
}

TEST_CASE("composition substitutes a zero-constant inner series") {
    // 1/(1-u) at u = x^2 gives 1 + x^2 + x^4
    const PowerSeries x2 = PowerSeries::x(6) * PowerSeries::x(6);
    const PowerSeries composed = geometric(6).compose(x2);
    for (int k = 0; k < 6; ++k) CHECK(composed.coeff(k) == (k % 2 == 0 ? 1 : 0));

    CHECK_THROWS_AS(geometric(4).compose(PowerSeries::constant(1, 4)), std::domain_error);
}

TEST_CASE("integer_coeffs accepts integers only") {
    const PowerSeries ints({1, -2, 3});
    const auto coeffs = ints.integer_coeffs();
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[1] == -2);

    const PowerSeries halves = PowerSeries::constant(2, 3).reciprocal();
    CHECK_THROWS_AS(halves.integer_coeffs(), std::domain_error);
}

TEST_CASE("catalan_series lists the Catalan numbers") {
    const long long expected[] = {1,    1,    2,     5,     14,    42,     132,    429,
                                  1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845};
    const PowerSeries c = catalan_series(16);
    for (int k = 0; k < 16; ++k) CHECK(c.coeff(k) == expected[k]);

    // defining identity C = 1 + x C^2 holds as truncated series
    const PowerSeries rhs =
        PowerSeries::constant(1, 16) + PowerSeries::x(16) * (c * c);
    CHECK(rhs == c);
}

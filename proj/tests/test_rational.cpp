#include <stdexcept>

#include "doctest.h"
#include "ptc/op_counter.hpp"
#include "ptc/rational.hpp"

using ptc::BigInt;
using ptc::BigRational;

namespace {

BigRational q(long num, long den) {
    return BigRational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(q(2, -4) == q(-1, 2));
    CHECK(q(2, -4).den() == BigInt(2));
    CHECK(q(2, -4).num() == BigInt(-1));
    CHECK(q(6, 3).is_integer());
    CHECK(q(6, 3).to_string() == "2");
    CHECK(q(-3, 9).to_string() == "-1/3");
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(1, 3) - q(1, 2) == q(-1, 6));
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK(q(1, 3) / q(2, 9) == q(3, 2));
    CHECK(q(-7, 5).abs() == q(7, 5));
    CHECK(q(3, 7).reciprocal() == q(7, 3));
    CHECK((-q(3, 7)).reciprocal() == q(-7, 3));
}

TEST_CASE("round_nearest ties go to even") {
    CHECK(ptc::round_nearest(q(7, 2)) == BigInt(4));
    CHECK(ptc::round_nearest(q(5, 2)) == BigInt(2));
    CHECK(ptc::round_nearest(q(1, 2)) == BigInt(0));
    CHECK(ptc::round_nearest(q(3, 2)) == BigInt(2));
    CHECK(ptc::round_nearest(q(-7, 2)) == BigInt(-4));
    CHECK(ptc::round_nearest(q(-5, 2)) == BigInt(-2));
    CHECK(ptc::round_nearest(q(15, 16)) == BigInt(1));
    CHECK(ptc::round_nearest(q(-1, 3)) == BigInt(0));
    CHECK(ptc::round_nearest(q(-2, 3)) == BigInt(-1));
    CHECK(ptc::round_nearest(BigRational(9)) == BigInt(9));
}

TEST_CASE("round_nearest error is at most 1/2") {
    for (long num = -40; num <= 40; ++num) {
        for (long den = 1; den <= 9; ++den) {
            BigRational x = q(num, den);
            BigRational err = (x - BigRational(ptc::round_nearest(x))).abs();
            CHECK(err <= q(1, 2));
        }
    }
}

TEST_CASE("floor and ceil") {
    CHECK(ptc::floor_int(q(7, 2)) == BigInt(3));
    CHECK(ptc::ceil_int(q(7, 2)) == BigInt(4));
    CHECK(ptc::floor_int(q(-1, 3)) == BigInt(-1));
    CHECK(ptc::ceil_int(q(-1, 3)) == BigInt(0));
    CHECK(ptc::floor_int(BigRational(5)) == BigInt(5));
    CHECK(ptc::ceil_int(BigRational(5)) == BigInt(5));
}

TEST_CASE("pow_rational") {
    CHECK(ptc::pow_rational(q(2, 3), 3) == q(8, 27));
    CHECK(ptc::pow_rational(q(-2, 3), 2) == q(4, 9));
    CHECK(ptc::pow_rational(q(5, 7), 0) == BigRational(1));
    CHECK(ptc::pow_rational(BigRational(2), 20) == BigRational(BigInt(1) << 20));
}

TEST_CASE("sqrt enclosures") {
    BigRational tol = q(1, 1000000000L);

    SUBCASE("perfect squares are exact") {
        CHECK(ptc::sqrt_lower(q(9, 4), tol) == q(3, 2));
        CHECK(ptc::sqrt_upper(q(9, 4), tol) == q(3, 2));
        CHECK(ptc::sqrt_lower(BigRational(0), tol) == BigRational(0));
        CHECK(ptc::sqrt_upper(BigRational(144), tol) == BigRational(12));
    }

    SUBCASE("bracketing and width") {
        for (long v : {2L, 3L, 5L, 7L, 99L}) {
            BigRational x = q(v, 3);
            BigRational lo = ptc::sqrt_lower(x, tol);
            BigRational hi = ptc::sqrt_upper(x, tol);
            CHECK(lo * lo <= x);
            CHECK(hi * hi >= x);
            CHECK(lo <= hi);
            CHECK(hi - lo <= tol + tol);
        }
    }

    SUBCASE("tiny values stay bracketed") {
        BigRational x = BigRational(1, BigInt(1) << 80);
        BigRational lo = ptc::sqrt_lower(x, tol);
        BigRational hi = ptc::sqrt_upper(x, tol);
        CHECK(lo * lo <= x);
        CHECK(hi * hi >= x);
        CHECK(lo.sign() >= 0);
    }
}

TEST_CASE("root_upper") {
    BigRational tol = q(1, 1000000);

    CHECK(ptc::root_upper(BigRational(8), 1, tol) == BigRational(8));

    for (std::uint64_t j : {2ull, 3ull, 5ull}) {
        for (long v : {2L, 8L, 1000L}) {
            BigRational x(v);
            BigRational r = ptc::root_upper(x, j, tol);
            CHECK(r.sign() > 0);
            CHECK(ptc::pow_rational(r, j) >= x);
            // r is within tol of the true j-th root, so backing off by tol
            // must land at or below it
            if (r > tol) CHECK(ptc::pow_rational(r - tol, j) <= x);
        }
    }
}

TEST_CASE("rational_from_decimal") {
    CHECK(ptc::rational_from_decimal("1.25") == q(5, 4));
    CHECK(ptc::rational_from_decimal("-0.5") == q(-1, 2));
    CHECK(ptc::rational_from_decimal("3") == BigRational(3));
    CHECK(ptc::rational_from_decimal("0.1") == q(1, 10));
    CHECK(ptc::rational_from_decimal("-3.50") == q(-7, 2));
    CHECK_THROWS_AS(ptc::rational_from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(ptc::rational_from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(ptc::rational_from_decimal("abc"), std::invalid_argument);
}

TEST_CASE("bit_size counts numerator plus denominator bits") {
    CHECK(q(3, 4).bit_size() == 5);
    CHECK(BigRational(1).bit_size() == 2);
    CHECK(BigRational(0).bit_size() == 2);
    CHECK(BigRational(BigInt(1) << 100).bit_size() == 102);
}

TEST_CASE("op counter ticks inside a scope and not outside") {
    ptc::OpCounter counter;
    BigRational a = q(1, 3), b = q(1, 6);
    BigRational warm = a + b;  // outside any scope: untracked
    CHECK(counter.rational_ops == 0);
    {
        ptc::CountScope scope(counter);
        BigRational c = a + b;
        BigRational d = c * b;
        CHECK(d == q(1, 12));
    }
    CHECK(counter.rational_ops == 2);
    CHECK(counter.bit_ops_proxy > 0);
    std::uint64_t after = counter.rational_ops;
    BigRational late = warm * warm;  // scope closed again: untracked
    CHECK(counter.rational_ops == after);
    counter.reset();
    CHECK(counter.rational_ops == 0);
    CHECK(counter.bit_ops_proxy == 0);
}

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ptc/polynomial.hpp"
#include "support/contract.hpp"

using ptc::BigInt;
using ptc::BigRational;
using ptc::GaussianPoly;
using ptc::GaussianRational;
using ptc::RationalPolynomial;

namespace {

BigRational q(long num, long den) {
    return BigRational(BigInt(num), BigInt(den));
}

GaussianRational g(long re, long im = 0) {
    return GaussianRational(BigRational(re), BigRational(im));
}

}  // namespace

TEST_CASE("dense polynomials trim and evaluate") {
    GaussianPoly p({g(2), g(-3), g(1), g(0)});  // x^2 - 3x + 2 with a spurious cubic 0
    CHECK(p.degree() == 2);
    CHECK(p.eval(g(3)) == g(2));
    CHECK(p.eval(g(1)).is_zero());
    CHECK(p.eval(g(2)).is_zero());

    GaussianPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    GaussianPoly d = GaussianPoly({g(0), g(2), g(0), g(1)}).derivative();  // x^3+2x -> 3x^2+2
    CHECK(d.degree() == 2);
    CHECK(d.eval(g(3)) == g(29));
}

TEST_CASE("euclidean division satisfies a = q*b + r") {
    GaussianPoly a({g(1), g(0, 2), g(-3), g(5), g(1)});
    GaussianPoly b({g(-2), g(1), g(1)});
    auto [quot, rem] = ptc::poly_divmod(a, b);
    CHECK(rem.degree() < b.degree());
    // recompose manually
    GaussianPoly recomposed;
    {
        std::vector<GaussianRational> acc(a.c.size(), g(0));
        for (std::size_t i = 0; i < quot.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                acc[i + j] = acc[i + j] + quot.c[i] * b.c[j];
        for (std::size_t i = 0; i < rem.c.size(); ++i) acc[i] = acc[i] + rem.c[i];
        recomposed = GaussianPoly(acc);
    }
    CHECK(recomposed.c == a.c);

    CHECK_THROWS_AS(ptc::poly_divmod(a, GaussianPoly(std::vector<GaussianRational>{})),
                    std::domain_error);
}

TEST_CASE("gcd extracts the common factor, monic") {
    // (x-1)(x-2) and (x-1)(x-3)
    GaussianPoly a({g(2), g(-3), g(1)});
    GaussianPoly b({g(3), g(-4), g(1)});
    GaussianPoly gcd = ptc::poly_gcd(a, b);
    REQUIRE(gcd.degree() == 1);
    CHECK(gcd.c[0] == g(-1));
    CHECK(gcd.c[1] == g(1));

    // coprime inputs give the constant 1
    GaussianPoly c({g(1), g(1)});
    GaussianPoly one = ptc::poly_gcd(a, c);
    REQUIRE(one.degree() == 0);
    CHECK(one.c[0] == g(1));

    // scaling the inputs does not change the (monic) answer
    GaussianPoly a7({g(14), g(-21), g(7)});
    CHECK(ptc::poly_gcd(a7, b).c == gcd.c);
}

TEST_CASE("monic rational polynomials") {
    RationalPolynomial f({g(-2), g(0)});  // x^2 - 2
    CHECK(f.degree() == 2);
    CHECK(f.eval(g(3)) == g(7));
    CHECK(f.eval(GaussianRational(q(3, 2))) == GaussianRational(q(1, 4)));

    GaussianPoly full = f.full();
    REQUIRE(full.degree() == 2);
    CHECK(full.c[0] == g(-2));
    CHECK(full.c[1] == g(0));
    CHECK(full.c[2] == g(1));

    GaussianPoly d = f.derivative();  // 2x
    CHECK(d.eval(g(3)) == g(6));

    CHECK_THROWS_AS(RationalPolynomial(std::vector<GaussianRational>{}), std::invalid_argument);
}

TEST_CASE("squarefree detection") {
    CHECK(RationalPolynomial({g(-2), g(0)}).is_squarefree());       // x^2 - 2
    CHECK(!RationalPolynomial({g(1), g(-2)}).is_squarefree());      // (x-1)^2
    CHECK(RationalPolynomial({g(0), g(-1)}).is_squarefree());       // x(x-1)
    CHECK(!RationalPolynomial({g(0), g(0), g(0)}).is_squarefree()); // x^3
    CHECK(RationalPolynomial({g(1), g(0)}).is_squarefree());        // x^2 + 1
}

TEST_CASE("complex roots evaluate to exact zero") {
    RationalPolynomial f({g(1), g(0)});  // x^2 + 1
    CHECK(f.eval(g(0, 1)).is_zero());
    CHECK(f.eval(g(0, -1)).is_zero());
}

TEST_CASE("lazy polynomial wraps rational coefficients") {
    RationalPolynomial f({GaussianRational(q(-1, 3)), g(2, 1)});
    ptc::Polynomial lazy = ptc::Polynomial::from_rational(f);
    CHECK(lazy.degree() == 2);
    for (long n : {1L, 10L, 1000L}) {
        CHECK(ref::within_contract(lazy.coeff(0).eval(BigInt(n)),
                                   GaussianRational(q(-1, 3)), BigInt(n)));
        CHECK(ref::within_contract(lazy.coeff(1).eval(BigInt(n)), g(2, 1), BigInt(n)));
    }
    CHECK_THROWS_AS(ptc::Polynomial(std::vector<ptc::PTCNumber>{}), std::invalid_argument);
}

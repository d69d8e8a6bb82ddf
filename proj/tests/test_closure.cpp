#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "ptc/closure.hpp"
#include "ptc/constants.hpp"
#include "ptc/errors.hpp"
#include "ptc/field_ops.hpp"
#include "ptc/oracle.hpp"
#include "support/contract.hpp"
#include "support/reference_oracle.hpp"

using ptc::BigInt;
using ptc::BigRational;
using ptc::GaussianRational;
using ptc::PTCNumber;
using ptc::Polynomial;
using ptc::RationalPolynomial;

namespace {

BigRational q(long num, long den) {
    return BigRational(BigInt(num), BigInt(den));
}

GaussianRational g(long re, long im = 0) {
    return GaussianRational(BigRational(re), BigRational(im));
}

Polynomial lazy_from_rationals(const std::vector<GaussianRational>& lower) {
    std::vector<PTCNumber> coeffs;
    for (const auto& c : lower) coeffs.push_back(ptc::constant(c));
    return Polynomial(coeffs);
}

// Real coefficient oracle that alternates floor and ceil of n*v: lawful
// (error < 1/n) but never the convenient nearest value.
PTCNumber adversarial_real(const BigRational& v) {
    return ptc::from_integer_oracle(
        [v](const BigInt& n) {
            BigRational scaled = v * BigRational(n);
            return (n % 2 == 0) ? ptc::floor_int(scaled) : ptc::ceil_int(scaled);
        },
        [](const BigInt&) { return BigInt(0); }, /*is_real=*/true);
}

bool power_of_two(const BigInt& v) {
    return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

const RationalPolynomial kXSquaredMinusTwo({g(-2), g(0)});

ptc::KantorovichCertificate hand_certificate() {
    auto out = ptc::kantorovich_certify(kXSquaredMinusTwo, GaussianRational(q(3, 2)), q(1, 2));
    REQUIRE(out.accepted());
    return *out.certificate;
}

}  // namespace

TEST_CASE("coefficient truncation plan") {
    Polynomial f = lazy_from_rationals({g(-2), g(0)});  // x^2 - 2

    SUBCASE("frozen plan constants for degree 2 at m = 10") {
        auto [ft, plan] = ptc::truncate_coefficients(f, BigInt(10));
        CHECK(plan.k == BigInt(3200));  // 2^2 * 2^3 * 10^2
        CHECK(plan.gamma_hat == BigRational(4));
        REQUIRE(plan.per_coeff_error.size() == 2);
        CHECK(plan.per_coeff_error[0] == q(1, 3200));
        CHECK(plan.per_coeff_error[1] == q(1, 12800));
        // integer coefficients truncate to themselves
        CHECK(ft.coeff(0) == g(-2));
        CHECK(ft.coeff(1) == g(0));
    }

    SUBCASE("m below 1 is rejected") {
        CHECK_THROWS_AS(ptc::truncate_coefficients(f, BigInt(0)), std::domain_error);
    }

    SUBCASE("per-coefficient budgets are honored for a transcendental coefficient") {
        // x^2 - pi: the truncated constant term must sit within its budget
        Polynomial fp = Polynomial({ptc::negate(ptc::pi()), ptc::constant(BigRational(0))});
        auto [ft, plan] = ptc::truncate_coefficients(fp, BigInt(1000));
        GaussianRational truncated = ft.coeff(0);
        CHECK(truncated.im == BigRational(0));
        CHECK((truncated.re + ref::reference_pi()).abs() <=
              plan.per_coeff_error[0] + ref::reference_pi_error());
    }

    SUBCASE("roots of the truncation stay within 1/m of the true roots") {
        // (x - 1/3)(x + 1/4) = x^2 - x/12 - 1/12 with adversarial coefficient
        // oracles, truncated at several precisions
        Polynomial adv = Polynomial({adversarial_real(q(-1, 12)), adversarial_real(q(-1, 12))});
        std::vector<GaussianRational> truth = {GaussianRational(q(1, 3)),
                                               GaussianRational(q(-1, 4))};
        for (long m : {2L, 10L, 100L}) {
            auto [ft, plan] = ptc::truncate_coefficients(adv, BigInt(m));
            auto roots = ref::aberth_roots(ft);
            REQUIRE(roots.size() == 2);
            std::vector<GaussianRational> approx = {roots[0].value, roots[1].value};
            BigRational ref_err = roots[0].err_bound + roots[1].err_bound;
            BigRational reach = q(1, m) + ref_err;
            CHECK(ref::bottleneck_matching_norm(truth, approx) <= reach * reach);
        }
    }
}

TEST_CASE("root pairing bound") {
    SUBCASE("degree one, fully exact") {
        RationalPolynomial f({g(2)});            // x + 2, root -2
        RationalPolynomial h({GaussianRational(q(5, 2))});  // x + 5/2, root -5/2
        ptc::OstrowskiBound b = ptc::ostrowski_bound(f, h);
        CHECK(b.gamma == BigRational(5));
        CHECK(b.epsilon == q(1, 2));
        CHECK(b.pairing_bound == BigRational(1));
        // actual root displacement is 1/2, safely under the bound
    }

    SUBCASE("bound is symmetric in its arguments") {
        RationalPolynomial f({g(-2), g(0)});
        RationalPolynomial h({GaussianRational(q(-2000001, 1000000)), g(0)});
        ptc::OstrowskiBound fh = ptc::ostrowski_bound(f, h);
        ptc::OstrowskiBound hf = ptc::ostrowski_bound(h, f);
        CHECK(fh.pairing_bound == hf.pairing_bound);
        CHECK(fh.gamma == hf.gamma);
    }

    SUBCASE("perturbed quadratic roots pair within the bound") {
        RationalPolynomial f({g(-2), g(0)});
        RationalPolynomial h({GaussianRational(q(-2000001, 1000000)), GaussianRational(q(1, 999983))});
        ptc::OstrowskiBound b = ptc::ostrowski_bound(f, h);
        auto rf = ref::aberth_roots(f);
        auto rh = ref::aberth_roots(h);
        std::vector<GaussianRational> av = {rf[0].value, rf[1].value};
        std::vector<GaussianRational> bv = {rh[0].value, rh[1].value};
        BigRational ref_err = rf[0].err_bound + rf[1].err_bound + rh[0].err_bound + rh[1].err_bound;
        BigRational reach = b.pairing_bound + ref_err;
        CHECK(ref::bottleneck_matching_norm(av, bv) <= reach * reach);
        CHECK(b.pairing_bound > BigRational(0));
    }

    SUBCASE("degree mismatch is rejected") {
        RationalPolynomial f({g(1)});
        RationalPolynomial h({g(1), g(0)});
        CHECK_THROWS_AS(ptc::ostrowski_bound(f, h), std::invalid_argument);
    }
}

TEST_CASE("newton basin certification") {
    SUBCASE("the worked quadratic accepts with exact constants") {
        auto out = ptc::kantorovich_certify(kXSquaredMinusTwo, GaussianRational(q(3, 2)), q(1, 2));
        REQUIRE(out.accepted());
        CHECK(out.reject == ptc::RejectReason::None);
        const auto& cert = *out.certificate;
        CHECK(cert.a == q(1, 3));
        CHECK(cert.b == q(1, 12));
        CHECK(cert.L == BigRational(2));
        CHECK(cert.h == q(1, 18));
        CHECK(cert.error_bound_at(0) == cert.t_star_upper);

        // t* = (3 - 2 sqrt 2)/2 to twelve digits
        BigRational tol = BigRational(1, BigInt(1) << 70);
        BigRational lo = (BigRational(3) - BigRational(2) * ptc::sqrt_upper(BigRational(2), tol)) / BigRational(2);
        BigRational hi = (BigRational(3) - BigRational(2) * ptc::sqrt_lower(BigRational(2), tol)) / BigRational(2);
        CHECK(cert.t_star_upper >= lo);
        CHECK(cert.t_star_upper <= hi + q(1, 1000000000000L));

        // the bound sequence contracts
        CHECK(cert.error_bound_at(1) < cert.error_bound_at(0));
        CHECK(cert.error_bound_at(5) < cert.error_bound_at(4));
    }

    SUBCASE("vanishing derivative is rejected") {
        RationalPolynomial f({g(0), g(0)});  // x^2
        auto out = ptc::kantorovich_certify(f, g(0), BigRational(1));
        CHECK(!out.accepted());
        CHECK(out.reject == ptc::RejectReason::DerivativeZero);
    }

    SUBCASE("seeds far from any basin are rejected") {
        auto out = ptc::kantorovich_certify(kXSquaredMinusTwo, GaussianRational(q(1, 10)), q(2, 5));
        CHECK(!out.accepted());
        CHECK(out.reject == ptc::RejectReason::HTooLarge);
    }

    SUBCASE("a disc smaller than t* is rejected") {
        auto out = ptc::kantorovich_certify(kXSquaredMinusTwo, GaussianRational(q(3, 2)),
                                            BigRational(1, BigInt(1000000000L)));
        CHECK(!out.accepted());
        CHECK(out.reject == ptc::RejectReason::DiscTooSmall);
    }

    SUBCASE("the h = 1/2 boundary is exactly representable and accepted") {
        // f = x^2 from zeta = 1: a = 1/2, b = 1/2, L = 2, h = 1/2, theta = 1
        RationalPolynomial f({g(0), g(0)});
        auto out = ptc::kantorovich_certify(f, g(1), BigRational(2));
        REQUIRE(out.accepted());
        CHECK(out.certificate->h == q(1, 2));
        CHECK(out.certificate->theta_upper == BigRational(1));
        CHECK(out.certificate->t_star_upper == BigRational(1));
    }
}

TEST_CASE("certified newton refinement") {
    ptc::KantorovichCertificate cert = hand_certificate();

    SUBCASE("iterates are the classic continued-fraction convergents") {
        ptc::NewtonRun run = ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(12));
        CHECK(run.nu == 1);
        REQUIRE(run.iterates.size() == 2);
        CHECK(run.iterates[0] == GaussianRational(q(3, 2)));
        CHECK(run.iterates[1] == GaussianRational(q(17, 12)));
        CHECK(run.all_in_disc);
        CHECK(run.c0 > BigRational(0));

        ptc::NewtonRun run2 = ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(1000));
        CHECK(run2.nu == 2);
        REQUIRE(run2.iterates.size() == 3);
        CHECK(run2.iterates[2] == GaussianRational(q(577, 408)));
    }

    SUBCASE("a root hit exactly needs zero steps") {
        RationalPolynomial f({g(-5)});  // x - 5
        auto out = ptc::kantorovich_certify(f, g(5), BigRational(1));
        REQUIRE(out.accepted());
        CHECK(out.certificate->b == BigRational(0));
        CHECK(out.certificate->t_star_upper == BigRational(0));
        ptc::NewtonRun run = ptc::newton_refine(f, *out.certificate, BigInt(1000000000L));
        CHECK(run.nu == 0);
        REQUIRE(run.iterates.size() == 1);
        CHECK(run.iterates[0] == g(5));
        CHECK(run.c0 == BigRational(0));
    }

    SUBCASE("step count grows by at most one per doubling of m") {
        std::uint64_t prev = ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(1)).nu;
        for (int j = 1; j <= 40; ++j) {
            std::uint64_t cur = ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(1) << j).nu;
            CHECK(cur >= prev);
            CHECK(cur <= prev + 1);
            prev = cur;
        }
    }

    SUBCASE("every step obeys its own error bound") {
        BigRational tol = BigRational(1, BigInt(1) << 200);
        BigRational lo = ptc::sqrt_lower(BigRational(2), tol);
        BigRational hi = ptc::sqrt_upper(BigRational(2), tol);
        ptc::NewtonRun run = ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(1) << 40);
        for (std::uint64_t s = 0; s < run.iterates.size(); ++s) {
            BigRational bound = cert.error_bound_at(s);
            const BigRational& x = run.iterates[s].re;
            CHECK(run.iterates[s].im == BigRational(0));
            // |x - sqrt2| <= bound, via the enclosure [lo, hi]
            CHECK(x - hi <= bound);
            CHECK(lo - x <= bound);
        }
    }

    SUBCASE("huge precision engages the dyadic grid and keeps the contract") {
        BigInt m;
        mpz_ui_pow_ui(m.get_mpz_t(), 10, 700);
        ptc::NewtonRun run = ptc::newton_refine(kXSquaredMinusTwo, cert, m);
        CHECK(run.nu == 10);
        CHECK(run.all_in_disc);
        const GaussianRational& back = run.iterates.back();
        CHECK(back.im == BigRational(0));
        // the final iterate was snapped: its denominator is a power of two
        CHECK(power_of_two(back.re.den()));
        // |back - sqrt2| <= 1/m implies |back^2 - 2| <= 3/m
        BigRational residual = (back.re * back.re - BigRational(2)).abs();
        CHECK(residual <= BigRational(3) / BigRational(m));
    }

    SUBCASE("linear-only contraction at the h = 1/2 boundary") {
        RationalPolynomial f({g(0), g(0)});  // x^2, double root at 0
        auto out = ptc::kantorovich_certify(f, g(1), BigRational(2));
        REQUIRE(out.accepted());
        ptc::NewtonRun run = ptc::newton_refine(f, *out.certificate, BigInt(1024));
        CHECK(run.nu == 10);
        for (std::uint64_t s = 0; s < run.iterates.size(); ++s) {
            CHECK(run.iterates[s] == GaussianRational(BigRational(1, BigInt(1) << s)));
            // distance to the double root exactly matches the bound
            BigRational bound = out.certificate->error_bound_at(s);
            CHECK(run.iterates[s].norm() == bound * bound);
        }
        // and the bound sequence can only reach 2^-128 before the step cap,
        // so absurd precision demands fail loudly instead of looping
        CHECK_THROWS_AS(ptc::newton_refine(f, *out.certificate, BigInt(1) << 200),
                        ptc::PrecisionExhaustedError);
    }

    SUBCASE("m below 1 is rejected") {
        CHECK_THROWS_AS(ptc::newton_refine(kXSquaredMinusTwo, cert, BigInt(0)), std::domain_error);
    }
}

TEST_CASE("seed search") {
    SUBCASE("degree one is solved exactly") {
        RationalPolynomial f({g(-5)});
        ptc::SeedCertificate sc = ptc::find_seeds(f);
        REQUIRE(sc.seeds.size() == 1);
        CHECK(sc.seeds[0].zeta == g(5));
        CHECK(sc.seeds[0].certificate.b == BigRational(0));
        CHECK(sc.seeds[0].certificate.t_star_upper == BigRational(0));
    }

    SUBCASE("conjugate pair comes out in lexicographic order") {
        RationalPolynomial f({g(1), g(0)});  // x^2 + 1
        ptc::SeedCertificate sc = ptc::find_seeds(f);
        REQUIRE(sc.seeds.size() == 2);
        CHECK(sc.seeds[0].zeta.im < sc.seeds[1].zeta.im);
        // centers certify within a whisker of the true roots
        CHECK(ref::within(sc.seeds[0].zeta, g(0, -1), q(1, 1000000), BigRational(0)));
        CHECK(ref::within(sc.seeds[1].zeta, g(0, 1), q(1, 1000000), BigRational(0)));
    }

    SUBCASE("real roots sort by real part and have disjoint discs") {
        // (x + 1)(x - 1)(x - 2) = x^3 - 2x^2 - x + 2
        RationalPolynomial f({g(2), g(-1), g(-2)});
        ptc::SeedCertificate sc = ptc::find_seeds(f);
        REQUIRE(sc.seeds.size() == 3);
        CHECK(sc.seeds[0].zeta.re < sc.seeds[1].zeta.re);
        CHECK(sc.seeds[1].zeta.re < sc.seeds[2].zeta.re);
        std::vector<GaussianRational> truth = {g(-1), g(1), g(2)};
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(ref::within(sc.seeds[i].zeta, truth[i], q(1, 1000), BigRational(0)));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                BigRational reach =
                    sc.seeds[i].certificate.t_star_upper + sc.seeds[j].certificate.t_star_upper;
                CHECK((sc.seeds[i].zeta - sc.seeds[j].zeta).norm() > reach * reach);
            }
        }
    }

    SUBCASE("repeated roots are refused honestly") {
        RationalPolynomial f({g(1), g(-2)});  // (x-1)^2
        CHECK_THROWS_AS(ptc::find_seeds(f), ptc::PrecisionExhaustedError);
    }
}

TEST_CASE("root families") {
    SUBCASE("square root of two against bisection") {
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(-2), g(0)}));
        CHECK(fam->count() == 2);
        BigRational ref_val =
            ref::bisect_real_root(kXSquaredMinusTwo, BigRational(1), BigRational(2),
                                  BigRational(1, BigInt(1) << 100));
        BigRational ref_err = BigRational(1, BigInt(1) << 100);

        PTCNumber pos = fam->root(1);
        // the real flag is structural; a root oracle is complex-built even
        // when its value happens to be real
        CHECK(!pos.is_real());
        for (long n : {1L, 10L, 1000L, 1000000L})
            CHECK(ref::within(pos.eval(BigInt(n)), GaussianRational(ref_val),
                              q(1, n), ref_err));

        PTCNumber neg = fam->root(0);
        CHECK(ref::within(neg.eval(BigInt(1000)), GaussianRational(-ref_val),
                          q(1, 1000), ref_err));

        // approximations are memoized and deterministic
        GaussianRational a1 = fam->approx(1, BigInt(100000));
        GaussianRational a2 = fam->approx(1, BigInt(100000));
        CHECK(a1 == a2);

        CHECK(fam->newton_counts().count(1) == 1);
        auto lines = fam->certificate_lines();
        REQUIRE(lines.size() == 2);
        for (const auto& line : lines) {
            CHECK(line.find("zeta") != std::string::npos);
            CHECK(line.find("t*") != std::string::npos);
        }
    }

    SUBCASE("conjugate roots land on the exact values") {
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(1), g(0)}));
        PTCNumber low = fam->root(0), high = fam->root(1);
        CHECK(!low.is_real());
        for (long n : {1L, 100L, 1000000L}) {
            CHECK(ref::within_contract(low.eval(BigInt(n)), g(0, -1), BigInt(n)));
            CHECK(ref::within_contract(high.eval(BigInt(n)), g(0, 1), BigInt(n)));
        }
    }

    SUBCASE("rational roots are recovered to any precision") {
        // (x+1)(x-1)(x-2)
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(2), g(-1), g(-2)}));
        std::vector<GaussianRational> truth = {g(-1), g(1), g(2)};
        for (std::size_t which = 0; which < 3; ++which)
            for (long m : {10L, 1000L, 100000L})
                CHECK(ref::within(fam->approx(which, BigInt(m)), truth[which], q(1, m),
                                  BigRational(0)));
    }

    SUBCASE("lazy transcendental coefficients work end to end") {
        // x - pi: the root oracle must reproduce pi
        Polynomial f({ptc::negate(ptc::pi())});
        auto fam = std::make_shared<ptc::RootFamily>(f);
        CHECK(fam->count() == 1);
        for (long n : {10L, 1000L, 100000L})
            CHECK(ref::within(fam->root(0).eval(BigInt(n)),
                              GaussianRational(ref::reference_pi()), q(1, n),
                              ref::reference_pi_error()));
    }

    SUBCASE("out-of-range root index throws") {
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(-2), g(0)}));
        CHECK_THROWS_AS(fam->root(2), std::out_of_range);
        CHECK_THROWS_AS(fam->approx(5, BigInt(10)), std::out_of_range);
    }

    SUBCASE("repeated exact roots surface the honest error") {
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(1), g(-2)}));
        CHECK_THROWS_AS(fam->approx(0, BigInt(10)), ptc::PrecisionExhaustedError);
    }

    SUBCASE("concurrent evaluation stays consistent") {
        auto fam = std::make_shared<ptc::RootFamily>(lazy_from_rationals({g(-2), g(0), g(0)}));
        BigRational cbrt2 = ref::bisect_real_root(RationalPolynomial({g(-2), g(0), g(0)}),
                                                  BigRational(1), BigRational(2),
                                                  BigRational(1, BigInt(1) << 80));
        std::vector<std::thread> pool;
        std::vector<int> failures(8, 0);
        for (int t = 0; t < 8; ++t) {
            pool.emplace_back([&, t] {
                try {
                    // the real root of x^3 - 2 sorts last among the three
                    PTCNumber r = fam->root(2);
                    for (long n : {100L, 10000L + t}) {
                        if (!ref::within(r.eval(BigInt(n)), GaussianRational(cbrt2), q(1, n),
                                         BigRational(1, BigInt(1) << 80)))
                            failures[t] = 1;
                    }
                } catch (...) {
                    failures[t] = 2;
                }
            });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < 8; ++t) CHECK(failures[t] == 0);
    }

    SUBCASE("convenience wrapper") {
        PTCNumber r = ptc::root_number(lazy_from_rationals({g(-2), g(0)}), 1);
        BigRational lo = ptc::sqrt_lower(BigRational(2), q(1, 1000000000L));
        BigRational hi = ptc::sqrt_upper(BigRational(2), q(1, 1000000000L));
        GaussianRational v = r.eval(BigInt(100000));
        CHECK(v.re - hi <= q(1, 100000));
        CHECK(lo - v.re <= q(1, 100000));
    }
}

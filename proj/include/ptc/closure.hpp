#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ptc/errors.hpp"
#include "ptc/polynomial.hpp"

namespace ptc {

/// Result of truncating lazy coefficients to rationals: with
/// k = 2^n n^(n+1) m^n and the envelope gamma_hat, coefficient a_j was
/// evaluated to error at most per_coeff_error[j] = 1/(k gamma_hat^j), which
/// keeps every root of the truncation within 1/m of a root of the original.
struct CoefficientPrecisionPlan {
    BigInt m;
    BigInt k;
    BigRational gamma_hat;
    std::vector<BigRational> per_coeff_error;
};

/// Truncate a lazy-coefficient monic polynomial to an exact rational one
/// with a per-root displacement guarantee of 1/m.  Requires m >= 1.
std::pair<RationalPolynomial, CoefficientPrecisionPlan>
truncate_coefficients(const Polynomial& f, const BigInt& m);

/// Root-pairing bound for two monic degree-n polynomials: with
/// gamma = 2 max |coeff_{n-j}|^(1/j) over both coefficient lists and
/// epsilon^n = sum_j |b_j - a_j| gamma^j, the roots pair off within
/// pairing_bound = 2 n epsilon.  All quantities are rational upper
/// enclosures, so the bound stays valid.
struct OstrowskiBound {
    BigRational gamma;
    BigRational epsilon;
    BigRational pairing_bound;
};

OstrowskiBound ostrowski_bound(const RationalPolynomial& f, const RationalPolynomial& g);

enum class RejectReason {
    None,
    DerivativeZero, // f'(zeta) = 0: no Newton basin to certify
    HTooLarge,      // h = a b L > 1/2
    DiscTooSmall,   // t* exceeds the disc radius
};

/// Accepted Newton-basin certificate at center zeta: with a >= |f'(zeta)^-1|,
/// b >= |f'(zeta)^-1 f(zeta)|, L a Lipschitz bound for f' on the disc
/// D(zeta, disc_radius) and h = a b L <= 1/2, the closed ball of radius
/// t* = (1 - sqrt(1-2h))/(a L) around zeta contains exactly the root Newton
/// converges to.  a, b, L, h are exact rationals (upper enclosures);
/// t_star_upper and theta_upper are outward-rounded so every verdict drawn
/// from them is sound.
struct KantorovichCertificate {
    GaussianRational zeta;
    BigRational disc_radius;
    BigRational a;
    BigRational b;
    BigRational L;
    BigRational h;
    BigRational theta_upper;  // upper bound of 1 - sqrt(1-2h)
    BigRational t_star_upper; // theta_upper / (a L)

    /// Upper bound of the Kantorovich error after nu Newton steps:
    /// theta^(2^nu) / (2^nu a L).  At nu = 0 this is exactly t_star_upper.
    BigRational error_bound_at(std::uint64_t nu) const;
};

struct CertifyOutcome {
    std::optional<KantorovichCertificate> certificate;
    RejectReason reject = RejectReason::None;

    bool accepted() const { return certificate.has_value(); }
};

/// Decide whether exact Newton from zeta is certified to converge to the
/// unique root in the t*-ball.  Reject is a normal verdict, not a failure.
CertifyOutcome kantorovich_certify(const RationalPolynomial& f,
                                   const GaussianRational& zeta,
                                   const BigRational& disc_radius);

/// Trace of a certified Newton refinement down to error 1/m.
struct NewtonRun {
    std::vector<GaussianRational> iterates; // iterates[0] = zeta
    std::uint64_t nu = 0;                   // steps taken
    bool all_in_disc = true;                // every iterate passed the exact t* check
    BigRational c0; // upper bound of 1/(-log theta), reporting only; 0 when theta is 0 or 1
    KantorovichCertificate certificate;
};

/// Run exact-arithmetic Newton from cert.zeta until error_bound_at(nu) <=
/// 1/m; nu is found by testing the bound directly (it grows by at most one
/// when m doubles).  Iterates whose exact representation gets large are
/// rounded to a Gaussian rational on a grid finer than the squared error
/// budget, and any rounded iterate is re-checked against the t* ball
/// exactly, falling back to the unrounded value if the check fails.
NewtonRun newton_refine(const RationalPolynomial& f, const KantorovichCertificate& cert,
                        const BigInt& m);

struct SeedEntry {
    GaussianRational zeta;
    BigRational disc_radius;
    KantorovichCertificate certificate;
};

/// One certified, pairwise-disjoint disc per root, ordered lexicographically
/// by (re, im) of the centers.  precision_floor is the truncation precision
/// the seeds were built at; callers reuse the seeds beyond it.
struct SeedCertificate {
    std::vector<SeedEntry> seeds;
    BigInt precision_floor = 0;
};

struct FindSeedsOptions {
    int max_attempts = 24;
};

/// Locate and certify all roots of a squarefree rational polynomial:
/// floating-point heuristics propose seeds, exact Kantorovich certification
/// accepts them, and a retry ladder polishes seeds and shrinks discs until
/// all certificates hold with disjoint discs.  Throws PrecisionExhaustedError
/// when the ladder runs out (including the non-squarefree case).
SeedCertificate find_seeds(const RationalPolynomial& f, const FindSeedsOptions& opts = {});

struct RootOptions {
    BigInt seed_floor = 64;   // truncation precision used for the initial seed pass
    int refresh_depth = 6;    // per-evaluation certify/polish/reseed attempts
    FindSeedsOptions find_opts;
};

/// Shared root-extraction state for one lazy-coefficient polynomial: the
/// seed certificate is found once and reused across precision levels and
/// across the polynomial's roots; refreshes are serialized by the family
/// mutex.  Create via std::make_shared (root() hands out oracles that share
/// ownership of the family).
class RootFamily : public std::enable_shared_from_this<RootFamily> {
public:
    explicit RootFamily(Polynomial f, RootOptions opts = {});

    std::size_t count() const { return f_.degree(); }

    /// The `which`-th root (by the seed certificate's lexicographic order)
    /// as a lazy number.  which < count().
    PTCNumber root(std::size_t which);

    /// |result - root| <= 1/m: truncates coefficients at 2m, re-certifies
    /// the stored seed against the truncation, Newton-refines to 1/(2m).
    GaussianRational approx(std::size_t which, const BigInt& m);

    /// Certified seed centers in index order (forces the initial seed pass).
    std::vector<GaussianRational> seed_centers();

    /// Human-readable certificate dump, one line per seed, exact fractions.
    std::vector<std::string> certificate_lines();

    /// Newton iteration count of the most recent refinement for each root.
    std::map<std::size_t, std::uint64_t> newton_counts();

private:
    void ensure_seeds_locked();
    SeedEntry& recertify_locked(std::size_t which, const RationalPolynomial& ft);

    Polynomial f_;
    RootOptions opts_;
    std::mutex mu_;
    std::optional<SeedCertificate> seeds_;
    std::map<std::pair<std::size_t, BigInt>, GaussianRational> approx_memo_;
    std::map<std::size_t, std::uint64_t> newton_counts_;
};

/// Convenience wrapper: the `which`-th root of f as a lazy number, backed by
/// a fresh RootFamily.
PTCNumber root_number(const Polynomial& f, std::size_t which, RootOptions opts = {});

} // namespace ptc

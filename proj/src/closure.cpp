#include "ptc/closure.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptc/seed_heuristic.hpp"

namespace ptc {

namespace {

const BigRational kEnclosureTol{BigInt(1), BigInt(1) << 48};
const BigRational kHalf{BigInt(1), BigInt(2)};

BigRational rational_from_double(double d) {
    // Doubles are dyadic rationals; the conversion is exact.
    return BigRational(BigInt(mpq_class(d).get_num()), BigInt(mpq_class(d).get_den()));
}

BigRational dyadic_round(const BigRational& x, unsigned long bits) {
    BigInt scale = BigInt(1) << bits;
    return BigRational(round_nearest(x * BigRational(scale)), scale);
}

GaussianRational dyadic_round(const GaussianRational& z, unsigned long bits) {
    return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

std::uint64_t gaussian_bits(const GaussianRational& z) {
    return z.re.bit_size() + z.im.bit_size();
}

// Smallest B with 2^-B <= x, for positive x.
unsigned long bits_below(const BigRational& x) {
    BigRational inv = x.reciprocal();
    if (inv <= BigRational(1)) return 1;
    long b = static_cast<long>(mpz_sizeinbase(inv.num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(inv.den().get_mpz_t(), 2)) + 1;
    return b < 1 ? 1 : static_cast<unsigned long>(b);
}

// One exact Newton step rounded to a dyadic grid; returns zeta unchanged if
// the derivative vanishes there.
GaussianRational polish_step(const RationalPolynomial& f, const GaussianPoly& df,
                             const GaussianRational& zeta, unsigned long bits) {
    GaussianRational de = df.eval(zeta);
    if (de.is_zero()) return zeta;
    return dyadic_round(zeta - f.eval(zeta) / de, bits);
}

} // namespace

std::pair<RationalPolynomial, CoefficientPrecisionPlan>
truncate_coefficients(const Polynomial& f, const BigInt& m) {
    if (m < 1) throw std::domain_error("truncate_coefficients: m must be >= 1");
    const std::size_t n = f.degree();

    // k = 2^n n^(n+1) m^n
    BigInt npow, mpow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, n + 1);
    mpz_pow_ui(mpow.get_mpz_t(), m.get_mpz_t(), n);
    BigInt k = (BigInt(1) << n) * npow * mpow;

    // Envelope gamma_hat >= 2 max (|a_{n-j}|+1)^(1/j), from coarse
    // evaluations: |a| <= |coarse| + 1 at precision 1, so |a|+1 <=
    // |coarse|+2, and the fine truncations below stay under the same bound.
    BigRational max_root{kHalf};
    for (std::size_t cj = 0; cj < n; ++cj) {
        GaussianRational coarse = f.coeff(cj).eval(1);
        BigRational base = abs_upper(coarse, BigRational(BigInt(1), BigInt(4))) + BigRational(2);
        std::uint64_t j = n - cj;
        BigRational cand = root_upper(base, j, BigRational(BigInt(1), BigInt(8)));
        if (cand > max_root) max_root = cand;
    }
    BigRational gamma_hat = BigRational(2) * max_root;
    if (gamma_hat < BigRational(1)) gamma_hat = BigRational(1);

    CoefficientPrecisionPlan plan;
    plan.m = m;
    plan.k = k;
    plan.gamma_hat = gamma_hat;

    std::vector<GaussianRational> truncated;
    truncated.reserve(n);
    BigRational weight{k}; // k * gamma_hat^j
    for (std::size_t j = 0; j < n; ++j) {
        plan.per_coeff_error.push_back(weight.reciprocal());
        BigInt precision = ceil_int(weight);
        truncated.push_back(f.coeff(j).eval(precision));
        weight = weight * gamma_hat;
    }
    return {RationalPolynomial(std::move(truncated)), std::move(plan)};
}

OstrowskiBound ostrowski_bound(const RationalPolynomial& f, const RationalPolynomial& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("ostrowski_bound: degrees must match");
    const std::size_t n = f.degree();
    const BigRational tol32{BigInt(1), BigInt(1) << 32};

    // gamma = 2 max |coeff_{n-j}|^(1/j): moduli via |c|^(1/j) = norm(c)^(1/2j).
    BigRational max_root(0);
    for (const RationalPolynomial* p : {&f, &g}) {
        for (std::size_t j = 1; j <= n; ++j) {
            BigRational cand = root_upper(p->coeff(n - j).norm(), 2 * j, tol32);
            if (cand > max_root) max_root = cand;
        }
    }
    BigRational gamma = BigRational(2) * max_root;

    BigRational sum(0);
    BigRational weight(1); // gamma^j
    for (std::size_t j = 0; j < n; ++j) {
        GaussianRational diff = g.coeff(j) - f.coeff(j);
        if (!diff.is_zero())
            sum = sum + sqrt_upper(diff.norm(), kEnclosureTol) * weight;
        weight = weight * gamma;
    }
    BigRational epsilon = root_upper(sum, n, kEnclosureTol);

    OstrowskiBound out;
    out.gamma = gamma;
    out.epsilon = epsilon;
    out.pairing_bound = BigRational(BigInt(2 * n)) * epsilon;
    return out;
}

BigRational KantorovichCertificate::error_bound_at(std::uint64_t nu) const {
    if (nu > 128)
        throw std::domain_error("error_bound_at: step index out of range");
    BigRational q = theta_upper; // theta^(2^nu) by repeated squaring
    for (std::uint64_t i = 0; i < nu; ++i) q = q * q;
    BigInt two_nu = BigInt(1) << nu;
    return q / (BigRational(two_nu) * a * L);
}

namespace {
CertifyOutcome rejected(RejectReason why) {
    CertifyOutcome out;
    out.reject = why;
    return out;
}
} // namespace

CertifyOutcome kantorovich_certify(const RationalPolynomial& f,
                                   const GaussianRational& zeta,
                                   const BigRational& disc_radius) {
    if (disc_radius.sign() <= 0)
        throw std::domain_error("kantorovich_certify: disc radius must be positive");

    GaussianPoly df = f.derivative();
    GaussianRational d1 = df.eval(zeta);
    if (d1.is_zero()) return rejected(RejectReason::DerivativeZero);

    GaussianRational inv_d1 = GaussianRational{BigRational(1)} / d1;
    BigRational a = abs_upper(inv_d1, kEnclosureTol);
    GaussianRational w = f.eval(zeta) * inv_d1;
    BigRational b = w.is_zero() ? BigRational(0) : abs_upper(w, kEnclosureTol);

    // Lipschitz bound for f' on the disc: sum j(j-1) |c_j| R^(j-2) bounds
    // |f''| there, with R an upper bound of |z| over the disc.  Flooring L
    // at 1/2 keeps t* well-defined for linear polynomials, where the true
    // second derivative vanishes.
    BigRational R = abs_upper(zeta, kEnclosureTol) + disc_radius;
    GaussianPoly full = f.full();
    BigRational L(0);
    for (std::size_t j = 2; j < full.c.size(); ++j) {
        if (full.c[j].is_zero()) continue;
        BigRational cj = abs_upper(full.c[j], kEnclosureTol);
        L = L + BigRational(BigInt(j * (j - 1))) * cj * pow_rational(R, j - 2);
    }
    if (L < kHalf) L = kHalf;

    BigRational h = a * b * L;
    if (h > kHalf) return rejected(RejectReason::HTooLarge);

    // theta = 1 - sqrt(1-2h), rounded up (sqrt rounded down), so that both
    // t* and every error_bound_at stay sound upper bounds.
    BigRational theta = BigRational(1) - sqrt_lower(BigRational(1) - BigRational(2) * h, kEnclosureTol);
    BigRational t_star = theta / (a * L);
    if (t_star > disc_radius) return rejected(RejectReason::DiscTooSmall);

    KantorovichCertificate cert;
    cert.zeta = zeta;
    cert.disc_radius = disc_radius;
    cert.a = a;
    cert.b = b;
    cert.L = L;
    cert.h = h;
    cert.theta_upper = theta;
    cert.t_star_upper = t_star;

    CertifyOutcome out;
    out.certificate = std::move(cert);
    return out;
}

NewtonRun newton_refine(const RationalPolynomial& f, const KantorovichCertificate& cert,
                        const BigInt& m) {
    if (m < 1) throw std::domain_error("newton_refine: m must be >= 1");

    const BigRational target{BigInt(1), m};
    const BigRational aL = cert.a * cert.L;

    // Smallest nu with theta^(2^nu)/(2^nu a L) <= 1/m, by direct testing.
    std::uint64_t nu = 0;
    {
        BigRational q = cert.theta_upper;
        BigRational bound = cert.t_star_upper;
        while (bound > target) {
            ++nu;
            if (nu > 128)
                throw PrecisionExhaustedError("newton_refine: error bound does not contract");
            q = q * q;
            bound = q / (BigRational(BigInt(1) << nu) * aL);
        }
    }

    NewtonRun run;
    run.certificate = cert;
    run.nu = nu;
    run.iterates.push_back(cert.zeta);

    const BigRational tstar_sq = cert.t_star_upper * cert.t_star_upper;
    GaussianPoly df = f.derivative();
    GaussianRational rho = cert.zeta;
    BigRational q = cert.theta_upper;

    for (std::uint64_t step = 1; step <= nu; ++step) {
        GaussianRational de = df.eval(rho);
        if (de.is_zero())
            throw PrecisionExhaustedError("newton_refine: derivative vanished at an iterate");
        GaussianRational next = rho - f.eval(rho) / de;

        q = q * q; // theta^(2^step)
        BigRational budget = q / (BigRational(BigInt(1) << step) * aL);

        // Keep exact representations small: once an iterate's size outgrows
        // the precision it carries, snap to a dyadic grid much finer than
        // the squared budget, and keep the snap only if it provably stays in
        // the t* ball.
        if (gaussian_bits(next) > 2048 && budget.sign() > 0) {
            unsigned long grid_bits = bits_below(budget * budget * BigRational(BigInt(1), BigInt(256)));
            GaussianRational snapped = dyadic_round(next, grid_bits);
            if ((snapped - cert.zeta).norm() <= tstar_sq) next = snapped;
        }

        if ((next - cert.zeta).norm() > tstar_sq) run.all_in_disc = false;
        run.iterates.push_back(next);
        rho = next;
    }

    // c0 would scale nu with log log m; kept for reporting.  For theta in
    // (0,1), 1/(-log theta) <= (1+theta)/(2(1-theta)).
    if (cert.theta_upper.sign() > 0 && cert.theta_upper < BigRational(1))
        run.c0 = (BigRational(1) + cert.theta_upper) /
                 (BigRational(2) * (BigRational(1) - cert.theta_upper));
    return run;
}

SeedCertificate find_seeds(const RationalPolynomial& f, const FindSeedsOptions& opts) {
    const std::size_t n = f.degree();

    if (!f.is_squarefree())
        throw PrecisionExhaustedError("find_seeds: polynomial is not squarefree");

    if (n == 1) {
        // Single exact root -a0: b = 0, h = 0, t* = 0.
        GaussianRational zeta = -f.coeff(0);
        CertifyOutcome out = kantorovich_certify(f, zeta, BigRational(1));
        SeedCertificate sc;
        sc.seeds.push_back({zeta, BigRational(1), *out.certificate});
        return sc;
    }

    std::vector<std::complex<double>> heur = detail::approximate_roots(f);

    double sep = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = std::abs(heur[i] - heur[j]);
            if (i == 0 && j == 1) sep = d;
            else if (d < sep) sep = d;
        }
    if (!(sep > 0) || !std::isfinite(sep)) sep = 1e-300;
    if (sep > 1.0) sep = 1.0; // keep the first radius modest

    GaussianPoly df = f.derivative();

    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        unsigned long bits = 48 + 16 * static_cast<unsigned long>(attempt);
        BigRational radius = rational_from_double(sep) /
                             BigRational(BigInt(4) << attempt);
        if (radius.sign() <= 0) break;

        std::vector<SeedEntry> entries;
        bool ok = true;
        for (const auto& r : heur) {
            GaussianRational zeta{rational_from_double(r.real()), rational_from_double(r.imag())};
            zeta = dyadic_round(zeta, bits);
            for (int p = 0; p < attempt; ++p)
                zeta = polish_step(f, df, zeta, 2 * bits);
            CertifyOutcome out = kantorovich_certify(f, zeta, radius);
            if (!out.accepted()) {
                ok = false;
                break;
            }
            entries.push_back({zeta, radius, std::move(*out.certificate)});
        }
        if (!ok) continue;

        // Exact pairwise disjointness of the certified balls.
        for (std::size_t i = 0; ok && i < entries.size(); ++i)
            for (std::size_t j = i + 1; ok && j < entries.size(); ++j) {
                BigRational s = entries[i].certificate.t_star_upper +
                                entries[j].certificate.t_star_upper;
                if ((entries[i].zeta - entries[j].zeta).norm() <= s * s) ok = false;
            }
        if (!ok) continue;

        std::sort(entries.begin(), entries.end(), [](const SeedEntry& x, const SeedEntry& y) {
            if (x.zeta.re != y.zeta.re) return x.zeta.re < y.zeta.re;
            return x.zeta.im < y.zeta.im;
        });
        SeedCertificate sc;
        sc.seeds = std::move(entries);
        return sc;
    }
    throw PrecisionExhaustedError("find_seeds: could not certify disjoint seed discs");
}

RootFamily::RootFamily(Polynomial f, RootOptions opts)
    : f_(std::move(f)), opts_(std::move(opts)) {}

void RootFamily::ensure_seeds_locked() {
    if (seeds_) return;
    BigInt floor_m = opts_.seed_floor;
    for (int depth = 0;; ++depth) {
        auto [ft, plan] = truncate_coefficients(f_, 2 * floor_m);
        try {
            SeedCertificate sc = find_seeds(ft, opts_.find_opts);
            sc.precision_floor = floor_m;
            seeds_ = std::move(sc);
            return;
        } catch (const PrecisionExhaustedError&) {
            if (depth >= opts_.refresh_depth) throw;
            floor_m *= 4; // finer truncation may separate near-coincident roots
        }
    }
}

SeedEntry& RootFamily::recertify_locked(std::size_t which, const RationalPolynomial& ft) {
    GaussianPoly df = ft.derivative();
    for (int depth = 0; depth <= opts_.refresh_depth; ++depth) {
        SeedEntry& entry = seeds_->seeds[which];
        CertifyOutcome out = kantorovich_certify(ft, entry.zeta, entry.disc_radius);
        if (out.accepted()) {
            entry.certificate = std::move(*out.certificate);
            return entry;
        }
        if (depth < 2) {
            // The stored center was certified against a coarser truncation;
            // a couple of exact Newton steps usually re-center it.
            unsigned long bits = 128 + 64 * static_cast<unsigned long>(depth);
            entry.zeta = polish_step(ft, df, entry.zeta, bits);
        } else if (depth == 2) {
            entry.disc_radius = entry.disc_radius / BigRational(4);
        } else {
            // Reseed from scratch on the current truncation and re-pair the
            // fresh seeds to the stored centers by proximity, so root
            // identities survive the refresh.
            SeedCertificate fresh = find_seeds(ft, opts_.find_opts);
            if (fresh.seeds.size() != seeds_->seeds.size())
                throw PrecisionExhaustedError("root refresh changed the root count");
            std::vector<bool> used(fresh.seeds.size(), false);
            std::vector<SeedEntry> repaired(seeds_->seeds.size());
            for (std::size_t i = 0; i < seeds_->seeds.size(); ++i) {
                std::size_t best = fresh.seeds.size();
                BigRational best_norm;
                for (std::size_t j = 0; j < fresh.seeds.size(); ++j) {
                    if (used[j]) continue;
                    BigRational d = (seeds_->seeds[i].zeta - fresh.seeds[j].zeta).norm();
                    if (best == fresh.seeds.size() || d < best_norm) {
                        best = j;
                        best_norm = d;
                    }
                }
                used[best] = true;
                repaired[i] = fresh.seeds[best];
            }
            seeds_->seeds = std::move(repaired);
        }
    }
    throw PrecisionExhaustedError("root certification did not stabilize");
}

GaussianRational RootFamily::approx(std::size_t which, const BigInt& m) {
    if (which >= count()) throw std::out_of_range("RootFamily: root index out of range");
    if (m < 1) throw std::domain_error("RootFamily: precision must be >= 1");

    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(which, m);
    auto hit = approx_memo_.find(key);
    if (hit != approx_memo_.end()) return hit->second;

    // Error split: the truncation moves each root by at most 1/(2m), and the
    // refinement stops at 1/(2m), so the total meets the 1/m contract.
    auto [ft, plan] = truncate_coefficients(f_, 2 * m);
    ensure_seeds_locked();
    SeedEntry& entry = recertify_locked(which, ft);
    NewtonRun run = newton_refine(ft, entry.certificate, 2 * m);
    newton_counts_[which] = run.nu;

    GaussianRational value = run.iterates.back();
    approx_memo_.emplace(std::move(key), value);
    return value;
}

PTCNumber RootFamily::root(std::size_t which) {
    if (which >= count()) throw std::out_of_range("RootFamily: root index out of range");
    auto self = shared_from_this();
    RationalApproxOracle o;
    o.F = [self, which](const BigInt& m) { return self->approx(which, m).re; };
    o.G = [self, which](const BigInt& m) { return self->approx(which, m).im; };
    return from_rational_oracle(std::move(o));
}

std::vector<GaussianRational> RootFamily::seed_centers() {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_seeds_locked();
    std::vector<GaussianRational> centers;
    centers.reserve(seeds_->seeds.size());
    for (const auto& e : seeds_->seeds) centers.push_back(e.zeta);
    return centers;
}

std::vector<std::string> RootFamily::certificate_lines() {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_seeds_locked();
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < seeds_->seeds.size(); ++i) {
        const KantorovichCertificate& c = seeds_->seeds[i].certificate;
        std::string line = "seed[" + std::to_string(i) + "]: zeta = " + c.zeta.to_string() +
                           ", a = " + c.a.to_string() + ", b = " + c.b.to_string() +
                           ", L = " + c.L.to_string() + ", h = " + c.h.to_string() +
                           ", t* = " + c.t_star_upper.to_string();
        auto it = newton_counts_.find(i);
        if (it != newton_counts_.end())
            line += ", newton_steps = " + std::to_string(it->second);
        lines.push_back(std::move(line));
    }
    return lines;
}

std::map<std::size_t, std::uint64_t> RootFamily::newton_counts() {
    std::lock_guard<std::mutex> lock(mu_);
    return newton_counts_;
}

PTCNumber root_number(const Polynomial& f, std::size_t which, RootOptions opts) {
    auto family = std::make_shared<RootFamily>(f, std::move(opts));
    return family->root(which);
}

} // namespace ptc

#include "ptc/polynomial.hpp"

#include <stdexcept>

namespace ptc {

void GaussianPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

GaussianRational GaussianPoly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

GaussianPoly GaussianPoly::derivative() const {
    if (c.size() <= 1) return GaussianPoly{};
    std::vector<GaussianRational> d;
    d.reserve(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j)
        d.push_back(GaussianRational(BigRational(BigInt(j))) * c[j]);
    return GaussianPoly(std::move(d));
}

std::pair<GaussianPoly, GaussianPoly> poly_divmod(const GaussianPoly& a, const GaussianPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    GaussianPoly rem = a;
    if (a.degree() < b.degree()) return {GaussianPoly{}, rem};
    std::vector<GaussianRational> quot(a.degree() - b.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long shift = rem.degree() - b.degree();
        GaussianRational factor = rem.leading() / b.leading();
        quot[shift] = factor;
        for (long j = 0; j <= b.degree(); ++j)
            rem.c[j + shift] = rem.c[j + shift] - factor * b.c[j];
        rem.c.pop_back(); // leading term cancels exactly
        rem.trim();
    }
    return {GaussianPoly(std::move(quot)), rem};
}

GaussianPoly poly_gcd(GaussianPoly a, GaussianPoly b) {
    while (!b.is_zero()) {
        GaussianPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        GaussianRational lead = a.leading();
        for (auto& cj : a.c) cj = cj / lead;
    }
    return a;
}

RationalPolynomial::RationalPolynomial(std::vector<GaussianRational> lower)
    : lower_(std::move(lower)) {
    if (lower_.empty())
        throw std::invalid_argument("RationalPolynomial: degree must be >= 1");
}

GaussianRational RationalPolynomial::eval(const GaussianRational& z) const {
    GaussianRational acc{BigRational(1)};
    for (auto it = lower_.rbegin(); it != lower_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

GaussianPoly RationalPolynomial::full() const {
    std::vector<GaussianRational> c = lower_;
    c.push_back(GaussianRational(BigRational(1)));
    return GaussianPoly(std::move(c));
}

bool RationalPolynomial::is_squarefree() const {
    return poly_gcd(full(), derivative()).degree() == 0;
}

Polynomial::Polynomial(std::vector<PTCNumber> lower) : lower_(std::move(lower)) {
    if (lower_.empty())
        throw std::invalid_argument("Polynomial: degree must be >= 1");
}

Polynomial Polynomial::from_rational(const RationalPolynomial& f) {
    std::vector<PTCNumber> lower;
    lower.reserve(f.degree());
    for (const auto& a : f.lower())
        lower.push_back(constant(a));
    return Polynomial(std::move(lower));
}

} // namespace ptc

#include "ptc/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace ptc {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    BigRational n = b.norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
}

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.to_string();
    if (im.sign() < 0)
        s += " - " + (-im).to_string() + "i";
    else
        s += " + " + im.to_string() + "i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

BigRational abs_upper(const GaussianRational& z, const BigRational& tol) {
    if (z.im.is_zero()) return z.re.abs();
    if (z.re.is_zero()) return z.im.abs();
    return sqrt_upper(z.norm(), tol);
}

} // namespace ptc

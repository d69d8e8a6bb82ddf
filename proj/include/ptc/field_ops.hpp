#pragma once

#include "ptc/oracle.hpp"

namespace ptc {

inline const BigInt default_invert_cap = BigInt(1) << 64;

/// z = x + y.  Component sums run through S(n) = (f_x(2n) + f_y(2n))/(2n),
/// the rational-to-integer converter, and the real-pair combiner.
PTCNumber add(const PTCNumber& x, const PTCNumber& y);

/// z = -x, exact: the numerators negate.
PTCNumber negate(const PTCNumber& x);

/// z = x * y via four real component products (a+bi)(c+di) =
/// (ac - bd) + (ad + bc)i.  Each real product uses P(n) =
/// f(cn) g(cn) / (c n)^2 with its own scale c = |f(1)| + |g(1)| + 4,
/// computed on first evaluation and cached.
PTCNumber multiply(const PTCNumber& x, const PTCNumber& y);

/// z = 1/x = conj(x)/|x|^2.  The real inversion of |x|^2 searches
/// k = 1, 2, 4, ... for a witness |f(k)| > 1, then answers through
/// I(n) = p(n)/f(p(n)) with p(X) = 2k^2 X + k.  If no witness appears with
/// k <= k_search_cap, evaluation throws PossiblyZeroError; the search
/// terminates for any input with |value| >= 2/k_search_cap.
PTCNumber invert(const PTCNumber& x, const BigInt& k_search_cap = default_invert_cap);

/// z = x + y i from two real numbers (both must carry the real flag; throws
/// std::invalid_argument otherwise).  Numerators are (f(3n) + kappa)/3 with
/// |kappa| <= 1 the smallest shift making the sum divisible by 3; the error
/// is at most sqrt(8)/(3n) < 1/n.
PTCNumber combine_complex(const PTCNumber& x, const PTCNumber& y);

/// Real part as a real number: the f-oracle alone is a valid 1/n scheme for
/// Re z, since a component error never exceeds the modulus error.
PTCNumber re_part(const PTCNumber& z);

/// Imaginary part as a real number (the g-oracle).
PTCNumber im_part(const PTCNumber& z);

/// z = s * x for an integer scalar, exactly: numerators at n are the
/// operand's numerators at |s| n (plus a sign flip for negative s), which
/// keeps the contract without the general product machinery.
PTCNumber scalar_multiply(const BigInt& s, const PTCNumber& x);

namespace detail {
// The real-operand constructions (zero imaginary oracle in, zero imaginary
// oracle out).  The complex operations above are assembled from these; the
// constants module uses them directly, since its values are real end to end.
PTCNumber real_add(const PTCNumber& x, const PTCNumber& y);
PTCNumber real_sub(const PTCNumber& x, const PTCNumber& y);
PTCNumber real_multiply(const PTCNumber& x, const PTCNumber& y);
PTCNumber real_invert(const PTCNumber& x, const BigInt& k_search_cap);
}

inline PTCNumber operator+(const PTCNumber& x, const PTCNumber& y) { return add(x, y); }
inline PTCNumber operator-(const PTCNumber& x, const PTCNumber& y) { return add(x, negate(y)); }
inline PTCNumber operator-(const PTCNumber& x) { return negate(x); }
inline PTCNumber operator*(const PTCNumber& x, const PTCNumber& y) { return multiply(x, y); }
inline PTCNumber operator/(const PTCNumber& x, const PTCNumber& y) {
    return multiply(x, invert(y));
}

} // namespace ptc

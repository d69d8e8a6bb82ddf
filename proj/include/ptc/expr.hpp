#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/closure.hpp"
#include "ptc/errors.hpp"
#include "ptc/field_ops.hpp"
#include "ptc/oracle.hpp"

namespace ptc {

enum class ExprKind {
    Rational,  // non-negative rational literal (parser wraps negatives in Neg)
    Imaginary, // the literal i
    Pi,
    ArctanInv, // arctan(1/k), k >= 2 in member k
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    IntPow, // a ^ k, k a non-negative integer literal
    Re,
    Im,
    Root, // the which-th root of a monic polynomial with expression coefficients
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    BigRational lit;        // Rational
    std::uint64_t k = 0;    // ArctanInv: k; IntPow: exponent
    ExprPtr a, b;           // operands (a only for unary)

    // Root payload: poly[j] is the coefficient expression of X^j, nullopt for
    // a structural zero; the leading entry is always present.  seed, when
    // given, selects the root whose certified center is nearest to it.
    std::vector<std::optional<ExprPtr>> poly;
    std::optional<GaussianRational> seed;
};

// Canonical constructors (the same shapes the parser builds, so printed
// trees re-parse to structurally equal ones).
ExprPtr make_rational(const BigRational& r); // negative r becomes Neg(|r|)
ExprPtr make_imaginary();
ExprPtr make_pi();
ExprPtr make_atan_inv(std::uint64_t k);
ExprPtr make_neg(ExprPtr e);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr a, std::uint64_t k);
ExprPtr make_re(ExprPtr e);
ExprPtr make_im(ExprPtr e);
ExprPtr make_root(std::vector<std::optional<ExprPtr>> coeffs,
                  std::optional<GaussianRational> seed = std::nullopt);

/// Parse the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := rational | 'i' | 'pi' | 'atan_inv(' nat ')' | 're(' expr ')'
///           | 'im(' expr ')' | 'root(' poly (',' seed)? ')' | '(' expr ')'
/// where rational is a decimal ("1.25") or a fused fraction ("5/4", no
/// spaces), and poly is a polynomial in x with expression coefficients.
/// Throws ParseError with the byte offset of the problem.
ExprPtr parse_expression(std::string_view input);

/// Render an expression; parse_expression(print_expression(e)) is
/// structurally equal to e for trees built by the canonical constructors.
std::string print_expression(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct EvalOptions {
    BigInt zero_cap = default_invert_cap; // witness search cap for division
    std::size_t seed_index = 0;           // root choice when no seed hint is given
};

/// The lazy number an expression denotes, plus the root families it created
/// (in syntactic order) for certificate and iteration-count reporting.
struct LoweredExpr {
    PTCNumber value;
    std::vector<std::shared_ptr<RootFamily>> families;
};

/// Lower to PTCNumber constructors: Sub = Add of the negation, Div =
/// Mul of the inversion (with opts.zero_cap), IntPow by repeated Mul,
/// Root through a shared RootFamily.  Lowering is lazy; numeric work
/// happens when the returned value is evaluated.
LoweredExpr lower_expression(const ExprPtr& e, const EvalOptions& opts = {});

} // namespace ptc

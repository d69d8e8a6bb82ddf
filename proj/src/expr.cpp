#include "ptc/expr.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "ptc/constants.hpp"

namespace ptc {

namespace {

ExprPtr node(ExprKind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    return e;
}

ExprPtr unary(ExprKind kind, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->a = std::move(a);
    return e;
}

ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

bool is_literal(const ExprPtr& e, int value) {
    return e->kind == ExprKind::Rational && e->lit == BigRational(value);
}

// Zero up to unary minus, so "-0*x^2" does not fake a degree.
bool is_literal_zero(const ExprPtr& e) {
    if (e->kind == ExprKind::Neg) return is_literal_zero(e->a);
    return e->kind == ExprKind::Rational && e->lit.is_zero();
}

} // namespace

ExprPtr make_rational(const BigRational& r) {
    if (r.sign() < 0) return make_neg(make_rational(-r));
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Rational;
    e->lit = r;
    return e;
}

ExprPtr make_imaginary() { return node(ExprKind::Imaginary); }
ExprPtr make_pi() { return node(ExprKind::Pi); }

ExprPtr make_atan_inv(std::uint64_t k) {
    if (k < 2) throw std::domain_error("make_atan_inv: k must be >= 2");
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::ArctanInv;
    e->k = k;
    return e;
}

ExprPtr make_neg(ExprPtr e) { return unary(ExprKind::Neg, std::move(e)); }
ExprPtr make_add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
ExprPtr make_div(ExprPtr a, ExprPtr b) { return binary(ExprKind::Div, std::move(a), std::move(b)); }

ExprPtr make_pow(ExprPtr a, std::uint64_t k) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::IntPow;
    e->a = std::move(a);
    e->k = k;
    return e;
}

ExprPtr make_re(ExprPtr e) { return unary(ExprKind::Re, std::move(e)); }
ExprPtr make_im(ExprPtr e) { return unary(ExprKind::Im, std::move(e)); }

ExprPtr make_root(std::vector<std::optional<ExprPtr>> coeffs,
                  std::optional<GaussianRational> seed) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("make_root: polynomial degree must be >= 1");
    if (!coeffs.back())
        throw std::invalid_argument("make_root: leading coefficient must be present");
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Root;
    e->poly = std::move(coeffs);
    e->seed = std::move(seed);
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case ExprKind::Rational:
        return a->lit == b->lit;
    case ExprKind::Imaginary:
    case ExprKind::Pi:
        return true;
    case ExprKind::ArctanInv:
        return a->k == b->k;
    case ExprKind::Neg:
    case ExprKind::Re:
    case ExprKind::Im:
        return expr_equal(a->a, b->a);
    case ExprKind::IntPow:
        return a->k == b->k && expr_equal(a->a, b->a);
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
        return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    case ExprKind::Root: {
        if (a->poly.size() != b->poly.size()) return false;
        for (std::size_t j = 0; j < a->poly.size(); ++j) {
            if (a->poly[j].has_value() != b->poly[j].has_value()) return false;
            if (a->poly[j] && !expr_equal(*a->poly[j], *b->poly[j])) return false;
        }
        if (a->seed.has_value() != b->seed.has_value()) return false;
        return !a->seed || *a->seed == *b->seed;
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Int, Rational, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t offset = 0;
    std::string text;
    BigInt ival;
    BigRational rval;
};

std::vector<Token> tokenize(std::string_view in) {
    std::vector<Token> out;
    std::size_t p = 0;
    auto digits_at = [&](std::size_t q) {
        std::size_t start = q;
        while (q < in.size() && std::isdigit(static_cast<unsigned char>(in[q]))) ++q;
        return std::string(in.substr(start, q - start));
    };
    while (p < in.size()) {
        char c = in[p];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++p;
            continue;
        }
        Token t;
        t.offset = p;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string ip = digits_at(p);
            std::size_t q = p + ip.size();
            if (q < in.size() && in[q] == '.') {
                std::string fp = digits_at(q + 1);
                if (fp.empty()) throw ParseError(q, "digits expected after decimal point");
                t.kind = Tok::Rational;
                t.rval = rational_from_decimal(ip + "." + fp);
                p = q + 1 + fp.size();
            } else if (q + 1 < in.size() && in[q] == '/' &&
                       std::isdigit(static_cast<unsigned char>(in[q + 1]))) {
                // A fraction written without spaces is a single literal.
                std::string dp = digits_at(q + 1);
                BigInt den(dp);
                if (den == 0) throw ParseError(q + 1, "zero denominator in rational literal");
                t.kind = Tok::Rational;
                t.rval = BigRational(BigInt(ip), den);
                p = q + 1 + dp.size();
            } else {
                t.kind = Tok::Int;
                t.ival = BigInt(ip);
                p = q;
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t q = p;
            while (q < in.size() &&
                   (std::isalnum(static_cast<unsigned char>(in[q])) || in[q] == '_'))
                ++q;
            t.kind = Tok::Ident;
            t.text = std::string(in.substr(p, q - p));
            p = q;
        } else {
            switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '/': t.kind = Tok::Slash; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case ',': t.kind = Tok::Comma; break;
            default:
                throw ParseError(p, std::string("unexpected character '") + c + "'");
            }
            ++p;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.offset = in.size();
    out.push_back(std::move(end));
    return out;
}

// ---------------------------------------------------------------------------
// Constant folding (seed hints and monic-leading detection)

std::optional<GaussianRational> try_fold(const ExprPtr& e) {
    switch (e->kind) {
    case ExprKind::Rational:
        return GaussianRational{e->lit};
    case ExprKind::Imaginary:
        return GaussianRational{BigRational(0), BigRational(1)};
    case ExprKind::Neg: {
        auto v = try_fold(e->a);
        return v ? std::optional<GaussianRational>(-*v) : std::nullopt;
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
        auto x = try_fold(e->a);
        auto y = try_fold(e->b);
        if (!x || !y) return std::nullopt;
        switch (e->kind) {
        case ExprKind::Add: return *x + *y;
        case ExprKind::Sub: return *x - *y;
        case ExprKind::Mul: return *x * *y;
        default:
            if (y->is_zero()) return std::nullopt;
            return *x / *y;
        }
    }
    case ExprKind::IntPow: {
        if (e->k > 64) return std::nullopt;
        auto v = try_fold(e->a);
        if (!v) return std::nullopt;
        GaussianRational acc{BigRational(1)};
        for (std::uint64_t i = 0; i < e->k; ++i) acc = acc * *v;
        return acc;
    }
    case ExprKind::Re: {
        auto v = try_fold(e->a);
        return v ? std::optional<GaussianRational>(GaussianRational{v->re}) : std::nullopt;
    }
    case ExprKind::Im: {
        auto v = try_fold(e->a);
        return v ? std::optional<GaussianRational>(GaussianRational{v->im}) : std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Parser.  Scalar context and, inside root(...), a polynomial context whose
// values are coefficient lists indexed by the power of x (nullopt marks a
// structurally absent coefficient; the list is never empty).

using Poly = std::vector<std::optional<ExprPtr>>;

class Parser {
public:
    explicit Parser(std::string_view in) : t_(tokenize(in)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End)
            throw ParseError(peek().offset, "unexpected trailing input");
        return e;
    }

private:
    static constexpr std::size_t kMaxDegree = 32;
    static constexpr std::uint64_t kMaxExponent = 4096;

    std::vector<Token> t_;
    std::size_t p_ = 0;

    const Token& peek() const { return t_[p_]; }
    const Token& next() { return t_[p_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++p_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(peek().offset, std::string("expected ") + what);
    }

    std::uint64_t expect_nat(const char* what) {
        if (peek().kind != Tok::Int)
            throw ParseError(peek().offset, std::string("expected ") + what);
        const Token& t = next();
        if (!t.ival.fits_ulong_p() || t.ival.get_ui() > kMaxExponent)
            throw ParseError(t.offset, std::string(what) + " too large");
        return t.ival.get_ui();
    }

    // --- scalar grammar ---

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool plus = next().kind == Tok::Plus;
            ExprPtr rhs = term();
            e = plus ? make_add(e, rhs) : make_sub(e, rhs);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            bool star = next().kind == Tok::Star;
            ExprPtr rhs = factor();
            e = star ? make_mul(e, rhs) : make_div(e, rhs);
        }
        return e;
    }

    ExprPtr factor() {
        if (accept(Tok::Minus)) return make_neg(factor());
        ExprPtr e = atom();
        if (accept(Tok::Caret)) return make_pow(e, expect_nat("exponent"));
        return e;
    }

    ExprPtr atom() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Int:
            return make_rational(BigRational(t.ival));
        case Tok::Rational:
            return make_rational(t.rval);
        case Tok::LParen: {
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Ident:
            return named_atom(t);
        default:
            throw ParseError(t.offset, "expected a value");
        }
    }

    ExprPtr named_atom(const Token& t) {
        if (t.text == "i") return make_imaginary();
        if (t.text == "pi") return make_pi();
        if (t.text == "atan_inv") {
            expect(Tok::LParen, "'('");
            if (peek().kind != Tok::Int)
                throw ParseError(peek().offset, "atan_inv needs an integer argument k >= 2");
            const Token& arg = next();
            if (arg.ival < 2 || !arg.ival.fits_ulong_p())
                throw ParseError(arg.offset, "atan_inv argument must satisfy 2 <= k");
            expect(Tok::RParen, "')'");
            return make_atan_inv(arg.ival.get_ui());
        }
        if (t.text == "re" || t.text == "im") {
            expect(Tok::LParen, "'('");
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return t.text == "re" ? make_re(e) : make_im(e);
        }
        if (t.text == "root") return root_atom(t.offset);
        if (t.text == "x")
            throw ParseError(t.offset, "'x' is only valid inside root(...)");
        throw ParseError(t.offset, "unknown identifier '" + t.text + "'");
    }

    ExprPtr root_atom(std::size_t at) {
        expect(Tok::LParen, "'('");
        Poly p = pexpr();
        std::optional<GaussianRational> seed;
        if (accept(Tok::Comma)) {
            std::size_t seed_at = peek().offset;
            ExprPtr s = expr();
            auto folded = try_fold(s);
            if (!folded)
                throw ParseError(seed_at, "root seed must be a constant expression");
            seed = *folded;
        }
        expect(Tok::RParen, "')'");

        while (p.size() > 1 && (!p.back() || is_literal_zero(*p.back()))) p.pop_back();
        if (p.size() < 2 || !p.back())
            throw ParseError(at, "root(...) needs a polynomial of degree at least 1 in x");
        return make_root(std::move(p), std::move(seed));
    }

    // --- polynomial grammar (inside root) ---

    Poly pexpr() {
        Poly p = pterm();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool plus = next().kind == Tok::Plus;
            Poly q = pterm();
            p = padd(std::move(p), std::move(q), plus);
        }
        return p;
    }

    Poly pterm() {
        Poly p = pfactor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = next();
            Poly q = pfactor();
            if (op.kind == Tok::Star) {
                p = pmul(p, q, op.offset);
            } else {
                if (q.size() != 1 || !q[0])
                    throw ParseError(op.offset, "cannot divide by a polynomial in x");
                for (auto& c : p)
                    if (c) c = make_div(*c, *q[0]);
            }
        }
        return p;
    }

    Poly pfactor() {
        if (accept(Tok::Minus)) {
            Poly p = pfactor();
            for (auto& c : p)
                if (c) c = make_neg(*c);
            return p;
        }
        Poly p = patom();
        if (peek().kind == Tok::Caret) {
            const Token& op = next();
            std::uint64_t k = expect_nat("exponent");
            p = ppow(std::move(p), k, op.offset);
        }
        return p;
    }

    Poly patom() {
        if (peek().kind == Tok::Ident && peek().text == "x") {
            ++p_;
            Poly p(2);
            p[1] = make_rational(BigRational(1));
            return p;
        }
        if (peek().kind == Tok::LParen) {
            ++p_;
            Poly p = pexpr();
            expect(Tok::RParen, "')'");
            return p;
        }
        // Any scalar atom is a degree-0 polynomial.
        return Poly{atom()};
    }

    static Poly padd(Poly p, Poly q, bool plus) {
        if (q.size() > p.size()) p.resize(q.size());
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (!q[j]) continue;
            if (!p[j])
                p[j] = plus ? *q[j] : make_neg(*q[j]);
            else
                p[j] = plus ? make_add(*p[j], *q[j]) : make_sub(*p[j], *q[j]);
        }
        return p;
    }

    // Convolution; multiplying by a literal 1 keeps the other factor
    // untouched, so bare powers of x round-trip through the printer.
    Poly pmul(const Poly& p, const Poly& q, std::size_t at) const {
        if (p.size() + q.size() - 1 > kMaxDegree + 1)
            throw ParseError(at, "polynomial degree above 32 is not supported");
        Poly r(p.size() + q.size() - 1);
        for (std::size_t ij = 0; ij < p.size(); ++ij) {
            if (!p[ij]) continue;
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (!q[j]) continue;
                ExprPtr piece;
                if (is_literal(*p[ij], 1))
                    piece = *q[j];
                else if (is_literal(*q[j], 1))
                    piece = *p[ij];
                else
                    piece = make_mul(*p[ij], *q[j]);
                auto& slot = r[ij + j];
                slot = slot ? make_add(*slot, piece) : piece;
            }
        }
        return r;
    }

    Poly ppow(Poly p, std::uint64_t k, std::size_t at) const {
        Poly r{make_rational(BigRational(1))};
        for (std::uint64_t i = 0; i < k; ++i) r = pmul(r, p, at);
        return r;
    }
};

} // namespace

ExprPtr parse_expression(std::string_view input) { return Parser(input).run(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// Levels: 1 additive, 2 multiplicative, 3 unary minus, 4 power, 5 atom.
int level_of(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::IntPow: return 4;
    default: return 5;
    }
}

void print_node(std::string& out, const ExprPtr& e, int min_level);

std::string print_gaussian(const GaussianRational& z) {
    if (z.im.is_zero()) return z.re.to_string();
    BigRational mag = z.im.abs();
    std::string imag = (mag == BigRational(1)) ? "i" : mag.to_string() + "*i";
    if (z.re.is_zero()) return (z.im.sign() < 0 ? "-" : "") + imag;
    return z.re.to_string() + (z.im.sign() < 0 ? " - " : " + ") + imag;
}

void print_poly(std::string& out, const std::vector<std::optional<ExprPtr>>& poly) {
    bool first = true;
    for (std::size_t idx = poly.size(); idx-- > 0;) {
        if (!poly[idx]) continue;
        ExprPtr c = *poly[idx];
        bool minus = c->kind == ExprKind::Neg;
        ExprPtr body = minus ? c->a : c;

        std::string piece;
        if (idx == 0) {
            print_node(piece, body, 1);
        } else {
            std::string xpart = idx == 1 ? "x" : "x^" + std::to_string(idx);
            if (is_literal(body, 1)) {
                piece = xpart;
            } else {
                print_node(piece, body, 2);
                piece += "*" + xpart;
            }
        }
        if (first)
            out += minus ? "-" + piece : piece;
        else
            out += (minus ? " - " : " + ") + piece;
        first = false;
    }
}

void print_node(std::string& out, const ExprPtr& e, int min_level) {
    if (level_of(*e) < min_level) {
        out += "(";
        print_node(out, e, 1);
        out += ")";
        return;
    }
    switch (e->kind) {
    case ExprKind::Rational:
        out += e->lit.to_string();
        break;
    case ExprKind::Imaginary:
        out += "i";
        break;
    case ExprKind::Pi:
        out += "pi";
        break;
    case ExprKind::ArctanInv:
        out += "atan_inv(" + std::to_string(e->k) + ")";
        break;
    case ExprKind::Neg:
        out += "-";
        print_node(out, e->a, 3);
        break;
    case ExprKind::Add:
    case ExprKind::Sub:
        print_node(out, e->a, 1);
        out += e->kind == ExprKind::Add ? " + " : " - ";
        print_node(out, e->b, 2);
        break;
    case ExprKind::Mul:
        print_node(out, e->a, 2);
        out += "*";
        print_node(out, e->b, 3);
        break;
    case ExprKind::Div:
        // Spaces keep a digit-slash-digit sequence from re-lexing as one
        // rational literal.
        print_node(out, e->a, 2);
        out += " / ";
        print_node(out, e->b, 3);
        break;
    case ExprKind::IntPow:
        print_node(out, e->a, 5);
        out += "^" + std::to_string(e->k);
        break;
    case ExprKind::Re:
    case ExprKind::Im:
        out += e->kind == ExprKind::Re ? "re(" : "im(";
        print_node(out, e->a, 1);
        out += ")";
        break;
    case ExprKind::Root:
        out += "root(";
        print_poly(out, e->poly);
        if (e->seed) out += ", " + print_gaussian(*e->seed);
        out += ")";
        break;
    }
}

} // namespace

std::string print_expression(const ExprPtr& e) {
    std::string out;
    print_node(out, e, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Lowering

namespace {

class Lowerer {
public:
    explicit Lowerer(const EvalOptions& opts) : opts_(opts) {}

    PTCNumber lower(const ExprPtr& e) {
        auto hit = memo_.find(e.get());
        if (hit != memo_.end()) return hit->second;
        PTCNumber v = compute(e);
        memo_.emplace(e.get(), v);
        return v;
    }

    std::vector<std::shared_ptr<RootFamily>> take_families() { return std::move(families_); }

private:
    PTCNumber compute(const ExprPtr& e) {
        switch (e->kind) {
        case ExprKind::Rational:
            return constant(e->lit);
        case ExprKind::Imaginary:
            return constant(GaussianRational{BigRational(0), BigRational(1)});
        case ExprKind::Pi:
            if (!pi_) pi_ = pi();
            return *pi_;
        case ExprKind::ArctanInv: {
            auto hit = atan_.find(e->k);
            if (hit != atan_.end()) return hit->second;
            PTCNumber v = arctan_inv(e->k);
            atan_.emplace(e->k, v);
            return v;
        }
        case ExprKind::Neg:
            return negate(lower(e->a));
        case ExprKind::Add:
            return add(lower(e->a), lower(e->b));
        case ExprKind::Sub:
            return add(lower(e->a), negate(lower(e->b)));
        case ExprKind::Mul:
            return multiply(lower(e->a), lower(e->b));
        case ExprKind::Div:
            return multiply(lower(e->a), invert(lower(e->b), opts_.zero_cap));
        case ExprKind::IntPow: {
            if (e->k == 0) return constant(BigRational(1));
            PTCNumber base = lower(e->a);
            PTCNumber acc = base;
            for (std::uint64_t i = 1; i < e->k; ++i) acc = multiply(acc, base);
            return acc;
        }
        case ExprKind::Re:
            return re_part(lower(e->a));
        case ExprKind::Im:
            return im_part(lower(e->a));
        case ExprKind::Root:
            return lower_root(e);
        }
        throw std::logic_error("unhandled expression kind");
    }

    PTCNumber lower_root(const ExprPtr& e) {
        const std::size_t deg = e->poly.size() - 1;

        // Monic normalization: a literal leading 1 is free; otherwise every
        // lower coefficient is divided by the leading one lazily.
        std::optional<PTCNumber> scale;
        const ExprPtr& lead = *e->poly[deg];
        auto folded = try_fold(lead);
        if (folded && !folded->is_zero()) {
            if (!(*folded == GaussianRational{BigRational(1)}))
                scale = constant(GaussianRational{BigRational(1)} / *folded);
        } else {
            scale = invert(lower(lead), opts_.zero_cap);
        }

        std::vector<PTCNumber> lower_coeffs;
        lower_coeffs.reserve(deg);
        for (std::size_t j = 0; j < deg; ++j) {
            PTCNumber c = e->poly[j] ? lower(*e->poly[j]) : constant(BigRational(0));
            if (scale) c = multiply(c, *scale);
            lower_coeffs.push_back(std::move(c));
        }

        auto family = std::make_shared<RootFamily>(Polynomial(std::move(lower_coeffs)));
        families_.push_back(family);

        std::size_t which = opts_.seed_index;
        if (e->seed) {
            std::vector<GaussianRational> centers = family->seed_centers();
            which = 0;
            BigRational best = (centers[0] - *e->seed).norm();
            for (std::size_t j = 1; j < centers.size(); ++j) {
                BigRational d = (centers[j] - *e->seed).norm();
                if (d < best) {
                    best = d;
                    which = j;
                }
            }
        } else if (which >= family->count()) {
            throw std::out_of_range("seed index " + std::to_string(which) +
                                    " out of range for a degree-" + std::to_string(deg) +
                                    " polynomial");
        }
        return family->root(which);
    }

    const EvalOptions& opts_;
    std::map<const Expr*, PTCNumber> memo_;
    std::optional<PTCNumber> pi_;
    std::map<std::uint64_t, PTCNumber> atan_;
    std::vector<std::shared_ptr<RootFamily>> families_;
};

} // namespace

LoweredExpr lower_expression(const ExprPtr& e, const EvalOptions& opts) {
    Lowerer lw(opts);
    LoweredExpr out{lw.lower(e), {}};
    out.families = lw.take_families();
    return out;
}

} // namespace ptc

// ptcalc: evaluate an expression over exact lazy complex numbers to a
// guaranteed precision.
//
//   ptcalc "pi" --digits 30
//   ptcalc "root(x^2 - 2, 1.4)" --prec 1000000
//   ptcalc "(1 + 2*i)/3" --rational --prec 100
//
// Exit codes: 0 success, 2 expression parse error, 3 a divisor could not be
// witnessed nonzero, 4 root certification ran out of precision.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptc/expr.hpp"
#include "ptc/op_counter.hpp"

namespace {

ptc::BigInt parse_natural(const std::string& text, const std::string& flag) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw CLI::ValidationError(flag, "expects a non-negative integer");
    return ptc::BigInt(text);
}

// Smallest D with 10^D >= N: printing D decimal places then loses at most
// 10^-D <= 1/N, matching the --prec contract.
unsigned digits_for_prec(const ptc::BigInt& n) {
    ptc::BigInt p(1);
    unsigned d = 0;
    while (p < n) {
        p *= 10;
        ++d;
        if (d > 1000000) throw CLI::ValidationError("--prec", "value too large to print");
    }
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact complex arithmetic with certified error bounds"};

    std::string expression;
    app.add_option("expression", expression, "Expression to evaluate")->required();

    std::string prec_text;
    std::string digits_text;
    auto* prec_opt =
        app.add_option("--prec", prec_text, "Guarantee |output - value| <= 1/N");
    auto* digits_opt =
        app.add_option("--digits", digits_text, "Decimal places to print (default 12)");
    prec_opt->excludes(digits_opt);
    digits_opt->excludes(prec_opt);

    bool want_rational = false;
    app.add_flag("--rational", want_rational, "Print the exact evaluated fraction");
    bool want_stats = false;
    app.add_flag("--stats", want_stats, "Operation counts and root certificates on stderr");

    std::string zero_cap_text;
    app.add_option("--zero-cap", zero_cap_text,
                   "Witness search cap for division (default 2^64)");
    std::size_t seed_index = 0;
    app.add_option("--seed-index", seed_index,
                   "Which root to take when root(...) has no seed hint");

    CLI11_PARSE(app, argc, argv);

    try {
        unsigned digits = 12;
        if (!digits_text.empty()) {
            ptc::BigInt d = parse_natural(digits_text, "--digits");
            if (d > 1000000) throw CLI::ValidationError("--digits", "value too large");
            digits = static_cast<unsigned>(d.get_ui());
        }
        ptc::BigInt prec; // denominator N of the guarantee
        if (!prec_text.empty()) {
            prec = parse_natural(prec_text, "--prec");
            if (prec < 1) throw CLI::ValidationError("--prec", "must be >= 1");
            digits = digits_for_prec(prec);
        } else {
            ptc::BigInt p10;
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
            prec = 2 * p10;
        }

        ptc::EvalOptions opts;
        if (!zero_cap_text.empty()) {
            opts.zero_cap = parse_natural(zero_cap_text, "--zero-cap");
            if (opts.zero_cap < 1) throw CLI::ValidationError("--zero-cap", "must be >= 1");
        }
        opts.seed_index = seed_index;

        ptc::ExprPtr ast = ptc::parse_expression(expression);
        ptc::LoweredExpr lowered = ptc::lower_expression(ast, opts);

        ptc::OpCounter counter;
        std::string line;
        {
            ptc::CountScope scope(counter);
            if (want_rational)
                line = lowered.value.eval(prec).to_string();
            else
                line = ptc::to_decimal(lowered.value, digits);
        }
        std::cout << line << "\n";

        if (want_stats) {
            std::cerr << "rational ops: " << counter.rational_ops << "\n"
                      << "bit-mass proxy: " << counter.bit_ops_proxy << "\n";
            for (std::size_t i = 0; i < lowered.families.size(); ++i) {
                std::cerr << "root family " << i << ":\n";
                for (const std::string& cert : lowered.families[i]->certificate_lines())
                    std::cerr << "  " << cert << "\n";
            }
        }
        return 0;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const ptc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ptc::PossiblyZeroError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ptc::PrecisionExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

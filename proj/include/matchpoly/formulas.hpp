#ifndef MATCHPOLY_FORMULAS_HPP
#define MATCHPOLY_FORMULAS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchpoly/census.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/matching.hpp"

namespace matchpoly {

/// Exact fraction on 64-bit, normalized, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long v) : num(v) {}  // NOLINT: implicit by design
    Rational(long long n, long long d);

    bool is_integer() const { return den == 1; }
    long long as_integer() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const;
};

/// Structure counts of an r-regular graph feeding the closed forms:
/// c3, c4, c5 are circuit counts, q the diamond (K4-e) count.
struct RegularParams {
    long long n = 0;
    long long r = 0;
    long long c3 = 0;
    long long c4 = 0;
    long long c5 = 0;
    long long q = 0;
};

using FormulaId = Mki;

/// One published closed form: base(n,r) + c3coef*c3 + c4coef*c4 + c5coef*c5 +
/// qcoef*q. Null coefficient pointers mean zero.
struct ClosedFormEntry {
    FormulaId id;
    Rational (*base)(long long n, long long r);
    Rational (*c3)(long long n, long long r);
    Rational (*c4)(long long n, long long r);
    Rational (*c5)(long long n, long long r);
    Rational (*qcoef)(long long n, long long r);
};

// The 42 closed forms: the trivial g_{0,0,1}=1, the 17 with m <= 4, and the
// 24 solved entries with m = 5.
std::span<const ClosedFormEntry> closed_form_table();

std::vector<FormulaId> formula_ids();

Rational evaluate_closed_form(const ClosedFormEntry& e, const RegularParams& p);

Rational closed_form(const FormulaId& id, const RegularParams& p);  // throws on unknown id
long long closed_form_integer(const FormulaId& id, const RegularParams& p);

/// One equation of the 24-line system: lhs_coef(n,r) * g[lhs] = sum coef*g[id].
struct SystemEquation {
    Rational (*lhs_coef)(long long n, long long r);
    Mki lhs;
    struct Term {
        int coef;
        Mki id;
    };
    std::vector<Term> rhs;
};

const std::vector<SystemEquation>& linear_system();

struct FormulaResidual {
    FormulaId id;
    Rational closed;
    long long census = 0;
    Rational residual;
};

struct FormulaReport {
    std::vector<FormulaResidual> rows;
    bool all_zero = true;
};

struct NotRegularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structure counts extracted from a brute-force census; throws NotRegularError.
RegularParams extract_params(const Graph& g);
RegularParams extract_params(const Graph& g, const CensusTable& table);

FormulaReport verify_formulas(const Graph& g);
FormulaReport verify_formulas(const Graph& g, std::span<const ClosedFormEntry> table);

struct EquationResidual {
    int index = 0;  // 1-based position in the printed system
    Rational lhs;
    Rational rhs;
    Rational residual;
    std::string text;
};

struct SystemReport {
    std::vector<EquationResidual> rows;
    bool all_zero = true;
};

SystemReport verify_linear_system(const Graph& g);

// rho[m] = g_{m,2m,1} closed form for m = 0..floor(n/2); n <= 11 only.
MatchingPolynomial assemble_polynomial(const RegularParams& p);

// The displayed cubic-order-10 polynomial; requires n = 10, r = 3.
MatchingPolynomial theorem_pol(const RegularParams& p);

}  // namespace matchpoly

#endif

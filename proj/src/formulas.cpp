#include "matchpoly/formulas.hpp"

#include <numeric>

namespace matchpoly {

namespace {

using I128 = __int128;

long long narrow(I128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(I128 num, I128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    I128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational out;
    out.num = narrow(num);
    out.den = narrow(den);
    return out;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make(n, d); }

long long Rational::as_integer() const {
    if (den != 1) throw std::domain_error("non-integer rational " + str());
    return num;
}

Rational operator+(Rational a, Rational b) {
    return make(I128(a.num) * b.den + I128(b.num) * a.den, I128(a.den) * b.den);
}
Rational operator-(Rational a, Rational b) {
    return make(I128(a.num) * b.den - I128(b.num) * a.den, I128(a.den) * b.den);
}
Rational operator*(Rational a, Rational b) { return make(I128(a.num) * b.num, I128(a.den) * b.den); }
Rational operator/(Rational a, Rational b) { return make(I128(a.num) * b.den, I128(a.den) * b.num); }

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

using LL = long long;

// The published closed forms, transcribed verbatim in factored form. Null
// pointers are zero coefficients.
const ClosedFormEntry kClosedForms[] = {
    {{0, 0, 1}, +[](LL, LL) -> Rational { return 1; }, nullptr, nullptr, nullptr, nullptr},

    {{1, 2, 1}, +[](LL n, LL r) -> Rational { return {n * r, 2}; }, nullptr, nullptr, nullptr, nullptr},

    {{2, 2, 1}, +[](LL n, LL r) -> Rational { return {n * (r - 1) * r, 2}; }, nullptr, nullptr, nullptr,
     nullptr},

    {{2, 4, 1}, +[](LL n, LL r) -> Rational { return {n * r * (n * r - 4 * r + 2), 8}; }, nullptr,
     nullptr, nullptr, nullptr},

    {{3, 2, 1}, +[](LL n, LL r) -> Rational { return {n * (r - 1) * (r - 1) * r, 2}; },
     +[](LL, LL) -> Rational { return -3; }, nullptr, nullptr, nullptr},

    {{3, 3, 1}, +[](LL n, LL r) -> Rational { return {n * (r - 2) * (r - 1) * r, 6}; }, nullptr,
     nullptr, nullptr, nullptr},

    {{3, 4, 1}, +[](LL n, LL r) -> Rational { return {n * (r - 1) * r * (n * r - 6 * r + 4), 4}; },
     +[](LL, LL) -> Rational { return 3; }, nullptr, nullptr, nullptr},

    {{3, 6, 1},
     +[](LL n, LL r) -> Rational {
         return {n * r *
                     (n * n * r * r - 12 * n * r * r + 40 * r * r + 6 * n * r - 48 * r + 16),
                 48};
     },
     +[](LL, LL) -> Rational { return -1; }, nullptr, nullptr, nullptr},

    {{4, 1, 1}, nullptr, +[](LL, LL r) -> Rational { return 3 * r - 6; }, nullptr, nullptr, nullptr},

    {{4, 2, 1}, nullptr, +[](LL n, LL r) -> Rational { return {n * r - 6 * r + 6, 2}; }, nullptr,
     nullptr, nullptr},

    {{4, 2, 2}, +[](LL n, LL r) -> Rational { return {n * (r - 1) * (r - 1) * (r - 1) * r, 2}; },
     +[](LL, LL r) -> Rational { return -6 * r + 9; },
     +[](LL, LL) -> Rational { return -4; }, nullptr, nullptr},

    {{4, 3, 1}, +[](LL n, LL r) -> Rational { return {n * (r - 2) * (r - 1) * (r - 1) * r, 2}; },
     +[](LL, LL r) -> Rational { return -6 * r + 12; }, nullptr, nullptr, nullptr},

    {{4, 4, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * r * (n * r - 8 * r + 6), 4};
     },
     +[](LL n, LL r) -> Rational { return {-3 * n * r + 36 * r - 42, 2}; },
     +[](LL, LL) -> Rational { return 4; }, nullptr, nullptr},

    {{4, 4, 2}, +[](LL n, LL r) -> Rational { return {n * (r - 3) * (r - 2) * (r - 1) * r, 24}; },
     nullptr, nullptr, nullptr, nullptr},

    {{4, 4, 3},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * r * (n * r - 9 * r + 8), 8};
     },
     +[](LL, LL r) -> Rational { return 6 * r - 9; },
     +[](LL, LL) -> Rational { return 2; }, nullptr, nullptr},

    {{4, 5, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * r * (n * r - 8 * r + 6), 12};
     },
     +[](LL, LL r) -> Rational { return 3 * r - 6; }, nullptr, nullptr, nullptr},

    {{4, 6, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * r *
                     (n * n * r * r - 16 * n * r * r + 72 * r * r + 10 * n * r - 104 * r + 40),
                 16};
     },
     +[](LL n, LL r) -> Rational { return {3 * n * r - 42 * r + 48, 2}; },
     +[](LL, LL) -> Rational { return -4; }, nullptr, nullptr},

    {{4, 8, 1},
     +[](LL n, LL r) -> Rational {
         LL n2 = n * n, n3 = n2 * n, r2 = r * r, r3 = r2 * r;
         return {n * r *
                     (n3 * r3 - 24 * n2 * r3 + 208 * n * r3 - 672 * r3 + 12 * n2 * r2 -
                      240 * n * r2 + 1344 * r2 + 76 * n * r - 960 * r + 240),
                 384};
     },
     +[](LL n, LL r) -> Rational { return {-n * r + 12 * r - 12, 2}; },
     +[](LL, LL) -> Rational { return 1; }, nullptr, nullptr},

    {{5, 1, 1}, nullptr, nullptr, +[](LL, LL r) -> Rational { return 4 * r - 8; }, nullptr,
     +[](LL, LL) -> Rational { return -2; }},

    {{5, 1, 2}, nullptr, +[](LL, LL r) -> Rational { return 3 * r * r - 9 * r + 6; }, nullptr,
     nullptr, +[](LL, LL) -> Rational { return -4; }},

    {{5, 2, 1}, nullptr, nullptr, +[](LL n, LL r) -> Rational { return {n * r - 8 * r + 8, 2}; },
     nullptr, +[](LL, LL) -> Rational { return 1; }},

    {{5, 2, 2},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * (r - 1) * (r - 1) * r, 2};
     },
     +[](LL, LL r) -> Rational { return -9 * r * r + 24 * r - 15; },
     +[](LL, LL r) -> Rational { return -8 * r + 12; },
     +[](LL, LL) -> Rational { return -5; },
     +[](LL, LL) -> Rational { return 6; }},

    {{5, 2, 3}, nullptr,
     +[](LL n, LL r) -> Rational {
         return {n * r * r - 9 * r * r - n * r + 21 * r - 12, 2};
     },
     nullptr, nullptr, +[](LL, LL) -> Rational { return 2; }},

    {{5, 2, 4}, nullptr, +[](LL, LL r) -> Rational { return 3 * r * r - 12 * r + 12; }, nullptr,
     nullptr, +[](LL, LL) -> Rational { return -2; }},

    {{5, 2, 5}, nullptr, +[](LL, LL r) -> Rational { return {3 * r * r - 15 * r + 18, 2}; }, nullptr,
     nullptr, nullptr},

    {{5, 3, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * (r - 1) * (r - 1) * r, 2};
     },
     +[](LL, LL r) -> Rational { return -9 * r * r + 33 * r - 30; },
     +[](LL, LL r) -> Rational { return -8 * r + 16; }, nullptr,
     +[](LL, LL) -> Rational { return 4; }},

    {{5, 3, 2},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * (r - 1) * (r - 1) * r, 2};
     },
     +[](LL, LL r) -> Rational { return -12 * r * r + 39 * r - 30; },
     +[](LL, LL r) -> Rational { return -4 * r + 8; }, nullptr,
     +[](LL, LL) -> Rational { return 8; }},

    {{5, 3, 3}, nullptr,
     +[](LL n, LL r) -> Rational {
         return {3 * n * r * r - 24 * r * r - 6 * n * r + 72 * r - 48, 2};
     },
     nullptr, nullptr, +[](LL, LL) -> Rational { return 4; }},

    {{5, 4, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * (r - 1) * r * (n * r - 10 * r + 8), 4};
     },
     +[](LL n, LL r) -> Rational {
         return {-6 * n * r * r + 78 * r * r + 9 * n * r - 198 * r + 120, 2};
     },
     +[](LL n, LL r) -> Rational { return -2 * n * r + 28 * r - 32; },
     +[](LL, LL) -> Rational { return 5; },
     +[](LL, LL) -> Rational { return -14; }},

    {{5, 4, 2},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * (r - 1) * r * (n * r - 12 * r + 12), 4};
     },
     +[](LL n, LL r) -> Rational {
         return {-3 * n * r * r + 78 * r * r + 3 * n * r - 204 * r + 132, 2};
     },
     +[](LL, LL r) -> Rational { return 16 * r - 24; },
     +[](LL, LL) -> Rational { return 5; },
     +[](LL, LL) -> Rational { return -14; }},

    {{5, 4, 3},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 2) * (r - 1) * (r - 1) * r, 8};
     },
     +[](LL, LL r) -> Rational { return -3 * r * r + 12 * r - 12; }, nullptr, nullptr,
     +[](LL, LL) -> Rational { return 1; }},

    {{5, 4, 4},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 3) * (r - 2) * (r - 1) * (r - 1) * r, 6};
     },
     +[](LL, LL r) -> Rational { return -3 * r * r + 15 * r - 18; }, nullptr, nullptr, nullptr},

    {{5, 4, 5}, nullptr,
     +[](LL n, LL r) -> Rational {
         return {n * n * r * r - 16 * n * r * r + 72 * r * r + 14 * n * r - 144 * r + 72, 8};
     },
     nullptr, nullptr, +[](LL, LL) -> Rational { return -2; }},

    {{5, 5, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * (r - 1) * r * (n * r - 10 * r + 8), 4};
     },
     +[](LL n, LL r) -> Rational {
         return -3 * n * r * r + 42 * r * r + 6 * n * r - 132 * r + 96;
     },
     +[](LL, LL r) -> Rational { return 8 * r - 16; }, nullptr,
     +[](LL, LL) -> Rational { return -12; }},

    {{5, 5, 2},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * (r - 1) * r * (n * r - 12 * r + 12), 12};
     },
     +[](LL, LL r) -> Rational { return 9 * r * r - 33 * r + 30; },
     +[](LL, LL r) -> Rational { return 4 * r - 8; }, nullptr,
     +[](LL, LL) -> Rational { return -2; }},

    {{5, 5, 3},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 4) * (r - 3) * (r - 2) * (r - 1) * r, 120};
     },
     nullptr, nullptr, nullptr, nullptr},

    {{5, 6, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 3) * (r - 2) * (r - 1) * r * (n * r - 10 * r + 8), 48};
     },
     +[](LL, LL r) -> Rational { return {6 * r * r - 30 * r + 36, 4}; }, nullptr, nullptr, nullptr},

    {{5, 6, 2},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * r *
                     (n * n * r * r - 20 * n * r * r + 112 * r * r + 14 * n * r - 176 * r + 72),
                 16};
     },
     +[](LL n, LL r) -> Rational {
         return {-3 * n * n * r * r + 84 * n * r * r - 696 * r * r - 90 * n * r + 1584 * r - 888,
                 8};
     },
     +[](LL n, LL r) -> Rational { return 2 * n * r - 32 * r + 36; },
     +[](LL, LL) -> Rational { return -5; },
     +[](LL, LL) -> Rational { return 20; }},

    {{5, 6, 3},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 1) * (r - 1) * r *
                     (n * n * r * r - 21 * n * r * r + 126 * r * r + 16 * n * r - 216 * r + 96),
                 16};
     },
     // 282, not 252: the solved value of the k=6 re-attachment equation; the
     // 252 variant fails every census cross-check by 15 r^2 g_{3,0,1} / 2.
     +[](LL n, LL r) -> Rational {
         return {18 * n * r * r - 282 * r * r - 24 * n * r + 714 * r - 444, 4};
     },
     +[](LL n, LL r) -> Rational { return n * r - 28 * r + 36; },
     +[](LL, LL) -> Rational { return -5; },
     +[](LL, LL) -> Rational { return 17; }},

    {{5, 7, 1},
     +[](LL n, LL r) -> Rational {
         return {n * (r - 2) * (r - 1) * r *
                     (n * n * r * r - 20 * n * r * r + 112 * r * r + 14 * n * r - 176 * r + 72),
                 48};
     },
     +[](LL n, LL r) -> Rational {
         return {3 * n * r * r - 42 * r * r - 6 * n * r + 132 * r - 96, 2};
     },
     +[](LL, LL r) -> Rational { return -4 * r + 8; }, nullptr,
     +[](LL, LL) -> Rational { return 4; }},

    {{5, 8, 1},
     +[](LL n, LL r) -> Rational {
         LL n2 = n * n, n3 = n2 * n, r2 = r * r, r3 = r2 * r;
         return {n * (r - 1) * r *
                     (n3 * r3 - 30 * n2 * r3 + 328 * n * r3 - 1344 * r3 + 18 * n2 * r2 -
                      444 * n * r2 + 3072 * r2 + 160 * n * r - 2448 * r + 672),
                 96};
     },
     +[](LL n, LL r) -> Rational {
         return {3 * n * n * r * r - 100 * n * r * r + 888 * r * r + 106 * n * r - 1968 * r + 1080,
                 8};
     },
     +[](LL n, LL r) -> Rational { return -2 * n * r + 36 * r - 40; },
     +[](LL, LL) -> Rational { return 5; },
     +[](LL, LL) -> Rational { return -20; }},

    {{5, 10, 1},
     +[](LL n, LL r) -> Rational {
         LL n2 = n * n, n3 = n2 * n, n4 = n3 * n;
         LL r2 = r * r, r3 = r2 * r, r4 = r3 * r;
         return {n * r *
                     (n4 * r4 - 40 * n3 * r4 + 640 * n2 * r4 - 4960 * n * r4 + 16128 * r4 +
                      20 * n3 * r3 - 720 * n2 * r3 + 9440 * n * r3 - 46080 * r3 + 220 * n2 * r2 -
                      6400 * n * r2 + 51840 * r2 + 1520 * n * r - 26880 * r + 5376),
                 3840};
     },
     +[](LL n, LL r) -> Rational {
         return {-5 * n * n * r * r + 140 * n * r * r - 1080 * r * r - 130 * n * r + 2160 * r -
                     1080,
                 40};
     },
     +[](LL n, LL r) -> Rational { return {n * r - 16 * r + 16, 2}; },
     +[](LL, LL) -> Rational { return -1; },
     +[](LL, LL) -> Rational { return 4; }},
};

}  // namespace

std::span<const ClosedFormEntry> closed_form_table() { return kClosedForms; }

std::vector<FormulaId> formula_ids() {
    std::vector<FormulaId> ids;
    for (const auto& e : kClosedForms) ids.push_back(e.id);
    return ids;
}

Rational evaluate_closed_form(const ClosedFormEntry& e, const RegularParams& p) {
    Rational total = e.base ? e.base(p.n, p.r) : Rational{};
    if (e.c3) total = total + e.c3(p.n, p.r) * Rational{p.c3};
    if (e.c4) total = total + e.c4(p.n, p.r) * Rational{p.c4};
    if (e.c5) total = total + e.c5(p.n, p.r) * Rational{p.c5};
    if (e.qcoef) total = total + e.qcoef(p.n, p.r) * Rational{p.q};
    return total;
}

Rational closed_form(const FormulaId& id, const RegularParams& p) {
    for (const auto& e : kClosedForms)
        if (e.id == id) return evaluate_closed_form(e, p);
    throw std::invalid_argument("unknown formula id " + mki_label(id));
}

long long closed_form_integer(const FormulaId& id, const RegularParams& p) {
    return closed_form(id, p).as_integer();
}

namespace {

// The printed system of 24 equations. lhs multipliers are the re-attachment
// counts; rhs terms are the overcounted 5-edge classes.
const std::vector<SystemEquation>& build_system() {
    using E = SystemEquation;
    static const std::vector<SystemEquation> system = {
        {+[](LL, LL r) -> Rational { return 4 * (r - 2); }, {4, 0, 1},
         {{1, {5, 1, 1}}, {2, {5, 0, 2}}}},
        {+[](LL, LL r) -> Rational { return r - 1; }, {4, 1, 1}, {{1, {5, 1, 2}}, {4, {5, 0, 2}}}},
        {+[](LL n, LL r) -> Rational { return (n - 4) * r; }, {4, 0, 1},
         {{2, {5, 2, 1}}, {1, {5, 1, 1}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 1); }, {4, 2, 2},
         {{2, {5, 2, 2}}, {2, {5, 1, 2}}, {2, {5, 1, 1}}, {10, {5, 0, 1}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 1); }, {4, 2, 1},
         {{2, {5, 2, 3}}, {1, {5, 1, 2}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 2); }, {4, 1, 1},
         {{2, {5, 2, 4}}, {4, {5, 0, 2}}}},
        {+[](LL, LL r) -> Rational { return r - 3; }, {4, 1, 1}, {{2, {5, 2, 5}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 2); }, {4, 2, 2},
         {{2, {5, 3, 1}}, {2, {5, 1, 1}}, {2, {5, 2, 4}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 1); }, {4, 3, 1},
         {{2, {5, 3, 2}}, {2, {5, 1, 2}}, {2, {5, 2, 4}}, {2, {5, 1, 1}}}},
        {+[](LL, LL r) -> Rational { return 3 * (r - 2); }, {4, 2, 1},
         {{1, {5, 3, 3}}, {1, {5, 1, 2}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 1); }, {4, 4, 1},
         {{2, {5, 4, 1}}, {2, {5, 3, 3}}, {8, {5, 2, 1}}, {2, {5, 2, 2}}}},
        {+[](LL, LL r) -> Rational { return 4 * (r - 1); }, {4, 4, 3},
         {{2, {5, 4, 2}}, {6, {5, 2, 3}}, {2, {5, 2, 2}}, {1, {5, 3, 1}}}},
        {+[](LL, LL r) -> Rational { return r - 2; }, {4, 3, 1}, {{4, {5, 4, 3}}, {2, {5, 2, 4}}}},
        {+[](LL, LL r) -> Rational { return r - 3; }, {4, 3, 1}, {{3, {5, 4, 4}}, {2, {5, 2, 5}}}},
        {+[](LL n, LL r) -> Rational { return (n - 5) * r; }, {4, 2, 1},
         {{4, {5, 4, 5}}, {2, {5, 2, 3}}, {1, {5, 3, 3}}}},
        {+[](LL, LL r) -> Rational { return 3 * (r - 1); }, {4, 5, 1},
         {{1, {5, 5, 1}}, {2, {5, 3, 3}}, {1, {5, 3, 1}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 2); }, {4, 4, 3},
         {{3, {5, 5, 2}}, {1, {5, 3, 1}}, {2, {5, 4, 3}}}},
        {+[](LL, LL r) -> Rational { return r - 4; }, {4, 4, 2}, {{5, {5, 5, 3}}}},
        {+[](LL, LL r) -> Rational { return r - 3; }, {4, 5, 1}, {{4, {5, 6, 1}}, {1, {5, 4, 4}}}},
        {+[](LL, LL r) -> Rational { return 2 * (r - 1); }, {4, 6, 1},
         {{2, {5, 6, 2}}, {6, {5, 4, 5}}, {2, {5, 4, 1}}}},
        {+[](LL, LL r) -> Rational { return 4 * (r - 1); }, {4, 6, 1},
         {{4, {5, 6, 3}}, {2, {5, 4, 1}}, {1, {5, 5, 1}}, {2, {5, 4, 2}}}},
        {+[](LL, LL r) -> Rational { return r - 2; }, {4, 6, 1}, {{3, {5, 7, 1}}, {1, {5, 5, 1}}}},
        {+[](LL, LL r) -> Rational { return 8 * (r - 1); }, {4, 8, 1},
         {{2, {5, 8, 1}}, {2, {5, 6, 2}}}},
        {+[](LL n, LL r) -> Rational { return (n - 8) * r; }, {4, 8, 1},
         {{10, {5, 10, 1}}, {2, {5, 8, 1}}}},
    };
    return system;
}

}  // namespace

const std::vector<SystemEquation>& linear_system() { return build_system(); }

RegularParams extract_params(const Graph& g) { return extract_params(g, census(g, kMaxCensusEdges)); }

RegularParams extract_params(const Graph& g, const CensusTable& table) {
    auto reg = is_regular(g);
    if (!reg) throw NotRegularError("graph is not regular");
    const auto& dict = ClassDictionary::instance();
    auto count_of = [&](const char* name) -> long long {
        int id = dict.find_by_name(name);
        return id < 0 ? 0 : table[id];
    };
    RegularParams p;
    p.n = g.order();
    p.r = *reg;
    p.c3 = count_of("C3");
    p.c4 = count_of("C4");
    p.c5 = count_of("C5");
    p.q = count_of("K4-e");
    return p;
}

FormulaReport verify_formulas(const Graph& g) { return verify_formulas(g, closed_form_table()); }

FormulaReport verify_formulas(const Graph& g, std::span<const ClosedFormEntry> table) {
    auto tab = census(g, kMaxCensusEdges);
    RegularParams p = extract_params(g, tab);
    FormulaReport report;
    for (const auto& e : table) {
        FormulaResidual row;
        row.id = e.id;
        row.closed = evaluate_closed_form(e, p);
        row.census = census_count(tab, e.id);
        row.residual = row.closed - Rational{row.census};
        if (!(row.residual == Rational{0})) report.all_zero = false;
        report.rows.push_back(row);
    }
    return report;
}

SystemReport verify_linear_system(const Graph& g) {
    auto tab = census(g, kMaxCensusEdges);
    RegularParams p = extract_params(g, tab);
    SystemReport report;
    int index = 0;
    for (const auto& eq : linear_system()) {
        EquationResidual row;
        row.index = ++index;
        Rational mult = eq.lhs_coef(p.n, p.r);
        row.lhs = mult * Rational{census_count(tab, eq.lhs)};
        row.rhs = Rational{0};
        for (const auto& term : eq.rhs)
            row.rhs = row.rhs + Rational{term.coef} * Rational{census_count(tab, term.id)};
        row.residual = row.lhs - row.rhs;
        row.text = mult.str() + "*" + mki_label(eq.lhs);
        if (!(row.residual == Rational{0})) report.all_zero = false;
        report.rows.push_back(row);
    }
    return report;
}

MatchingPolynomial assemble_polynomial(const RegularParams& p) {
    if (p.n > 11)
        throw std::invalid_argument("assemble_polynomial requires n <= 11 (no closed form beyond m = 5)");
    MatchingPolynomial poly;
    poly.n = static_cast<int>(p.n);
    for (int m = 0; m <= poly.n / 2; ++m) {
        long long value = closed_form_integer({m, 2 * m, 1}, p);
        if (value < 0)
            throw std::domain_error("negative predicted coefficient " + mki_label({m, 2 * m, 1}) +
                                    " = " + std::to_string(value) + ": inconsistent parameters");
        poly.rho.push_back(value);
    }
    return poly;
}

MatchingPolynomial theorem_pol(const RegularParams& p) {
    if (p.n != 10 || p.r != 3) throw std::invalid_argument("theorem_pol requires n = 10, r = 3");
    MatchingPolynomial poly;
    poly.n = 10;
    poly.rho = {1,
                15,
                75,
                145 - p.c3,
                90 - 3 * p.c3 + p.c4,
                18 - 3 * p.c3 - p.c4 - p.c5 + 4 * p.q};
    return poly;
}

}  // namespace matchpoly

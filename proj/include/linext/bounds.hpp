#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "linext/errors.hpp"

namespace linext {

// Per-element exponential bases bounding downset counts. Variables are the
// packing fractions (alpha, beta, gamma) or a prefix of them.
enum class BoundExpr {
    PartitionBound,    // 3^a * ((1+2a)/(4a))^(4a),            a in [0, 1/6]
    CanonicalBound, // 3^a * (1/(2a))^(2a),                 a in [0, 1/4]
    TauLe,          // 3^(a-b) 5^(b-g) 9^g ((1-2a-b-g)/(2g)+1)^(2g), many-quartet side excluded
    PiLe,           // 2 (3/4)^a (5/6)^b (9/10)^g on the many-quartet side
    LargeMatching,  // 2 (3/4)^a,                           a in [1/3, 1/2]
    GammaZero,      // 3^(a-b) 5^b,                         the g = 0 slice
    TauJnEntropy,   // 3^(a-b) 5^b * a'^a' / (b^b (a'-b)^(a'-b)), a' = 1-2a-b, where 2a+3b <= 1
    TauJnSimple,    // 3^(a-b) 5^b 2^(1-2a-b),              where 2a+3b >= 1
};

inline const char* to_string(BoundExpr e) {
    switch (e) {
        case BoundExpr::PartitionBound: return "partition";
        case BoundExpr::CanonicalBound: return "canonical";
        case BoundExpr::TauLe: return "tau-le";
        case BoundExpr::PiLe: return "pi-le";
        case BoundExpr::LargeMatching: return "large-matching";
        case BoundExpr::GammaZero: return "gamma0";
        case BoundExpr::TauJnEntropy: return "tau-jn-entropy";
        case BoundExpr::TauJnSimple: return "tau-jn-simple";
    }
    return "?";
}

inline int arity(BoundExpr e) {
    switch (e) {
        case BoundExpr::PartitionBound:
        case BoundExpr::CanonicalBound:
        case BoundExpr::LargeMatching: return 1;
        case BoundExpr::GammaZero:
        case BoundExpr::TauJnEntropy:
        case BoundExpr::TauJnSimple: return 2;
        case BoundExpr::TauLe:
        case BoundExpr::PiLe: return 3;
    }
    return 0;
}

namespace detail {

// x^x with the limit convention 0^0 = 1
inline double pow_self(double x) { return x <= 0.0 ? 1.0 : std::pow(x, x); }

// (1 + s/d)^d with the convention d -> 0 giving 1 (t log(c/t) -> 0)
inline double pow_one_plus(double s, double d) {
    if (d <= 0.0) return 1.0;
    if (s < 0.0) s = 0.0;
    return std::pow(1.0 + s / d, d);
}

// raw formulas, defined on the closed domains via the limit conventions

inline double partition_bound_raw(double a) {
    return std::pow(3.0, a) * pow_one_plus(1.0 - 2.0 * a, 4.0 * a);
}

inline double canonical_raw(double a) {
    return std::pow(3.0, a) * pow_one_plus(1.0 - 2.0 * a, 2.0 * a);
}

inline double large_matching_raw(double a) { return 2.0 * std::pow(0.75, a); }

inline double tau_le_raw(double a, double b, double g) {
    double s = 1.0 - 2.0 * a - b - g;
    return std::pow(3.0, a - b) * std::pow(5.0, b - g) * std::pow(9.0, g) *
           pow_one_plus(s, 2.0 * g);
}

inline double pi_le_raw(double a, double b, double g) {
    return 2.0 * std::pow(0.75, a) * std::pow(5.0 / 6.0, b) * std::pow(0.9, g);
}

inline double gamma_zero_raw(double a, double b) {
    return std::pow(3.0, a - b) * std::pow(5.0, b);
}

inline double tau_jn_entropy_raw(double a, double b) {
    double top = 1.0 - 2.0 * a - b;
    double rest = top - b;
    return gamma_zero_raw(a, b) * pow_self(top) / (pow_self(b) * pow_self(rest));
}

inline double tau_jn_simple_raw(double a, double b) {
    return gamma_zero_raw(a, b) * std::pow(2.0, 1.0 - 2.0 * a - b);
}

inline constexpr double kDomainSlack = 1e-12;
inline constexpr double kThird = 1.0 / 3.0;

} // namespace detail

inline bool in_domain(BoundExpr e, std::span<const double> x) {
    using namespace detail;
    if (static_cast<int>(x.size()) != arity(e)) return false;
    for (double v : x)
        if (!(v >= -kDomainSlack)) return false;
    auto le = [](double l, double r) { return l <= r + kDomainSlack; };
    switch (e) {
        case BoundExpr::PartitionBound: return le(x[0], 1.0 / 6.0);
        case BoundExpr::CanonicalBound: return le(x[0], 0.25);
        case BoundExpr::LargeMatching: return le(kThird, x[0]) && le(x[0], 0.5);
        case BoundExpr::GammaZero: return le(x[1], x[0]) && le(x[0], kThird);
        case BoundExpr::TauJnEntropy:
            return le(x[1], x[0]) && le(x[0], kThird) && le(2.0 * x[0] + 3.0 * x[1], 1.0);
        case BoundExpr::TauJnSimple:
            return le(x[1], x[0]) && le(x[0], kThird) && le(1.0, 2.0 * x[0] + 3.0 * x[1]);
        case BoundExpr::TauLe:
            return le(x[2], x[1]) && le(x[1], x[0]) && le(x[0], kThird) &&
                   le(2.0 * x[0] + x[1] + x[2], 1.0) &&
                   le(2.0 * x[0] + x[1] + 3.0 * x[2], 1.0);  // few-quartet side: 2g <= 1-2a-b-g
        case BoundExpr::PiLe:
            return le(x[2], x[1]) && le(x[1], x[0]) && le(x[0], kThird) &&
                   le(2.0 * x[0] + x[1] + x[2], 1.0) &&
                   le(1.0, 2.0 * x[0] + x[1] + 3.0 * x[2]);  // many-quartet side: 2g >= 1-2a-b-g
    }
    return false;
}

inline double evaluate_raw(BoundExpr e, std::span<const double> x) {
    using namespace detail;
    switch (e) {
        case BoundExpr::PartitionBound: return partition_bound_raw(x[0]);
        case BoundExpr::CanonicalBound: return canonical_raw(x[0]);
        case BoundExpr::LargeMatching: return large_matching_raw(x[0]);
        case BoundExpr::GammaZero: return gamma_zero_raw(x[0], x[1]);
        case BoundExpr::TauJnEntropy: return tau_jn_entropy_raw(x[0], x[1]);
        case BoundExpr::TauJnSimple: return tau_jn_simple_raw(x[0], x[1]);
        case BoundExpr::TauLe: return tau_le_raw(x[0], x[1], x[2]);
        case BoundExpr::PiLe: return pi_le_raw(x[0], x[1], x[2]);
    }
    return 0.0;
}

inline double evaluate_bound(BoundExpr e, std::span<const double> point) {
    if (static_cast<int>(point.size()) != arity(e))
        throw DomainError("wrong number of variables for bound expression");
    if (!in_domain(e, point)) throw DomainError("point outside the expression's constraints");
    return evaluate_raw(e, point);
}

inline double evaluate_bound(BoundExpr e, std::initializer_list<double> point) {
    return evaluate_bound(e, std::span<const double>(point.begin(), point.size()));
}

} // namespace linext

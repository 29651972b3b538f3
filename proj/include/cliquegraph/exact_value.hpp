// Exact scalar of the form (a + b*sqrt(d)) / c with integer a, b, d, c.
// Covers integers (b = 0, c = 1), rationals (b = 0) and the quadratic
// irrationals that show up as strongly-regular-graph eigenvalues. Values
// are kept in a canonical form so equality is plain field comparison:
// c > 0, d squarefree, b = 0 implies d = 0, gcd(a, b, c) = 1.
#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "cliquegraph/errors.hpp"

namespace cliquegraph {

struct ExactValue {
    long long a = 0, b = 0, d = 0, c = 1;

    static ExactValue integer(long long v) { return ExactValue{v, 0, 0, 1}; }

    static ExactValue rational(long long num, long long den) {
        return make(num, 0, 0, den);
    }

    static ExactValue make(long long a, long long b, long long d, long long c) {
        if (c == 0) throw invalid_argument_error("zero denominator");
        if (d < 0) throw invalid_argument_error("negative radicand");
        // pull square factors out of d
        for (long long p = 2; p * p <= d; ++p)
            while (d % (p * p) == 0) {
                d /= p * p;
                b *= p;
            }
        if (d == 1 || d == 0) {
            if (d == 1) a += b;
            b = 0;
            d = 0;
        }
        if (b == 0) d = 0;
        if (c < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        long long g = std::gcd(std::gcd(std::llabs(a), std::llabs(b)), c);
        if (g > 1) {
            a /= g;
            b /= g;
            c /= g;
        }
        return ExactValue{a, b, d, c};
    }

    bool operator==(const ExactValue& o) const = default;

    bool is_rational() const { return b == 0; }
    bool is_integer() const { return b == 0 && c == 1; }
    long long as_integer() const {
        if (!is_integer()) throw invalid_argument_error("value is not an integer");
        return a;
    }

    double approx() const {
        return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d))) /
               static_cast<double>(c);
    }

    ExactValue operator-() const { return ExactValue{-a, -b, d, c}; }

    friend ExactValue operator+(const ExactValue& x, const ExactValue& y) {
        long long d = 0;
        if (x.b != 0 && y.b != 0) {
            if (x.d != y.d) throw invalid_argument_error("incompatible radicals in addition");
            d = x.d;
        } else {
            d = x.b ? x.d : y.d;
        }
        return make(x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, d, x.c * y.c);
    }
    friend ExactValue operator-(const ExactValue& x, const ExactValue& y) { return x + (-y); }

    friend ExactValue operator*(const ExactValue& x, const ExactValue& y) {
        if (x.b != 0 && y.b != 0 && x.d != y.d)
            throw invalid_argument_error("incompatible radicals in multiplication");
        long long d = x.b ? x.d : y.d;
        return make(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d, x.c * y.c);
    }

    std::string str() const {
        if (b == 0) {
            std::string s = std::to_string(a);
            if (c != 1) s += "/" + std::to_string(c);
            return s;
        }
        std::string root = "√" + std::to_string(d);
        std::string bpart;
        if (b == 1) bpart = root;
        else if (b == -1) bpart = "-" + root;
        else bpart = std::to_string(b) + root;
        std::string core;
        if (a == 0) core = bpart;
        else core = std::to_string(a) + (b > 0 ? "+" : "") + bpart;
        if (c == 1) return core;
        return "(" + core + ")/" + std::to_string(c);
    }
};

}  // namespace cliquegraph

// Exact integer polynomials (GMP coefficients, ascending order). Just the
// operations the spectral identities need: evaluation, Taylor shift,
// multiplication and exact division by (x + w), equality.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cliquegraph/errors.hpp"

namespace cliquegraph {

struct IntPolynomial {
    // coeffs[i] multiplies x^i; trailing zeros are stripped, empty = zero.
    std::vector<mpz_class> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(); }
    static IntPolynomial from_ints(const std::vector<long long>& c) {
        std::vector<mpz_class> v;
        v.reserve(c.size());
        for (long long x : c) v.emplace_back(static_cast<long>(x));
        return IntPolynomial(std::move(v));
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }

    // p(x) -> p(x + shift), in place.
    void taylor_shift(long long shift) {
        if (shift == 0 || coeffs.empty()) return;
        mpz_class s(static_cast<long>(shift));
        const std::size_t n = coeffs.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;) coeffs[j] += s * coeffs[j + 1];
    }

    // p(x) -> p(x) * (x + w).
    void multiply_by_linear(long long w) {
        if (coeffs.empty()) return;
        mpz_class ww(static_cast<long>(w));
        coeffs.push_back(0);
        for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
            coeffs[i + 1] += coeffs[i];
            coeffs[i] *= ww;
        }
        trim();
    }

    // p(x) -> p(x) / (x + w); returns the remainder (caller decides whether
    // a nonzero remainder is an error).
    mpz_class divide_by_linear(long long w) {
        if (coeffs.empty()) return 0;
        mpz_class ww(static_cast<long>(w));
        std::vector<mpz_class> q(coeffs.size() - 1);
        mpz_class carry = 0;
        for (std::size_t i = coeffs.size(); i-- > 1;) {
            q[i - 1] = coeffs[i] + carry;
            carry = -ww * q[i - 1];
        }
        mpz_class rem = coeffs.empty() ? mpz_class(0) : coeffs[0] + carry;
        coeffs = std::move(q);
        trim();
        return rem;
    }

    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs.size());
        for (const auto& c : coeffs) out.push_back(c.get_str());
        return out;
    }
};

}  // namespace cliquegraph

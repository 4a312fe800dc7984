#pragma once

// Sparse Laurent polynomials in v with integer coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tle {

class LaurentPolynomial {
public:
    using Coeff = std::int64_t;
    using Terms = std::map<int, Coeff>;  // exponent of v -> coefficient, never zero

    LaurentPolynomial() = default;
    LaurentPolynomial(Coeff c) {  // NOLINT: constants convert implicitly
        if (c != 0) terms_[0] = c;
    }

    static LaurentPolynomial monomial(Coeff c, int exponent) {
        LaurentPolynomial p;
        if (c != 0) p.terms_[exponent] = c;
        return p;
    }
    static LaurentPolynomial v() { return monomial(1, 1); }
    static LaurentPolynomial v_inv() { return monomial(1, -1); }
    /// delta = v + v^-1
    static LaurentPolynomial delta() { return monomial(1, 1) + monomial(1, -1); }
    /// q = v^2
    static LaurentPolynomial q() { return monomial(1, 2); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    int degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return terms_.rbegin()->first;
    }
    int low_degree() const {
        if (is_zero()) throw std::domain_error("low degree of zero polynomial");
        return terms_.begin()->first;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (auto [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (auto [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial pow(unsigned k) const {
        LaurentPolynomial r(1), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            base *= base;
            k >>= 1u;
        }
        return r;
    }

    /// Shift all exponents by k (multiplication by v^k).
    LaurentPolynomial shifted(int k) const {
        LaurentPolynomial r;
        for (auto [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    /// Exact division; nullopt when `d` does not divide `*this` in Z[v, v^-1].
    /// The divisor's leading coefficient must be a unit (+-1).
    std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Coeff lead = d.terms_.rbegin()->second;
        if (lead != 1 && lead != -1) throw std::domain_error("divisor leading coefficient is not a unit");
        LaurentPolynomial rem = *this, quot;
        const int dlow = d.low_degree(), ddeg = d.degree();
        while (!rem.is_zero()) {
            // the remainder must keep a span at least as wide as the divisor
            if (rem.degree() - rem.low_degree() < ddeg - dlow) return std::nullopt;
            int e = rem.degree() - ddeg;
            Coeff c = rem.terms_.rbegin()->second * lead;
            quot.add_term(e, c);
            rem -= monomial(c, e) * d;
        }
        return quot;
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [e, c] = *it;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Coeff a = c < 0 ? -c : c;
            if (e == 0) os << a;
            else {
                if (a != 1) os << a << "*";
                os << "v";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

private:
    void add_term(int e, Coeff c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }

    Terms terms_;
};

}  // namespace tle

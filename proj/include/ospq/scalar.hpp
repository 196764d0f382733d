#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ospq/poly.hpp"

namespace ospq {

// Exact coefficient field: rational functions in the indeterminate v, with
// v^2 = q, over the Gaussian rationals.
//
// Canonical form: numerator and denominator are ordinary polynomials in v,
// coprime, with monic denominator. Negative powers of v are absorbed by the
// denominator (Laurent normalization), so equality is plain identity of the
// two polynomials.
class Scalar {
  public:
    Scalar() : num_(), den_(Poly::one()) {}
    Scalar(long n) : num_(GQ(n)), den_(Poly::one()) {}
    explicit Scalar(GQ c) : num_(std::move(c)), den_(Poly::one()) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar unit_i() { return Scalar(GQ::unit_i()); }

    // v^k, any integer k
    static Scalar v_pow(long k) {
        if (k >= 0) return Scalar(Poly::monomial(GQ(1), static_cast<size_t>(k)), Poly::one());
        return Scalar(Poly::one(), Poly::monomial(GQ(1), static_cast<size_t>(-k)));
    }
    static Scalar v() { return v_pow(1); }
    // q^k = v^(2k)
    static Scalar q_pow(long k) { return v_pow(2 * k); }
    static Scalar q() { return q_pow(1); }
    // c * v^k
    static Scalar laurent_monomial(GQ c, long k) { return Scalar(std::move(c)) * v_pow(k); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly::one() && den_ == Poly::one(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const { return Scalar(-num_, den_, no_normalize{}); }

    Scalar operator+(const Scalar& o) const {
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Scalar operator*(const Scalar& o) const {
        if (is_zero() || o.is_zero()) return Scalar();
        // cross-cancel before multiplying to keep intermediates small
        Poly g1 = Poly::gcd(num_, o.den_), g2 = Poly::gcd(o.num_, den_);
        Poly n = Poly::divmod(num_, g1).first * Poly::divmod(o.num_, g2).first;
        Poly d = Poly::divmod(den_, g2).first * Poly::divmod(o.den_, g1).first;
        return Scalar(std::move(n), std::move(d));
    }
    Scalar inverse() const {
        if (is_zero()) throw domain_error("scalar division by zero");
        return Scalar(den_, num_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar r = one(), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (!(den_ == o.den_)) return den_ < o.den_;
        return num_ < o.num_;
    }

    // Laurent scalars are exactly those with monomial denominator v^k.
    bool is_laurent() const { return den_.is_monomial(); }

    // (coefficient, v-exponent) pairs in ascending exponent; requires is_laurent().
    std::vector<std::pair<GQ, long>> laurent_terms() const {
        if (!is_laurent()) throw domain_error("scalar is not a Laurent polynomial");
        long shift = den_.degree();
        std::vector<std::pair<GQ, long>> out;
        const auto& cs = num_.coeffs();
        for (size_t j = 0; j < cs.size(); ++j)
            if (!cs[j].is_zero()) out.emplace_back(cs[j], static_cast<long>(j) - shift);
        return out;
    }

    // Single Laurent term with a positive rational coefficient: may appear as
    // a bare factor in a product without parentheses.
    bool is_simple_factor() const {
        if (!is_laurent()) return false;
        auto ts = laurent_terms();
        return ts.size() == 1 && ts[0].first.is_rational() && ts[0].first.re > 0;
    }

    std::string str() const {
        if (is_zero()) return "0";
        if (is_laurent()) return laurent_str(laurent_terms());
        std::vector<std::pair<GQ, long>> dt;
        const auto& dc = den_.coeffs();
        for (size_t j = 0; j < dc.size(); ++j)
            if (!dc[j].is_zero()) dt.emplace_back(dc[j], static_cast<long>(j));
        return "(" + laurent_str(Scalar(num_, Poly::one()).laurent_terms()) + ")/(" +
               laurent_str(dt) + ")";
    }

  private:
    struct no_normalize {};
    Scalar(Poly num, Poly den, no_normalize) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw domain_error("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
        GQ lead = den_.leading();
        if (!lead.is_one()) {
            GQ inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    static std::string term_str(const GQ& c, long e) {
        std::string vpart = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
        if (vpart.empty()) return c.str();
        if (c.is_one()) return vpart;
        if (c == GQ(-1)) return "-" + vpart;
        return c.str() + "*" + vpart;
    }

    static std::string laurent_str(const std::vector<std::pair<GQ, long>>& terms) {
        std::string s;
        for (size_t k = 0; k < terms.size(); ++k) {
            const auto& [c, e] = terms[k];
            if (k == 0) {
                s = term_str(c, e);
            } else if (c.prints_negative()) {
                s += " - " + term_str(-c, e);
            } else {
                s += " + " + term_str(c, e);
            }
        }
        return s;
    }

    Poly num_, den_;
};

// q-integer [n] in the given base: (base^n - base^-n)/(base - base^-1).
// The base must avoid 0 and +-1; [0] = 0 and [-n] = -[n].
inline Scalar q_int(long n, const Scalar& base) {
    if (base.is_zero() || base == Scalar(1) || base == Scalar(-1))
        throw domain_error("degenerate q-integer base");
    if (n == 0) return Scalar::zero();
    return (base.pow(n) - base.pow(-n)) / (base - base.inverse());
}

inline Scalar q_factorial(long n, const Scalar& base) {
    Scalar r = Scalar::one();
    for (long k = 2; k <= n; ++k) r *= q_int(k, base);
    return r;
}

// Gaussian binomial [n choose m] in the given base, 0 <= m <= n.
inline Scalar q_binomial(long n, long m, const Scalar& base) {
    if (m < 0 || m > n) throw domain_error("q-binomial out of range");
    return q_factorial(n, base) / (q_factorial(m, base) * q_factorial(n - m, base));
}

} // namespace ospq

#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ospq/gauss.hpp"

namespace ospq {

// Dense polynomial in one variable over the Gaussian rationals, coefficients
// stored in ascending degree. The zero polynomial has an empty coefficient
// vector; otherwise the leading coefficient is nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(GQ c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GQ(1)); }
    // c * x^n
    static Poly monomial(GQ c, size_t n) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(n + 1, GQ());
        p.c_[n] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of zero is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const GQ& leading() const { return c_.back(); }
    GQ coeff(size_t n) const { return n < c_.size() ? c_[n] : GQ(); }
    const std::vector<GQ>& coeffs() const { return c_; }

    bool is_monomial() const {
        if (is_zero()) return false;
        for (size_t i = 0; i + 1 < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    // largest n with x^n | p (0 for the zero polynomial)
    size_t valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return 0;
    }

    // p * x^n
    Poly shifted(size_t n) const {
        if (is_zero() || n == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + n, GQ());
        std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(n));
        return r;
    }

    // p / x^n, requires x^n | p
    Poly unshifted(size_t n) const {
        if (n == 0) return *this;
        Poly r;
        if (c_.size() <= n) return r;
        r.c_.assign(c_.begin() + static_cast<long>(n), c_.end());
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
        r.trim();
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, GQ());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        r.trim();
        return r;
    }

    Poly scaled(const GQ& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& a : r.c_) a *= c;
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == o.c_[i]) continue;
            if (c_[i].re != o.c_[i].re) return c_[i].re < o.c_[i].re;
            return c_[i].im < o.c_[i].im;
        }
        return false;
    }

    // Euclidean division; requires a nonzero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        Poly q, r = a;
        GQ inv_lead = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            GQ f = r.leading() * inv_lead;
            q = q + monomial(f, shift);
            r = r - b.shifted(shift).scaled(f);
        }
        return {q, r};
    }

    // Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.scaled(a.leading().inverse());
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GQ> c_;
};

} // namespace ospq

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ospq/errors.hpp"

namespace ospq {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Gaussian rational a + b*I with exact components.
struct GQ {
    Rat re, im;

    GQ() : re(0), im(0) {}
    GQ(long n) : re(n), im(0) {}
    GQ(Rat r) : re(std::move(r)), im(0) {}
    GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GQ unit_i() { return GQ(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_rational() const { return im == 0; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ operator+(const GQ& o) const { return GQ(re + o.re, im + o.im); }
    GQ operator-(const GQ& o) const { return GQ(re - o.re, im - o.im); }
    GQ operator*(const GQ& o) const {
        return GQ(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GQ inverse() const {
        if (is_zero()) throw domain_error("division by zero Gaussian rational");
        Rat n = re * re + im * im;
        return GQ(re / n, -im / n);
    }
    GQ operator/(const GQ& o) const { return *this * o.inverse(); }

    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o) { *this = *this * o; return *this; }

    bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GQ& o) const { return !(*this == o); }

    // True when the canonical text form starts with a minus sign.
    bool prints_negative() const {
        if (im == 0) return re < 0;
        if (re == 0) return im < 0;
        return false; // mixed values print parenthesized
    }

    // Canonical text. Mixed values come back parenthesized: "(3/2 + 1/2*I)".
    std::string str() const {
        if (im == 0) return rat_str(re);
        std::string imag = (im == 1)    ? "I"
                           : (im == -1) ? "-I"
                                        : rat_str(im) + "*I";
        if (re == 0) return imag;
        std::string s = "(" + rat_str(re);
        if (im > 0)
            s += " + " + (im == 1 ? std::string("I") : rat_str(im) + "*I");
        else
            s += " - " + (im == -1 ? std::string("I") : rat_str(-im) + "*I");
        return s + ")";
    }
};

} // namespace ospq

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ospq/algebra.hpp"

namespace ospq {

// Element of the extended torus algebra: finite combination of K_mu xi_gamma.
class TorusElement {
  public:
    using Key = std::pair<Weight, Gamma>;
    using Terms = std::map<Key, Scalar>;

    TorusElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(Weight mu, Gamma g, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{std::move(mu), std::move(g)}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TorusElement operator+(const TorusElement& o) const {
        TorusElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
        return r;
    }
    TorusElement operator-(const TorusElement& o) const {
        TorusElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
        return r;
    }
    TorusElement scaled(const Scalar& c) const {
        TorusElement r;
        for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
        return r;
    }

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    Element to_element(int rank) const {
        Element out;
        for (const auto& [k, c] : terms_)
            out.add(NormalWord{Letters{}, k.first, k.second, Letters{}}, c);
        return out;
    }

  private:
    Terms terms_;
};

// Harish-Chandra projection: keep exactly the letter-free normal words.
inline TorusElement upsilon(const Element& x) {
    TorusElement out;
    for (const auto& [w, c] : x.terms())
        if (w.is_torus_word()) out.add(w.torus, w.gamma, c);
    return out;
}

// torus elements multiply pointwise in the group algebra
inline TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
    TorusElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

// Multiplicative character of the extended torus: values on the K_{beta_i}
// plus a sign character of the 2-torsion group.
struct Character {
    std::vector<Scalar> values;     // value on K_{beta_i}, all nonzero
    std::vector<uint8_t> theta;     // sign exponents on xi_{beta_i}

    Character(std::vector<Scalar> vals, std::vector<uint8_t> th)
        : values(std::move(vals)), theta(std::move(th)) {
        for (const Scalar& c : values)
            if (c.is_zero()) throw domain_error("character value must be nonzero");
        if (theta.size() != values.size()) throw domain_error("character rank mismatch");
    }

    int rank() const { return static_cast<int>(values.size()); }

    // the linear character attached to a lattice point: value v^{t_i} on K_{beta_i}
    static Character linear(const Weight& lambda, std::vector<uint8_t> th) {
        std::vector<Scalar> vals;
        vals.reserve(lambda.twice.size());
        for (int t : lambda.twice) vals.push_back(Scalar::v_pow(t));
        return Character(std::move(vals), std::move(th));
    }
    static Character linear(const Weight& lambda) {
        return linear(lambda, std::vector<uint8_t>(lambda.twice.size(), 0));
    }

    Scalar eval_K(const Weight& mu) const {
        if (!mu.is_integral()) throw domain_error("character evaluated off the integral lattice");
        Scalar s = Scalar::one();
        for (size_t i = 0; i < values.size(); ++i) {
            long e = mu.twice[i] / 2;
            if (e != 0) s *= values[i].pow(e);
        }
        return s;
    }

    int theta_sign(const Gamma& g) const {
        int s = 0;
        for (size_t i = 0; i < theta.size(); ++i) s += theta[i] * g.bits[i];
        return (s & 1) ? -1 : +1;
    }

    // value on the twisted torus letter k_mu = xi_mu K_mu
    Scalar eval_k(const Weight& mu) const {
        Scalar s = eval_K(mu);
        return theta_sign(Gamma::of(mu)) < 0 ? -s : s;
    }
};

// sum of coeff * theta(gamma) * Lambda(K_mu)
inline Scalar evaluate(const TorusElement& x, const Character& chi) {
    Scalar s = Scalar::zero();
    for (const auto& [k, c] : x.terms()) {
        Scalar t = c * chi.eval_K(k.first);
        s += chi.theta_sign(k.second) < 0 ? -t : t;
    }
    return s;
}

// w . K_mu = q^{(mu, w^{-1} rho - rho)} K_{w mu}; sign-group parts ride along.
inline TorusElement weyl_dot(const RootData& roots, const WeylElement& w,
                             const TorusElement& x) {
    Weight shift = w.inverse().apply(roots.rho()) - roots.rho();
    TorusElement out;
    for (const auto& [k, c] : x.terms()) {
        long e = bilinear_int(k.first, shift);
        out.add(w.apply(k.first), k.second, c * Scalar::q_pow(e));
    }
    return out;
}

// Supported on K_{2 mu} with mu in the weight lattice, no sign-group part,
// and fixed by the dot action of every simple reflection.
inline bool even_torus_invariant(const RootData& roots, const TorusElement& x) {
    for (const auto& [k, c] : x.terms()) {
        if (!k.second.is_zero()) return false;
        // beta-coordinates of the torus weight must have one common parity
        const auto& t = k.first.twice;
        for (size_t i = 0; i < t.size(); ++i)
            if ((((t[i] / 2) ^ (t[0] / 2)) & 1) != 0) return false;
    }
    for (int i = 1; i <= roots.rank(); ++i)
        if (weyl_dot(roots, roots.simple_reflection(i), x) != x) return false;
    return true;
}

} // namespace ospq

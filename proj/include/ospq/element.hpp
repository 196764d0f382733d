#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospq/scalar.hpp"
#include "ospq/weights.hpp"

namespace ospq {

using Letters = std::vector<uint8_t>; // simple-root indices, 1-based

// Triangular normal word  F-word . K_mu . xi_gamma . E-word.
// The torus weight is integral; the letter words are kept Serre-reduced
// (standard monomials) by the multiplication engine.
struct NormalWord {
    Letters f;
    Weight torus;
    Gamma gamma;
    Letters e;

    static NormalWord empty(int rank) {
        return NormalWord{Letters{}, Weight::zero(rank), Gamma::zero(rank), Letters{}};
    }

    size_t height() const { return f.size() + e.size(); }
    bool is_torus_word() const { return f.empty() && e.empty(); }

    bool operator==(const NormalWord& o) const {
        return f == o.f && torus == o.torus && gamma == o.gamma && e == o.e;
    }

    // deg-lex on (fWord, torus, gamma, eWord)
    bool operator<(const NormalWord& o) const {
        if (f.size() != o.f.size()) return f.size() < o.f.size();
        if (f != o.f) return f < o.f;
        if (!(torus == o.torus)) return torus < o.torus;
        if (!(gamma == o.gamma)) return gamma < o.gamma;
        if (e.size() != o.e.size()) return e.size() < o.e.size();
        return e < o.e;
    }
};

// Finite linear combination of normal words; no zero coefficients are stored,
// so equality of canonical forms is equality of the term maps.
class Element {
  public:
    using Terms = std::map<NormalWord, Scalar>;

    Element() = default;

    static Element term(NormalWord w, Scalar c) {
        Element x;
        x.add(std::move(w), std::move(c));
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Scalar coefficient(const NormalWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    void add(NormalWord w, Scalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        r.add(o);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, -c);
        return r;
    }
    Element operator-() const {
        Element r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    Element scaled(const Scalar& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return terms_ < o.terms_; }

    // nonzero only when every word is a pure scalar multiple of the identity
    std::optional<Scalar> as_scalar() const {
        if (terms_.empty()) return Scalar::zero();
        if (terms_.size() != 1) return std::nullopt;
        const auto& [w, c] = *terms_.begin();
        if (!w.is_torus_word() || !w.torus.is_zero() || !w.gamma.is_zero()) return std::nullopt;
        return c;
    }

  private:
    Terms terms_;
};

// Pure tensor pair of normal words; see tensor.hpp for the algebra structure.
struct WordPair {
    NormalWord first, second;
    bool operator==(const WordPair& o) const { return first == o.first && second == o.second; }
    bool operator<(const WordPair& o) const {
        if (!(first == o.first)) return first < o.first;
        return second < o.second;
    }
};

} // namespace ospq

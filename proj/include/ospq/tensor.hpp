#pragma once

#include <map>
#include <tuple>

#include "ospq/algebra.hpp"

namespace ospq {

// Linear combination of pure tensors of normal words.  Each side of a pure
// tensor is reduced independently; nothing ever reduces across the tensor
// symbol.
class TensorElement {
  public:
    using Terms = std::map<WordPair, Scalar>;

    TensorElement() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(WordPair p, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(p), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // outer product of two elements, scaled
    void add_outer(const Element& a, const Element& b, const Scalar& c) {
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) add(WordPair{wa, wb}, ca * cb * c);
    }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [p, c] : o.terms_) r.add(p, c);
        return r;
    }
    TensorElement operator-(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [p, c] : o.terms_) r.add(p, -c);
        return r;
    }
    TensorElement scaled(const Scalar& c) const {
        TensorElement r;
        for (const auto& [p, k] : terms_) r.add(p, k * c);
        return r;
    }

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

  private:
    Terms terms_;
};

// componentwise product; with koszul=true inserts (-1)^{|x2||y1|}
inline TensorElement tensor_mul(const Algebra& A, const TensorElement& x,
                                const TensorElement& y, bool koszul = false) {
    TensorElement out;
    for (const auto& [p, cp] : x.terms()) {
        for (const auto& [r, cr] : y.terms()) {
            Scalar c = cp * cr;
            if (koszul && A.z2_grade(p.second) && A.z2_grade(r.first)) c = -c;
            out.add_outer(A.mul(Element::term(p.first, Scalar::one()),
                                Element::term(r.first, Scalar::one())),
                          A.mul(Element::term(p.second, Scalar::one()),
                                Element::term(r.second, Scalar::one())),
                          c);
        }
    }
    return out;
}

using WordTriple = std::tuple<NormalWord, NormalWord, NormalWord>;

class Tensor3Element {
  public:
    using Terms = std::map<WordTriple, Scalar>;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(WordTriple t, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(t), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Tensor3Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor3Element& o) const { return !(*this == o); }

  private:
    Terms terms_;
};

} // namespace ospq

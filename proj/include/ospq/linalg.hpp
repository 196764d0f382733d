#pragma once

#include <map>
#include <vector>

#include "ospq/element.hpp"

namespace ospq {

// Incrementally maintained reduced echelon span of elements, used for orbit
// closures and membership tests.  The pivot of a row is its least word in the
// canonical word order; the stored basis is the unique reduced echelon basis
// of the span, independent of insertion order.
class ElementSpan {
  public:
    // fully reduce against the current basis
    Element reduce(Element v) const {
        for (const auto& [pivot, row] : rows_) {
            Scalar c = v.coefficient(pivot);
            if (c.is_zero()) continue;
            v = v - row.scaled(c);
        }
        return v;
    }

    bool contains(const Element& v) const { return reduce(v).is_zero(); }

    // returns true when the vector enlarged the span
    bool insert(const Element& v) {
        Element r = reduce(v);
        if (r.is_zero()) return false;
        NormalWord pivot = r.terms().begin()->first;
        r = r.scaled(r.terms().begin()->second.inverse());
        for (auto& [p, row] : rows_) {
            Scalar c = row.coefficient(pivot);
            if (!c.is_zero()) row = row - r.scaled(c);
        }
        rows_.emplace(std::move(pivot), std::move(r));
        return true;
    }

    size_t dim() const { return rows_.size(); }

    std::vector<Element> basis() const {
        std::vector<Element> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

  private:
    std::map<NormalWord, Element> rows_;
};

// Kernel of a matrix over the scalar field, rows are equations.  Returns a
// basis of the kernel as coefficient vectors of length ncols.
inline std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> m,
                                                     size_t ncols) {
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < m.size(); ++col) {
        size_t sel = m.size();
        for (size_t i = r; i < m.size(); ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][col].inverse();
        for (size_t j = col; j < ncols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> kernel;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(ncols, Scalar::zero());
        v[free] = Scalar::one();
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Equations "sum_k c_k * images[k] = 0" as a scalar matrix: one row per word
// appearing in any image.
inline std::vector<std::vector<Scalar>> equations_from_images(
    const std::vector<Element>& images) {
    std::map<NormalWord, size_t> word_index;
    for (const Element& img : images)
        for (const auto& [w, c] : img.terms()) word_index.emplace(w, word_index.size());
    std::vector<std::vector<Scalar>> rows(word_index.size(),
                                          std::vector<Scalar>(images.size(), Scalar::zero()));
    for (size_t k = 0; k < images.size(); ++k)
        for (const auto& [w, c] : images[k].terms()) rows[word_index.at(w)][k] = c;
    return rows;
}

} // namespace ospq

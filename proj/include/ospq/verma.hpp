#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ospq/algebra.hpp"
#include "ospq/linalg.hpp"
#include "ospq/torus.hpp"

namespace ospq {

// Coefficient vector over the truncated basis of a highest-weight module.
struct VermaVector {
    std::map<size_t, Scalar> entries;

    static VermaVector unit(size_t k) {
        VermaVector v;
        v.entries.emplace(k, Scalar::one());
        return v;
    }

    bool is_zero() const { return entries.empty(); }

    void add(size_t k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = entries.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    VermaVector scaled(const Scalar& c) const {
        VermaVector r;
        for (const auto& [k, v] : entries) r.add(k, v * c);
        return r;
    }

    VermaVector operator+(const VermaVector& o) const {
        VermaVector r = *this;
        for (const auto& [k, c] : o.entries) r.add(k, c);
        return r;
    }
    VermaVector operator-(const VermaVector& o) const {
        VermaVector r = *this;
        for (const auto& [k, c] : o.entries) r.add(k, -c);
        return r;
    }

    bool operator==(const VermaVector& o) const { return entries == o.entries; }
    bool operator!=(const VermaVector& o) const { return !(*this == o); }
};

// Height-truncated highest-weight module for a torus character and a sign
// character, with its weight decomposition and the two-fold grading shifted
// by a chosen offset.  The basis consists of the standard lowering words of
// height up to the bound applied to the highest weight vector.
class VermaModule {
  public:
    struct BasisVec {
        Letters word;   // standard F-word
        Weight offset;  // nu with weight q^{-nu} Lambda
        int parity;     // |nu| + grade offset
    };

    VermaModule(const Algebra& algebra, Character chi, int height_bound, int grade_offset = 0)
        : A_(&algebra), chi_(std::move(chi)), bound_(height_bound), offset_(grade_offset & 1) {
        if (chi_.rank() != A_->rank()) throw domain_error("character rank mismatch");
        for (const Letters& w : A_->standard_words_upto(bound_)) {
            Weight nu = A_->weight_of_letters(w);
            int par = (A_->roots().parity(nu) + offset_) & 1;
            index_.emplace(w, basis_.size());
            basis_.push_back(BasisVec{w, nu, par});
        }
    }

    const Algebra& algebra() const { return *A_; }
    const Character& character() const { return chi_; }
    int height_bound() const { return bound_; }
    int grade_offset() const { return offset_; }
    const std::vector<BasisVec>& basis() const { return basis_; }
    size_t dim() const { return basis_.size(); }

    std::optional<size_t> index_of(const Letters& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    struct ActResult {
        VermaVector vec;
        bool overflow = false; // some lowering term left the window
    };

    // linear action through the normal-form engine; letter-free tails act on
    // the highest weight vector through the two characters
    ActResult act(const Element& a, const VermaVector& m) const {
        ActResult out;
        for (const auto& [k, ck] : m.entries) {
            Element bword;
            {
                NormalWord w = NormalWord::empty(A_->rank());
                w.f = basis_[k].word;
                bword = Element::term(std::move(w), Scalar::one());
            }
            Element prod = A_->mul(a, bword);
            for (const auto& [w, c] : prod.terms()) {
                if (!w.e.empty()) continue; // annihilates the highest weight vector
                Scalar value = c * ck * chi_.eval_K(w.torus);
                if (chi_.theta_sign(w.gamma) < 0) value = -value;
                auto idx = index_of(w.f);
                if (!idx) {
                    if (!value.is_zero()) out.overflow = true;
                    continue;
                }
                out.vec.add(*idx, value);
            }
        }
        return out;
    }

    ActResult act(const Element& a, size_t basis_index) const {
        return act(a, VermaVector::unit(basis_index));
    }

    // indices of the weight space at a given offset
    std::vector<size_t> weight_space(const Weight& nu) const {
        std::vector<size_t> out;
        for (size_t k = 0; k < basis_.size(); ++k)
            if (basis_[k].offset == nu) out.push_back(k);
        return out;
    }

    // Kernel of all raising operators on one weight space, together with the
    // character of the submodule each kernel vector generates.
    std::vector<std::pair<VermaVector, Character>> singular_vectors(const Weight& nu) const {
        std::vector<std::pair<VermaVector, Character>> out;
        std::vector<size_t> space = weight_space(nu);
        if (space.empty()) return out;

        std::vector<Element> ops;
        for (int i = 1; i <= A_->rank(); ++i) ops.push_back(A_->E(i));

        std::vector<std::vector<Scalar>> rows;
        std::map<size_t, size_t> col_of;
        for (size_t c = 0; c < space.size(); ++c) col_of[space[c]] = c;
        for (const Element& op : ops) {
            std::map<size_t, std::vector<Scalar>> eq; // target index -> row
            for (size_t c = 0; c < space.size(); ++c) {
                ActResult img = act(op, space[c]);
                for (const auto& [t, val] : img.vec.entries) {
                    auto [it, fresh] =
                        eq.emplace(t, std::vector<Scalar>(space.size(), Scalar::zero()));
                    it->second[c] = val;
                }
            }
            for (auto& [t, row] : eq) rows.push_back(std::move(row));
        }

        for (const auto& coeffs : kernel_basis(std::move(rows), space.size())) {
            VermaVector v;
            for (size_t c = 0; c < space.size(); ++c) v.add(space[c], coeffs[c]);
            // new highest weight: Lambda shifted by q^{-nu}, theta twisted by
            // the sign character of nu
            std::vector<Scalar> vals = chi_.values;
            for (size_t i = 0; i < vals.size(); ++i) vals[i] *= Scalar::v_pow(-nu.twice[i]);
            Gamma tw = Gamma::of(nu);
            std::vector<uint8_t> th = chi_.theta;
            for (size_t i = 0; i < th.size(); ++i) th[i] ^= tw.bits[i];
            out.emplace_back(std::move(v), Character(std::move(vals), std::move(th)));
        }
        return out;
    }

    // The two eigenvalues of a weight-zero operator acting by a scalar on each
    // graded component (component 0 first).  Non-scalar action is a hard error.
    std::pair<Scalar, Scalar> graded_spectrum(const Element& op) const {
        std::optional<Scalar> ev[2];
        for (size_t k = 0; k < basis_.size(); ++k) {
            ActResult img = act(op, k);
            if (img.overflow) throw error("graded spectrum: operator left the window");
            Scalar diag = Scalar::zero();
            for (const auto& [t, val] : img.vec.entries) {
                if (t != k) throw error("graded spectrum: action is not scalar");
                diag = val;
            }
            int p = basis_[k].parity;
            if (!ev[p])
                ev[p] = diag;
            else if (!(*ev[p] == diag))
                throw error("graded spectrum: eigenvalue differs within a component");
        }
        if (!ev[0] || !ev[1]) throw error("graded spectrum: empty graded component");
        return {*ev[0], *ev[1]};
    }

    // every vector of the window is annihilated
    bool annihilates_window(const Element& op) const {
        for (size_t k = 0; k < basis_.size(); ++k) {
            ActResult img = act(op, k);
            if (img.overflow || !img.vec.is_zero()) return false;
        }
        return true;
    }

    // the witness operator E_l K_{-omega_l} acts nonzero on both components
    bool odd_nondegeneracy_probe() const {
        int l = A_->rank();
        Element op = A_->mul(A_->E(l), A_->K(-A_->roots().omega(l)));
        bool seen[2] = {false, false};
        for (size_t k = 0; k < basis_.size(); ++k)
            if (!act(op, k).vec.is_zero()) seen[basis_[k].parity] = true;
        return seen[0] && seen[1];
    }

    // scalar action on each graded component, within the safe window
    bool scalar_action_check(const Element& op) const {
        std::optional<Scalar> ev[2];
        bool seen_any = false;
        for (size_t k = 0; k < basis_.size(); ++k) {
            ActResult img = act(op, k);
            if (img.overflow) continue; // outside the safe window
            seen_any = true;
            Scalar diag = Scalar::zero();
            for (const auto& [t, val] : img.vec.entries) {
                if (t != k) return false;
                diag = val;
            }
            int p = basis_[k].parity;
            if (!ev[p])
                ev[p] = diag;
            else if (!(*ev[p] == diag))
                return false;
        }
        return seen_any;
    }

  private:
    const Algebra* A_;
    Character chi_;
    int bound_;
    int offset_;
    std::vector<BasisVec> basis_;
    std::map<Letters, size_t> index_;
};

// Lambda(K_{beta_i})^2 != -q^{-2(rho,beta_i)} for every i; decides whether the
// anticentre contributes to the annihilator beyond the centre.
inline bool annihilation_criterion(const RootData& roots, const Character& chi) {
    for (int i = 1; i <= roots.rank(); ++i) {
        long t = roots.rho().twice[static_cast<size_t>(i - 1)];
        Scalar lhs = chi.values[static_cast<size_t>(i - 1)].pow(2) + Scalar::v_pow(-2 * t);
        if (lhs.is_zero()) return false;
    }
    return true;
}

// annihilation of the whole safe window by the anticentral element, only
// meaningful for degenerate characters
inline bool degenerate_annihilation_check(const VermaModule& M, const Element& anticentral) {
    if (annihilation_criterion(M.algebra().roots(), M.character()))
        throw domain_error("annihilation check needs a degenerate character");
    return M.annihilates_window(anticentral);
}

} // namespace ospq

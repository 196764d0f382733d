#pragma once

#include "ospq/algebra.hpp"

namespace ospq {

// The grading involution x -> xi_mu * x on mu-homogeneous components.  It is
// applied word by word; every normal word is homogeneous for the letter-marker
// grading, so no decomposition step is needed.
inline Element psi(const Algebra& A, const Element& x) {
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Gamma m = A.mu_class(w);
        NormalWord nw = w;
        nw.gamma = w.gamma + m;
        // xi_m crosses the F-letters on its way to the normal position
        Scalar nc = pair_mod2(m, A.weight_of_letters(w.f)) ? -c : c;
        out.add(std::move(nw), nc);
    }
    return out;
}

// Psi(ab) = (-1)^{(nu(a),mu(b))} Psi(a) Psi(b) for a weight-homogeneous and
// b marker-homogeneous; an executable identity.
inline bool psi_sign_check(const Algebra& A, const Element& a, const Element& b) {
    auto na = A.grade_nu(a);
    auto mb = A.grade_mu(b);
    if (!na || !mb) throw domain_error("psi sign law needs homogeneous arguments");
    Element lhs = psi(A, A.mul(a, b));
    Element rhs = A.mul(psi(A, a), psi(A, b));
    if (pair_mod2(*mb, *na)) rhs = -rhs;
    return lhs == rhs;
}

// twisted generators e_i, f_i, k_mu
inline Element bar_e(const Algebra& A, int i) { return psi(A, A.E(i)); }
inline Element bar_f(const Algebra& A, int i) { return psi(A, A.F(i)); }
inline Element bar_k(const Algebra& A, const Weight& mu) { return psi(A, A.K(mu)); }

// Membership in the twisted copy of the untwisted algebra: every word must
// carry exactly its marker class in the sign-group slot.
inline bool in_bar(const Algebra& A, const Element& x) {
    for (const auto& [w, c] : x.terms())
        if (!(w.gamma == A.mu_class(w))) return false;
    return true;
}

} // namespace ospq

#pragma once

#include <vector>

#include "ospq/adjoint.hpp"
#include "ospq/torus.hpp"
#include "ospq/zhang.hpp"

namespace ospq {

struct CentralElement {
    Element z;
    OrbitResult orbit;
};

// Unique central element of the adjoint submodule generated by K_{-2 lambda},
// found as the kernel of the commutator map on the closed truncated orbit and
// normalized so the coefficient of K_{-2 lambda} is q^{-2(rho,lambda)}.
//
// The orbit closure is the grading cut that makes the kernel one-dimensional:
// a too-small window reports no-solution, a non-closing one reports that the
// window did not close, and a kernel of dimension above one is reported as
// non-uniqueness.  Nothing is resolved silently.
inline CentralElement solve_central_full(const Algebra& A, const Weight& two_lambda,
                                         int height_bound) {
    OrbitResult orbit = ad_orbit_span(A, two_lambda, height_bound);
    if (!orbit.stabilized)
        throw solve_error("central solve: ansatz window did not close at height " +
                          std::to_string(height_bound));

    std::vector<Element> gens;
    for (int i = 1; i <= A.rank(); ++i) {
        gens.push_back(A.E(i));
        gens.push_back(A.F(i));
        gens.push_back(A.K(A.roots().beta(i)));
    }

    // stack the commutator images of every basis vector over all generators
    std::vector<std::vector<Scalar>> rows;
    for (const Element& g : gens) {
        std::vector<Element> images;
        images.reserve(orbit.basis.size());
        for (const Element& b : orbit.basis) images.push_back(A.commutator(b, g));
        for (auto& r : equations_from_images(images)) rows.push_back(std::move(r));
    }

    auto kernel = kernel_basis(std::move(rows), orbit.basis.size());
    if (kernel.empty()) throw solve_error("central solve: no solution in the window");
    if (kernel.size() > 1)
        throw solve_error("central solve: solution space of dimension " +
                          std::to_string(kernel.size()) + ", window too large");

    Element z;
    for (size_t k = 0; k < orbit.basis.size(); ++k)
        z.add(orbit.basis[k].scaled(kernel[0][k]));

    NormalWord seed_word{Letters{}, -two_lambda, Gamma::zero(A.rank()), Letters{}};
    Scalar lead = z.coefficient(seed_word);
    if (lead.is_zero())
        throw solve_error("central solve: seed coefficient vanished");
    long p4 = pair4(A.roots().rho(), two_lambda);
    if (p4 % 2 != 0) throw solve_error("central solve: non-integral normalization exponent");
    z = z.scaled(Scalar::v_pow(-p4 / 2) / lead);

    // the definitional certificate: all residuals vanish symbolically
    for (int i = 1; i <= A.rank(); ++i) {
        if (!A.commutator(z, A.E(i)).is_zero() || !A.commutator(z, A.F(i)).is_zero() ||
            !A.commutator(z, A.K(A.roots().beta(i))).is_zero() ||
            !A.commutator(z, A.xi(Gamma::of(A.roots().beta(i)))).is_zero())
            throw solve_error("central solve: residual is not zero");
    }
    return CentralElement{std::move(z), std::move(orbit)};
}

inline Element solve_central(const Algebra& A, const Weight& two_lambda, int height_bound) {
    return solve_central_full(A, two_lambda, height_bound).z;
}

// Product form of the Harish-Chandra image of the central element attached to
// the last fundamental weight: prod_i (q^{-(rho,beta_i)} K_{-beta_i} +
// q^{(rho,beta_i)} K_{beta_i}), a 2^l-term expansion.
inline TorusElement hc_minuscule_product(const Algebra& A) {
    const RootData& R = A.roots();
    TorusElement acc;
    acc.add(Weight::zero(A.rank()), Gamma::zero(A.rank()), Scalar::one());
    for (int i = 1; i <= A.rank(); ++i) {
        long e2 = pair4(R.rho(), R.beta(i)) / 2; // 2*(rho,beta_i), an integer exponent of v
        TorusElement factor;
        factor.add(-R.beta(i), Gamma::zero(A.rank()), Scalar::v_pow(-e2));
        factor.add(R.beta(i), Gamma::zero(A.rank()), Scalar::v_pow(e2));
        acc = torus_mul(acc, factor);
    }
    return acc;
}

inline bool hc_formula_check(const Algebra& A, int height_bound) {
    Element z = solve_central(A, A.roots().omega(A.rank()), height_bound);
    return upsilon(z) == hc_minuscule_product(A);
}

// The anticentral generator: xi times the central element of the last
// fundamental weight.  Verified to anticommute with the odd generators and to
// commute with the even ones before it is returned.
inline Element solve_anticentral(const Algebra& A, int height_bound) {
    int l = A.rank();
    Element z = solve_central(A, A.roots().omega(l), height_bound);
    Element s = A.mul(A.xi(Gamma::of(A.roots().omega(l))), z);

    if (!A.anticommutator(s, bar_e(A, l)).is_zero() ||
        !A.anticommutator(s, bar_f(A, l)).is_zero())
        throw solve_error("anticentral element fails to anticommute with the odd generators");
    for (int i = 1; i < l; ++i)
        if (!A.commutator(s, bar_e(A, i)).is_zero() ||
            !A.commutator(s, bar_f(A, i)).is_zero())
            throw solve_error("anticentral element fails to commute with even generators");
    for (int i = 1; i <= l; ++i)
        if (!A.commutator(s, bar_k(A, A.roots().beta(i))).is_zero())
            throw solve_error("anticentral element fails to commute with the twisted torus");
    return s;
}

} // namespace ospq

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ospq/errors.hpp"
#include "ospq/gauss.hpp"

namespace ospq {

// Lattice point of the weight lattice of type B_l, stored as twice-coordinates
// in the orthonormal basis beta_1..beta_l: twice[i] = 2 * (coordinate of
// beta_{i+1}).  Half-integral coordinates stay exact this way.
//
// Membership: all twice[i] of equal parity <=> weight lattice of the even
// root system; all twice[i] even <=> integral lattice spanned by the beta_i.
struct Weight {
    std::vector<int> twice;

    Weight() = default;
    explicit Weight(std::vector<int> t) : twice(std::move(t)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(twice.size()); }
    bool is_zero() const {
        for (int t : twice)
            if (t != 0) return false;
        return true;
    }

    // all coordinates integral (twice-coordinates even)
    bool is_integral() const {
        for (int t : twice)
            if (t & 1) return false;
        return true;
    }
    // all twice-coordinates of one parity
    bool in_weight_lattice() const {
        for (int t : twice)
            if (((t ^ twice[0]) & 1) != 0) return false;
        return true;
    }

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < twice.size(); ++i) r.twice[i] += o.twice[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < twice.size(); ++i) r.twice[i] -= o.twice[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& t : r.twice) t = -t;
        return r;
    }
    Weight scaled(int n) const {
        Weight r = *this;
        for (auto& t : r.twice) t *= n;
        return r;
    }

    bool operator==(const Weight& o) const { return twice == o.twice; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return twice < o.twice; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < twice.size(); ++i)
            s += (i ? "," : "") + std::to_string(twice[i]);
        return s + "]";
    }
};

// 4*(lambda,mu); always an integer in twice-coordinates.
inline long pair4(const Weight& a, const Weight& b) {
    long s = 0;
    for (size_t i = 0; i < a.twice.size(); ++i)
        s += static_cast<long>(a.twice[i]) * b.twice[i];
    return s;
}

// (lambda,mu) as an exact rational.
inline Rat bilinear(const Weight& a, const Weight& b) {
    Rat r(pair4(a, b), 4);
    r.canonicalize();
    return r;
}

// (lambda,mu) when it is known to be an integer (e.g. one argument integral
// and the other in the weight lattice with the right parity).
inline long bilinear_int(const Weight& a, const Weight& b) {
    long p = pair4(a, b);
    if (p % 4 != 0) throw domain_error("bilinear form value is not an integer");
    return p / 4;
}

// <lambda,mu> = 2(lambda,mu)/(mu,mu); mu must be non-isotropic.
inline Rat cartan_pair(const Weight& a, const Weight& b) {
    long bb = pair4(b, b);
    if (bb == 0) throw domain_error("Cartan pairing against an isotropic weight");
    Rat r(2 * pair4(a, b), bb);
    r.canonicalize();
    return r;
}

// <lambda,mu> when it is an integer (always the case for pairs of roots).
inline long cartan_int(const Weight& a, const Weight& b) {
    Rat r = cartan_pair(a, b);
    if (r.get_den() != 1) throw domain_error("Cartan pairing is not an integer");
    return r.get_num().get_si();
}

// Class of an integral weight modulo twice the integral lattice, stored as one
// bit per beta coordinate.  The group is 2-torsion under componentwise xor.
struct Gamma {
    std::vector<uint8_t> bits;

    Gamma() = default;
    explicit Gamma(std::vector<uint8_t> b) : bits(std::move(b)) {}
    static Gamma zero(int rank) { return Gamma(std::vector<uint8_t>(rank, 0)); }
    // reduction of an integral weight
    static Gamma of(const Weight& w) {
        if (!w.is_integral()) throw domain_error("Gamma class of a non-integral weight");
        Gamma g;
        g.bits.reserve(w.twice.size());
        for (int t : w.twice) g.bits.push_back(static_cast<uint8_t>((t / 2) & 1));
        return g;
    }

    int rank() const { return static_cast<int>(bits.size()); }
    bool is_zero() const {
        for (auto b : bits)
            if (b) return false;
        return true;
    }
    Gamma operator+(const Gamma& o) const {
        Gamma r = *this;
        for (size_t i = 0; i < bits.size(); ++i) r.bits[i] ^= o.bits[i];
        return r;
    }
    // any representative in the integral lattice
    Weight lift() const {
        std::vector<int> t;
        t.reserve(bits.size());
        for (auto b : bits) t.push_back(2 * b);
        return Weight(t);
    }

    bool operator==(const Gamma& o) const { return bits == o.bits; }
    bool operator!=(const Gamma& o) const { return !(*this == o); }
    bool operator<(const Gamma& o) const { return bits < o.bits; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < bits.size(); ++i)
            s += (i ? "," : "") + std::to_string(int(bits[i]));
        return s + "]";
    }
};

// (gamma, nu) mod 2 for an integral weight nu.
inline int pair_mod2(const Gamma& g, const Weight& nu) {
    if (!nu.is_integral()) throw domain_error("parity pairing needs an integral weight");
    int s = 0;
    for (size_t i = 0; i < g.bits.size(); ++i) s += g.bits[i] * ((nu.twice[i] / 2) & 1);
    return s & 1;
}

// (nu, nu') mod 2 for integral weights.
inline int pair_mod2(const Weight& a, const Weight& b) {
    if (!a.is_integral() || !b.is_integral())
        throw domain_error("parity pairing needs integral weights");
    int s = 0;
    for (size_t i = 0; i < a.twice.size(); ++i)
        s += ((a.twice[i] / 2) & 1) * ((b.twice[i] / 2) & 1);
    return s & 1;
}

inline int pair_mod2(const Gamma& a, const Gamma& b) {
    int s = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) s += a.bits[i] * b.bits[i];
    return s & 1;
}

// Signed permutation w of the basis vectors: w(beta_j) = sign[j]*beta_{image[j]}
// (0-based internally; printed 1-based).
struct WeylElement {
    std::vector<int> image;
    std::vector<int8_t> sign;

    static WeylElement identity(int rank) {
        WeylElement w;
        w.image.resize(rank);
        std::iota(w.image.begin(), w.image.end(), 0);
        w.sign.assign(rank, 1);
        return w;
    }

    int rank() const { return static_cast<int>(image.size()); }

    Weight apply(const Weight& lam) const {
        Weight r = Weight::zero(rank());
        for (int j = 0; j < rank(); ++j) r.twice[image[j]] = sign[j] * lam.twice[j];
        return r;
    }

    // (this o other): apply other first
    WeylElement compose(const WeylElement& other) const {
        WeylElement r;
        r.image.resize(rank());
        r.sign.resize(rank());
        for (int j = 0; j < rank(); ++j) {
            r.image[j] = image[other.image[j]];
            r.sign[j] = static_cast<int8_t>(other.sign[j] * sign[other.image[j]]);
        }
        return r;
    }

    WeylElement inverse() const {
        WeylElement r;
        r.image.resize(rank());
        r.sign.resize(rank());
        for (int j = 0; j < rank(); ++j) {
            r.image[image[j]] = j;
            r.sign[image[j]] = sign[j];
        }
        return r;
    }

    bool operator==(const WeylElement& o) const { return image == o.image && sign == o.sign; }

    std::string str() const {
        std::string s = "[";
        for (int j = 0; j < rank(); ++j) {
            if (j) s += ", ";
            s += "(" + std::to_string(image[j] + 1) + ", " + (sign[j] > 0 ? "+1" : "-1") + ")";
        }
        return s + "]";
    }
};

enum class RhoConvention { HalfSum, LiteralSum };

// Root data of type B_l: both root systems, rho, simple roots, Weyl group
// generators, and the maps eta and parity tying the lattices to Gamma.
class RootData {
  public:
    explicit RootData(int rank, RhoConvention conv = RhoConvention::HalfSum)
        : rank_(rank), conv_(conv) {
        if (rank < 1) throw domain_error("rank must be at least 1");
        // positive roots of the even-lattice system: beta_i - beta_j,
        // beta_i + beta_j (i<j), beta_i
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                Weight d = Weight::zero(rank), s = Weight::zero(rank);
                d.twice[i] = 2;
                d.twice[j] = -2;
                s.twice[i] = 2;
                s.twice[j] = 2;
                pos_roots_.push_back(d);
                pos_roots_.push_back(s);
            }
        for (int i = 0; i < rank; ++i) {
            Weight b = Weight::zero(rank);
            b.twice[i] = 2;
            pos_roots_.push_back(b);
        }
        // super system: short roots beta_i doubled, the odd roots are beta_i
        for (const Weight& r : pos_roots_) {
            bool is_short = pair4(r, r) == 4;
            pos_roots_super_.push_back(is_short ? r.scaled(2) : r);
        }
        Weight sum = Weight::zero(rank);
        for (const Weight& r : pos_roots_) sum = sum + r;
        rho_ = (conv == RhoConvention::HalfSum)
                   ? Weight([&] {
                         std::vector<int> t(rank);
                         for (int i = 0; i < rank; ++i) t[i] = sum.twice[i] / 2;
                         return t;
                     }())
                   : sum;
    }

    int rank() const { return rank_; }
    RhoConvention rho_convention() const { return conv_; }
    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    const std::vector<Weight>& positive_roots_super() const { return pos_roots_super_; }

    // alpha_i = beta_i - beta_{i+1}, alpha_l = beta_l (1-based index)
    Weight simple_root(int i) const {
        check_index(i);
        Weight a = Weight::zero(rank_);
        a.twice[i - 1] = 2;
        if (i < rank_) a.twice[i] = -2;
        return a;
    }

    Weight beta(int i) const {
        check_index(i);
        Weight b = Weight::zero(rank_);
        b.twice[i - 1] = 2;
        return b;
    }

    // omega_i = beta_1 + ... + beta_i
    Weight omega(int i) const {
        check_index(i);
        Weight w = Weight::zero(rank_);
        for (int j = 0; j < i; ++j) w.twice[j] = 2;
        return w;
    }

    // reflection in the simple root alpha_i
    WeylElement simple_reflection(int i) const {
        check_index(i);
        WeylElement w = WeylElement::identity(rank_);
        if (i < rank_) {
            std::swap(w.image[i - 1], w.image[i]);
        } else {
            w.sign[rank_ - 1] = -1;
        }
        return w;
    }

    // reflection in an arbitrary root (+-beta_i +- beta_j or +-beta_i)
    WeylElement reflection(const Weight& root) const {
        long rr = pair4(root, root);
        if (rr == 0) throw domain_error("reflection in an isotropic weight");
        WeylElement w = WeylElement::identity(rank_);
        int hits = 0;
        for (int j = 0; j < rank_; ++j) {
            Weight b = Weight::zero(rank_);
            b.twice[j] = 2;
            // s(beta_j) = beta_j - <beta_j,root> root
            long c2 = 2 * pair4(b, root);
            if (c2 % rr != 0) throw domain_error("not a root of the system");
            long c = c2 / rr;
            Weight img = b - root.scaled(static_cast<int>(c));
            int where = -1, sgn = 0;
            for (int k = 0; k < rank_; ++k) {
                if (img.twice[k] == 2) { where = k; sgn = 1; }
                if (img.twice[k] == -2) { where = k; sgn = -1; }
            }
            if (where < 0) throw domain_error("not a root of the system");
            w.image[j] = where;
            w.sign[j] = static_cast<int8_t>(sgn);
            hits += (where == j && sgn == 1) ? 0 : 1;
        }
        (void)hits;
        return w;
    }

    // dot action w.lambda = w(lambda + rho) - rho under the configured rho
    Weight dot(const WeylElement& w, const Weight& lam) const {
        return w.apply(lam + rho_) - rho_;
    }

    // eta: expand an integral weight in the simple-root basis, then send the
    // i-th simple root to beta_{i+1} (beta_{l+1} = 0), reducing mod 2
    Gamma eta(const Weight& nu) const {
        if (!nu.is_integral()) throw domain_error("eta needs an integral weight");
        // alpha-coordinates n_i are the partial sums of the beta-coordinates
        Gamma g = Gamma::zero(rank_);
        int partial = 0;
        for (int i = 0; i < rank_ - 1; ++i) {
            partial += nu.twice[i] / 2;
            g.bits[i + 1] = static_cast<uint8_t>(partial & 1);
        }
        return g;
    }

    // |nu| = (nu, omega_l) mod 2
    int parity(const Weight& nu) const {
        if (!nu.is_integral()) throw domain_error("parity needs an integral weight");
        int s = 0;
        for (int t : nu.twice) s += (t / 2) & 1;
        return s & 1;
    }

    // the mod-2 identity (nu,eta(nu')) + (eta(nu),nu') + (nu,nu') = |nu||nu'|
    bool sign_identity(const Weight& nu, const Weight& nup) const {
        int lhs = (pair_mod2(eta(nup), nu) + pair_mod2(eta(nu), nup) + pair_mod2(nu, nup)) & 1;
        int rhs = parity(nu) * parity(nup);
        return lhs == (rhs & 1);
    }

    bool is_dominant(const Weight& lam) const {
        for (int i = 1; i <= rank_; ++i)
            if (pair4(lam, simple_root(i)) < 0) return false;
        return true;
    }

  private:
    void check_index(int i) const {
        if (i < 1 || i > rank_) throw domain_error("index out of range 1..l");
    }

    int rank_;
    RhoConvention conv_;
    Weight rho_;
    std::vector<Weight> pos_roots_;
    std::vector<Weight> pos_roots_super_;
};

} // namespace ospq

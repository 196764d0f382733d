#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospq/element.hpp"
#include "ospq/serre.hpp"
#include "ospq/weights.hpp"

namespace ospq {

inline size_t memo_budget_from_env() {
    if (const char* s = std::getenv("OSPQ_MEMO_BUDGET")) {
        long v = std::atol(s);
        if (v > 0) return static_cast<size_t>(v);
    }
    return size_t(1) << 22;
}

// The extended quantum enveloping algebra of type B_l with the 2-torsion sign
// group adjoined to the torus.  Elements are kept in triangular normal form
// F-word . K . xi . E-word; multiplication straightens letter by letter and
// Serre-reduces both letter words of every resulting term.
//
// All operations are pure; the memoization caches behave as pure lookups and
// are guarded for concurrent use.
class Algebra {
  public:
    explicit Algebra(int rank, RhoConvention conv = RhoConvention::HalfSum)
        : roots_(rank, conv),
          budget_(memo_budget_from_env()),
          reducer_(roots_, &memo_entries_, budget_),
          ef_inverse_((Scalar::q() - Scalar::q_pow(-1)).inverse()) {}

    int rank() const { return roots_.rank(); }
    const RootData& roots() const { return roots_; }

    // ---- generators -------------------------------------------------------

    Element one() const { return Element::term(NormalWord::empty(rank()), Scalar::one()); }
    Element scalar(const Scalar& c) const {
        return Element::term(NormalWord::empty(rank()), c);
    }

    Element E(int i) const {
        check_index(i);
        NormalWord w = NormalWord::empty(rank());
        w.e.push_back(static_cast<uint8_t>(i));
        return Element::term(std::move(w), Scalar::one());
    }

    Element F(int i) const {
        check_index(i);
        NormalWord w = NormalWord::empty(rank());
        w.f.push_back(static_cast<uint8_t>(i));
        return Element::term(std::move(w), Scalar::one());
    }

    Element K(const Weight& mu) const {
        if (static_cast<int>(mu.twice.size()) != rank())
            throw domain_error("torus weight of wrong rank");
        if (!mu.is_integral())
            throw domain_error("torus weight must lie in the integral lattice");
        NormalWord w = NormalWord::empty(rank());
        w.torus = mu;
        return Element::term(std::move(w), Scalar::one());
    }

    Element xi(const Gamma& g) const {
        if (g.rank() != rank()) throw domain_error("sign-group element of wrong rank");
        NormalWord w = NormalWord::empty(rank());
        w.gamma = g;
        return Element::term(std::move(w), Scalar::one());
    }

    // E/F word on one side as an element (the word is Serre-reduced)
    Element word_element(const Letters& letters, bool e_side) const {
        Element out;
        for (const auto& [std_word, c] : reducer_.reduce(letters)) {
            NormalWord w = NormalWord::empty(rank());
            (e_side ? w.e : w.f) = std_word;
            out.add(std::move(w), c);
        }
        return out;
    }

    // ---- multiplication ----------------------------------------------------

    Element mul(const Element& a, const Element& b) const {
        Element out;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [w, cw] : b.terms()) out.add(mul_words(u, w).scaled(cu * cw));
        return out;
    }

    Element mul(const Element& a, const Element& b, const Element& c) const {
        return mul(mul(a, b), c);
    }

    Element commutator(const Element& a, const Element& b) const {
        return mul(a, b) - mul(b, a);
    }
    Element anticommutator(const Element& a, const Element& b) const {
        return mul(a, b) + mul(b, a);
    }

    Element pow(const Element& a, int n) const {
        Element r = one();
        for (int k = 0; k < n; ++k) r = mul(r, a);
        return r;
    }

    static bool is_zero(const Element& a) { return a.is_zero(); }

    // ---- gradations ---------------------------------------------------------

    Weight weight_of_letters(const Letters& ls) const {
        Weight w = Weight::zero(rank());
        for (uint8_t i : ls) w = w + roots_.simple_root(i);
        return w;
    }

    // weight gradation
    Weight nu(const NormalWord& w) const {
        return weight_of_letters(w.e) - weight_of_letters(w.f);
    }

    // grading by letter markers: E_i -> beta_{i+1}, F_i -> beta_i, K_mu -> mu
    Gamma mu_class(const NormalWord& w) const {
        Gamma g = Gamma::of(w.torus);
        for (uint8_t i : w.e)
            if (i < rank()) g.bits[i] ^= 1;
        for (uint8_t i : w.f) g.bits[i - 1] ^= 1;
        return g;
    }

    // grading with E_i of degree zero: F_i -> alpha_i, K_mu -> mu
    Gamma delta_class(const NormalWord& w) const {
        return Gamma::of(weight_of_letters(w.f) + w.torus);
    }

    int z2_grade(const NormalWord& w) const { return roots_.parity(nu(w)); }

    template <typename Grade, typename Fn>
    std::optional<Grade> homogeneous_grade(const Element& a, Fn&& grade_of) const {
        std::optional<Grade> g;
        for (const auto& [w, c] : a.terms()) {
            Grade gw = grade_of(w);
            if (!g)
                g = gw;
            else if (!(*g == gw))
                return std::nullopt;
        }
        return g;
    }

    std::optional<Weight> grade_nu(const Element& a) const {
        if (a.is_zero()) return Weight::zero(rank());
        return homogeneous_grade<Weight>(a, [&](const NormalWord& w) { return nu(w); });
    }
    std::optional<Gamma> grade_mu(const Element& a) const {
        if (a.is_zero()) return Gamma::zero(rank());
        return homogeneous_grade<Gamma>(a, [&](const NormalWord& w) { return mu_class(w); });
    }
    std::optional<Gamma> grade_delta(const Element& a) const {
        if (a.is_zero()) return Gamma::zero(rank());
        return homogeneous_grade<Gamma>(a, [&](const NormalWord& w) { return delta_class(w); });
    }
    std::optional<int> grade_z2(const Element& a) const {
        if (a.is_zero()) return 0;
        return homogeneous_grade<int>(a, [&](const NormalWord& w) { return z2_grade(w); });
    }

    // even/odd parts of the weight-parity grading
    std::pair<Element, Element> z2_split(const Element& a) const {
        Element even, odd;
        for (const auto& [w, c] : a.terms()) (z2_grade(w) ? odd : even).add(w, c);
        return {even, odd};
    }

    // mu = delta + eta(nu), checked word by word
    bool bigrade_compatible(const Element& a) const {
        for (const auto& [w, c] : a.terms())
            if (!(mu_class(w) == delta_class(w) + roots_.eta(nu(w)))) return false;
        return true;
    }

    // ---- Serre reduction as a public operation -----------------------------

    Element serre_reduce(const Letters& word, bool e_side) const {
        return word_element(word, e_side);
    }

    std::vector<Letters> standard_words(const std::vector<int>& multideg) const {
        return reducer_.standard_words(multideg);
    }

    // all standard words of height <= bound, any multidegree
    std::vector<Letters> standard_words_upto(int height_bound) const {
        std::vector<Letters> out;
        std::vector<int> deg(static_cast<size_t>(rank()), 0);
        multideg_rec(deg, 0, height_bound, out);
        return out;
    }

    size_t memo_entries() const { return memo_entries_; }

  private:
    void multideg_rec(std::vector<int>& deg, size_t pos, int left,
                      std::vector<Letters>& out) const {
        if (pos == deg.size()) {
            for (auto& w : reducer_.standard_words(deg)) out.push_back(std::move(w));
            return;
        }
        for (int c = 0; c <= left; ++c) {
            deg[pos] = c;
            multideg_rec(deg, pos + 1, left - c, out);
        }
        deg[pos] = 0;
    }

    void check_index(int i) const {
        if (i < 1 || i > rank()) throw domain_error("generator index out of range 1..l");
    }

    // ---- straightening core -------------------------------------------------

    struct Mid {
        Letters f;
        Weight torus;
        Letters e;
        Scalar c;
    };

    // E-word times F-word, straightened to a sum of F.K.E pieces (no Serre
    // reduction here; letter words pass through as they come)
    const std::vector<Mid>& ef_core(const Letters& eword, const Letters& fword) const {
        std::lock_guard<std::mutex> lock(ef_mu_);
        auto key = std::make_pair(eword, fword);
        auto it = ef_cache_.find(key);
        if (it != ef_cache_.end()) return it->second;

        enum Kind : uint8_t { LF = 0, LK = 1, LE = 2 };
        struct Let {
            Kind kind;
            uint8_t idx;
            Weight mu;
        };
        struct Item {
            Scalar c;
            std::vector<Let> seq;
        };

        std::vector<Item> work;
        {
            Item start{Scalar::one(), {}};
            for (uint8_t i : eword) start.seq.push_back({LE, i, Weight()});
            for (uint8_t i : fword) start.seq.push_back({LF, i, Weight()});
            work.push_back(std::move(start));
        }

        std::vector<Mid> done;
        while (!work.empty()) {
            Item cur = std::move(work.back());
            work.pop_back();
            size_t bad = cur.seq.size();
            for (size_t i = 0; i + 1 < cur.seq.size(); ++i) {
                Kind a = cur.seq[i].kind, b = cur.seq[i + 1].kind;
                if (a > b || (a == LK && b == LK)) {
                    bad = i;
                    break;
                }
            }
            if (bad == cur.seq.size()) {
                Mid m{{}, Weight::zero(rank()), {}, cur.c};
                for (const Let& l : cur.seq) {
                    if (l.kind == LF) m.f.push_back(l.idx);
                    else if (l.kind == LE) m.e.push_back(l.idx);
                    else m.torus = m.torus + l.mu;
                }
                done.push_back(std::move(m));
                continue;
            }

            const Let x = cur.seq[bad], y = cur.seq[bad + 1];
            auto swapped = [&](Scalar factor) {
                Item n = cur;
                std::swap(n.seq[bad], n.seq[bad + 1]);
                n.c *= factor;
                return n;
            };
            if (x.kind == LE && y.kind == LF) {
                work.push_back(swapped(Scalar::one()));
                if (x.idx == y.idx) {
                    Weight alpha = roots_.simple_root(x.idx);
                    for (int s : {+1, -1}) {
                        Item n = cur;
                        n.seq.erase(n.seq.begin() + static_cast<long>(bad),
                                    n.seq.begin() + static_cast<long>(bad) + 2);
                        n.seq.insert(n.seq.begin() + static_cast<long>(bad),
                                     Let{LK, 0, s > 0 ? alpha : -alpha});
                        n.c *= (s > 0) ? ef_inverse_ : -ef_inverse_;
                        work.push_back(std::move(n));
                    }
                }
            } else if (x.kind == LE && y.kind == LK) {
                long p = bilinear_int(y.mu, roots_.simple_root(x.idx));
                work.push_back(swapped(Scalar::q_pow(-p)));
            } else if (x.kind == LK && y.kind == LF) {
                long p = bilinear_int(x.mu, roots_.simple_root(y.idx));
                work.push_back(swapped(Scalar::q_pow(-p)));
            } else { // K K
                Item n = cur;
                n.seq[bad].mu = x.mu + y.mu;
                n.seq.erase(n.seq.begin() + static_cast<long>(bad) + 1);
                work.push_back(std::move(n));
            }
        }

        // merge identical pieces for a stable result
        std::map<std::pair<std::pair<Letters, Weight>, Letters>, Scalar> merged;
        for (auto& m : done) {
            auto k = std::make_pair(std::make_pair(m.f, m.torus), m.e);
            auto [slot, fresh] = merged.emplace(std::move(k), m.c);
            if (!fresh) slot->second += m.c;
        }
        std::vector<Mid> out;
        for (auto& [k, c] : merged)
            if (!c.is_zero()) out.push_back(Mid{k.first.first, k.first.second, k.second, c});

        memo_entries_ += 1;
        if (memo_entries_ > budget_)
            throw resource_error("memoization budget exhausted (raise OSPQ_MEMO_BUDGET)");
        return ef_cache_.emplace(std::move(key), std::move(out)).first->second;
    }

    Element mul_words(const NormalWord& u, const NormalWord& w) const {
        Element out;
        Weight eps_b = weight_of_letters(u.e);
        Weight phi_c = weight_of_letters(w.f);
        int s1 = pair_mod2(u.gamma, eps_b + phi_c);
        Gamma gam = u.gamma + w.gamma;

        for (const Mid& mid : ef_core(u.e, w.f)) {
            Scalar c = mid.c;
            if (s1) c = -c;
            c *= Scalar::q_pow(-bilinear_int(u.torus, weight_of_letters(mid.f)));
            c *= Scalar::q_pow(-bilinear_int(w.torus, weight_of_letters(mid.e)));
            if (pair_mod2(gam, weight_of_letters(mid.e))) c = -c;

            Letters ffull = u.f;
            ffull.insert(ffull.end(), mid.f.begin(), mid.f.end());
            Letters efull = mid.e;
            efull.insert(efull.end(), w.e.begin(), w.e.end());
            Weight torus = u.torus + mid.torus + w.torus;

            for (const auto& [fstd, cf] : reducer_.reduce(ffull))
                for (const auto& [estd, ce] : reducer_.reduce(efull))
                    out.add(NormalWord{fstd, torus, gam, estd}, c * cf * ce);
        }
        return out;
    }

    RootData roots_;
    size_t budget_;
    mutable size_t memo_entries_ = 0;
    SerreReducer reducer_;
    Scalar ef_inverse_;
    mutable std::mutex ef_mu_;
    mutable std::map<std::pair<Letters, Letters>, std::vector<Mid>> ef_cache_;
};

} // namespace ospq

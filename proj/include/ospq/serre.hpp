#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "ospq/element.hpp"
#include "ospq/errors.hpp"
#include "ospq/weights.hpp"

namespace ospq {

// Canonical forms in the positive (equivalently negative) half of the algebra,
// computed per simple-root multidegree by linear algebra: the span of the
// two-sided quantum-Serre ideal in that multidegree is echelonized once, and
// any letter word reduces against it to a combination of standard monomials.
//
// The pivot order is degree-lexicographic with letter 1 < letter 2 < ... ;
// within one multidegree that is plain lexicographic order on sequences, and
// the lexicographically greatest word of each ideal row is its pivot.
class SerreReducer {
  public:
    explicit SerreReducer(const RootData& roots, size_t* budget_counter, size_t budget)
        : roots_(roots), counter_(budget_counter), budget_(budget) {}

    using Reduced = std::vector<std::pair<Letters, Scalar>>;

    // word -> equal linear combination of standard monomials
    const Reduced& reduce(const Letters& word) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = word_cache_.find(word);
        if (it != word_cache_.end()) return it->second;

        const Table& table = table_for(multidegree(word));
        std::map<size_t, Scalar> vec{{table.index.at(word), Scalar::one()}};
        auto vit = vec.begin();
        while (vit != vec.end()) {
            auto row = table.rows.find(vit->first);
            if (row == table.rows.end()) {
                ++vit;
                continue;
            }
            size_t pivot = vit->first;
            Scalar c = vit->second;
            vec.erase(vit);
            for (const auto& [idx, rc] : row->second) {
                if (idx == pivot) continue;
                auto [slot, fresh] = vec.emplace(idx, Scalar::zero());
                slot->second -= c * rc;
                if (slot->second.is_zero()) vec.erase(slot);
            }
            // expansions land strictly past the pivot
            vit = vec.upper_bound(pivot);
        }
        Reduced out;
        for (const auto& [idx, c] : vec) out.emplace_back(table.words[idx], c);
        charge(1);
        return word_cache_.emplace(word, std::move(out)).first->second;
    }

    // standard monomials of one multidegree, in word order
    std::vector<Letters> standard_words(const std::vector<int>& multideg) const {
        std::lock_guard<std::mutex> lock(mu_);
        const Table& table = table_for(multideg);
        std::vector<Letters> out;
        for (size_t i = 0; i < table.words.size(); ++i)
            if (!table.rows.count(i)) out.push_back(table.words[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> multidegree(const Letters& word) const {
        std::vector<int> d(static_cast<size_t>(roots_.rank()), 0);
        for (uint8_t i : word) d[i - 1]++;
        return d;
    }

  private:
    using Row = std::vector<std::pair<size_t, Scalar>>; // sparse, ascending index

    struct Table {
        std::vector<Letters> words;      // descending lex: index 0 is greatest
        std::map<Letters, size_t> index;
        std::map<size_t, Row> rows;      // echelon rows keyed by pivot index
    };

    const Table& table_for(const std::vector<int>& multideg) const {
        auto it = tables_.find(multideg);
        if (it != tables_.end()) return it->second;

        Table t;
        Letters sorted;
        for (size_t i = 0; i < multideg.size(); ++i)
            sorted.insert(sorted.end(), static_cast<size_t>(multideg[i]),
                          static_cast<uint8_t>(i + 1));
        Letters w = sorted;
        do {
            t.words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        std::sort(t.words.begin(), t.words.end(), std::greater<Letters>());
        for (size_t i = 0; i < t.words.size(); ++i) t.index[t.words[i]] = i;

        for (const auto& row : ideal_rows(multideg, t)) insert_row(t, row);
        charge(t.words.size() + 1);
        return tables_.emplace(multideg, std::move(t)).first->second;
    }

    // all products (left word) * (Serre element) * (right word) of the degree
    std::vector<std::map<size_t, Scalar>> ideal_rows(const std::vector<int>& multideg,
                                                     const Table& t) const {
        std::vector<std::map<size_t, Scalar>> out;
        int l = roots_.rank();
        for (int i = 1; i <= l; ++i) {
            for (int j = 1; j <= l; ++j) {
                if (i == j) continue;
                long n = 1 - cartan_int(roots_.simple_root(j), roots_.simple_root(i));
                std::vector<int> rel_deg(static_cast<size_t>(l), 0);
                rel_deg[i - 1] = static_cast<int>(n);
                rel_deg[j - 1] += 1;
                std::vector<int> rest(static_cast<size_t>(l));
                bool fits = true;
                for (int k = 0; k < l; ++k) {
                    rest[k] = multideg[k] - rel_deg[k];
                    if (rest[k] < 0) fits = false;
                }
                if (!fits) continue;

                // (alpha_i, alpha_i)/2 = 1 for long roots, 1/2 for the short one
                Scalar base = (i < l) ? Scalar::q() : Scalar::v();
                std::vector<std::pair<Letters, Scalar>> rel;
                for (long k = 0; k <= n; ++k) {
                    Letters seq;
                    seq.insert(seq.end(), static_cast<size_t>(n - k), static_cast<uint8_t>(i));
                    seq.push_back(static_cast<uint8_t>(j));
                    seq.insert(seq.end(), static_cast<size_t>(k), static_cast<uint8_t>(i));
                    Scalar c = q_binomial(n, k, base);
                    if (k & 1) c = -c;
                    rel.emplace_back(std::move(seq), std::move(c));
                }

                for_each_split(rest, [&](const Letters& left, const Letters& right) {
                    std::map<size_t, Scalar> row;
                    for (const auto& [mid, c] : rel) {
                        Letters full = left;
                        full.insert(full.end(), mid.begin(), mid.end());
                        full.insert(full.end(), right.begin(), right.end());
                        auto [slot, fresh] = row.emplace(t.index.at(full), c);
                        if (!fresh) slot->second += c;
                        if (slot->second.is_zero()) row.erase(slot);
                    }
                    if (!row.empty()) out.push_back(std::move(row));
                });
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each_split(const std::vector<int>& deg, Fn&& fn) const {
        // all ways to split a multidegree into an ordered (left, right) pair
        // of words
        std::vector<int> left_deg(deg.size(), 0);
        split_rec(deg, left_deg, 0, fn);
    }

    template <typename Fn>
    void split_rec(const std::vector<int>& deg, std::vector<int>& left_deg, size_t pos,
                   Fn&& fn) const {
        if (pos == deg.size()) {
            std::vector<int> right_deg(deg.size());
            for (size_t k = 0; k < deg.size(); ++k) right_deg[k] = deg[k] - left_deg[k];
            for (const Letters& u : words_of(left_deg))
                for (const Letters& w : words_of(right_deg)) fn(u, w);
            return;
        }
        for (int c = 0; c <= deg[pos]; ++c) {
            left_deg[pos] = c;
            split_rec(deg, left_deg, pos + 1, fn);
        }
        left_deg[pos] = 0;
    }

    std::vector<Letters> words_of(const std::vector<int>& deg) const {
        Letters sorted;
        for (size_t i = 0; i < deg.size(); ++i)
            sorted.insert(sorted.end(), static_cast<size_t>(deg[i]), static_cast<uint8_t>(i + 1));
        std::vector<Letters> out;
        Letters w = sorted;
        do {
            out.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }

    // Gaussian elimination step keeping rows fully reduced against each other.
    void insert_row(Table& t, std::map<size_t, Scalar> row) const {
        while (!row.empty()) {
            size_t pivot = row.begin()->first;
            auto it = t.rows.find(pivot);
            if (it == t.rows.end()) break;
            Scalar c = row.begin()->second;
            row.erase(row.begin());
            for (const auto& [idx, rc] : it->second) {
                if (idx == pivot) continue;
                auto [slot, fresh] = row.emplace(idx, Scalar::zero());
                slot->second -= c * rc;
                if (slot->second.is_zero()) row.erase(slot);
            }
        }
        if (row.empty()) return;
        size_t pivot = row.begin()->first;
        Scalar inv = row.begin()->second.inverse();
        Row stored;
        for (auto& [idx, c] : row) stored.emplace_back(idx, c * inv);
        // back-substitute the new pivot into existing rows
        for (auto& [p, r] : t.rows) {
            auto hit = std::find_if(r.begin(), r.end(),
                                    [&](const auto& pr) { return pr.first == pivot; });
            if (hit == r.end()) continue;
            Scalar c = hit->second;
            std::map<size_t, Scalar> merged(r.begin(), r.end());
            merged.erase(pivot);
            for (const auto& [idx, rc] : stored) {
                if (idx == pivot) continue;
                auto [slot, fresh] = merged.emplace(idx, Scalar::zero());
                slot->second -= c * rc;
                if (slot->second.is_zero()) merged.erase(slot);
            }
            r.assign(merged.begin(), merged.end());
        }
        t.rows.emplace(pivot, std::move(stored));
    }

    void charge(size_t n) const {
        *counter_ += n;
        if (*counter_ > budget_)
            throw resource_error("memoization budget exhausted (raise OSPQ_MEMO_BUDGET)");
    }

    const RootData& roots_;
    size_t* counter_;
    size_t budget_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, Table> tables_;
    mutable std::map<Letters, Reduced> word_cache_;
};

} // namespace ospq

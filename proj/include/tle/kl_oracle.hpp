#pragma once

// Brute-force Kazhdan-Lusztig polynomials on lower Bruhat intervals of W(E_n),
// by the classical recursion. Independent of the Temperley-Lieb machinery;
// used only to cross-check the trace formula for mu.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxeter.hpp"

namespace tle {

struct ResourceLimit : Error {
    using Error::Error;
};

struct KLLimits {
    std::size_t max_length = 12;       // longest w whose column may be computed
    std::size_t max_interval = 200000;  // largest lower interval [e, w] materialized
};

/// Polynomial in q; coefficient i is the coefficient of q^i, no trailing zeros.
using KLPolynomial = std::vector<std::int64_t>;

/// Memoizes group elements, lower intervals and columns P_{., w}. Not
/// thread-safe; use one oracle per worker.
class KLOracle {
public:
    explicit KLOracle(CoxeterGraph g, KLLimits limits = {}) : g_(std::move(g)), limits_(limits) {
        intern(GroupElement::identity(g_), 0);
    }

    const CoxeterGraph& graph() const { return g_; }
    const KLLimits& limits() const { return limits_; }

    /// P_{x,w}; zero when x is not below w.
    KLPolynomial kl_poly(const Word& x, const Word& w) { return kl_poly(element(x), element(w)); }

    /// mu(x,w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, 0 when that is not a nonnegative integer.
    std::int64_t mu(const Word& x, const Word& w) { return mu(element(x), element(w)); }

    /// Interned id of the element represented by a (not necessarily reduced) word.
    int element(const Word& w) {
        g_.check(w);
        int id = 0;
        for (std::size_t i = w.size(); i-- > 0;) id = left_multiply(id, w[i]);
        return id;
    }

    std::size_t length(int id) const { return nodes_[static_cast<std::size_t>(id)].length; }

    KLPolynomial kl_poly(int x, int w) {
        const auto& col = column(w);
        auto it = col.find(x);
        return it == col.end() ? KLPolynomial{} : it->second;
    }

    std::int64_t mu(int x, int w) {
        const std::size_t lx = length(x), lw = length(w);
        if (lw <= lx || (lw - lx) % 2 == 0) return 0;
        return coefficient(kl_poly(x, w), (lw - lx - 1) / 2);
    }

    bool leq(int x, int w) { return column(w).count(x) > 0; }

    /// Sorted ids of the lower interval [e, w].
    const std::vector<int>& interval(int w) {
        if (auto it = intervals_.find(w); it != intervals_.end()) return it->second;
        std::vector<int> out;
        if (w == 0) out = {0};
        else {
            const int s = first_descent(w);
            const int v = left_multiply(w, s);
            std::vector<int> below = interval(v);
            out = below;
            for (int z : below) out.push_back(left_multiply(z, s));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        if (out.size() > limits_.max_interval)
            throw ResourceLimit("Bruhat interval of size " + std::to_string(out.size()) + " exceeds max_interval = " +
                                std::to_string(limits_.max_interval));
        return intervals_.emplace(w, std::move(out)).first->second;
    }

    /// All P_{x,w} for x in [e, w]. With s a left descent of w and v = sw:
    ///   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
    ///             - sum_{z : sz < z, mu(z,v) != 0} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
    /// where c = 1 if sx < x and c = 0 otherwise.
    const std::unordered_map<int, KLPolynomial>& column(int w) {
        if (auto it = columns_.find(w); it != columns_.end()) return it->second;
        if (length(w) > limits_.max_length)
            throw ResourceLimit("element of length " + std::to_string(length(w)) + " exceeds max_length = " +
                                std::to_string(limits_.max_length));
        std::unordered_map<int, KLPolynomial> col;
        if (w == 0) {
            col.emplace(0, KLPolynomial{1});
            return columns_.emplace(w, std::move(col)).first->second;
        }
        const int s = first_descent(w);
        const int v = left_multiply(w, s);
        const std::size_t lw = length(w), lv = length(v);
        const auto& cv = column(v);

        struct Correction {
            std::int64_t mu;
            std::size_t shift;
            const std::unordered_map<int, KLPolynomial>* col;
        };
        std::vector<Correction> corrections;
        for (const auto& [z, pz] : cv) {
            const std::size_t lz = length(z);
            if (z == v || (lv - lz) % 2 == 0) continue;
            if (!has_descent(z, s)) continue;
            const std::int64_t m = coefficient(pz, (lv - lz - 1) / 2);
            if (m != 0) corrections.push_back({m, (lw - lz) / 2, nullptr});
        }
        // columns may be created here; unordered_map references stay valid
        std::size_t k = 0;
        for (const auto& [z, pz] : cv) {
            const std::size_t lz = length(z);
            if (z == v || (lv - lz) % 2 == 0 || !has_descent(z, s)) continue;
            if (coefficient(pz, (lv - lz - 1) / 2) != 0) corrections[k++].col = &column(z);
        }

        for (int x : interval(w)) {
            const int sx = left_multiply(x, s);
            const std::size_t c = length(sx) < length(x) ? 1 : 0;
            KLPolynomial p;
            if (auto it = cv.find(sx); it != cv.end()) add_shifted(p, it->second, 1 - c, 1);
            if (auto it = cv.find(x); it != cv.end()) add_shifted(p, it->second, c, 1);
            for (const auto& corr : corrections) {
                auto it = corr.col->find(x);
                if (it != corr.col->end()) add_shifted(p, it->second, corr.shift, -corr.mu);
            }
            while (!p.empty() && p.back() == 0) p.pop_back();
            if (!p.empty()) col.emplace(x, std::move(p));
        }
        return columns_.emplace(w, std::move(col)).first->second;
    }

    Word reduced_word(int id) const { return nodes_[static_cast<std::size_t>(id)].elt.reduced_word(g_); }

private:
    struct Node {
        GroupElement elt;
        std::size_t length;
        std::vector<int> left;  // cached s * this, -1 when unknown
    };

    static std::int64_t coefficient(const KLPolynomial& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

    static void add_shifted(KLPolynomial& acc, const KLPolynomial& p, std::size_t shift, std::int64_t scale) {
        if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
        for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += scale * p[i];
    }

    int intern(const GroupElement& e, std::size_t len) {
        auto [it, inserted] = index_.try_emplace(e, static_cast<int>(nodes_.size()));
        if (inserted) nodes_.push_back({e, len, std::vector<int>(static_cast<std::size_t>(g_.rank()), -1)});
        return it->second;
    }

    bool has_descent(int id, int s) const { return nodes_[static_cast<std::size_t>(id)].elt.has_left_descent(s); }

    int first_descent(int id) const { return *nodes_[static_cast<std::size_t>(id)].elt.first_left_descent(); }

    int left_multiply(int id, int s) {
        auto& cached = nodes_[static_cast<std::size_t>(id)].left[static_cast<std::size_t>(s)];
        if (cached >= 0) return cached;
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        const std::size_t len = n.elt.has_left_descent(s) ? n.length - 1 : n.length + 1;
        GroupElement e = n.elt.left_multiply(g_, s);
        const int r = intern(e, len);  // may reallocate nodes_
        nodes_[static_cast<std::size_t>(id)].left[static_cast<std::size_t>(s)] = r;
        nodes_[static_cast<std::size_t>(r)].left[static_cast<std::size_t>(s)] = id;
        return r;
    }

    CoxeterGraph g_;
    KLLimits limits_;
    std::vector<Node> nodes_;
    std::unordered_map<GroupElement, int, GroupElementHash> index_;
    std::unordered_map<int, std::vector<int>> intervals_;
    std::unordered_map<int, std::unordered_map<int, KLPolynomial>> columns_;
};

}  // namespace tle

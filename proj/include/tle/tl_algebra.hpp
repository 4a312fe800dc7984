#pragma once

// Monomial-basis arithmetic in TL(E_n), the a-function, and commuting subsets
// of the Coxeter graph (P, the neighbour equivalence and its representatives).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxeter.hpp"

namespace tle {

/// delta^exp * b_elt
struct ScaledMonomial {
    int exp = 0;
    FCElement elt;

    friend bool operator==(const ScaledMonomial&, const ScaledMonomial&) = default;
};

/// A set of pairwise non-adjacent vertices, kept sorted ascending.
class CommutingSet {
public:
    CommutingSet() = default;
    CommutingSet(const CoxeterGraph& g, std::vector<int> vertices) : v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            g.check(v_[i]);
            for (std::size_t j = i + 1; j < v_.size(); ++j)
                if (g.adjacent(v_[i], v_[j]))
                    throw std::invalid_argument("vertices " + std::to_string(v_[i]) + " and " + std::to_string(v_[j]) +
                                                " are adjacent");
        }
    }

    const std::vector<int>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool contains(int s) const { return std::binary_search(v_.begin(), v_.end(), s); }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
        return s + "}";
    }

    friend bool operator==(const CommutingSet&, const CommutingSet&) = default;
    friend auto operator<=>(const CommutingSet& a, const CommutingSet& b) {
        if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
        return a.v_ <=> b.v_;
    }

private:
    std::vector<int> v_;
};

inline FCElement i_of(const CoxeterGraph& g, const CommutingSet& a) {
    for (int s : a.vertices()) g.check(s);
    return FCElement::from_valid_word(g, a.vertices());
}

inline FCElement i_of(const CoxeterGraph& g, const std::vector<int>& vertices) {
    return i_of(g, CommutingSet(g, vertices));
}

/// b_s * (delta^m.exp b_{m.elt}) as a single scaled monomial.
///
/// Let sigma be the first occurrence of s in the heap of w and count the
/// letters adjacent to s that precede it. None: s is a left descent and
/// b_s b_w = delta b_w. Two or more (or no sigma at all): sw is FC. Exactly
/// one, say tau labelled t: the down-set of sigma is {sigma} plus the down-set
/// of tau, so w = a t s u reduced with every letter of a commuting with s, and
/// b_s b_w = b_a (b_s b_t b_s) b_u = b_a (b_s b_u).
inline ScaledMonomial mult_gen_left(const CoxeterGraph& g, int s, const ScaledMonomial& m) {
    g.check(s);
    const Word& w = m.elt.word();
    std::size_t sigma = w.size();
    std::size_t tau = w.size();
    int between = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == s) {
            sigma = i;
            break;
        }
        if (g.adjacent(w[i], s)) {
            ++between;
            tau = i;
        }
    }
    if (sigma < w.size() && between == 0) return {m.exp + 1, m.elt};
    if (sigma == w.size() || between >= 2) {
        Word sw{s};
        sw.insert(sw.end(), w.begin(), w.end());
        return {m.exp, FCElement::from_valid_word(g, sw)};
    }

    // down-set of tau (inclusive), by a backward sweep over the word
    std::vector<bool> down(w.size(), false);
    down[tau] = true;
    for (std::size_t j = tau; j-- > 0;)
        for (std::size_t k = j + 1; k <= tau; ++k)
            if (down[k] && (w[k] == w[j] || g.adjacent(w[k], w[j]))) {
                down[j] = true;
                break;
            }
    Word a, u;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == tau || i == sigma) continue;
        (down[i] ? a : u).push_back(w[i]);
    }
    ScaledMonomial r = mult_gen_left(g, s, {m.exp, FCElement::from_valid_word(g, u)});
    for (std::size_t i = a.size(); i-- > 0;) r = mult_gen_left(g, a[i], r);
    return r;
}

/// b_x b_y = delta^k b_z, folding the letters of x onto b_y from the right.
inline ScaledMonomial product_word(const CoxeterGraph& g, const Word& x, const ScaledMonomial& y) {
    ScaledMonomial r = y;
    for (std::size_t i = x.size(); i-- > 0;) r = mult_gen_left(g, x[i], r);
    return r;
}

inline ScaledMonomial product(const CoxeterGraph& g, const FCElement& x, const FCElement& y) {
    return product_word(g, x.word(), {0, y});
}

/// A maximum antichain of the heap, chosen as the top element of the lattice of
/// maximum antichains (every element as late as possible). Returned as heap
/// indices, ascending.
inline std::vector<std::size_t> top_maximum_antichain(const Heap& h) {
    const std::size_t m = h.size();
    std::vector<std::size_t> best, cur;
    std::size_t best_down = 0;
    auto down_size = [&](const std::vector<std::size_t>& a) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j : a)
                if (i == j || h.less(i, j)) {
                    ++c;
                    break;
                }
        return c;
    };
    auto better = [&](const std::vector<std::size_t>& a) {
        if (a.size() != best.size()) return a.size() > best.size();
        std::size_t d = down_size(a);
        if (d != best_down) return d > best_down;
        Word la, lb;
        for (auto i : a) la.push_back(h.label(i));
        for (auto i : best) lb.push_back(h.label(i));
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        return la < lb;
    };
    // depth-first over antichains in index order
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (better(cur)) {
            best = cur;
            best_down = down_size(best);
        }
        for (std::size_t j = start; j < m; ++j) {
            bool ok = true;
            for (std::size_t i : cur)
                if (h.comparable(i, j)) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur.push_back(j);
                dfs(j + 1);
                cur.pop_back();
            }
        }
    };
    dfs(0);
    return best;
}

struct AntichainDecomposition {
    FCElement x;
    CommutingSet a;
    FCElement y;
};

/// w = x * i(A) * y reduced with #A = a(w): A is the top maximum antichain,
/// x the letters strictly below it, y the remaining letters.
inline AntichainDecomposition max_antichain_decomposition(const CoxeterGraph& g, const FCElement& w) {
    Heap h(g, w);
    auto anti = top_maximum_antichain(h);
    std::vector<bool> in_anti(h.size(), false), below(h.size(), false);
    for (auto j : anti) in_anti[j] = true;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (auto j : anti)
            if (h.less(i, j)) below[i] = true;
    Word xw, yw;
    std::vector<int> av;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (in_anti[i]) av.push_back(h.label(i));
        else if (below[i]) xw.push_back(h.label(i));
        else yw.push_back(h.label(i));
    }
    return {FCElement::from_valid_word(g, xw), CommutingSet(g, av), FCElement::from_valid_word(g, yw)};
}

/// a(w): the width of the heap of w (Dilworth: size minus a maximum matching
/// in the strict comparability graph).
inline std::size_t a_value(const CoxeterGraph& g, const FCElement& w) {
    Heap h(g, w);
    const std::size_t m = h.size();
    std::vector<int> match_right(m, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!h.less(i, j) || seen[j]) continue;
            seen[j] = true;
            if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]), seen)) {
                match_right[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    std::size_t matching = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<bool> seen(m, false);
        if (augment(i, seen)) ++matching;
    }
    return m - matching;
}

/// Every independent vertex set of the graph, including the empty set,
/// ordered by size and then lexicographically.
inline std::vector<CommutingSet> commuting_sets(const CoxeterGraph& g) {
    std::vector<CommutingSet> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int v) {
        if (v == g.rank()) {
            out.emplace_back(g, cur);
            return;
        }
        rec(v + 1);
        for (int u : cur)
            if (g.adjacent(u, v)) return;
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// A and B are neighbours: equal size, and they differ in one adjacent pair.
inline bool are_neighbours(const CoxeterGraph& g, const CommutingSet& a, const CommutingSet& b) {
    if (a.size() != b.size() || a.empty()) return false;
    std::vector<int> only_a, only_b;
    std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(only_a));
    std::set_difference(b.vertices().begin(), b.vertices().end(), a.vertices().begin(), a.vertices().end(),
                        std::back_inserter(only_b));
    return only_a.size() == 1 && only_b.size() == 1 && g.adjacent(only_a[0], only_b[0]);
}

struct PClassPartition {
    std::vector<std::vector<CommutingSet>> classes;  // each sorted; classes sorted by first member
    std::vector<CommutingSet> representatives;       // the P' member of each class, else its first member

    std::size_t class_of(const CommutingSet& a) const {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (std::binary_search(classes[c].begin(), classes[c].end(), a)) return c;
        throw std::invalid_argument("set " + a.to_string() + " is not a commuting set of this graph");
    }
};

/// The explicit class representatives: runs n-1, n-3, ... downward, plus for
/// odd n the set {n-1, n-3, ..., 4} u {0}, plus the empty set.
inline std::vector<CommutingSet> p_prime(const CoxeterGraph& g) {
    const int n = g.rank();
    std::vector<CommutingSet> out;
    const int top = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    for (int big_n = 0; big_n <= top; ++big_n) {
        std::vector<int> s;
        for (int j = 0; j <= big_n; ++j) s.push_back((n - 1) - 2 * j);
        out.emplace_back(g, s);
    }
    if (n % 2 == 1) {
        std::vector<int> s{0};
        for (int v = n - 1; v >= 4; v -= 2) s.push_back(v);
        out.emplace_back(g, s);
    }
    out.emplace_back();
    return out;
}

/// Union-find over the neighbour relation on P.
inline PClassPartition p_classes(const CoxeterGraph& g) {
    auto sets = commuting_sets(g);
    std::vector<std::size_t> parent(sets.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size() && sets[j].size() == sets[i].size(); ++j)
            if (are_neighbours(g, sets[i], sets[j])) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<CommutingSet>> groups;
    for (std::size_t i = 0; i < sets.size(); ++i) groups[find(i)].push_back(sets[i]);
    PClassPartition part;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        part.classes.push_back(std::move(members));
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    auto reps = p_prime(g);
    part.representatives.resize(part.classes.size());
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        part.representatives[c] = part.classes[c].front();
        for (const auto& r : reps)
            if (std::binary_search(part.classes[c].begin(), part.classes[c].end(), r)) part.representatives[c] = r;
    }
    return part;
}

}  // namespace tle

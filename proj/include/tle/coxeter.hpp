#pragma once

// Coxeter graph of type E_n, words, fully commutative elements and their heaps,
// enumeration of W_c(E_n), and Bruhat order on W(E_n).
//
// Vertex numbering: 1, 2, ..., n-1 form a path and vertex 0 hangs off vertex 3.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tle {

using Word = std::vector<int>;

/// Base class of the errors raised on malformed algebraic input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotReduced : Error {
    using Error::Error;
};
struct NotFullyCommutative : Error {
    using Error::Error;
};

class CoxeterGraph {
public:
    explicit CoxeterGraph(int n) : n_(n) {
        if (n < 6) throw std::invalid_argument("E_n requires rank n >= 6, got " + std::to_string(n));
        adj_.assign(static_cast<std::size_t>(n * n), false);
        auto link = [&](int a, int b) {
            adj_[idx(a, b)] = adj_[idx(b, a)] = true;
        };
        for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(0, 3);
    }

    int rank() const { return n_; }

    bool adjacent(int s, int t) const { return adj_[idx(s, t)]; }

    /// m(s,t): 1 on the diagonal, 3 on edges, 2 otherwise.
    int bond(int s, int t) const {
        check(s);
        check(t);
        if (s == t) return 1;
        return adjacent(s, t) ? 3 : 2;
    }

    std::vector<int> neighbours(int s) const {
        check(s);
        std::vector<int> out;
        for (int t = 0; t < n_; ++t)
            if (adjacent(s, t)) out.push_back(t);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (adjacent(a, b)) out.emplace_back(a, b);
        return out;
    }

    bool commute(int s, int t) const { return s != t && !adjacent(s, t); }

    void check(int s) const {
        if (s < 0 || s >= n_)
            throw std::out_of_range("generator " + std::to_string(s) + " out of range for E_" + std::to_string(n_));
    }

    void check(const Word& w) const {
        for (int s : w) check(s);
    }

    friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) { return a.n_ == b.n_; }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

    int n_;
    std::vector<bool> adj_;
};

inline CoxeterGraph build_graph(int n) { return CoxeterGraph(n); }

/// Parses space (or comma) separated generator indices; the empty string is the identity.
inline Word parse_word(std::string_view text) {
    Word w;
    std::string buf(text);
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::istringstream is(buf);
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word token '" + tok + "'");
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("malformed word token '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

inline std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

/// A fully commutative element, stored in left-justified Cartier-Foata form:
/// each layer is a sorted set of pairwise commuting generators, and every
/// letter of a layer has an equal-or-adjacent letter in the previous layer.
/// The element carries no rank; any graph containing its letters interprets it.
class FCElement {
public:
    using Layers = std::vector<std::vector<int>>;

    FCElement() = default;

    const Layers& layers() const { return layers_; }
    std::size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    /// The canonical reduced word: layers read in order.
    const Word& word() const { return word_; }

    friend bool operator==(const FCElement& a, const FCElement& b) { return a.layers_ == b.layers_; }
    friend bool operator<(const FCElement& a, const FCElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.layers_ < b.layers_;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& layer : layers_) {
            for (int s : layer) h = (h ^ static_cast<std::size_t>(s + 1)) * 1099511628211ull;
            h = (h ^ 0xffu) * 1099511628211ull;
        }
        return h;
    }

    std::string to_string() const { return format_word(word_); }

    /// Internal constructor: `w` must already be a reduced word of an FC element.
    static FCElement from_valid_word(const CoxeterGraph& g, const Word& w) {
        FCElement x;
        std::vector<int> level(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            int lv = 0;
            for (std::size_t j = 0; j < i; ++j)
                if (w[j] == w[i] || g.adjacent(w[j], w[i])) lv = std::max(lv, level[j] + 1);
            level[i] = lv;
            if (static_cast<std::size_t>(lv) >= x.layers_.size()) x.layers_.resize(static_cast<std::size_t>(lv) + 1);
            x.layers_[static_cast<std::size_t>(lv)].push_back(w[i]);
        }
        for (auto& layer : x.layers_) {
            std::sort(layer.begin(), layer.end());
            x.word_.insert(x.word_.end(), layer.begin(), layer.end());
        }
        return x;
    }

private:
    Layers layers_;
    Word word_;
};

struct FCElementHash {
    std::size_t operator()(const FCElement& x) const { return x.hash(); }
};

using FCSet = std::unordered_set<FCElement, FCElementHash>;

enum class WordStatus { ReducedFC, NotReduced, NotFullyCommutative };

inline bool is_reduced(const CoxeterGraph& g, const Word& w);

/// Stembridge's criterion in simply-laced form: a word is a reduced word of an
/// FC element iff between any two consecutive occurrences of a generator s
/// there are at least two letters adjacent to s. Zero such letters means the
/// two copies of s cancel; exactly one means a factor s t s with m(s,t)=3.
/// A word that is neither reduced nor FC is reported as NotReduced.
inline WordStatus classify_word(const CoxeterGraph& g, const Word& w) {
    g.check(w);
    bool complex = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int between = 0;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j] == w[i]) {
                if (between == 0) return WordStatus::NotReduced;
                if (between == 1) complex = true;
                break;
            }
            if (g.adjacent(w[i], w[j])) ++between;
        }
    }
    if (!complex) return WordStatus::ReducedFC;
    return is_reduced(g, w) ? WordStatus::NotFullyCommutative : WordStatus::NotReduced;
}

inline FCElement normalize(const CoxeterGraph& g, const Word& w) {
    switch (classify_word(g, w)) {
        case WordStatus::NotReduced:
            throw NotReduced("word '" + format_word(w) + "' is not reduced");
        case WordStatus::NotFullyCommutative:
            throw NotFullyCommutative("word '" + format_word(w) + "' is not fully commutative");
        case WordStatus::ReducedFC:
            break;
    }
    return FCElement::from_valid_word(g, w);
}

inline FCElement identity_element() { return FCElement{}; }

inline FCElement generator(const CoxeterGraph& g, int s) {
    g.check(s);
    return FCElement::from_valid_word(g, Word{s});
}

/// The heap of an FC element: letter occurrences of its canonical word,
/// ordered by the transitive closure of "earlier and equal-or-adjacent label".
class Heap {
public:
    Heap(const CoxeterGraph& g, const FCElement& x) : labels_(x.word()) {
        const std::size_t m = labels_.size();
        below_.assign(m, std::vector<bool>(m, false));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = j; i-- > 0;) {
                if (below_[j][i]) continue;
                if (labels_[i] == labels_[j] || g.adjacent(labels_[i], labels_[j])) {
                    below_[j][i] = true;
                    for (std::size_t k = 0; k < i; ++k)
                        if (below_[i][k]) below_[j][k] = true;
                }
            }
    }

    std::size_t size() const { return labels_.size(); }
    int label(std::size_t i) const { return labels_[i]; }
    const Word& labels() const { return labels_; }

    /// Strict heap order: i < j.
    bool less(std::size_t i, std::size_t j) const { return below_[j][i]; }
    bool comparable(std::size_t i, std::size_t j) const { return i == j || less(i, j) || less(j, i); }

    std::vector<std::size_t> minimal() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < size(); ++j) {
            bool min = true;
            for (std::size_t i = 0; i < j && min; ++i) min = !less(i, j);
            if (min) out.push_back(j);
        }
        return out;
    }
    std::vector<std::size_t> maximal() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i) {
            bool max = true;
            for (std::size_t j = i + 1; j < size() && max; ++j) max = !less(i, j);
            if (max) out.push_back(i);
        }
        return out;
    }

private:
    Word labels_;
    std::vector<std::vector<bool>> below_;  // below_[j][i] <=> i < j
};

enum class Side { Left, Right };

inline std::vector<int> descents(const CoxeterGraph& g, const FCElement& x, Side side) {
    if (x.is_identity()) return {};
    if (side == Side::Left) return x.layers().front();
    Heap h(g, x);
    std::vector<int> out;
    for (std::size_t i : h.maximal()) out.push_back(h.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

inline FCElement inverse(const CoxeterGraph& g, const FCElement& x) {
    Word w(x.word().rbegin(), x.word().rend());
    return FCElement::from_valid_word(g, w);
}

/// x * s when that product is fully commutative and of length l(x)+1.
inline std::optional<FCElement> right_multiply_fc(const CoxeterGraph& g, const FCElement& x, int s) {
    const Word& w = x.word();
    int between = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] == s) {
            if (between < 2) return std::nullopt;
            break;
        }
        if (g.adjacent(w[i], s)) ++between;
    }
    Word ws = w;
    ws.push_back(s);
    return FCElement::from_valid_word(g, ws);
}

/// s * x when that product is fully commutative and of length l(x)+1.
inline std::optional<FCElement> left_multiply_fc(const CoxeterGraph& g, int s, const FCElement& x) {
    const Word& w = x.word();
    int between = 0;
    for (int t : w) {
        if (t == s) {
            if (between < 2) return std::nullopt;
            break;
        }
        if (g.adjacent(t, s)) ++between;
    }
    Word sw;
    sw.reserve(w.size() + 1);
    sw.push_back(s);
    sw.insert(sw.end(), w.begin(), w.end());
    return FCElement::from_valid_word(g, sw);
}

enum class EnumerationOrder { RightBFS, LeftBFS };

/// All FC elements of length <= max_len (every FC element when max_len is empty),
/// each exactly once, sorted by length and then by canonical form.
/// W_c(E_n) is finite for every n, but unbounded runs are refused for n > 8.
inline std::vector<FCElement> enumerate_fc(const CoxeterGraph& g, std::optional<std::size_t> max_len = std::nullopt,
                                           EnumerationOrder order = EnumerationOrder::RightBFS) {
    if (!max_len && g.rank() > 8)
        throw std::invalid_argument("enumeration of W_c(E_n) for n > 8 requires a length bound");
    std::vector<FCElement> out{identity_element()};
    std::vector<FCElement> frontier = out;
    for (std::size_t len = 1; !frontier.empty() && (!max_len || len <= *max_len); ++len) {
        FCSet next;
        for (const auto& x : frontier)
            for (int s = 0; s < g.rank(); ++s) {
                auto y = order == EnumerationOrder::RightBFS ? right_multiply_fc(g, x, s) : left_multiply_fc(g, s, x);
                if (y) next.insert(std::move(*y));
            }
        frontier.assign(next.begin(), next.end());
        std::sort(frontier.begin(), frontier.end());
        out.insert(out.end(), frontier.begin(), frontier.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arbitrary elements of W(E_n), for Bruhat order and the KL oracle.

/// An element w of W(E_n), represented by w(rho) in fundamental-weight
/// coordinates, where rho is the sum of the fundamental weights. The
/// contragredient action is faithful on the Tits cone, so this is injective;
/// the left descents of w are the coordinates that are negative.
class GroupElement {
public:
    GroupElement() = default;

    static GroupElement identity(const CoxeterGraph& g) {
        GroupElement e;
        e.coords_.assign(static_cast<std::size_t>(g.rank()), 1);
        return e;
    }

    static GroupElement from_word(const CoxeterGraph& g, const Word& w) {
        g.check(w);
        GroupElement e = identity(g);
        for (std::size_t i = w.size(); i-- > 0;) e = e.left_multiply(g, w[i]);
        return e;
    }

    GroupElement left_multiply(const CoxeterGraph& g, int s) const {
        GroupElement r = *this;
        const std::int64_t c = coords_[static_cast<std::size_t>(s)];
        r.coords_[static_cast<std::size_t>(s)] -= 2 * c;
        for (int t = 0; t < g.rank(); ++t)
            if (g.adjacent(s, t)) r.coords_[static_cast<std::size_t>(t)] += c;
        return r;
    }

    bool has_left_descent(int s) const { return coords_[static_cast<std::size_t>(s)] < 0; }

    std::optional<int> first_left_descent() const {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] < 0) return static_cast<int>(i);
        return std::nullopt;
    }

    bool is_identity() const {
        return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c > 0; });
    }

    /// Lexicographically first reduced word (greedy smallest left descent).
    Word reduced_word(const CoxeterGraph& g) const {
        Word w;
        GroupElement e = *this;
        while (auto s = e.first_left_descent()) {
            w.push_back(*s);
            e = e.left_multiply(g, *s);
        }
        return w;
    }

    std::size_t length(const CoxeterGraph& g) const { return reduced_word(g).size(); }

    GroupElement inverse(const CoxeterGraph& g) const {
        Word w = reduced_word(g);
        std::reverse(w.begin(), w.end());
        return from_word(g, w);
    }

    const std::vector<std::int64_t>& coords() const { return coords_; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : coords_) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
        return h;
    }

private:
    std::vector<std::int64_t> coords_;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& e) const { return e.hash(); }
};

/// Length of the element represented by an arbitrary word.
inline std::size_t word_length(const CoxeterGraph& g, const Word& w) {
    return GroupElement::from_word(g, w).length(g);
}

inline bool is_reduced(const CoxeterGraph& g, const Word& w) { return word_length(g, w) == w.size(); }

/// x <= w in Bruhat order. Uses the lifting property: for s a left descent
/// of w, x <= w iff min(x, sx) <= sw.
inline bool bruhat_leq(const CoxeterGraph& g, GroupElement x, GroupElement w) {
    std::size_t lx = x.length(g), lw = w.length(g);
    while (true) {
        if (lx > lw) return false;
        auto s = w.first_left_descent();
        if (!s) return x.is_identity();
        w = w.left_multiply(g, *s);
        --lw;
        if (x.has_left_descent(*s)) {
            x = x.left_multiply(g, *s);
            --lx;
        }
    }
}

inline bool bruhat_leq(const CoxeterGraph& g, const Word& x, const Word& w) {
    return bruhat_leq(g, GroupElement::from_word(g, x), GroupElement::from_word(g, w));
}

inline bool bruhat_leq(const CoxeterGraph& g, const FCElement& x, const Word& w) {
    return bruhat_leq(g, x.word(), w);
}

inline bool bruhat_leq(const CoxeterGraph& g, const FCElement& x, const FCElement& w) {
    return bruhat_leq(g, x.word(), w.word());
}

}  // namespace tle

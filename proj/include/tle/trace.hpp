#pragma once

// Traces on TL(E_n): evaluation of any trace from its values on the products
// i(A) of commuting generators, the Markov trace tr, and the leading-coefficient
// test that recovers the Kazhdan-Lusztig mu.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "laurent.hpp"
#include "tl_algebra.hpp"

namespace tle {

/// A finite sum  sum_e c_e * delta^e  with Laurent-polynomial coefficients.
/// Negative powers of delta are kept symbolic.
class DeltaSeries {
public:
    using Terms = std::map<int, LaurentPolynomial>;

    DeltaSeries() = default;
    static DeltaSeries delta_power(int e, LaurentPolynomial c = 1) {
        DeltaSeries s;
        if (!c.is_zero()) s.terms_[e] = std::move(c);
        return s;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DeltaSeries& operator+=(const DeltaSeries& o) {
        for (const auto& [e, c] : o.terms_) {
            auto& slot = terms_[e];
            slot += c;
            if (slot.is_zero()) terms_.erase(e);
        }
        return *this;
    }
    friend DeltaSeries operator+(DeltaSeries a, const DeltaSeries& b) { return a += b; }

    DeltaSeries shifted(int k) const {
        DeltaSeries r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }
    DeltaSeries scaled(const LaurentPolynomial& f) const {
        DeltaSeries r;
        for (const auto& [e, c] : terms_) {
            auto p = c * f;
            if (!p.is_zero()) r.terms_[e] = std::move(p);
        }
        return r;
    }

    /// Canonical single-term form delta^e * P with P not divisible by delta,
    /// or the empty series for zero.
    DeltaSeries normalized() const {
        if (terms_.empty()) return {};
        const int low = terms_.begin()->first;
        const LaurentPolynomial d = LaurentPolynomial::delta();
        LaurentPolynomial p;
        for (const auto& [e, c] : terms_) p += c * d.pow(static_cast<unsigned>(e - low));
        if (p.is_zero()) return {};
        int e = low;
        while (auto qd = p.divide_exact(d)) {
            p = std::move(*qd);
            ++e;
        }
        return delta_power(e, std::move(p));
    }

    friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) {
        return a.normalized().terms_ == b.normalized().terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*delta^" + std::to_string(e);
        }
        return out;
    }

private:
    Terms terms_;
};

/// Values of a trace on the i(A), one per class of the neighbour equivalence.
struct TraceBase {
    std::vector<DeltaSeries> values;  // indexed like PClassPartition::classes

    /// The trace tr: delta^{-#A} on i(A).
    static TraceBase markov(const PClassPartition& part) {
        TraceBase b;
        for (const auto& cls : part.classes)
            b.values.push_back(DeltaSeries::delta_power(-static_cast<int>(cls.front().size())));
        return b;
    }

    /// The indicator trace of one class: 1 on its i(A), 0 on every other i(B).
    static TraceBase indicator(const PClassPartition& part, std::size_t cls) {
        if (cls >= part.classes.size()) throw std::out_of_range("no such class");
        TraceBase b;
        b.values.resize(part.classes.size());
        b.values[cls] = DeltaSeries::delta_power(0);
        return b;
    }
};

/// tau(b_w) = delta^delta_exp * tau(i(a)) for every trace tau.
struct TraceReduction {
    int delta_exp = 0;
    CommutingSet a;
    std::vector<std::size_t> a_chain;  // a-values visited by the recursion, strictly increasing
};

/// Pure delta exponent: tr(b_w) = delta^exponent.
struct TraceValue {
    int exponent = 0;
    friend bool operator==(const TraceValue&, const TraceValue&) = default;
};

/// Coefficient of v^-1 in delta^e expanded in descending powers of v.
/// delta^-1 = v^-1 - v^-3 + ..., and delta^e for e <= -2 starts at v^e, so
/// only e = -1 contributes.
inline int coeff_v_minus1(int e) {
    if (e > 0) throw std::logic_error("positive trace exponent " + std::to_string(e) + " on a monomial product");
    return e == -1 ? 1 : 0;
}

/// delta^e (e <= 0) expanded as a power series in v^-1, truncated below v^min_exp.
inline LaurentPolynomial delta_power_series(int e, int min_exp) {
    if (e > 0) return LaurentPolynomial::delta().pow(static_cast<unsigned>(e));
    // delta^-1 = v^-1 (1 + v^-2)^-1 = sum_k (-1)^k v^{-1-2k}
    LaurentPolynomial inv;
    for (int k = 0; -1 - 2 * k >= min_exp; ++k) inv += LaurentPolynomial::monomial(k % 2 ? -1 : 1, -1 - 2 * k);
    LaurentPolynomial r(1);
    for (int i = 0; i < -e; ++i) {
        r *= inv;
        LaurentPolynomial t;
        for (auto [x, c] : r.terms())
            if (x >= min_exp) t += LaurentPolynomial::monomial(c, x);
        r = std::move(t);
    }
    return r;
}

/// Evaluates traces on one TL(E_n). Holds memo tables, so an engine must not
/// be shared between threads; create one per worker.
class TraceEngine {
public:
    explicit TraceEngine(CoxeterGraph g) : g_(std::move(g)), part_(p_classes(g_)) {}

    const CoxeterGraph& graph() const { return g_; }
    const PClassPartition& partition() const { return part_; }

    /// Rewrites tau(b_w) as delta^e tau(i(A)). Writing w = x i(A) y with
    /// #A = a(w), tau(b_w) = delta^{-#A} tau(b_{i(A)y} b_{x i(A)}) and the
    /// product is delta^c b_z with a(z) >= #A; either z = i(A) or the
    /// recursion continues on z with a strictly larger a-value.
    const TraceReduction& reduce(const FCElement& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        TraceReduction red;
        FCElement cur = w;
        while (true) {
            auto dec = max_antichain_decomposition(g_, cur);
            const std::size_t k = dec.a.size();
            if (!red.a_chain.empty() && k <= red.a_chain.back())
                throw std::logic_error("trace recursion did not increase the a-value at " + cur.to_string());
            red.a_chain.push_back(k);
            if (k == 0) break;  // identity = i(empty)
            Word left = dec.a.vertices(), right = dec.x.word();
            left.insert(left.end(), dec.y.word().begin(), dec.y.word().end());
            right.insert(right.end(), dec.a.vertices().begin(), dec.a.vertices().end());
            auto p = product(g_, FCElement::from_valid_word(g_, left), FCElement::from_valid_word(g_, right));
            red.delta_exp += p.exp - static_cast<int>(k);
            const std::size_t az = a_value(g_, p.elt);
            if (az == k) {
                FCElement ia = i_of(g_, dec.a);
                if (!(p.elt == ia))
                    throw std::logic_error("a(z) = #A but z = " + p.elt.to_string() + " differs from i(A) = " +
                                           ia.to_string());
                red.a = dec.a;
                break;
            }
            if (az < k) throw std::logic_error("a-value decreased in trace recursion at " + cur.to_string());
            cur = p.elt;
        }
        return memo_.emplace(w, std::move(red)).first->second;
    }

    DeltaSeries eval_trace(const TraceBase& base, const FCElement& w) {
        if (base.values.size() != part_.classes.size()) throw std::invalid_argument("trace base has wrong class count");
        const auto& red = reduce(w);
        return base.values[part_.class_of(red.a)].shifted(red.delta_exp);
    }

    TraceValue tr_exponent(const FCElement& w) {
        const auto& red = reduce(w);
        return {red.delta_exp - static_cast<int>(red.a.size())};
    }

    /// tr of delta^m.exp b_{m.elt}
    int tr_exponent(const ScaledMonomial& m) { return m.exp + tr_exponent(m.elt).exponent; }

    /// Exponent e with tr(b_x b_{y^-1}) = delta^e.
    int pair_exponent(const FCElement& x, const FCElement& y) {
        return tr_exponent(product(g_, x, inverse(g_, y)));
    }

    int mu_tilde(const FCElement& x, const FCElement& y) { return coeff_v_minus1(pair_exponent(x, y)); }

    /// sum_w lambda_w tau(b_w), in canonical form.
    DeltaSeries trace_linear(const TraceBase& base, const std::vector<std::pair<LaurentPolynomial, FCElement>>& combo) {
        DeltaSeries acc;
        for (const auto& [lambda, w] : combo) acc += eval_trace(base, w).scaled(lambda);
        return acc.normalized();
    }

private:
    CoxeterGraph g_;
    PClassPartition part_;
    std::unordered_map<FCElement, TraceReduction, FCElementHash> memo_;
};

struct MarkovCheck {
    int lhs = 0;  // exponent of tr_{n+1}(h b_n)
    int rhs = 0;  // exponent of delta^-1 tr_n(h)
    bool holds() const { return lhs == rhs; }
};

/// Both sides of tr_{n+1}(h b_n) = delta^-1 tr_n(h) for h in TL(E_n) viewed
/// inside TL(E_{n+1}).
inline MarkovCheck markov_step(TraceEngine& small, TraceEngine& big, const ScaledMonomial& h) {
    const int n = small.graph().rank();
    if (big.graph().rank() != n + 1) throw std::invalid_argument("markov_step needs engines of rank n and n+1");
    small.graph().check(h.elt.word());
    FCElement lifted = FCElement::from_valid_word(big.graph(), h.elt.word());
    ScaledMonomial hb = product(big.graph(), lifted, generator(big.graph(), n));
    return {h.exp + big.tr_exponent(hb), h.exp - 1 + small.tr_exponent(h.elt).exponent};
}

}  // namespace tle

#pragma once

// Named verification suites shared by `tle verify` and the acceptance test.
// Each suite is exact: it either finds a counterexample or passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "kl_oracle.hpp"
#include "pillar.hpp"
#include "tl_algebra.hpp"
#include "trace.hpp"

namespace tle {

struct VerifyConfig {
    int rank = 6;
    std::uint64_t seed = 20240607;
    std::size_t pair_samples = 1000;   // random pairs for the diagram bridge
    std::size_t markov_samples = 200;  // random monomials and random diagrams
    KLLimits kl_limits{};
    bool enforce_budget = true;  // fail a suite that exceeds its time budget
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;
};

/// FC element counts of E_6, E_7, E_8, fixed by two independent enumerations.
inline constexpr std::size_t fc_count_e6 = 662;
inline constexpr std::size_t fc_count_e7 = 2670;
inline constexpr std::size_t fc_count_e8 = 10846;

namespace oracle {

/// Every reduced word of an FC element: closure of one word under swaps of
/// adjacent commuting letters.
inline std::vector<Word> reduced_words(const CoxeterGraph& g, const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> todo{w};
    while (!todo.empty()) {
        Word cur = std::move(todo.back());
        todo.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i] != cur[i + 1] && g.commute(cur[i], cur[i + 1])) {
                Word nxt = cur;
                std::swap(nxt[i], nxt[i + 1]);
                if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
            }
    }
    return {seen.begin(), seen.end()};
}

/// Largest #A over reduced factorizations w = x i(A) y: the longest run of
/// pairwise commuting letters in any reduced word.
inline std::size_t a_value_brute(const CoxeterGraph& g, const Word& w) {
    std::size_t best = 0;
    for (const auto& r : reduced_words(g, w))
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i; j < r.size(); ++j) {
                bool ok = true;
                for (std::size_t k = i; k < j && ok; ++k)
                    if (r[k] == r[j] || !g.commute(r[k], r[j])) ok = false;
                if (!ok) break;
                best = std::max(best, j - i + 1);
            }
    return best;
}

}  // namespace oracle

namespace detail {

class Failures {
public:
    void add(const std::string& what) {
        if (count_++ < 5) os_ << (count_ > 1 ? "; " : "") << what;
    }
    std::size_t count() const { return count_; }
    std::string summary(const std::string& ok) const {
        if (count_ == 0) return ok;
        return std::to_string(count_) + " failure(s): " + os_.str();
    }

private:
    std::size_t count_ = 0;
    std::ostringstream os_;
};

inline SuiteResult finish(std::string name, double budget, const Failures& f, const std::string& ok,
                          std::chrono::steady_clock::time_point t0, const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = std::move(name);
    r.budget = budget;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = f.count() == 0;
    r.detail = f.summary(ok);
    if (cfg.enforce_budget && r.seconds > budget) {
        r.passed = false;
        r.detail += "; exceeded time budget of " + std::to_string(budget) + " s";
    }
    return r;
}

inline std::vector<FCElement> fc_up_to(const CoxeterGraph& g, std::size_t max_len) {
    return enumerate_fc(g, max_len);
}

}  // namespace detail

inline SuiteResult verify_example97(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    const int n = 6;
    auto g = build_graph(n);
    auto x = normalize(g, parse_word("1 2 4 0 5"));
    auto w = normalize(g, parse_word("1 2 3 4 0 3 5 2 4 1 3 2 0 3 4 5"));
    TraceEngine eng(g);
    const int e = eng.pair_exponent(x, w);
    if (e != -1) f.add("tr(b_x b_{w^-1}) = delta^" + std::to_string(e) + ", expected delta^-1");
    if (eng.mu_tilde(x, w) != 1) f.add("algebraic mu~ != 1");
    ScaledDiagram d = compose(rho(x.word(), n), rho(inverse(g, w).word(), n));
    const int tb = tau_bullet(d);
    if (tb != n - 1) f.add("tau_bullet = " + std::to_string(tb) + ", expected 5");
    if (tau_bullet(simplify(d)) != tb) f.add("tau_bullet changed under simplification");
    if (mu_tilde_diagrammatic(g, x, w) != 1) f.add("diagrammatic mu~ != 1");
    return detail::finish("example97", 1.0, f, "mu~ = 1 by both routes, tau_bullet = 5", t0, cfg);
}

inline SuiteResult verify_pclasses(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    for (auto [n, expected] : {std::pair{6, std::size_t{4}}, std::pair{7, std::size_t{6}}}) {
        auto g = build_graph(n);
        auto part = p_classes(g);
        auto reps = p_prime(g);
        const std::string tag = "E" + std::to_string(n) + ": ";
        if (part.classes.size() != expected)
            f.add(tag + std::to_string(part.classes.size()) + " classes, expected " + std::to_string(expected));
        if (reps.size() != part.classes.size()) f.add(tag + "P' size differs from class count");
        for (const auto& cls : part.classes) {
            std::size_t hits = 0;
            for (const auto& r : reps) hits += std::binary_search(cls.begin(), cls.end(), r) ? 1 : 0;
            if (hits != 1) f.add(tag + "class of " + cls.front().to_string() + " has " + std::to_string(hits) + " P' members");
        }
        TraceEngine eng(g);
        for (std::size_t c = 0; c < part.classes.size(); ++c) {
            auto base = TraceBase::indicator(part, c);
            for (const auto& b : reps) {
                auto val = eng.eval_trace(base, i_of(g, b));
                bool diag = std::binary_search(part.classes[c].begin(), part.classes[c].end(), b);
                if (!(val == DeltaSeries::delta_power(0, diag ? 1 : 0)))
                    f.add(tag + "indicator of class " + std::to_string(c) + " on i" + b.to_string() + " = " +
                          val.to_string());
            }
        }
        if (n == 7) {
            CommutingSet a(g, {0, 2, 4, 6}), b(g, {0, 1, 4, 6});
            const auto& cls = part.classes[part.class_of(a)];
            if (cls != std::vector<CommutingSet>{b, a} && cls != std::vector<CommutingSet>{a, b})
                f.add("E7 class of {0,2,4,6} is not {{0,2,4,6},{0,1,4,6}}");
        }
    }
    return detail::finish("pclasses", 10.0, f, "E6: 4 classes, E7: 6 classes, one P' member each, identity matrix", t0,
                          cfg);
}

inline SuiteResult verify_purity(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    auto g = build_graph(cfg.rank);
    auto elts = detail::fc_up_to(g, 10);
    std::vector<std::size_t> a(elts.size());
    for (std::size_t i = 0; i < elts.size(); ++i) a[i] = a_value(g, elts[i]);
    std::size_t pairs = 0, checked_a = 0;
    for (std::size_t i = 0; i < elts.size(); ++i)
        for (std::size_t j = 0; j < elts.size(); ++j) {
            if (elts[i].length() + elts[j].length() > 10) continue;
            ++pairs;
            auto p = product(g, elts[i], elts[j]);
            if (p.exp < 0 || static_cast<std::size_t>(p.exp) > std::min(a[i], a[j]))
                f.add("b_" + elts[i].to_string() + " b_" + elts[j].to_string() + " has delta^" + std::to_string(p.exp));
            if (classify_word(g, p.elt.word()) != WordStatus::ReducedFC)
                f.add("product of " + elts[i].to_string() + " and " + elts[j].to_string() + " left the FC basis");
        }
    for (std::size_t i = 0; i < elts.size(); ++i) {
        if (elts[i].length() > 6) continue;
        ++checked_a;
        auto b = oracle::a_value_brute(g, elts[i].word());
        if (b != a[i]) f.add("a(" + elts[i].to_string() + "): " + std::to_string(a[i]) + " vs brute " + std::to_string(b));
    }
    return detail::finish("purity", 300.0, f,
                          std::to_string(pairs) + " products pure, " + std::to_string(checked_a) + " a-values confirmed",
                          t0, cfg);
}

inline SuiteResult verify_trace_laws(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    auto g = build_graph(cfg.rank);
    TraceEngine eng(g);
    auto all = enumerate_fc(g);
    for (const auto& w : all) {
        const int e = eng.tr_exponent(w).exponent;
        const int a = static_cast<int>(a_value(g, w));
        const bool inv = inverse(g, w) == w;
        const std::string tag = w.to_string() + ": ";
        if (e > -a) f.add(tag + "e = " + std::to_string(e) + " > -a = " + std::to_string(-a));
        if ((e == -a) != inv) f.add(tag + "e = -a(w) does not match w^2 = 1");
        if (((e - static_cast<int>(w.length())) % 2 + 2) % 2 != 0) f.add(tag + "parity of e differs from l(w)");
        if (eng.tr_exponent(inverse(g, w)).exponent != e) f.add(tag + "tr(b_w) != tr(b_{w^-1})");
    }
    return detail::finish("trace-laws", 300.0, f, std::to_string(all.size()) + " elements satisfy all trace laws", t0,
                          cfg);
}

inline SuiteResult verify_thm811(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    const int n = cfg.rank;
    auto g = build_graph(n);
    TraceEngine eng(g);
    auto all = enumerate_fc(g);
    for (const auto& w : all) {
        int tb = tau_bullet(rho(w.word(), n)), e = eng.tr_exponent(w).exponent;
        if (tb != n + e) f.add(w.to_string() + ": tau_bullet " + std::to_string(tb) + " vs n + e = " + std::to_string(n + e));
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t k = 0; k < cfg.pair_samples; ++k) {
        const auto& x = all[pick(rng)];
        const auto& y = all[pick(rng)];
        int e = eng.pair_exponent(x, y);
        int tb = tau_bullet(compose(rho(x.word(), n), rho(inverse(g, y).word(), n)));
        if (tb != n + e) f.add("pair " + x.to_string() + " / " + y.to_string() + ": " + std::to_string(tb) + " vs " +
                               std::to_string(n + e));
    }
    return detail::finish("thm811", 600.0, f,
                          std::to_string(all.size()) + " elements and " + std::to_string(cfg.pair_samples) +
                              " random pairs agree",
                          t0, cfg);
}

inline SuiteResult verify_markov(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    const int n = cfg.rank;
    auto g = build_graph(n), big = build_graph(n + 1);
    TraceEngine small_eng(g), big_eng(big);
    auto all = enumerate_fc(g);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> scalar(-3, 3), letter(0, n - 1), len(0, 24);
    for (std::size_t k = 0; k < cfg.markov_samples; ++k) {
        ScaledMonomial h{scalar(rng), all[pick(rng)]};
        auto m = markov_step(small_eng, big_eng, h);
        if (!m.holds())
            f.add("h = " + h.elt.to_string() + ": tr(h b_n) = delta^" + std::to_string(m.lhs) + ", delta^-1 tr(h) = delta^" +
                  std::to_string(m.rhs));
    }
    const PillarDiagram e_last = gen_E(n, n + 1);
    for (std::size_t k = 0; k < cfg.markov_samples; ++k) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back(letter(rng));
        ScaledDiagram d = rho(w, n);
        d.delta_exp += scalar(rng);
        const int t = tau_bullet(d);
        ScaledDiagram lifted{d.delta_exp, iota(d.diagram)};
        if (tau_bullet(lifted) != t + 1) f.add("iota scales tau_bullet wrongly for word " + format_word(w));
        if (tau_bullet(compose(lifted, ScaledDiagram{0, e_last})) != t)
            f.add("tau_bullet(iota(D) E_n) != tau_bullet(D) for word " + format_word(w));
    }
    return detail::finish("markov", 120.0, f,
                          std::to_string(cfg.markov_samples) + " monomials and " + std::to_string(cfg.markov_samples) +
                              " diagrams satisfy the Markov identities",
                          t0, cfg);
}

inline SuiteResult verify_kl(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    auto g = build_graph(cfg.rank);
    TraceEngine eng(g);
    KLOracle kl(g, cfg.kl_limits);
    auto elts = detail::fc_up_to(g, 10);
    std::vector<int> id;
    for (const auto& x : elts) id.push_back(kl.element(x.word()));
    std::size_t pairs = 0, ones = 0;
    try {
        for (std::size_t j = 0; j < elts.size(); ++j)
            for (std::size_t i = 0; i < elts.size(); ++i) {
                if (i == j || !kl.leq(id[i], id[j])) continue;
                ++pairs;
                const std::int64_t m = kl.mu(id[i], id[j]);
                const int mt = eng.mu_tilde(elts[i], elts[j]);
                if (m != mt)
                    f.add("mu(" + elts[i].to_string() + ", " + elts[j].to_string() + ") = " + std::to_string(m) +
                          " but mu~ = " + std::to_string(mt));
                if (m != 0 && m != 1) f.add("mu = " + std::to_string(m) + " outside {0,1}");
                ones += m == 1 ? 1 : 0;
            }
    } catch (const ResourceLimit& e) {
        f.add(std::string("oracle limit hit: ") + e.what());
    }
    return detail::finish("kl", 900.0, f,
                          std::to_string(pairs) + " Bruhat pairs agree, " + std::to_string(ones) + " with mu = 1", t0,
                          cfg);
}

inline SuiteResult verify_gram(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    auto g = build_graph(cfg.rank);
    TraceEngine eng(g);
    auto elts = detail::fc_up_to(g, 8);
    for (const auto& x : elts)
        for (const auto& y : elts) {
            const int e = eng.pair_exponent(x, y);
            if (x == y ? e != 0 : e > -1)
                f.add("tr(b_" + x.to_string() + " b_{" + y.to_string() + "^-1}) = delta^" + std::to_string(e));
        }
    return detail::finish("gram", 600.0, f,
                          std::to_string(elts.size() * elts.size()) + " pairs: exponent 0 exactly on the diagonal", t0,
                          cfg);
}

inline SuiteResult verify_enum(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Failures f;
    std::ostringstream counts;
    for (auto [n, expected] : {std::pair{6, fc_count_e6}, std::pair{7, fc_count_e7}, std::pair{8, fc_count_e8}}) {
        auto g = build_graph(n);
        auto right = enumerate_fc(g, std::nullopt, EnumerationOrder::RightBFS);
        auto left = enumerate_fc(g, std::nullopt, EnumerationOrder::LeftBFS);
        if (right != left) f.add("E" + std::to_string(n) + ": the two enumerations differ");
        if (right.size() != expected)
            f.add("E" + std::to_string(n) + ": " + std::to_string(right.size()) + " elements, expected " +
                  std::to_string(expected));
        counts << (n > 6 ? ", " : "") << "E" << n << " = " << right.size();
    }
    return detail::finish("enum", 300.0, f, counts.str(), t0, cfg);
}

struct Suite {
    const char* name;
    const char* description;
    std::function<SuiteResult(const VerifyConfig&)> run;
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"example97", "worked mu~ example at rank 6, both routes", verify_example97},
        {"pclasses", "neighbour classes of commuting sets for E6 and E7", verify_pclasses},
        {"purity", "structure constants are pure powers of delta; a-values by brute force", verify_purity},
        {"trace-laws", "exponent bounds, involutions, parity and inversion symmetry of tr", verify_trace_laws},
        {"thm811", "diagram trace equals n + trace exponent", verify_thm811},
        {"markov", "Markov identity for tr and for diagrams under iota", verify_markov},
        {"kl", "brute-force KL mu equals mu~ on short Bruhat pairs", verify_kl},
        {"gram", "tr(b_x b_{y^-1}) has exponent 0 iff x = y", verify_gram},
        {"enum", "FC counts of E6, E7, E8 under two enumerations", verify_enum},
    };
    return all;
}

inline const Suite* find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (name == s.name) return &s;
    return nullptr;
}

}  // namespace tle

// tle: command-line front end for TL(E_n) computations.
//
// Exit codes: 0 success, 1 a verified property failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "tle/tle.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    int rank = 6;
    bool json = false;
    std::string x, y, word;
    std::string method = "both";
    std::optional<std::size_t> max_len;
    std::string order = "right";
    bool count_only = false;
    bool ascii = false;
    std::string suite = "all";
    tle::VerifyConfig verify;
};

tle::FCElement read_fc(const tle::CoxeterGraph& g, const std::string& text) {
    return tle::normalize(g, tle::parse_word(text));
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_enum(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto order = o.order == "left" ? tle::EnumerationOrder::LeftBFS : tle::EnumerationOrder::RightBFS;
    auto all = tle::enumerate_fc(g, o.max_len, order);
    if (o.count_only) {
        if (o.json) print_json({{"rank", o.rank}, {"count", all.size()}});
        else std::cout << all.size() << "\n";
        return exit_ok;
    }
    if (o.json) {
        auto arr = nlohmann::json::array();
        for (const auto& w : all) arr.push_back(w.word());
        print_json({{"rank", o.rank}, {"count", all.size()}, {"elements", arr}});
    } else {
        for (const auto& w : all) std::cout << w.length() << "\t" << tle::format_word(w.word()) << "\n";
    }
    return exit_ok;
}

int cmd_mult(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto x = read_fc(g, o.x), y = read_fc(g, o.y);
    auto p = tle::product(g, x, y);
    if (o.json)
        print_json({{"rank", o.rank}, {"x", x.word()}, {"y", y.word()}, {"delta_exponent", p.exp}, {"z", p.elt.word()}});
    else
        std::cout << "delta^" << p.exp << " b[" << tle::format_word(p.elt.word()) << "]\n";
    return exit_ok;
}

int cmd_trace(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto w = read_fc(g, o.word);
    tle::TraceEngine eng(g);
    auto r = tle::trace_report(eng, w);
    if (o.json) {
        print_json(tle::to_json(r));
        return exit_ok;
    }
    std::cout << "tr(b[" << tle::format_word(r.word) << "]) = delta^" << r.delta_exponent << "\n"
              << "a(w) = " << r.a_value << ", involution: " << (r.involution ? "yes" : "no") << "\n"
              << "tau(b_w) = delta^" << r.reduction_exponent << " tau(i{" << tle::format_word(r.reduced_to)
              << "}) for every trace tau\n";
    return exit_ok;
}

int cmd_mu(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto x = read_fc(g, o.x), y = read_fc(g, o.y);
    const bool algebra = o.method != "diagram", diagram = o.method != "algebra";
    tle::MuReport r;
    r.rank = o.rank;
    r.x = x.word();
    r.y = y.word();
    std::optional<int> mu_alg, mu_diag;
    if (algebra) {
        tle::TraceEngine eng(g);
        r.trace_exponent = eng.pair_exponent(x, y);
        mu_alg = tle::coeff_v_minus1(*r.trace_exponent);
    }
    if (diagram) {
        auto d = tle::compose(tle::rho(x.word(), o.rank), tle::rho(tle::inverse(g, y).word(), o.rank));
        r.delta_exponent = d.delta_exp;
        r.content = tle::content(tle::close(d.diagram));
        mu_diag = *r.delta_exponent + *r.content == o.rank - 1 ? 1 : 0;
    }
    r.mu = mu_alg ? *mu_alg : *mu_diag;
    if (o.json) print_json(tle::to_json(r));
    else {
        std::cout << "mu=" << r.mu;
        if (r.trace_exponent) std::cout << " trace_exponent=" << *r.trace_exponent;
        if (r.delta_exponent) std::cout << " delta_exponent=" << *r.delta_exponent << " content=" << *r.content;
        std::cout << "\n";
    }
    if (mu_alg && mu_diag && *mu_alg != *mu_diag) {
        std::cerr << "error: algebraic mu~ = " << *mu_alg << " but diagrammatic mu~ = " << *mu_diag << "\n";
        return exit_failed;
    }
    if (r.trace_exponent && r.delta_exponent && *r.delta_exponent + *r.content != o.rank + *r.trace_exponent) {
        std::cerr << "error: diagram trace disagrees with the algebraic trace exponent\n";
        return exit_failed;
    }
    return exit_ok;
}

int cmd_diagram(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto w = read_fc(g, o.word);
    auto d = tle::rho(w.word(), o.rank);
    if (o.json) print_json(tle::to_json(d));
    else std::cout << tle::render_ascii(d);
    return exit_ok;
}

int cmd_pclasses(const Options& o) {
    auto g = tle::build_graph(o.rank);
    auto part = tle::p_classes(g);
    auto reps = tle::p_prime(g);
    bool ok = reps.size() == part.classes.size();
    nlohmann::json out{{"rank", o.rank}, {"classes", nlohmann::json::array()}};
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const auto& cls = part.classes[c];
        std::size_t hits = 0;
        for (const auto& r : reps) hits += std::binary_search(cls.begin(), cls.end(), r) ? 1 : 0;
        ok = ok && hits == 1;
        auto members = nlohmann::json::array();
        for (const auto& a : cls) members.push_back(a.vertices());
        out["classes"].push_back({{"representative", part.representatives[c].vertices()}, {"members", members}});
        if (!o.json) {
            std::cout << "class " << c << ": representative " << part.representatives[c].to_string() << ", members";
            for (const auto& a : cls) std::cout << ' ' << a.to_string();
            std::cout << "\n";
        }
    }
    out["one_representative_per_class"] = ok;
    if (o.json) print_json(out);
    else std::cout << part.classes.size() << " classes; " << (ok ? "each" : "NOT each")
                   << " class contains exactly one representative\n";
    return ok ? exit_ok : exit_failed;
}

int cmd_verify(const Options& o) {
    std::vector<const tle::Suite*> run;
    if (o.suite == "all")
        for (const auto& s : tle::suites()) run.push_back(&s);
    else if (auto s = tle::find_suite(o.suite)) run.push_back(s);
    else {
        std::cerr << "error: unknown suite '" << o.suite << "'; available:";
        for (const auto& s : tle::suites()) std::cerr << ' ' << s.name;
        std::cerr << "\n";
        return exit_usage;
    }
    tle::VerifyConfig cfg = o.verify;
    cfg.rank = o.rank;
    bool all_ok = true;
    auto arr = nlohmann::json::array();
    for (const auto* s : run) {
        auto r = s->run(cfg);
        all_ok = all_ok && r.passed;
        if (o.json)
            arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s): " << r.detail << "\n";
    }
    if (o.json) print_json(arr);
    return all_ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in generalized Temperley-Lieb algebras of type E"};
    app.require_subcommand(1);
    Options o;

    auto add_rank = [&](CLI::App* c) {
        c->add_option("-n,--rank", o.rank, "rank n of E_n (n >= 6)")->capture_default_str();
        c->add_flag("--json", o.json, "JSON output");
    };

    auto* en = app.add_subcommand("enum", "list fully commutative elements");
    add_rank(en);
    en->add_option("--max-len", o.max_len, "longest element to list");
    en->add_option("--order", o.order, "enumeration strategy")->check(CLI::IsMember({"right", "left"}));
    en->add_flag("--count", o.count_only, "print only the number of elements");

    auto* mult = app.add_subcommand("mult", "product b_x b_y = delta^k b_z");
    add_rank(mult);
    mult->add_option("--x", o.x, "reduced FC word")->required();
    mult->add_option("--y", o.y, "reduced FC word")->required();

    auto* trace = app.add_subcommand("trace", "tr(b_w) as a power of delta");
    add_rank(trace);
    trace->add_option("--word", o.word, "reduced FC word")->required();

    auto* mu = app.add_subcommand("mu", "mu~(x,y) from tr(b_x b_{y^-1})");
    add_rank(mu);
    mu->add_option("--x", o.x, "reduced FC word")->required();
    mu->add_option("--y", o.y, "reduced FC word")->required();
    mu->add_option("--method", o.method, "algebra, diagram or both")
        ->check(CLI::IsMember({"algebra", "diagram", "both"}))
        ->capture_default_str();

    auto* diag = app.add_subcommand("diagram", "pillar diagram of b_w");
    add_rank(diag);
    diag->add_option("--word", o.word, "reduced FC word")->required();

    auto* pcl = app.add_subcommand("pclasses", "neighbour classes of commuting sets");
    add_rank(pcl);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    add_rank(ver);
    ver->add_option("suite", o.suite, "suite name or 'all'")->capture_default_str();
    ver->add_option("--seed", o.verify.seed, "RNG seed for sampled suites")->capture_default_str();
    ver->add_option("--samples", o.verify.pair_samples, "random pairs for thm811")->check(CLI::PositiveNumber);
    ver->add_option("--markov-samples", o.verify.markov_samples, "random monomials/diagrams for markov")
        ->check(CLI::PositiveNumber);
    ver->add_option("--kl-max-length", o.verify.kl_limits.max_length, "KL oracle length limit")
        ->check(CLI::PositiveNumber);
    ver->add_option("--kl-max-interval", o.verify.kl_limits.max_interval, "KL oracle interval size limit")
        ->check(CLI::PositiveNumber);
    bool no_budget = false;
    ver->add_flag("--no-time-budget", no_budget, "do not fail suites that run over their time budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    o.verify.enforce_budget = !no_budget;

    try {
        if (en->parsed()) return cmd_enum(o);
        if (mult->parsed()) return cmd_mult(o);
        if (trace->parsed()) return cmd_trace(o);
        if (mu->parsed()) return cmd_mu(o);
        if (diag->parsed()) return cmd_diagram(o);
        if (pcl->parsed()) return cmd_pclasses(o);
        if (ver->parsed()) return cmd_verify(o);
    } catch (const tle::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}

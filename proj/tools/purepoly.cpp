// Command-line front end for the purepoly library.
#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <vector>

#include "purepoly/commands.hpp"
#include "purepoly/corpus.hpp"
#include "purepoly/dynamics.hpp"
#include "purepoly/parse.hpp"

namespace {

using purepoly::Args;
using purepoly::Json;

struct Option {
    const char* flag;
    const char* key;
    const char* help;
};

struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;  // keys, in order; the last may take several values; "?" marks optional
    std::vector<Option> options;
    bool multi = false;  // last positional takes one or more values
};

const Option kPrime{"--prime,-p", "prime", "prime p"};
const Option kR{"--r,-r", "r", "exponent r"};
const Option kMaxDegree{"--max-degree", "max_degree", "degree budget"};
const Option kMaxBits{"--max-bits", "max_bits", "coefficient bit budget"};
const Option kMaxN{"--max-n", "max_n", "iteration bound"};
const Option kSeed{"--seed", "seed", "random seed for equal-degree splitting"};

std::vector<Command> commands() {
    return {
        {"parse", "parse and print a polynomial", {"poly"}, {}},
        {"classify", "p-type / pure / Dumas / Eisenstein verdicts", {"poly"}, {kPrime, kR}},
        {"newton", "Newton polygon with respect to p", {"poly"}, {kPrime}},
        {"iterate",
         "n-th iterate, optionally composed with an inner polynomial",
         {"poly"},
         {{"--n,-n", "n", "iterate index"}, {"--inner", "inner", "inner polynomial g: f^n(g(x))"}, kPrime, kMaxDegree,
          kMaxBits}},
        {"closed-form", "f^n mod p from the shape a*x^(p^m) + p*h(x) + b", {"poly"},
         {{"--n,-n", "n", "iterate index"}, kPrime, kMaxDegree}},
        {"shift", "f(x + c)", {"poly"}, {{"--by", "by", "shift c"}}},
        {"evaluate", "f(c)", {"poly"}, {{"--at", "at", "point c"}}},
        {"valuation", "p-adic valuations of a polynomial (or of --value, with its order mod p)", {"poly?"},
         {kPrime, {"--value", "value", "rational instead of a polynomial"}}},
        {"reduce", "reduction modulo p", {"poly"}, {kPrime}},
        {"eventual", "eventual p-type / purity / Dumas analysis", {"poly"},
         {kPrime, kR, {"--mode", "mode", "type, pure or dumas"}, kMaxDegree, kMaxBits}},
        {"bound", "factor-count bound for iterates of a pure polynomial", {},
         {{"--d,-d", "d", "degree"}, kR, {"--n,-n", "n", "iterates to list"}}},
        {"certify", "irreducibility certificate", {"poly"},
         {{"--prime,-p", "prime", "prime to try first"}, {"--base", "base", "base g for the g-expansion criterion"}}},
        {"factor", "factorization over Q (or verification of a claimed one)", {"poly"},
         {kMaxDegree, {"--verify", "verify", "claimed factors, ';'-separated"},
          {"--prime,-p", "prime", "prime to try first when certifying factors"}}},
        {"ff", "finite-field tools: factor, irreducible, jones, newly-reducible", {"sub", "poly"},
         {kPrime, {"--iterate", "iterate", "work with the k-th iterate"}, kSeed, kMaxN}},
        {"schonemann", "g-expansion irreducibility criterion", {"poly"}, {kPrime, {"--base", "base", "base g"}}},
        {"stability", "certificates: f-stable, composition, set, dumas", {"sub", "poly"},
         {kPrime, kR, {"--with", "with", "second polynomial"}, kMaxDegree, kMaxBits},
         true},
        {"membership", "membership in E(p), D(p,q), S(p,R)", {"poly"},
         {kPrime, {"--set", "set", "E, D or S"}, {"--q", "q", "prime q for D(p,q)"},
          {"--exponents", "exponents", "';'-separated R for S(p,R)"}}},
        {"orbit", "is 0 periodic under f", {"poly"}, {kMaxN}},
    };
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n\n" << purepoly::kPolynomialGrammar << "\n";
    return 2;
}

void emit(const Json& j, bool json) {
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << purepoly::render_text(j);
    }
}

int run_corpus_command(const std::string& dir, const std::string& filter, unsigned jobs, bool json) {
    const auto cases = purepoly::load_corpus_dir(dir.empty() ? purepoly::default_corpus_dir() : std::filesystem::path(dir));
    const auto summary = purepoly::run_corpus(cases, filter, jobs);
    if (json) {
        Json results = Json::array();
        for (const auto& r : summary.results) {
            Json item = Json::object();
            item["case"] = r.id;
            item["passed"] = r.passed;
            item["millis"] = r.millis;
            if (!r.passed) item["message"] = r.message;
            results.push_back(item);
        }
        Json out = Json::object();
        out["passed"] = summary.passed;
        out["failed"] = summary.failed;
        out["results"] = results;
        emit(out, true);
    } else {
        for (const auto& r : summary.results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.id;
            if (!r.passed) std::cout << "  " << r.message;
            std::cout << "\n";
        }
        std::cout << summary.passed << " passed, " << summary.failed << " failed\n";
    }
    return summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polygon classification and iteration analysis of polynomials over Q"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print JSON instead of text")->configurable(false);

    std::map<std::string, Args> storage;
    std::map<std::string, std::vector<std::string>> multi_storage;
    std::vector<Command> table = commands();
    for (const auto& cmd : table) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_flag("--json", json, "print JSON instead of text");
        Args& args = storage[cmd.name];
        for (std::size_t i = 0; i < cmd.positionals.size(); ++i) {
            std::string key = cmd.positionals[i];
            const bool optional = key.back() == '?';
            if (optional) key.pop_back();
            const bool last = i + 1 == cmd.positionals.size();
            if (cmd.multi && last) {
                sub->add_option(key, multi_storage[cmd.name], "polynomial(s)")->required();
            } else {
                sub->add_option(key, args[key], key)->required(!optional);
            }
        }
        for (const auto& opt : cmd.options) sub->add_option(opt.flag, args[opt.key], opt.help);
    }
    std::string corpus_dir;
    std::string corpus_filter;
    unsigned corpus_jobs = 0;
    CLI::App* corpus = app.add_subcommand("corpus", "run the example corpus");
    corpus->add_flag("--json", json, "print JSON instead of text");
    corpus->add_option("--filter", corpus_filter, "case id substring or '*' pattern");
    corpus->add_option("--dir", corpus_dir, "corpus directory");
    corpus->add_option("--jobs,-j", corpus_jobs, "worker threads (default: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "\n" << purepoly::kPolynomialGrammar << "\n";
        return 2;
    }

    try {
        if (corpus->parsed()) return run_corpus_command(corpus_dir, corpus_filter, corpus_jobs, json);
        for (const auto& cmd : table) {
            CLI::App* sub = app.get_subcommand(cmd.name);
            if (!sub->parsed()) continue;
            Args args = storage[cmd.name];
            if (cmd.multi) {
                std::string joined;
                for (const auto& s : multi_storage[cmd.name]) joined += (joined.empty() ? "" : ";") + s;
                args[cmd.positionals.back()] = joined;
            }
            emit(purepoly::run_operation(cmd.name, args), json);
            return 0;
        }
    } catch (const purepoly::UsageError& e) {
        return usage_error(e.what());
    } catch (const purepoly::ParseError& e) {
        return usage_error(e.what());
    } catch (const purepoly::Error& e) {
        if (json) {
            emit(purepoly::error_json(e), true);
        } else {
            std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
            if (const auto* h = dynamic_cast<const purepoly::HypothesisFailure*>(&e))
                for (const auto& hyp : h->trace())
                    std::cerr << "  " << (hyp.holds ? "ok   " : "FAIL ") << hyp.name << ": " << hyp.detail << "\n";
        }
        return 1;
    }
    return 2;
}

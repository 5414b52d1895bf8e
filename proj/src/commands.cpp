#include "purepoly/commands.hpp"

#include <functional>
#include <sstream>

#include "purepoly/parse.hpp"

namespace purepoly {

namespace {

using Handler = std::function<Json(const Args&)>;

const std::string& require(const Args& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end() || it->second.empty()) throw UsageError("missing argument: " + key);
    return it->second;
}

bool has(const Args& args, const std::string& key) {
    auto it = args.find(key);
    return it != args.end() && !it->second.empty();
}

BigInt parse_integer(const std::string& key, const std::string& text) {
    BigInt value;
    if (text.empty() || value.set_str(text, 10) != 0) throw UsageError(key + " must be an integer, got '" + text + "'");
    return value;
}

unsigned long natural(const Args& args, const std::string& key, unsigned long minimum = 0) {
    const BigInt value = parse_integer(key, require(args, key));
    if (value < minimum || !value.fits_ulong_p())
        throw UsageError(key + " must be an integer >= " + std::to_string(minimum));
    return value.get_ui();
}

unsigned long natural_or(const Args& args, const std::string& key, unsigned long fallback, unsigned long minimum = 0) {
    return has(args, key) ? natural(args, key, minimum) : fallback;
}

long signed_integer(const Args& args, const std::string& key) {
    const BigInt value = parse_integer(key, require(args, key));
    if (!value.fits_slong_p()) throw UsageError(key + " is out of range");
    return value.get_si();
}

std::uint64_t prime(const Args& args, const std::string& key = "prime") {
    const BigInt value = parse_integer(key, require(args, key));
    return to_prime(value);
}

std::uint64_t field_prime(const Args& args) {
    const std::uint64_t p = prime(args);
    if (p >= kMaxFieldPrime) throw NotPrime(std::to_string(p) + " (field characteristic must be below 2^31)");
    return p;
}

PolyQ poly(const Args& args, const std::string& key = "poly") { return parse_poly(require(args, key)); }

BigRational rational(const Args& args, const std::string& key) {
    const PolyQ c = parse_poly(require(args, key));
    if (c.degree() > 0) throw UsageError(key + " must be a rational constant");
    return c.is_zero() ? BigRational(0) : c.constant_term();
}

IterationBudget budget(const Args& args) {
    IterationBudget b;
    b.max_degree = natural_or(args, "max_degree", b.max_degree, 1);
    b.max_bits = natural_or(args, "max_bits", b.max_bits, 1);
    return b;
}

Json op_parse(const Args& args) {
    const PolyQ f = poly(args);
    Json coefficients = Json::array();
    for (const auto& c : f.coefficients()) coefficients.push_back(to_json(c));
    return {{"result", to_json(f)}, {"degree", f.is_zero() ? Json(nullptr) : Json(f.degree())},
            {"coefficients", coefficients}};
}

Json op_classify(const Args& args) {
    std::optional<long> r;
    if (has(args, "r")) r = signed_integer(args, "r");
    return to_json(classify(poly(args), prime(args), r));
}

Json op_newton(const Args& args) { return to_json(newton_polygon(poly(args), prime(args))); }

Json op_iterate(const Args& args) {
    const PolyQ f = poly(args);
    const unsigned long n = natural_or(args, "n", 1, 1);
    PolyQ result = iterate(f, n, budget(args));
    Json out{{"n", n}};
    if (has(args, "inner")) {
        const PolyQ inner = poly(args, "inner");
        result = compose(result, inner);
        out["inner"] = to_json(inner);
    }
    out["result"] = to_json(result);
    out["degree"] = result.is_zero() ? Json(nullptr) : Json(result.degree());
    if (has(args, "prime")) out["mod_p"] = to_json(reduce_mod_p(result, field_prime(args)));
    return out;
}

Json op_closed_form(const Args& args) {
    const PolyModP r = iterate_mod_p_closed_form(poly(args), field_prime(args), natural_or(args, "n", 1, 1), budget(args));
    return {{"result", to_json(r)}, {"degree", r.degree()}};
}

Json op_shift(const Args& args) {
    const BigRational c = rational(args, "by");
    return {{"by", to_json(c)}, {"result", to_json(shift(poly(args), c))}};
}

Json op_evaluate(const Args& args) {
    const BigRational c = rational(args, "at");
    return {{"at", to_json(c)}, {"result", to_json(evaluate(poly(args), c))}};
}

Json op_valuation(const Args& args) {
    const std::uint64_t p = prime(args);
    if (has(args, "value")) {
        const BigRational q = rational(args, "value");
        Json out{{"value", to_json(q)}, {"valuation", to_json(vp(q, p))}};
        if (q != 0 && vp(q, p) == Valuation(0)) out["order"] = ord_p(q, p);
        return out;
    }
    const PolyQ f = poly(args);
    Json coefficients = Json::array();
    for (const auto& c : f.coefficients()) coefficients.push_back(to_json(vp(c, p)));
    Json out{{"gauss", to_json(gauss_valuation(f, p))}, {"coefficients", coefficients}};
    if (!f.is_zero()) out["tail"] = to_json(tail_valuation(f, p));
    return out;
}

Json op_reduce(const Args& args) {
    const PolyModP r = reduce_mod_p(poly(args), field_prime(args));
    return {{"result", to_json(r)}, {"degree", r.is_zero() ? Json(nullptr) : Json(r.degree())}};
}

Json op_eventual(const Args& args) {
    const std::string mode = has(args, "mode") ? args.at("mode") : "type";
    const PolyQ f = poly(args);
    const std::uint64_t p = prime(args);
    if (mode == "type") return to_json(eventually_p_type(f, p, budget(args)));
    if (mode == "pure") return to_json(eventually_pure(f, p, signed_integer(args, "r"), budget(args)));
    if (mode == "dumas") return to_json(eventually_dumas(f, p, signed_integer(args, "r"), budget(args)));
    throw UsageError("mode must be type, pure or dumas");
}

Json op_bound(const Args& args) {
    const unsigned long d = natural(args, "d");
    const unsigned long r = natural(args, "r");
    if (d < 2 || r < 1) throw PreconditionError("factor bound needs d >= 2 and r >= 1");
    return to_json(factor_bound(d, r), natural_or(args, "n", 4, 1));
}

CertifyOptions certify_options(const Args& args) {
    CertifyOptions options;
    if (has(args, "prime")) options.prime_hint = prime(args);
    if (has(args, "base")) options.schonemann_base = poly(args, "base");
    return options;
}

Json op_certify(const Args& args) {
    const PolyQ f = poly(args);
    const auto cert = certify_irreducible(f, certify_options(args));
    Json out{{"polynomial", to_json(f)}, {"certified", cert.has_value()}};
    out["certificate"] = cert ? to_json(*cert) : Json(nullptr);
    return out;
}

Json op_factor(const Args& args) {
    const PolyQ f = poly(args);
    if (has(args, "verify")) {
        std::vector<PolyQ> factors;
        for (const auto& text : split_list(args.at("verify"))) factors.push_back(parse_poly(text));
        return to_json(verify_factorization(f, factors, certify_options(args)));
    }
    const long cap = static_cast<long>(natural_or(args, "max_degree", kDefaultMaxFactorDegree, 1));
    return to_json(z_factor(f, cap));
}

Json op_ff(const Args& args) {
    const std::string sub = require(args, "sub");
    const std::uint64_t p = field_prime(args);
    PolyModP f = reduce_mod_p(poly(args), p);
    const unsigned long k = natural_or(args, "iterate", 1, 1);
    if (sub == "newly-reducible") {
        const unsigned long max_n = natural_or(args, "max_n", 10, 1);
        const auto n = newly_reducible_index(f, static_cast<unsigned>(max_n));
        return {{"prime", p}, {"max_n", max_n}, {"index", n ? Json(*n) : Json(nullptr)}};
    }
    if (sub == "jones") {
        const unsigned long max_orbit = natural_or(args, "max_n", 1ul << 20, 1);
        return to_json(jones_quadratic_stability(f, static_cast<unsigned>(max_orbit)));
    }
    if (k > 1) f = iterate(f, k);
    if (f.degree() < 1) throw PreconditionError("reduction has degree < 1");
    if (sub == "factor") return to_json(ff_factor(f, natural_or(args, "seed", kDefaultSeed)), p);
    if (sub == "irreducible") return {{"prime", p}, {"degree", f.degree()}, {"irreducible", ff_irreducible(f)}};
    throw UsageError("ff sub-command must be factor, irreducible, jones or newly-reducible");
}

Json op_schonemann(const Args& args) {
    const PolyQ a = poly(args);
    const PolyQ g = poly(args, "base");
    const std::uint64_t p = prime(args);
    const auto trace = schonemann_trace(a, g, p);
    bool ok = true;
    for (const auto& h : trace) ok = ok && h.holds;
    Json out{{"irreducible", ok}, {"trace", to_json(trace)}};
    if (ok) {
        const GExpansion e = g_expansion(a, g);
        Json digits = Json::array();
        for (const auto& d : e.digits) digits.push_back(to_json(d));
        out["digits"] = digits;
    }
    return out;
}

Json op_stability(const Args& args) {
    const std::string sub = require(args, "sub");
    const std::uint64_t p = prime(args);
    if (sub == "set") {
        std::vector<std::pair<PolyQ, long>> family;
        const auto texts = split_list(require(args, "poly"));
        std::vector<std::string> exponents;
        if (has(args, "r")) exponents = split_list(args.at("r"));
        if (!exponents.empty() && exponents.size() != texts.size())
            throw UsageError("give one r per polynomial, or none to use vp(f(0))");
        for (std::size_t i = 0; i < texts.size(); ++i) {
            PolyQ f = parse_poly(texts[i]);
            long r = 0;
            if (!exponents.empty()) {
                r = signed_integer({{"r", exponents[i]}}, "r");
            } else {
                if (f.constant_term() == 0) throw ZeroEndCoefficient("family member has zero constant term");
                r = vp(f.constant_term(), p).value();
            }
            family.emplace_back(std::move(f), r);
        }
        return to_json(eventually_stable_set_certificate(family, p));
    }
    const long r = signed_integer(args, "r");
    if (sub == "dumas") return to_json(dumas_dynamic_irreducibility_certificate(poly(args), p, r));
    if (sub == "f-stable") return to_json(f_stability_certificate(poly(args), poly(args, "with"), p, r));
    if (sub == "composition")
        return to_json(composition_purity_certificate(poly(args), poly(args, "with"), p, r, budget(args)));
    throw UsageError("stability sub-command must be f-stable, composition, set or dumas");
}

Json op_membership(const Args& args) {
    const PolyQ f = poly(args);
    const std::string set = require(args, "set");
    const std::uint64_t p = prime(args);
    bool member = false;
    if (set == "E") {
        member = set_membership(f, EisensteinSet{p});
    } else if (set == "D") {
        member = set_membership(f, DumasPrimePowerSet{p, prime(args, "q")});
    } else if (set == "S") {
        PureSet s{p, {}};
        for (const auto& e : split_list(require(args, "exponents"))) s.exponents.insert(signed_integer({{"r", e}}, "r"));
        member = set_membership(f, s);
    } else {
        throw UsageError("set must be E, D or S");
    }
    return {{"set", set}, {"member", member}};
}

Json op_orbit(const Args& args) {
    const auto period = orbit_zero_periodic(poly(args), natural_or(args, "max_n", 1000, 1));
    return {{"periodic", period.has_value()}, {"period", period ? Json(*period) : Json(nullptr)}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"parse", op_parse},         {"classify", op_classify},
        {"newton", op_newton},       {"iterate", op_iterate},
        {"closed-form", op_closed_form}, {"shift", op_shift},
        {"evaluate", op_evaluate},   {"valuation", op_valuation},
        {"reduce", op_reduce},       {"eventual", op_eventual},
        {"bound", op_bound},         {"certify", op_certify},
        {"factor", op_factor},       {"ff", op_ff},
        {"schonemann", op_schonemann}, {"stability", op_stability},
        {"membership", op_membership}, {"orbit", op_orbit},
    };
    return table;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    if (j.is_array()) {
        auto primitive = [](const Json& v) { return v.is_primitive(); };
        const bool flat = std::all_of(j.begin(), j.end(), [&](const Json& v) {
            return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), primitive));
        });
        if (flat) {
            out << path << ": [";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ", ";
                if (j[i].is_array()) {
                    out << "(";
                    for (std::size_t k = 0; k < j[i].size(); ++k) out << (k ? ", " : "") << scalar(j[i][k]);
                    out << ")";
                } else {
                    out << scalar(j[i]);
                }
            }
            out << "]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << path << ": " << scalar(j) << "\n";
}

}  // namespace

const std::vector<std::string>& operation_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, handler] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

Json run_operation(const std::string& op, const Args& args) {
    auto it = handlers().find(op);
    if (it == handlers().end()) throw UsageError("unknown operation: " + op);
    return it->second(args);
}

Json error_json(const Error& e) {
    Json err{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* h = dynamic_cast<const HypothesisFailure*>(&e)) {
        err["failed"] = h->failed();
        err["trace"] = to_json(h->trace());
    }
    if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e)) err["reached"] = b->reached();
    if (const auto* n = dynamic_cast<const NegativeValuation*>(&e)) err["index"] = n->index();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
    return {{"error", err}};
}

std::string render_text(const Json& j) {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

}  // namespace purepoly

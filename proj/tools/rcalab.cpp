// rcalab: command-line driver for the character, knot, Koszul and D-module computations.
// Exit codes: 0 success, 2 input error, 3 an identity that should hold was violated.

#include "CLI11.hpp"
#include "rcalab/cache.hpp"
#include "rcalab/cherednik.hpp"
#include "rcalab/dmod.hpp"
#include "rcalab/knots.hpp"
#include "rcalab/koszul.hpp"
#include "rcalab/parallel.hpp"
#include "rcalab/report.hpp"

#include <iostream>
#include <memory>
#include <optional>
#include <string>

using namespace rcalab;

namespace {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int trunc = 30;
    int threads = 1;
    std::string cache_path;
    bool no_cache = false;
    std::string format = "json";
};

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError(std::string(what) + " expects m,n");
    try {
        std::size_t used = 0;
        int a = std::stoi(s.substr(0, comma), &used);
        if (used != comma) throw InputError(std::string(what) + ": bad integer");
        std::string rest = s.substr(comma + 1);
        int b = std::stoi(rest, &used);
        if (used != rest.size()) throw InputError(std::string(what) + ": bad integer");
        return {a, b};
    } catch (const std::logic_error&) {
        throw InputError(std::string(what) + " expects m,n");
    }
}

std::string exponent_label(int e2) { return e2 % 2 ? std::to_string(e2) + "/2" : std::to_string(e2 / 2); }

std::string shift_label(const Exponent2& e) { return "a^" + exponent_label(e.first) + " q^" + exponent_label(e.second); }

// ---- homfly ----

struct HomflyArgs {
    std::string torus, color = "1";
    bool renormalized = false, partially = false, reduced = false;
    int sln = 0;
};

Report cmd_homfly(const HomflyArgs& a, const RunConfig&) {
    auto [m0, n0] = parse_pair(a.torus, "--torus");
    if (m0 >= 1 && n0 >= 1 && gcd_long(m0, n0) != 1)
        throw InputError("T(" + std::to_string(m0) + "," + std::to_string(n0) + ") has gcd " +
                         std::to_string(gcd_long(m0, n0)) + " > 1 and is a link; use `rcalab link --torus " + a.torus +
                         "`");
    TorusKnot K(m0, n0);
    Partition lam = Partition::parse(a.color);
    if (lam.empty()) throw InputError("--color must be a nonempty partition");

    Report r("homfly");
    r.meta()["knot"] = K.str();
    r.meta()["color"] = lam.str();
    r.meta()["formula"] =
        "Rosso-Jones: P = q^{m0 n0 kappa(lambda)} a^{m0(n0-1)|lambda|/2} sum_mu c^mu_{lambda,n0} q^{-(m0/n0) kappa(mu)} "
        "P_mu(unknot), t = q";
    r.meta()["exponents"] = "doubled in JSON: [2*deg_a, 2*deg_q, coefficient]";

    RationalAQ P = rosso_jones(K, lam);
    RationalAQ Pt = renormalize(P, lam, K);
    const int d2 = lam.size() * (m0 + n0 - m0 * n0);
    r.meta()["renormalization"] = "P~ = a^{" + exponent_label(d2) + "} q^{-1/2} (1-q)/(1-a) P";

    auto add_sln = [&](const std::string& label, const RationalAQ& f) {
        if (a.sln > 0) r.add(label + "_sl" + std::to_string(a.sln), sl_N_specialize(f, a.sln));
    };

    if (a.reduced) {
        LaurentAQ f = reduced(K, lam);
        Exponent2 shift;
        LaurentAQ g = strip_monomial(f, &shift);
        r.meta()["variant"] = "reduced: P / P_lambda(unknot)";
        r.meta()["monomial_shift"] = shift_label(shift);
        r.add("reduced", f);
        r.add("reduced_stripped", g);
        add_sln("reduced", RationalAQ(f));
        return r;
    }
    if (a.partially) {
        LaurentAQ f = partially_reduced(K, lam);
        Exponent2 shift;
        LaurentAQ g = strip_monomial(f, &shift);
        r.meta()["variant"] = "partially reduced: P * prod_{i<=|lambda|} (1-q^i)";
        r.meta()["monomial_shift"] = shift_label(shift);
        r.add("partially_reduced", f);
        r.add("partially_reduced_stripped", g);
        add_sln("partially_reduced", RationalAQ(f));
        return r;
    }
    if (a.renormalized) {
        r.meta()["variant"] = "renormalized";
        r.add("renormalized", Pt);
        add_sln("renormalized", Pt);
        return r;
    }
    r.meta()["variant"] = "raw";
    r.add("P", P);
    r.add("renormalized", Pt);
    try {
        r.add("partially_reduced", partially_reduced(K, lam));
    } catch (const NotPolynomialError&) {
    }
    add_sln("P", P);
    return r;
}

// ---- link ----

Report cmd_link(const std::string& torus, const RunConfig&) {
    auto [m, n] = parse_pair(torus, "--torus");
    CherednikParams p = CherednikParams::from_mn(m, n);
    Report r("link");
    r.meta()["link"] = "T(" + std::to_string(m) + "," + std::to_string(n) + ")";
    r.meta()["components"] = p.d;
    r.meta()["formula"] = "sum_{|lambda|=d} dim(pi_lambda) sum_k a^k dim_q Hom(wedge^k h, L_{m/n}(n0 lambda))";
    r.meta()["convention"] = "positive a: a-degree is the exterior degree";

    RationalAQ total = torus_link_homfly(m, n);
    if (!(torus_link_renormalized(m, n) == torus_link_hook_sum(m, n)))
        throw ConsistencyError("renormalized link HOMFLY differs from the Cherednik hook sum");
    r.meta()["check"] = "renormalized Rosso-Jones link sum equals the hook sum";
    r.add("homfly", total);
    for (auto& lam : partitions_of(p.d)) {
        r.add("constituent_" + lam.str(), bigraded_character(p, lam));
        r.add_value("multiplicity_" + lam.str(), dimension(lam).get_str());
    }
    return r;
}

// ---- char ----

struct CharArgs {
    int n = 0, m = 0;
    std::string c, lambda, lambda_prime = "-", cls;
    bool hooks = false;
};

Report cmd_char(const CharArgs& a, const RunConfig& cfg) {
    if (a.n < 1) throw InputError("--n must be positive");
    CherednikParams p;
    if (!a.c.empty()) {
        auto slash = a.c.find('/');
        int m0 = 0, n0 = 1;
        try {
            m0 = std::stoi(a.c.substr(0, slash));
            if (slash != std::string::npos) n0 = std::stoi(a.c.substr(slash + 1));
        } catch (const std::logic_error&) {
            throw InputError("--c expects m0/n0");
        }
        p = CherednikParams::from_c(m0, n0, a.n);
    } else {
        if (a.m < 1) throw InputError("give --m (c = m/n) or --c m0/n0");
        p = CherednikParams::from_mn(a.m, a.n);
    }
    Partition lam = Partition::parse(a.lambda), lamp = Partition::parse(a.lambda_prime);
    check_minimal_support_label(p, lam, lamp);

    Report r("char");
    r.meta()["n"] = p.n;
    r.meta()["c"] = p.c.get_str();
    r.meta()["label"] = "n0*(" + lam.str() + ") + (" + lamp.str() + "), n0 = " + std::to_string(p.n0);

    if (a.hooks) {
        if (!lamp.empty()) throw InputError("--hooks needs lambda' = - (label n0*lambda)");
        RationalAQ h = hook_components_L(p, lam);
        r.meta()["formula"] = "sum_k (-a)^k dim_q Hom(wedge^k h, L_c(n0 lambda)) from the Verma expansion";
        r.add("hook_components", h);
        r.add("bigraded", h.negate_a());
        TorusKnot K(p.m0, p.n0);
        RationalAQ bridge = renormalized(K, lam).shifted(0, -2 * p.m0 * p.n0 * static_cast<int>(kappa(lam)));
        if (!(bridge == h))
            throw ConsistencyError("hook components differ from q^{-m0 n0 kappa} P~_lambda(" + K.str() + ")");
        r.meta()["check"] = "equals q^{-m0 n0 kappa(lambda)} P~_lambda(" + K.str() + ")";
        return r;
    }
    Partition cls = a.cls.empty() ? Partition(std::vector<int>(p.n, 1)) : Partition::parse(a.cls);
    if (cls.size() != p.n) throw InputError("--class must be a partition of n");
    r.meta()["class"] = cls.str();
    r.meta()["formula"] = "Tr(sigma q^h) = sum_nu c^nu_{lambda,lambda',n0} chi_nu(sigma) q^{(n-1)/2 - c kappa(nu)} det(1 - q sigma)^{-1}";
    RationalAQ ch = l_character(p, lam, lamp, cls);
    r.add("character", ch);
    r.meta()["series_through"] = "q^" + std::to_string(cfg.trunc);
    r.add("series", truncate_q(ch.expand(cfg.trunc), cfg.trunc));
    return r;
}

// ---- koszul ----

Report cmd_koszul(int m, int n, int max_qdeg, const RunConfig&) {
    if (m < 1 || n < 2) throw InputError("koszul needs m >= 1 and n >= 2");
    if (n > 6) throw InputError("koszul needs n <= 6");
    if (max_qdeg < 0) throw InputError("--max-qdeg must be nonnegative");
    KoszulHomology H = koszul_homology(m, n, max_qdeg);
    std::string why;
    if (!koszul_euler_check(H, &why)) throw ConsistencyError("Euler characteristic mismatch: " + why);

    Report r("koszul");
    r.meta()["m"] = m;
    r.meta()["n"] = n;
    r.meta()["c"] = make_rational(m, n).get_str();
    r.meta()["lowest_weight"] = "q^" + exponent_label(H.shift2);
    r.meta()["grading"] = "t = polynomial degree + i*m; h-eigenvalue = lowest_weight + t";
    r.meta()["check"] = "Euler characteristic equals the alternating sum of Verma hook characters";
    r.meta()["nonzero_degrees"] = ojson::array();
    for (int i = 0; i < n; ++i)
        if (H.total_dim(i) > 0) r.meta()["nonzero_degrees"].push_back(i);

    auto& T = r.table();
    T.columns = {"i", "t", "q", "dim", "isotypic"};
    for (int i = 0; i < n; ++i)
        for (int t = 0; t <= max_qdeg; ++t) {
            const auto& h = H.at(i, t);
            if (h.dim == 0) continue;
            std::string iso, iso_tex;
            ojson iso_json = ojson::object();
            for (auto it = h.isotypic.rbegin(); it != h.isotypic.rend(); ++it) {
                if (!iso.empty()) {
                    iso += " + ";
                    iso_tex += " + ";
                }
                std::string mult = it->second == 1 ? "" : it->second.get_str();
                iso += mult + "(" + it->first.str() + ")";
                iso_tex += mult + "\\pi_{(" + it->first.str() + ")}";
                iso_json[it->first.str()] = it->second.get_str();
            }
            const std::string q = exponent_label(H.shift2 + 2 * t);
            T.rows.push_back({std::to_string(i), std::to_string(t), q, std::to_string(h.dim), iso});
            T.latex_rows.push_back({std::to_string(i), std::to_string(t), latex_exponent(H.shift2 + 2 * t),
                                    std::to_string(h.dim), iso_tex});
            T.json_rows.push_back(ojson{{"i", i}, {"t", t}, {"q", q}, {"dim", h.dim}, {"isotypic", iso_json}});
        }
    return r;
}

// ---- dmod ----

struct DmodArgs {
    int m = 0, s = 0, k = 1, trunc = -1;
    std::string orbit_lambda;
};

Report cmd_dmod(const DmodArgs& a, const RunConfig& cfg) {
    DmodLabel L = DmodLabel::make(a.m, a.s, Partition::parse(a.orbit_lambda));
    const int trunc = a.trunc >= 0 ? a.trunc : cfg.trunc;
    if (L.rank_for(a.k) < 1) throw InputError("n = s + k m must be positive");
    TruncatedGLCharacter ch = dmod_character_truncated(L, a.k, trunc);

    Report r("dmod");
    r.meta()["m"] = L.m;
    r.meta()["s"] = L.s;
    r.meta()["orbit"] = L.orbit().str();
    r.meta()["n"] = ch.n;
    r.meta()["trunc"] = trunc;
    r.meta()["formula"] = "Schur-Weyl: (1-q) sum_nu c^nu q^{(n-1)/2 - (m/n) kappa(nu)} s_nu(x, qx, q^2 x, ...) in m variables";
    auto& T = r.table();
    T.columns = {"V_mu", "sl_weight", "multiplicity"};
    for (auto& [mu, f] : ch.mult) {
        std::string w;
        for (int x : sl_weight(mu, L.m)) w += (w.empty() ? "" : ",") + std::to_string(x);
        T.rows.push_back({mu.str(), w, f.str()});
        T.latex_rows.push_back({mu.str(), w, to_latex(f)});
        T.json_rows.push_back(ojson{{"mu", mu.str()}, {"sl_weight", w}, {"series", to_json(f)}});
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rcalab: exact characters of rational Cherednik algebra modules, torus knot invariants, "
                 "Koszul homology and D-module characters"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "latex"}));
    app.add_option("--threads", cfg.threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--trunc", cfg.trunc, "series truncation order in q")->check(CLI::NonNegativeNumber);
    app.add_option("--cache", cfg.cache_path, "JSON-lines coefficient cache (default: $RCALAB_CACHE)");
    app.add_flag("--no-cache", cfg.no_cache, "disable the coefficient cache");

    HomflyArgs ha;
    auto* homfly = app.add_subcommand("homfly", "colored HOMFLY of a torus knot");
    homfly->add_option("--torus", ha.torus, "m0,n0 coprime")->required();
    homfly->add_option("--color", ha.color, "partition, e.g. 2,1");
    auto* f1 = homfly->add_flag("--renormalized", ha.renormalized);
    auto* f2 = homfly->add_flag("--partially-reduced", ha.partially);
    auto* f3 = homfly->add_flag("--reduced", ha.reduced);
    f1->excludes(f2)->excludes(f3);
    f2->excludes(f3);
    homfly->add_option("--sln", ha.sln, "also specialize a = q^N")->check(CLI::PositiveNumber);

    std::string link_torus;
    auto* link = app.add_subcommand("link", "uncolored HOMFLY of a torus link via the Cherednik side");
    link->add_option("--torus", link_torus, "m,n")->required();

    CharArgs ca;
    auto* chr = app.add_subcommand("char", "character of L_c(n0 lambda + lambda')");
    chr->add_option("--n", ca.n, "rank n")->required();
    chr->add_option("--m", ca.m, "c = m/n");
    chr->add_option("--c", ca.c, "c = m0/n0 at rank n (allows lambda' != -)");
    chr->add_option("--lambda", ca.lambda, "partition lambda")->required();
    chr->add_option("--lambda-prime", ca.lambda_prime, "partition lambda' ('-' for empty)");
    chr->add_option("--class", ca.cls, "cycle type of sigma (default identity)");
    chr->add_flag("--hooks", ca.hooks, "hook components sum_k (-a)^k dim_q Hom(wedge^k h, L)");

    int km = 0, kn = 0, kdeg = 8;
    auto* kz = app.add_subcommand("koszul", "graded homology of the Koszul-BGG complex");
    kz->add_option("--m", km)->required();
    kz->add_option("--n", kn)->required();
    kz->add_option("--max-qdeg", kdeg, "largest t = polynomial degree + i m");

    DmodArgs da;
    auto* dm = app.add_subcommand("dmod", "SL_m-equivariant D-module multiplicities");
    dm->add_option("--m", da.m)->required();
    dm->add_option("--s", da.s, "central character in [0, m-1]");
    dm->add_option("--orbit-lambda", da.orbit_lambda, "partition of gcd(m, s)")->required();
    dm->add_option("--k", da.k, "n = s + k m");
    dm->add_option("--trunc", da.trunc, "q truncation (default: global --trunc)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_thread_count(cfg.threads);
    std::unique_ptr<JsonlCache> cache;
    std::optional<ScopedStore> scope;
    const std::string path = cfg.cache_path.empty() ? JsonlCache::resolve_path("") : cfg.cache_path;
    if (!cfg.no_cache && !path.empty()) {
        cache = std::make_unique<JsonlCache>(path);
        scope.emplace(cache.get());
    }

    try {
        std::optional<Report> r;
        if (*homfly) r = cmd_homfly(ha, cfg);
        else if (*link) r = cmd_link(link_torus, cfg);
        else if (*chr) r = cmd_char(ca, cfg);
        else if (*kz) r = cmd_koszul(km, kn, kdeg, cfg);
        else if (*dm) r = cmd_dmod(da, cfg);
        std::cout << r->render(cfg.format);
        return 0;
    } catch (const ConsistencyError& e) {
        std::cerr << "rcalab: consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {  // includes LabelError and InputError
        std::cerr << "rcalab: input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "rcalab: input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rcalab: error: " << e.what() << "\n";
        return 1;
    }
}

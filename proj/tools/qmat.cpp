#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qmat/suite.hpp"

using namespace qmat;

namespace {

struct Opts {
    int N = 2, k = 0, n = 0, jobs = 1, random = 0;
    std::vector<int> I, J, U, tau;
    std::string format = "text", cache_dir, type = "pt", what = "R", algebra, expr, action;
    bool perturb = false;
};

void print_poly(const NCPoly& p, const Opts& o) {
    if (o.format == "json")
        std::cout << to_json(p).dump() << "\n";
    else if (o.format == "latex")
        std::cout << to_latex(p) << "\n";
    else
        std::cout << to_text(p) << "\n";
}

int print_reports(const std::vector<Report>& reps, const Opts& o) {
    bool ok = true;
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& r : reps) arr.push_back(r.to_json());
        std::cout << (reps.size() == 1 ? arr[0] : arr).dump() << "\n";
    } else {
        for (auto& r : reps) std::cout << r.to_text() << "\n";
    }
    for (auto& r : reps) ok = ok && r.pass;
    return ok ? 0 : 1;
}

int k_or(const Opts& o, int fallback) { return o.k > 0 ? o.k : fallback; }

std::vector<int> ks(const Opts& o, int hi) {
    std::vector<int> r;
    if (o.k > 0)
        r.push_back(o.k);
    else
        for (int k = 1; k <= hi; ++k) r.push_back(k);
    return r;
}

std::vector<Report> run_verify(const std::string& what, const Opts& o) {
    int N = o.N;
    std::vector<Report> out;
    EngineOptions eo;
    eo.cache_dir = o.cache_dir;
    if (what == "central") {
        for (int k : ks(o, N)) out.push_back(verify_central(N, k, o.jobs, eo));
    } else if (what == "qch") {
        out.push_back(verify_qch(N));
    } else if (what == "newton") {
        Central C(N, eo);
        for (int k : ks(o, N)) out.push_back(fit_newton(C, k, o.perturb));
    } else if (what == "clique") {
        if (o.k > 0)
            out.push_back(verify_clique_sum(N, o.k, make_set(o.I), make_set(o.J)));
        else
            out.push_back(verify_clique_sums(N));
    } else if (what == "unipotent") {
        out.push_back(verify_unipotent(N));
    } else if (what == "subalgebra") {
        for (int k : ks(o, N)) out.push_back(submatrix_suite(N, k));
    } else if (what == "hecke") {
        int kmax = k_or(o, 5);
        for (int k = 1; k <= kmax; ++k) out.push_back(verify_omega(k));
        int nmax = o.n > 0 ? o.n : kmax;
        for (int n = 1; n <= nmax; ++n)
            for (int k = 1; k <= n; ++k) out.push_back(verify_hecke_newton(n, k));
    } else if (what == "schur-weyl") {
        for (int k : ks(o, N + 1)) out.push_back(verify_schur_weyl(N, k));
    } else if (what == "qybe") {
        out.push_back(verify_qybe(N));
    } else if (what == "twist") {
        out.push_back(verify_twist_inverse(N));
        out.push_back(verify_phi_row_lemma(N));
    } else if (what == "psi-dlinv") {
        for (int k : ks(o, std::min(N, 2))) out.push_back(verify_psi_dlinv(N, k));
    } else if (what == "rowexp") {
        out.push_back(verify_rowexp(N, o.random));
    } else if (what == "lemmas") {
        out = verify_lemmas(N);
    } else if (what == "relations") {
        out.push_back(verify_matrix_relation(Algebra::REA, N));
        out.push_back(verify_matrix_relation(Algebra::FRT, N));
    } else if (what == "alpha") {
        out.push_back(verify_alpha_twisted(N));
    } else if (what == "pbw") {
        out.push_back(verify_pbw_soundness(Algebra::REA, N, o.random > 0 ? o.random : 1000));
        out.push_back(verify_pbw_soundness(Algebra::FRT, N, o.random > 0 ? o.random : 1000));
    } else if (what == "freeness") {
        Central C(N, eo);
        out.push_back(verify_freeness(C, k_or(o, 3)));
    } else if (what == "fixtures") {
        out.push_back(check_fixtures());
    }
    return out;
}

int run_stats(const Opts& o) {
    IndexSet I = make_set(o.I), J = make_set(o.J), U = make_set(o.U);
    check_set(I, o.N);
    check_set(J, o.N);
    check_set(U, o.N);
    if (I.size() != J.size() || I.empty()) throw Error("stats: need nonempty I, J of equal size");
    nlohmann::json rows = nlohmann::json::array();
    for (auto& tau : all_bijections(I, J)) {
        if (!o.tau.empty() && tau.targets != o.tau) continue;
        auto [tm, m] = restrict_first(tau);
        rows.push_back({{"tau", tau.targets},
                        {"length_U", length_U(tau, U)},
                        {"exceedance", exceedance(tau)},
                        {"m", m},
                        {"gamma", gamma(U, I, J, m)}});
    }
    if (rows.empty()) throw Error("stats: --tau is not a bijection I -> J");
    nlohmann::json j = {{"I", I}, {"J", J}, {"U", U}, {"wt_I", wt(I)}, {"wt_J", wt(J)}, {"bijections", rows}};
    if (o.format == "json") {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "wt(I) = " << wt(I) << ", wt(J) = " << wt(J) << "\n";
    for (auto& r : rows) {
        std::cout << "tau = " << r["tau"].dump() << ": l_U = " << r["length_U"] << ", e = " << r["exceedance"]
                  << ", m = " << r["m"] << ", gamma = " << r["gamma"] << "\n";
    }
    return 0;
}

int run_minor(const Opts& o) {
    IndexSet I = make_set(o.I), J = make_set(o.J), U = make_set(o.U);
    if (o.type == "dl") {
        print_poly(dlmin(I, J, o.N), o);
    } else if (o.type == "pt") {
        print_poly(ptmin(U, I, J, o.N), o);
    } else {
        print_poly(tmin(I, J, o.N), o);
    }
    return 0;
}

int run_hecke(const Opts& o) {
    int n = o.n > 0 ? o.n : k_or(o, 2);
    int k = k_or(o, n);
    if (o.action == "newton") return print_reports({verify_hecke_newton(n, k)}, o);
    HeckeElt h = o.action == "omega" ? omega(k, n) : omega_bar(k, n);
    if (o.format == "json")
        std::cout << h.to_json().dump() << "\n";
    else
        std::cout << h.str() << "\n";
    return 0;
}

int run_rmatrix(const Opts& o) {
    TensorOp R = o.what == "R"        ? build_R(o.N)
                 : o.what == "Rtilde" ? build_Rtilde(o.N)
                 : o.what == "Rinv"   ? build_Rinv(o.N)
                                      : build_R21(o.N);
    if (o.format == "json")
        std::cout << R.to_json().dump() << "\n";
    else
        std::cout << R.to_text();
    return 0;
}

int run_fixtures(const Opts& o) {
    if (o.action == "list") {
        for (auto& f : load_fixtures()) {
            if (o.format == "json")
                std::cout << nlohmann::json{{"id", f.id}, {"kind", f.kind}, {"source", f.source}, {"N", f.N}}.dump() << "\n";
            else
                std::cout << f.id << "  " << f.kind << "  N=" << f.N << "  (" << f.source << ")"
                          << (f.stored ? "  stored" : "") << "\n";
        }
        return 0;
    }
    return print_reports({check_fixtures()}, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmat: exact computations in the reflection equation and FRT algebras"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--N", o.N, "matrix size")->check(CLI::Range(1, 15));
        sub->add_option("--k", o.k, "degree");
        sub->add_option("--I", o.I, "row set, e.g. 1,3")->delimiter(',');
        sub->add_option("--J", o.J, "column set")->delimiter(',');
        sub->add_option("--U", o.U, "auxiliary set")->delimiter(',');
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--cache-dir", o.cache_dir, "normal form cache directory");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    common(nf);
    nf->add_option("expr", o.expr)->required();
    nf->add_option("--algebra", o.algebra)->check(CLI::IsMember({"REA", "FRT", "rea", "frt"}));

    auto* ck = app.add_subcommand("ck", "central element c_k");
    common(ck);
    auto* sk = app.add_subcommand("sk", "quantum power trace s_k");
    common(sk);

    auto* minor = app.add_subcommand("minor", "quantum minors");
    common(minor);
    minor->add_option("--type", o.type)->check(CLI::IsMember({"dl", "pt", "tw"}));

    auto* stats = app.add_subcommand("stats", "weights, lengths, exceedances, gamma per bijection");
    common(stats);
    stats->add_option("--tau", o.tau, "targets of one bijection")->delimiter(',');

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra elements");
    common(hecke);
    hecke->add_option("action", o.action)->required()->check(CLI::IsMember({"omega", "omega-bar", "newton"}));
    hecke->add_option("--n", o.n, "rank of the Hecke algebra");

    auto* rmat = app.add_subcommand("rmatrix", "R-matrices as sparse triplets");
    common(rmat);
    rmat->add_option("--what", o.what)->check(CLI::IsMember({"R", "Rtilde", "Rinv", "R21"}));

    auto* verify = app.add_subcommand("verify", "run a verification and print its report");
    common(verify);
    verify->add_option("check", o.action)
        ->required()
        ->check(CLI::IsMember({"central", "qch", "newton", "clique", "unipotent", "subalgebra", "hecke", "schur-weyl",
                               "qybe", "twist", "psi-dlinv", "rowexp", "lemmas", "relations", "alpha", "pbw",
                               "freeness", "fixtures"}));
    verify->add_option("--n", o.n, "largest Hecke rank");
    verify->add_option("--random", o.random, "random case count");
    verify->add_flag("--perturb", o.perturb, "perturb c_1 (negative control)");

    auto* fit = app.add_subcommand("fit", "coefficient fitting");
    common(fit);
    fit->add_option("target", o.action)->required()->check(CLI::IsMember({"newton"}));
    fit->add_flag("--perturb", o.perturb, "perturb c_1 (negative control)");

    auto* fx = app.add_subcommand("fixtures", "stored printed values");
    common(fx);
    fx->add_option("action", o.action)->required()->check(CLI::IsMember({"check", "list"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!o.cache_dir.empty()) setenv("QMAT_CACHE_DIR", o.cache_dir.c_str(), 1);

    try {
        if (nf->parsed()) {
            std::optional<Algebra> alg;
            if (!o.algebra.empty()) alg = algebra_from_name(o.algebra);
            NCPoly p = parse_poly(o.expr, alg, o.N);
            Engine eng(p.algebra(), o.N);
            print_poly(eng.normal_form(p), o);
            return 0;
        }
        if (ck->parsed()) {
            if (o.k < 1 || o.k > o.N) throw Error("ck: need 1 <= k <= N");
            print_poly(c_k(o.N, o.k), o);
            return 0;
        }
        if (sk->parsed()) {
            if (o.k < 1) throw Error("sk: need k >= 1");
            print_poly(s_k(o.N, o.k), o);
            return 0;
        }
        if (minor->parsed()) return run_minor(o);
        if (stats->parsed()) return run_stats(o);
        if (hecke->parsed()) return run_hecke(o);
        if (rmat->parsed()) return run_rmatrix(o);
        if (verify->parsed()) return print_reports(run_verify(o.action, o), o);
        if (fit->parsed()) {
            Central C(o.N);
            std::vector<Report> reps;
            for (int k : ks(o, o.N)) reps.push_back(fit_newton(C, k, o.perturb));
            return print_reports(reps, o);
        }
        if (fx->parsed()) return run_fixtures(o);
    } catch (const OutOfScope& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

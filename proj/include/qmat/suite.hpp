#pragma once

#include <random>

#include "qmat/alpha.hpp"
#include "qmat/central.hpp"
#include "qmat/fixtures.hpp"
#include "qmat/lemmas.hpp"
#include "qmat/minors.hpp"

namespace qmat {

/// Live value for a fixture; nullopt for stored twisted minors, which have no general-degree computation.
inline std::optional<NCPoly> fixture_live_value(const Fixture& f, Twist* tw = nullptr) {
    if (f.kind == "ck") return c_k(f.N, f.k);
    if (f.kind == "dl_coinv") return dl_coinv(f.k, f.N);
    if (f.kind == "dlmin") return dlmin(f.I, f.J, f.N);
    if (f.kind == "ptmin") return ptmin(f.U, f.I, f.J, f.N);
    if (f.kind == "tmin") {
        if (f.stored) return std::nullopt;
        return tmin(f.I, f.J, f.N, tw);
    }
    throw Error("unknown fixture kind " + f.kind);
}

/// Replays every fixture. Stored values are checked for PBW order and for their q = 1 image (the plain minor).
inline Report check_fixtures(const std::vector<Fixture>& fx) {
    Report rep{"fixtures", {{"count", fx.size()}}};
    std::map<int, std::unique_ptr<Twist>> twists;
    nlohmann::json stored = nlohmann::json::array();
    for (auto& f : fx) {
        NCPoly want = f.expected();
        if (f.stored) {
            bool ordered = std::all_of(want.terms().begin(), want.terms().end(), [](auto& t) { return is_ordered(t.first); });
            bool limit = classical_limit(want) == classical_limit(dlmin(f.I, f.J, f.N));
            if (!ordered) rep.fail(f.id + ": stored value is not PBW ordered");
            if (!limit) rep.fail(f.id + ": stored value has the wrong q = 1 limit");
            stored.push_back(f.id);
            continue;
        }
        auto& tw = twists[f.N];
        if (!tw) tw = std::make_unique<Twist>(f.N);
        NCPoly got = *fixture_live_value(f, tw.get());
        if (got != want) rep.fail(f.id + ": got " + to_text(got));
    }
    rep.info["stored_only"] = stored;
    return rep;
}

inline Report check_fixtures() { return check_fixtures(load_fixtures()); }

/// Definition against first-row expansion: every (I, J, U) at this N, or `random_cases` random ones if positive.
inline Report verify_rowexp(int N, int random_cases = 0, unsigned seed = 1) {
    Report rep{"rowexp", {{"N", N}}};
    if (random_cases > 0) rep.params["random_cases"] = random_cases;
    RowExpander ex(N);
    long cases = 0;
    auto one = [&](const IndexSet& U, const IndexSet& I, const IndexSet& J) {
        ++cases;
        if (U.empty() && dlmin(I, J, N) != ex.dl(I, J))
            rep.fail("dl I=" + detail::set_str(I) + " J=" + detail::set_str(J));
        if (ptmin(U, I, J, N) != ex.pt(U, I, J))
            rep.fail("pt I=" + detail::set_str(I) + " J=" + detail::set_str(J) + " U=" + detail::set_str(U));
    };
    IndexSet all = range_set(1, N);
    if (random_cases <= 0) {
        for (int k = 1; k <= N; ++k)
            for (auto& I : subsets(all, k))
                for (auto& J : subsets(all, k))
                    for (auto& U : all_subsets(complement(set_union(I, J), N))) one(U, I, J);
    } else {
        std::mt19937 rng(seed);
        for (int c = 0; c < random_cases; ++c) {
            std::uniform_int_distribution<int> kd(1, N);
            int k = kd(rng);
            IndexSet I = all, J = all;
            std::shuffle(I.begin(), I.end(), rng);
            std::shuffle(J.begin(), J.end(), rng);
            I = make_set(IndexSet(I.begin(), I.begin() + k));
            J = make_set(IndexSet(J.begin(), J.begin() + k));
            IndexSet U;
            for (int a : complement(set_union(I, J), N))
                if (rng() % 2) U.push_back(a);
            one(U, I, J);
        }
    }
    rep.info["cases"] = cases;
    return rep;
}

/// Psi(Phi(w)) = w on REA words and Phi(Psi(w)) = w on FRT words, all ordered words of degree <= 2.
inline Report verify_twist_inverse(int N) {
    Report rep{"twist_inverse", {{"N", N}}};
    Twist tw(N);
    auto gens = all_generators(N);
    long cases = 0;
    for (Algebra alg : {Algebra::REA, Algebra::FRT}) {
        std::vector<Word> words{Word{}};
        for (std::size_t a = 0; a < gens.size(); ++a) {
            words.push_back(Word{gens[a]});
            for (std::size_t b = a; b < gens.size(); ++b) words.push_back(Word{gens[a], gens[b]});
        }
        for (auto& w : words) {
            NCPoly x = NCPoly::monomial(alg, N, w);
            NCPoly back = alg == Algebra::REA ? tw.psi(tw.phi(x)) : tw.phi(tw.psi(x));
            ++cases;
            if (back != x) rep.fail(word_str(alg, w) + " -> " + to_text(back));
        }
    }
    rep.info["cases"] = cases;
    return rep;
}

/// omega_k^2 = [k]! omega_k and omega_k T_i = -q^-1 omega_k in H_k.
inline Report verify_omega(int k) {
    Report rep{"hecke_omega", {{"k", k}}};
    HeckeElt w = omega(k, k);
    HeckeElt d = w * w - RatFunc(qfact(k)) * w;
    if (!d.is_zero()) rep.fail("omega^2 - [k]! omega = " + d.str());
    for (int i = 1; i < k; ++i)
        if (w * HeckeElt::T(i, k) != -RatFunc::q(-1) * w) rep.fail("omega T_" + std::to_string(i));
    return rep;
}

/// Idempotence, ordered support, homogeneity, classical limit and associativity on random triples.
inline Report verify_pbw_soundness(Algebra alg, int N, int triples = 1000, unsigned seed = 7) {
    Report rep{"pbw_soundness", {{"algebra", algebra_name(alg)}, {"N", N}, {"triples", triples}}};
    Engine eng(alg, N);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> idx(1, N), deg(1, 3);
    auto word = [&](int d) {
        Word w;
        for (int i = 0; i < d; ++i) w.push_back(gen(idx(rng), idx(rng)));
        return w;
    };
    auto monomial_checks = [&](const Word& w) {
        NCPoly nf = eng.normal_form(NCPoly::monomial(alg, N, w));
        Word s = w;
        std::sort(s.begin(), s.end());
        for (auto& [u, c] : nf.terms()) {
            if (!is_ordered(u)) rep.fail("unordered word in " + to_text(nf));
            if (u.size() != w.size()) rep.fail("degree changed in " + to_text(nf));
            if (c.eval_q1() != Rational(u == s ? 1 : 0)) rep.fail("classical limit of " + word_str(alg, w));
        }
        if (eng.normal_form(nf) != nf) rep.fail("not idempotent on " + word_str(alg, w));
    };
    for (int t = 0; t < triples && rep.residuals.size() < 5; ++t) {
        Word wa = word(deg(rng)), wb = word(deg(rng)), wc = word(deg(rng));
        monomial_checks(wa);
        Word all = wa;
        all.insert(all.end(), wb.begin(), wb.end());
        all.insert(all.end(), wc.begin(), wc.end());
        monomial_checks(all);
        NCPoly a = NCPoly::monomial(alg, N, wa), b = NCPoly::monomial(alg, N, wb), c = NCPoly::monomial(alg, N, wc);
        if (eng.product(eng.product(a, b), c) != eng.product(a, eng.product(b, c)))
            rep.fail("associativity on " + word_str(alg, all));
    }
    return rep;
}

/// Clique sums over every (I, J, k) with 1 <= k - #I <= max_gap, one shared twist.
inline Report verify_clique_sums(int N, int max_gap = 2) {
    Report rep{"clique_sum", {{"N", N}, {"max_gap", max_gap}}};
    Twist tw(N);
    long cases = 0, nonempty = 0;
    IndexSet all = range_set(1, N);
    for (int m = 0; m < N; ++m)
        for (auto& I : subsets(all, m))
            for (auto& J : subsets(all, m))
                for (int k = m + 1; k <= std::min(N, m + max_gap); ++k) {
                    Report r = verify_clique_sum(N, k, I, J, &tw);
                    ++cases;
                    if (r.info.value("clique_size", 0) > 0) ++nonempty;
                    if (!r.pass) rep.fail("k=" + std::to_string(k) + " I=" + detail::set_str(I) + " J=" + detail::set_str(J));
                }
    rep.info["cases"] = cases;
    rep.info["nonempty_cliques"] = nonempty;
    return rep;
}

/// Nonempty cliques with k - #I = 3 whose twisted minors are all stored as fixtures.
inline std::vector<std::tuple<int, IndexSet, IndexSet>> fixture_backed_degree3_cliques(int N) {
    std::vector<std::tuple<int, IndexSet, IndexSet>> out;
    IndexSet all = range_set(1, N);
    for (int m = 0; m + 3 <= N; ++m)
        for (auto& I : subsets(all, m))
            for (auto& J : subsets(all, m)) {
                auto cl = clique(m + 3, I, J, N);
                if (cl.empty()) continue;
                bool backed = std::all_of(cl.begin(), cl.end(), [&](auto& p) { return tmin_fixture(p.first, p.second, N).has_value(); });
                if (backed) out.emplace_back(m + 3, I, J);
            }
    return out;
}

/// The five combinatorial lemma checks at one N.
inline std::vector<Report> verify_lemmas(int N) {
    return {verify_x_closed_form(N), verify_telescoping(N), verify_min_r_form(N), verify_additivity(N),
            verify_beta_bijection(N)};
}

}  // namespace qmat

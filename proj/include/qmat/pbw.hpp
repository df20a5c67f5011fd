#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmat/ncpoly.hpp"

namespace qmat {

inline int kdelta(int a, int b) { return a == b ? 1 : 0; }
inline int heaviside(int x) { return x > 0 ? 1 : 0; }

namespace detail {

inline Terms rea_pair(GenId g, GenId h, int N) {
    const int i = g.row, m = g.col, j = h.row, n = h.col;
    const LaurentPoly d = qdiff();
    Terms out;
    auto add = [&](int r1, int c1, int r2, int c2, const LaurentPoly& c) {
        add_into(out, Word{gen(r1, c1), gen(r2, c2)}, RatFunc(c));
    };
    if (j < i) {
        add(j, n, i, m, LaurentPoly::q(kdelta(i, n) + kdelta(n, m) - kdelta(m, j)));
        if (heaviside(n - m)) add(j, m, i, n, LaurentPoly::q(kdelta(i, m) - kdelta(j, m)) * d);
        if (kdelta(i, n))
            for (int p = i + 1; p <= N; ++p) add(j, p, p, m, d * LaurentPoly::q(kdelta(n, m) - kdelta(j, m)));
        if (kdelta(i, m) && heaviside(n - m))
            for (int p = i + 1; p <= N; ++p) add(j, p, p, n, d * d);
        if (kdelta(j, m))
            for (int p = j + 1; p <= N; ++p) add(i, p, p, n, -(LaurentPoly::q(-1) * d));
    } else if (j == i && n < m) {
        add(i, n, i, m, LaurentPoly::q(kdelta(i, n) - kdelta(i, m) - 1));
        if (kdelta(i, n))
            for (int p = i + 1; p <= N; ++p) add(i, p, p, m, LaurentPoly::q(-1) * d);
        if (kdelta(i, m))
            for (int p = i + 1; p <= N; ++p) add(i, p, p, n, -(LaurentPoly::q(-1) * d));
    } else {
        throw ContractViolation("straighten_pair called on an ordered pair");
    }
    return out;
}

// word x^i_k x^j_l with (i,k) > (j,l)
inline Terms frt_pair(GenId g, GenId h) {
    const int i = g.row, k = g.col, j = h.row, l = h.col;
    if (!(h < g)) throw ContractViolation("straighten_pair called on an ordered pair");
    Terms out;
    auto add = [&](int r1, int c1, int r2, int c2, const LaurentPoly& c) {
        add_into(out, Word{gen(r1, c1), gen(r2, c2)}, RatFunc(c));
    };
    if (i == j) {
        add(i, l, i, k, LaurentPoly::q(-1));
    } else if (k == l) {
        add(j, l, i, k, LaurentPoly::q(-1));
    } else if (k < l) {
        add(j, l, i, k, LaurentPoly(1));
    } else {
        add(j, l, i, k, LaurentPoly(1));
        add(j, k, i, l, -qdiff());
    }
    return out;
}

}  // namespace detail

/// Right-hand side of the defining relation whose left-hand side is the inversion g*h.
inline NCPoly straighten_pair(Algebra alg, GenId g, GenId h, int N) {
    NCPoly::check_index(N, g.row, g.col);
    NCPoly::check_index(N, h.row, h.col);
    if (!(h < g)) throw ContractViolation("straighten_pair called on an ordered pair");
    return NCPoly(alg, N, alg == Algebra::REA ? detail::rea_pair(g, h, N) : detail::frt_pair(g, h));
}

struct EngineOptions {
    std::uint64_t step_budget = 10'000'000;
    std::size_t depth_cap = 20'000;
    std::string cache_dir;
};

/// PBW straightening by leftmost inversion, memoized on whole words. Not thread-safe; use one per thread.
class Engine {
  public:
    Engine(Algebra alg, int N, EngineOptions opt = {}) : alg_(alg), N_(N), opt_(std::move(opt)) {
        if (N < 1 || N > 15) throw Error("N must lie in [1, 15]");
        const int n2 = N * N;
        rules_.resize(std::size_t(n2) * n2);
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b)
                if (b < a) {
                    GenId g = gen(a / N + 1, a % N + 1), h = gen(b / N + 1, b % N + 1);
                    rules_[a * n2 + b] = alg == Algebra::REA ? detail::rea_pair(g, h, N) : detail::frt_pair(g, h);
                }
        if (opt_.cache_dir.empty())
            if (const char* env = std::getenv("QMAT_CACHE_DIR")) opt_.cache_dir = env;
        if (!opt_.cache_dir.empty()) load_cache();
    }

    Engine(const Engine&) = default;
    Engine(Engine&&) = default;
    ~Engine() {
        try {
            flush_cache();
        } catch (...) {
        }
    }

    Algebra algebra() const { return alg_; }
    int N() const { return N_; }
    std::size_t cache_size() const { return cache_.size(); }
    std::uint64_t total_steps() const { return total_steps_; }

    const Terms& rule(GenId g, GenId h) const {
        if (!(h < g)) throw ContractViolation("no rule for an ordered pair");
        return rules_[index(g) * N_ * N_ + index(h)];
    }

    NCPoly generator(int row, int col) const { return NCPoly::generator(alg_, N_, row, col); }
    NCPoly one() const { return NCPoly::one(alg_, N_); }

    NCPoly normal_form(const NCPoly& p) {
        check(p);
        Terms out;
        for (auto& [w, c] : p.terms()) {
            steps_ = 0;
            add_scaled(out, nf_word(w, 0), c);
        }
        return NCPoly(alg_, N_, std::move(out));
    }

    NCPoly product(const NCPoly& a, const NCPoly& b) { return normal_form(a * b); }

    NCPoly commutator(const NCPoly& a, const NCPoly& b) { return normal_form(a * b - b * a); }

    const Terms& normal_form_word(const Word& w) {
        steps_ = 0;
        return nf_word(w, 0);
    }

    std::string cache_file() const {
        return (std::filesystem::path(opt_.cache_dir) /
                ("nf_" + std::string(algebra_name(alg_)) + "_N" + std::to_string(N_) + ".jsonl"))
            .string();
    }

    /// Appends entries computed since the last flush to the on-disk cache.
    void flush_cache() {
        if (opt_.cache_dir.empty() || fresh_.empty()) return;
        std::filesystem::create_directories(opt_.cache_dir);
        std::ofstream f(cache_file(), std::ios::app);
        for (auto& w : fresh_) {
            nlohmann::json rec = {{"algebra", algebra_name(alg_)},
                                  {"N", N_},
                                  {"word", word_json(w)},
                                  {"nf", to_json(NCPoly(alg_, N_, cache_.at(w)))}};
            f << rec.dump() << "\n";
        }
        fresh_.clear();
    }

  private:
    Algebra alg_;
    int N_;
    EngineOptions opt_;
    std::vector<Terms> rules_;
    std::unordered_map<Word, Terms, WordHash> cache_;
    std::vector<Word> fresh_;
    std::uint64_t steps_ = 0, total_steps_ = 0;

    int index(GenId g) const { return (g.row - 1) * N_ + (g.col - 1); }

    void check(const NCPoly& p) const {
        if (p.algebra() != alg_) throw Error("mixed algebra tags");
        if (p.N() != N_) throw Error("mismatched N");
    }

    const Terms& nf_word(const Word& w, std::size_t depth) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        std::size_t p = 0;
        while (p + 1 < w.size() && !(w[p + 1] < w[p])) ++p;
        Terms res;
        if (p + 1 >= w.size()) {
            res.emplace(w, RatFunc(1));
            return cache_.emplace(w, std::move(res)).first->second;
        }
        if (++steps_ > opt_.step_budget)
            throw NonTermination("rewrite step budget exceeded on " + word_str(alg_, w));
        if (depth > opt_.depth_cap) throw NonTermination("rewrite depth cap exceeded on " + word_str(alg_, w));
        ++total_steps_;
        const Terms& rhs = rules_[index(w[p]) * N_ * N_ + index(w[p + 1])];
        for (auto& [w2, c] : rhs) {
            Word nw;
            nw.reserve(w.size());
            nw.insert(nw.end(), w.begin(), w.begin() + p);
            nw.insert(nw.end(), w2.begin(), w2.end());
            nw.insert(nw.end(), w.begin() + p + 2, w.end());
            add_scaled(res, nf_word(nw, depth + 1), c);
        }
        if (!opt_.cache_dir.empty()) fresh_.push_back(w);
        return cache_.emplace(w, std::move(res)).first->second;
    }

    void load_cache() {
        std::ifstream f(cache_file());
        if (!f) return;
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            auto rec = nlohmann::json::parse(line);
            if (rec.at("algebra").get<std::string>() != algebra_name(alg_) || rec.at("N").get<int>() != N_) continue;
            NCPoly nf = ncpoly_from_json(rec.at("nf"));
            cache_.emplace(word_from_json(rec.at("word")), nf.terms());
        }
    }
};

}  // namespace qmat

#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "qmat/parse.hpp"
#include "qmat/qcomb.hpp"

namespace qmat {

/// A printed value: `expected` is kept in the text grammar of parse_poly.
struct Fixture {
    std::string id, kind, source;
    int N = 0, k = 0;
    IndexSet I, J, U;
    bool stored = false;
    std::string expected_text;

    Algebra algebra() const { return kind == "dlmin" || kind == "dl_coinv" ? Algebra::FRT : Algebra::REA; }
    NCPoly expected() const { return parse_poly(expected_text, algebra(), N); }
};

inline std::string fixture_dir() {
    if (const char* e = std::getenv("QMAT_FIXTURE_DIR"); e && *e) return e;
#ifdef QMAT_FIXTURE_DIR
    return QMAT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

inline std::vector<Fixture> load_fixtures(const std::string& path = fixture_dir() + "/printed_values.jsonl") {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);
    std::vector<Fixture> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto j = nlohmann::json::parse(line);
        Fixture f;
        f.id = j.at("id");
        f.kind = j.at("kind");
        f.source = j.value("source", "");
        if (f.source.empty()) throw Error("fixture " + f.id + " has no source");
        f.N = j.at("N");
        f.k = j.value("k", 0);
        f.I = j.value("I", IndexSet{});
        f.J = j.value("J", IndexSet{});
        f.U = j.value("U", IndexSet{});
        f.stored = j.value("stored", false);
        f.expected_text = j.at("expected");
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace qmat

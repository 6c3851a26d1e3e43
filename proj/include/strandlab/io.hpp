#ifndef STRANDLAB_IO_HPP
#define STRANDLAB_IO_HPP

// JSON (de)serialization for complexes, ideals, Betti tables and box
// complexes, plus the text Betti diagram renderer.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "strandlab/boxes.hpp"
#include "strandlab/chain.hpp"
#include "strandlab/ideals.hpp"
#include "strandlab/simplicial.hpp"

namespace strandlab {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

// {"m": int, "facets": [[int,...],...]}
inline SimplicialComplex complex_from_json(const Json& j) {
    try {
        int m = j.at("m").get<int>();
        std::vector<Face> facets;
        for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
        return SimplicialComplex(m, facets);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad complex object: ") + e.what());
    }
}

inline Json complex_to_json(const SimplicialComplex& delta) {
    Json j;
    j["m"] = delta.vertex_count();
    j["facets"] = delta.facets();
    return j;
}

namespace detail {

inline VarIndex var_from_key(const std::string& key) {
    auto comma = key.find(',');
    try {
        if (comma == std::string::npos) return {1, std::stoi(key)}; // single-indexed grid
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad variable key \"" + key + "\"");
    }
}

inline std::string var_key(VarIndex v) { return std::to_string(v.row) + "," + std::to_string(v.col); }

inline Json monomial_to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [v, e] : m.exponents()) out.push_back(Json::array({var_key(v), e}));
    return out;
}

inline Monomial monomial_from_json(const Json& j) {
    Monomial m;
    for (const auto& pair : j) m.bump(var_from_key(pair.at(0).get<std::string>()), pair.at(1).get<int>());
    return m;
}

} // namespace detail

// {"vars": {"rows": n, "cols": m} | {"count": r}, "gens": [[["i,j", e],...],...]}
inline MonomialIdeal ideal_from_json(const Json& j) {
    try {
        const Json& vars = j.at("vars");
        int rows = 1, cols = 0;
        if (vars.contains("count")) {
            cols = vars.at("count").get<int>();
        } else {
            rows = vars.at("rows").get<int>();
            cols = vars.at("cols").get<int>();
        }
        std::vector<Monomial> gens;
        for (const auto& g : j.at("gens")) {
            Monomial m = detail::monomial_from_json(g);
            for (const auto& [v, e] : m.exponents())
                if (v.row < 1 || v.row > rows || v.col < 1 || v.col > cols)
                    throw ParseError("generator variable outside the declared grid");
            gens.push_back(m);
        }
        return MonomialIdeal(gens);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad ideal object: ") + e.what());
    }
}

inline Json ideal_to_json(const MonomialIdeal& ideal, int rows, int cols) {
    Json j;
    if (rows == 1)
        j["vars"] = {{"count", cols}};
    else
        j["vars"] = {{"rows", rows}, {"cols", cols}};
    j["gens"] = Json::array();
    for (const auto& g : ideal.generators()) j["gens"].push_back(detail::monomial_to_json(g));
    return j;
}

// {"fine": [[i, mdeg, count],...], "coarse": [[i, j, count],...]}
inline Json betti_to_json(const BettiTable& t) {
    Json j;
    j["fine"] = Json::array();
    for (const auto& [key, v] : t.fine)
        j["fine"].push_back(Json::array({key.first, detail::monomial_to_json(key.second), v}));
    j["coarse"] = Json::array();
    for (const auto& [key, v] : t.coarse()) j["coarse"].push_back(Json::array({key.first, key.second, v}));
    return j;
}

inline BettiTable betti_from_json(const Json& j) {
    BettiTable t;
    for (const auto& row : j.at("fine"))
        t.fine[{row.at(0).get<int>(), detail::monomial_from_json(row.at(1))}] = row.at(2).get<long long>();
    return t;
}

// {"n":…, "m":…, "boxes": [[[ints],...],...]}
inline Json boxes_to_json(const BoxComplex& p) {
    Json j;
    j["n"] = p.n();
    j["m"] = p.m();
    j["boxes"] = Json::array();
    for (const auto& b : p.cells()) j["boxes"].push_back(b);
    return j;
}

inline BoxComplex boxes_from_json(const Json& j) {
    try {
        std::vector<Box> cells;
        for (const auto& b : j.at("boxes")) cells.push_back(b.get<Box>());
        return BoxComplex(j.at("n").get<int>(), j.at("m").get<int>(), std::move(cells));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad box complex object: ") + e.what());
    }
}

inline Json chain_complex_to_json(const MonomialChainComplex& c) {
    Json j;
    j["levels"] = Json::array();
    for (const auto& lv : c.levels()) {
        Json level = Json::array();
        for (const auto& b : lv) level.push_back(Json::array({b.id, detail::monomial_to_json(b.mdeg)}));
        j["levels"].push_back(level);
    }
    j["diffs"] = Json::array();
    for (std::size_t l = 1; l < c.diffs().size(); ++l) {
        Json block = Json::array();
        for (const auto& col : c.diffs()[l]) {
            Json entries = Json::array();
            for (const auto& e : col)
                entries.push_back(Json::array({e.target, e.coeff, detail::monomial_to_json(e.mono)}));
            block.push_back(entries);
        }
        j["diffs"].push_back(block);
    }
    return j;
}

// Macaulay-style staircase: rows indexed by degree slope j - i, columns by
// homological index.
inline std::string betti_diagram_text(const BettiTable& t) {
    auto coarse = t.coarse();
    if (coarse.empty()) return "(empty Betti table)\n";
    int imin = 1 << 30, imax = -(1 << 30), smin = 1 << 30, smax = -(1 << 30);
    for (const auto& [key, v] : coarse) {
        imin = std::min(imin, key.first);
        imax = std::max(imax, key.first);
        smin = std::min(smin, key.second - key.first);
        smax = std::max(smax, key.second - key.first);
    }
    std::ostringstream os;
    os << "      ";
    for (int i = imin; i <= imax; ++i) os << std::setw(6) << i;
    os << "\n";
    for (int s = smin; s <= smax; ++s) {
        os << std::setw(4) << s << ": ";
        for (int i = imin; i <= imax; ++i) {
            auto it = coarse.find({i, s + i});
            if (it == coarse.end())
                os << std::setw(6) << ".";
            else
                os << std::setw(6) << it->second;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace strandlab

#endif

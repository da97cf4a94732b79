#include "semican/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifndef SEMICAN_FIXTURE_DIR_DEFAULT
#define SEMICAN_FIXTURE_DIR_DEFAULT "fixtures"
#endif

namespace semican {

using nlohmann::json;

std::string rep_to_json(const Rep& x) {
    json j;
    j["quiver"] = x.quiver->name;
    j["dims"] = x.dims;
    json arrows = json::object();
    for (size_t k = 0; k < x.quiver->arrows.size(); ++k) {
        const Mat& m = x.mats[k];
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(i, c)));
            rows.push_back(row);
        }
        arrows[x.quiver->arrows[k].id] = rows;
    }
    j["arrows"] = arrows;
    return j.dump(1);
}

namespace {

QuiverPtr quiver_by_name(const std::string& name) {
    // recognized families: "Qn" and "Qnbar"
    bool dbl = name.size() > 3 && name.substr(name.size() - 3) == "bar";
    std::string core = dbl ? name.substr(0, name.size() - 3) : name;
    if (core.size() < 2 || core[0] != 'Q') throw std::invalid_argument("unknown quiver name '" + name + "'");
    int n = std::stoi(core.substr(1));
    QuiverPtr q = linear_quiver(n);
    return dbl ? double_quiver(q) : q;
}

Rep rep_from(const json& j) {
    QuiverPtr q = quiver_by_name(j.at("quiver").get<std::string>());
    GradedDim dims = j.at("dims").get<GradedDim>();
    Rep x(q, dims);
    for (const auto& [id, rows] : j.at("arrows").items()) {
        Mat& m = x.mat(id);
        if (static_cast<int>(rows.size()) != m.rows()) throw std::invalid_argument("rep_from_json: row count mismatch for " + id);
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("rep_from_json: column count mismatch for " + id);
            for (int c = 0; c < m.cols(); ++c) {
                const auto& cell = rows[i][c];
                m.at(i, c) = cell.is_string() ? rat_parse(cell.get<std::string>()) : rat(cell.get<long long>());
            }
        }
    }
    return x;
}

}  // namespace

Rep rep_from_json(const std::string& text) { return rep_from(json::parse(text)); }

std::string multisegment_to_json(const Multisegment& m) {
    json j = json::array();
    for (const auto& [k, c] : m.seg) j.push_back({k.first, k.second, c});
    return j.dump();
}

Multisegment multisegment_from_json(const std::string& text) {
    Multisegment m;
    for (const auto& e : json::parse(text)) m.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
    return m;
}

std::string tilde_to_json(const TildeDim& d) {
    json j = json::array();
    for (const auto& [k, c] : d.v) j.push_back({k.first, k.second, c});
    return j.dump();
}

TildeDim tilde_from_json(const std::string& text) {
    TildeDim d;
    for (const auto& e : json::parse(text)) d.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
    return d;
}

std::string wordpoly_to_json(const WordPoly& p) {
    json j = json::array();
    for (const auto& [w, k] : p.c) j.push_back({{"word", w}, {"coeff", k}});
    return j.dump();
}

WordPoly wordpoly_from_json(const std::string& text) {
    WordPoly p;
    for (const auto& e : json::parse(text)) p.add(e.at("word").get<Word>(), e.at("coeff").get<long long>());
    return p;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("SEMICAN_FIXTURE_DIR")) return env;
    std::ifstream probe("fixtures/manifest.json");
    if (probe.good()) return "fixtures";
    return SEMICAN_FIXTURE_DIR_DEFAULT;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fixture_text(const std::string& name) { return read_file(fixture_dir() + "/" + name); }

std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>> load_rootlist(const std::string& text) {
    json j = json::parse(text);
    std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>> out;
    for (const auto& g : j.at("groups")) {
        int m = g.at("m").get<int>(), n = g.at("n").get<int>(), rank = g.at("rank").get<int>();
        std::vector<RootVec> roots;
        for (const auto& r : g.at("roots")) {
            RootVec v{};
            for (int i = 0; i < 10; ++i) v[i] = r.at(i).get<long long>();
            roots.push_back(v);
        }
        std::sort(roots.begin(), roots.end());
        out[{{m, n}, rank}] = std::move(roots);
    }
    return out;
}

std::set<std::pair<int, int>> load_edge_fixture(const std::string& text) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : json::parse(text)) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a > b) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

std::vector<Multisegment> load_multisegment_list(const std::string& text) {
    std::vector<Multisegment> out;
    for (const auto& entry : json::parse(text)) {
        Multisegment m;
        for (const auto& e : entry) m.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
        out.push_back(std::move(m));
    }
    return out;
}

ModuleFixture load_module_fixture(const std::string& text) {
    json j = json::parse(text);
    ModuleFixture f{rep_from(j), {}};
    for (const auto& e : j.at("multisegment")) f.multisegment.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
    return f;
}

}  // namespace semican

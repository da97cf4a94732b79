#include "semican/compgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "semican/homext.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semican {

namespace {

// The forty component multisegments in their standard numbering.
const char* kA4List[40] = {
    "[1,1]", "[2,2]", "[3,3]", "[4,4]", "[1,2]", "[1,1]+[2,2]", "[2,3]", "[2,2]+[3,3]", "[3,4]", "[3,3]+[4,4]",
    "[1,3]", "[1,1]+[2,2]+[3,3]", "[1,2]+[3,3]", "[1,1]+[2,3]", "[1,2]+[2,3]", "[2,4]", "[2,2]+[3,3]+[4,4]",
    "[2,3]+[4,4]", "[2,2]+[3,4]", "[2,3]+[3,4]", "[1,3]+[4,4]", "[1,2]+[3,3]+[4,4]", "[1,1]+[2,2]+[3,4]",
    "[1,1]+[2,4]", "[1,2]+[3,4]", "[1,1]+[2,3]+[4,4]", "[1,2]+[2,3]+[4,4]", "[1,2]+[2,4]", "[1,3]+[3,4]",
    "[1,1]+[2,3]+[3,4]", "[1,2]+[2,3]+[3,3]+[4,4]", "[1,2]+[2,4]+[3,3]", "[1,3]+[2,2]+[3,4]",
    "[1,1]+[2,2]+[2,3]+[3,4]", "[1,1]+[1,3]+[2,2]+[3,4]", "[1,2]+[2,4]+[3,3]+[4,4]", "[1,4]", "[1,3]+[2,4]",
    "[1,2]+[2,3]+[3,4]", "[1,1]+[2,2]+[3,3]+[4,4]"};

std::vector<Multisegment> a4_components() {
    std::vector<Multisegment> out;
    out.reserve(40);
    for (const char* s : kA4List) out.push_back(multisegment_parse(s));
    return out;
}

}  // namespace

std::vector<Multisegment> indec_components(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("indec_components: n must be 2, 3 or 4");
    std::vector<Multisegment> out;
    for (const auto& m : a4_components())
        if (m.max_vertex() <= n) out.push_back(m);
    return out;
}

std::vector<int> projective_component_indices(int n) {
    auto comps = indec_components(n);
    std::vector<int> out;
    for (int j = 1; j <= n; ++j) {
        Multisegment p = projective_multisegment(j, n);
        auto it = std::find(comps.begin(), comps.end(), p);
        if (it == comps.end()) throw std::runtime_error("projective_component_indices: projective multisegment missing");
        out.push_back(static_cast<int>(it - comps.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::uint64_t pair_seed(std::uint64_t seed, const Multisegment& m, int trial, int side) {
    std::uint64_t h = mix64(seed, 0x5eedULL + side);
    for (const auto& [k, c] : m.seg) h = mix64(h, mix64(static_cast<std::uint64_t>(k.first) << 32 | static_cast<unsigned>(k.second), static_cast<std::uint64_t>(c)));
    return mix64(h, static_cast<std::uint64_t>(trial));
}

}  // namespace

long long generic_ext(const Multisegment& m1, const Multisegment& m2, int n, int trials, std::uint64_t seed) {
    Rep x1 = rep_of(m1, n), x2 = rep_of(m2, n);
    long long best = -1;
    for (int t = 0; t < trials; ++t) {
        Rep a = fiber_sample(x1, pair_seed(seed, m1, t, 1));
        Rep b = fiber_sample(x2, pair_seed(seed, m2, t, 2));
        long long e = ext1_dim(a, b);
        if (best < 0 || e < best) best = e;
        if (best == 0) break;  // the minimum cannot drop further
    }
    return best;
}

namespace {

std::vector<std::vector<long long>> ext_table_impl(const std::vector<Multisegment>& ms, int n, int trials, std::uint64_t seed, bool parallel) {
    int k = static_cast<int>(ms.size());
    std::vector<std::vector<long long>> table(k, std::vector<long long>(k, 0));
    bool failed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int idx = 0; idx < k * k; ++idx) {
        try {
            int i = idx / k, j = idx % k;
            table[i][j] = generic_ext(ms[i], ms[j], n, trials, seed);
        } catch (...) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
            failed = true;
        }
    }
    if (failed) throw std::runtime_error("ext_table: a pair computation failed");
    return table;
}

}  // namespace

std::vector<std::vector<long long>> ext_table(const std::vector<Multisegment>& ms, int n, int trials, std::uint64_t seed) {
    return ext_table_impl(ms, n, trials, seed, true);
}

std::vector<std::vector<long long>> ext_table_serial(const std::vector<Multisegment>& ms, int n, int trials, std::uint64_t seed) {
    return ext_table_impl(ms, n, trials, seed, false);
}

ComponentGraph build_graph(int n, int trials, std::uint64_t seed, bool parallel) {
    auto comps = indec_components(n);
    auto table = ext_table_impl(comps, n, trials, seed, parallel);
    int k = static_cast<int>(comps.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if ((table[i][j] == 0) != (table[j][i] == 0))
                throw std::runtime_error("build_graph: asymmetric vanishing between components " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
    ComponentGraph g;
    g.loops.resize(k);
    for (int i = 0; i < k; ++i) g.labels.push_back("m" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) {
        g.loops[i] = table[i][i] == 0;
        for (int j = i + 1; j < k; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) g.edges.insert({i, j});
    }
    return g;
}

ComponentGraph reduced_graph(const ComponentGraph& g, int n) {
    auto proj = projective_component_indices(n);
    std::vector<int> newidx(g.nverts(), -1);
    ComponentGraph out;
    for (int i = 0; i < g.nverts(); ++i) {
        if (std::find(proj.begin(), proj.end(), i) != proj.end()) continue;
        newidx[i] = out.nverts();
        out.labels.push_back(g.labels[i]);
        out.loops.push_back(false);
    }
    for (auto [i, j] : g.edges)
        if (newidx[i] >= 0 && newidx[j] >= 0) out.edges.insert({newidx[i], newidx[j]});
    return out;
}

ComponentGraph build_graph_stable(int n, int trials, const std::vector<std::uint64_t>& seeds, int escalated_trials) {
    if (seeds.empty()) throw std::invalid_argument("build_graph_stable: need at least one seed");
    std::vector<ComponentGraph> gs;
    for (auto s : seeds) gs.push_back(build_graph(n, trials, s));
    bool agree = true;
    for (size_t i = 1; i < gs.size(); ++i)
        if (gs[i].edges != gs[0].edges || gs[i].loops != gs[0].loops) agree = false;
    if (agree) return gs[0];
    gs.clear();
    for (auto s : seeds) gs.push_back(build_graph(n, escalated_trials, s));
    for (size_t i = 1; i < gs.size(); ++i)
        if (gs[i].edges != gs[0].edges || gs[i].loops != gs[0].loops)
            throw std::runtime_error("build_graph_stable: graphs disagree across seeds even after escalation");
    return gs[0];
}

namespace {

std::vector<std::vector<char>> edge_table_impl(const std::vector<RootVec>& roots, bool relaxed, bool parallel) {
    const auto& L = lattice();
    int k = static_cast<int>(roots.size());
    std::vector<std::vector<char>> t(k, std::vector<char>(k, 0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int idx = 0; idx < k * k; ++idx) {
        int i = idx / k, j = idx % k;
        t[i][j] = L.edge(roots[i], roots[j], relaxed) ? 1 : 0;
    }
    return t;
}

}  // namespace

std::vector<std::vector<char>> edge_table(const std::vector<RootVec>& roots, bool relaxed_critical) {
    return edge_table_impl(roots, relaxed_critical, true);
}
std::vector<std::vector<char>> edge_table_serial(const std::vector<RootVec>& roots, bool relaxed_critical) {
    return edge_table_impl(roots, relaxed_critical, false);
}

ComponentGraph build_graph_a5(long long slope_bound, long long max_ql, bool relaxed_critical, bool parallel) {
    const auto& L = lattice();
    auto roots = L.schur_slice(slope_bound, max_ql);
    auto t = edge_table_impl(roots, relaxed_critical, parallel);
    int k = static_cast<int>(roots.size());
    ComponentGraph g;
    for (int j = 1; j <= 5; ++j) {
        g.labels.push_back("C" + std::to_string(j));
        g.loops.push_back(true);
    }
    for (const auto& r : roots) {
        RootClass rc = L.classify(r);
        g.labels.push_back("r" + rc.slope.str() + ":" + std::to_string(rc.rank) + ":" + std::to_string(rc.ql) + ":" + to_string(r));
        g.loops.push_back(true);
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5 + k; ++j) g.edges.insert({i, j});  // projective components meet everything
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (t[i][j] != t[j][i]) throw std::runtime_error("build_graph_a5: edge predicate asymmetric");
            if (t[i][j]) g.edges.insert({5 + i, 5 + j});
        }
    for (int i = 0; i < k; ++i) g.loops[5 + i] = t[i][i] != 0;
    return g;
}

std::vector<std::vector<int>> max_cliques(const ComponentGraph& g) {
    int n = g.nverts();
    std::vector<std::set<int>> adj(n);
    for (auto [i, j] : g.edges) {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> R;
    // Bron-Kerbosch with pivoting; P and X kept sorted for determinism
    std::function<void(std::set<int>, std::set<int>)> bk = [&](std::set<int> P, std::set<int> X) {
        if (P.empty() && X.empty()) {
            out.push_back(R);
            return;
        }
        int pivot = -1;
        size_t best = 0;
        for (int u : P)
            if (pivot < 0 || adj[u].size() > best) {
                pivot = u;
                best = adj[u].size();
            }
        for (int u : X)
            if (pivot < 0 || adj[u].size() > best) {
                pivot = u;
                best = adj[u].size();
            }
        std::vector<int> cand;
        for (int v : P)
            if (!adj[pivot].count(v)) cand.push_back(v);
        for (int v : cand) {
            std::set<int> P2, X2;
            for (int w : P)
                if (adj[v].count(w)) P2.insert(w);
            for (int w : X)
                if (adj[v].count(w)) X2.insert(w);
            R.push_back(v);
            bk(P2, X2);
            R.pop_back();
            P.erase(v);
            X.insert(v);
        }
    };
    std::set<int> P, X;
    for (int i = 0; i < n; ++i) P.insert(i);
    bk(P, X);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string export_dot(const ComponentGraph& g) {
    std::ostringstream os;
    os << "graph components {\n";
    for (int i = 0; i < g.nverts(); ++i) os << "  v" << i << " [label=\"" << g.labels[i] << "\"];\n";
    for (int i = 0; i < g.nverts(); ++i)
        if (i < static_cast<int>(g.loops.size()) && g.loops[i]) os << "  v" << i << " -- v" << i << ";\n";
    for (auto [i, j] : g.edges) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const ComponentGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.labels;
    auto& je = j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges) je.push_back({a, b});
    auto& jl = j["loops"] = nlohmann::json::array();
    for (int i = 0; i < g.nverts(); ++i)
        if (g.loops[i]) jl.push_back(i);
    return j.dump(1);
}

ComponentGraph import_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ComponentGraph g;
    for (const auto& v : j.at("vertices")) g.labels.push_back(v.get<std::string>());
    g.loops.assign(g.labels.size(), false);
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a > b) std::swap(a, b);
        g.edges.insert({a, b});
    }
    for (const auto& l : j.at("loops")) g.loops.at(l.get<size_t>()) = true;
    return g;
}

}  // namespace semican

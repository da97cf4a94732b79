#include "semican/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semican/mat.hpp"

namespace semican {

const std::array<std::pair<int, int>, 10> kDeltaVerts = {{{2, 2}, {4, 1}, {1, 2}, {3, 1}, {5, 0}, {2, 1}, {4, 0}, {1, 1}, {3, 0}, {5, -1}}};

int delta_vertex_index(int col, int level) {
    for (int k = 0; k < 10; ++k)
        if (kDeltaVerts[k].first == col && kDeltaVerts[k].second == level) return k;
    return -1;
}

std::string delta_vertex_name(int idx) {
    return std::to_string(kDeltaVerts[idx].first) + "_" + std::to_string(kDeltaVerts[idx].second);
}

Slope Slope::of(long long num, long long den) {
    if (den == 0) return infinity();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {false, num, den};
}

bool Slope::operator<(const Slope& o) const {
    if (inf != o.inf) return !inf;  // finite slopes first, infinity last
    if (inf) return false;
    return num * o.den < o.num * den;
}

std::string Slope::str() const {
    if (inf) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Arrows of the covering quiver restricted to the ten-vertex window:
// a_{ij} : (i+1)_j -> i_j and a*_{ij} : i_j -> (i+1)_{j-1}.
std::vector<std::pair<int, int>> delta_arrows() {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 4; ++i)
        for (int j = -2; j <= 3; ++j) {
            int s, t;
            s = delta_vertex_index(i + 1, j), t = delta_vertex_index(i, j);
            if (s >= 0 && t >= 0) out.push_back({s, t});
            s = delta_vertex_index(i, j), t = delta_vertex_index(i + 1, j - 1);
            if (s >= 0 && t >= 0) out.push_back({s, t});
        }
    return out;
}

std::vector<std::pair<int, int>> delta_relations() {
    // one relation per column, from the top window vertex down two display rows
    std::vector<std::pair<int, int>> out;
    const std::pair<int, int> pairs[5] = {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};  // (2_2,2_1),(4_1,4_0),(1_2,1_1),(3_1,3_0),(5_0,5_-1)
    for (auto p : pairs) out.push_back(p);
    return out;
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

IntMat10 ringel_form(int nverts, const std::vector<std::pair<int, int>>& arrows,
                     const std::vector<std::pair<int, int>>& relations) {
    if (nverts != 10) throw std::invalid_argument("ringel_form: fixed at 10 vertices");
    IntMat10 E{};
    for (int i = 0; i < 10; ++i) E[i][i] = 1;
    for (auto [u, v] : arrows) E[u][v] -= 1;
    for (auto [u, v] : relations) E[u][v] += 1;
    return E;
}

IntMat10 coxeter(const IntMat10& E) {
    Mat m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) m.at(i, j) = rat(E[i][j]);
    Mat inv = m.inverse();
    IntMat10 phi{};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            Rat v = rat(0);
            for (int k = 0; k < 10; ++k) v -= inv.at(i, k) * rat(E[j][k]);  // -E^{-1} E^t
            if (!rat_is_int(v)) throw std::runtime_error("coxeter: non-integral matrix");
            phi[i][j] = rat_to_ll(v);
        }
    return phi;
}

namespace {

RootVec apply(const IntMat10& m, const RootVec& d) {
    RootVec out{};
    for (int i = 0; i < 10; ++i) {
        long long s = 0;
        for (int j = 0; j < 10; ++j) s += m[i][j] * d[j];
        out[i] = s;
    }
    return out;
}

IntMat10 invert_int(const IntMat10& m) {
    Mat mm(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) mm.at(i, j) = rat(m[i][j]);
    Mat inv = mm.inverse();
    IntMat10 out{};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            if (!rat_is_int(inv.at(i, j))) throw std::runtime_error("invert_int: non-integral inverse");
            out[i][j] = rat_to_ll(inv.at(i, j));
        }
    return out;
}

TildeDim make_p(std::initializer_list<std::pair<int, int>> verts) {
    TildeDim t;
    for (auto [c, l] : verts) t.add(c, l, 1);
    return t;
}

}  // namespace

BilinearLattice::BilinearLattice() {
    E_ = ringel_form(10, delta_arrows(), delta_relations());
    phi_ = coxeter(E_);
    phi_inv_ = invert_int(phi_);
    h0_ = {0, 0, 1, 2, 1, 3, 3, 1, 2, 1};
    hinf_ = {1, 1, 1, 2, 1, 1, 1, 0, 0, 0};
    if (pair(h0_, hinf_) != 6 || pair(hinf_, h0_) != -6 || q(h0_) != 0 || q(hinf_) != 0)
        throw std::runtime_error("BilinearLattice: radical generators fail their pairing identities");
    if (apply_coxeter(h0_) != h0_ || apply_coxeter(hinf_) != hinf_)
        throw std::runtime_error("BilinearLattice: radical not Coxeter-fixed");
    // covering dimension vectors of the five indecomposable projectives
    p_[0] = make_p({{1, 3}, {2, 2}, {3, 1}, {4, 0}, {5, -1}});
    p_[1] = make_p({{2, 2}, {1, 2}, {3, 1}, {2, 1}, {4, 0}, {3, 0}, {5, -1}, {4, -1}});
    p_[2] = make_p({{3, 2}, {2, 2}, {4, 1}, {1, 2}, {3, 1}, {5, 0}, {2, 1}, {4, 0}, {3, 0}});
    p_[3] = make_p({{4, 1}, {3, 1}, {5, 0}, {2, 1}, {4, 0}, {1, 1}, {3, 0}, {2, 0}});
    p_[4] = make_p({{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}});
}

long long BilinearLattice::pair(const RootVec& d, const RootVec& e) const {
    long long s = 0;
    for (int i = 0; i < 10; ++i) {
        if (d[i] == 0) continue;
        for (int j = 0; j < 10; ++j) s += d[i] * E_[i][j] * e[j];
    }
    return s;
}

RootVec BilinearLattice::apply_coxeter(const RootVec& d) const { return apply(phi_, d); }
RootVec BilinearLattice::apply_coxeter_inv(const RootVec& d) const { return apply(phi_inv_, d); }

RootVec BilinearLattice::h_ab(long long a, long long b) const {
    RootVec out{};
    for (int i = 0; i < 10; ++i) out[i] = a * h0_[i] + b * hinf_[i];
    return out;
}

bool BilinearLattice::is_root(const RootVec& d) const {
    bool zero = std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; });
    if (zero) return false;
    long long qq = q(d);
    return qq == 0 || qq == 1;
}

bool BilinearLattice::in_r_plus(const RootVec& d) const {
    if (!is_root(d)) return false;
    long long a = pair(d, hinf_);
    return a > 0 || (a == 0 && pair(h0_, d) > 0);
}

std::optional<Slope> BilinearLattice::slope(const RootVec& d) const {
    long long a = pair(d, hinf_), b = pair(h0_, d);
    if (a == 0 && b == 0) return std::nullopt;
    if (a == 0) return Slope::infinity();
    return Slope::of(b, a);
}

std::pair<long long, long long> BilinearLattice::orbit_sum_ab(const RootVec& d) const {
    RootVec x = d, h{};
    int rk = 0;
    for (int k = 1; k <= 6; ++k) {
        x = apply_coxeter(x);
        for (int i = 0; i < 10; ++i) h[i] += x[i];
        if (x == d) {
            rk = k;
            break;
        }
    }
    if (rk == 0) throw std::runtime_error("orbit_sum_ab: Coxeter period exceeds 6");
    // h = a h0 + b hinf; read off at the unit positions 1_1 and 4_1
    long long a = h[delta_vertex_index(1, 1)];
    long long b = h[delta_vertex_index(4, 1)];
    return {a, b};
}

RootClass BilinearLattice::classify(const RootVec& d) const {
    if (!in_r_plus(d)) throw std::invalid_argument("classify: not a positive root");
    RootClass rc;
    RootVec x = d;
    for (int k = 1; k <= 6; ++k) {
        x = apply_coxeter(x);
        if (x == d) {
            rc.rank = k;
            break;
        }
    }
    auto [a, b] = orbit_sum_ab(d);
    rc.ql = std::gcd(std::abs(a), std::abs(b));
    rc.slope = *slope(d);
    return rc;
}

bool BilinearLattice::is_schur(const RootVec& d) const {
    if (!in_r_plus(d)) throw std::invalid_argument("is_schur: not a positive root");
    long long a = std::abs(pair(h0_, d)), b = std::abs(pair(d, hinf_));
    return std::gcd(a, b) <= 6;
}

const std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>>& BilinearLattice::base_roots() const {
    if (!base_.empty()) return base_;
    // window form: drop the vertices 1_1 and 4_1; the restriction is positive
    // definite of rank 8 with 240 roots, generated by reflection closure
    std::vector<int> keep;
    for (int k = 0; k < 10; ++k)
        if (k != delta_vertex_index(1, 1) && k != delta_vertex_index(4, 1)) keep.push_back(k);
    long long B[8][8];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) B[i][j] = E_[keep[i]][keep[j]] + E_[keep[j]][keep[i]];
    std::set<std::array<long long, 8>> roots;
    std::vector<std::array<long long, 8>> frontier;
    for (int i = 0; i < 8; ++i) {
        std::array<long long, 8> e{};
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::array<long long, 8>> next;
        for (const auto& x : frontier)
            for (int i = 0; i < 8; ++i) {
                long long c = 0;
                for (int j = 0; j < 8; ++j) c += B[i][j] * x[j];
                auto y = x;
                y[i] -= c;
                if (roots.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (roots.size() != 240) throw std::runtime_error("base_roots: window form has " + std::to_string(roots.size()) + " roots, expected 240");

    std::set<RootVec> reduced;
    for (const auto& r8 : roots) {
        RootVec v{};
        for (int i = 0; i < 8; ++i) v[keep[i]] = r8[i];
        long long a = pair(v, hinf_), b = pair(h0_, v);
        long long ap = floordiv(a, 6), bp = floordiv(b, 6);
        for (int i = 0; i < 10; ++i) v[i] -= ap * h0_[i] + bp * hinf_[i];
        reduced.insert(v);
    }
    if (reduced.size() != 240) throw std::runtime_error("base_roots: reduction collided");

    std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>> groups;
    for (const auto& v : reduced) {
        RootClass rc = classify(v);
        auto [a, b] = orbit_sum_ab(v);
        groups[{{static_cast<int>(a), static_cast<int>(b)}, rc.rank}].push_back(v);
    }
    int n2 = 0, n3 = 0, n6 = 0;
    for (auto& [key, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        if (static_cast<int>(vs.size()) != key.second) throw std::runtime_error("base_roots: class size mismatch");
        if (key.second == 2) ++n2;
        if (key.second == 3) ++n3;
        if (key.second == 6) ++n6;
    }
    if (n2 != 3 || n3 != 8 || n6 != 35) throw std::runtime_error("base_roots: partition is not 2*3 + 3*8 + 6*35");
    base_ = std::move(groups);
    return base_;
}

std::vector<RootVec> BilinearLattice::construct_class(const Slope& lambda, long long ell, int i) const {
    if (i != 2 && i != 3 && i != 6) throw std::invalid_argument("construct_class: rank must be 2, 3 or 6");
    if (ell < 1) throw std::invalid_argument("construct_class: quasi-length must be positive");
    if (ell % i == 0) return {};
    long long a, b;
    if (lambda.inf) {
        a = 0;
        b = ell;
    } else {
        a = ell * lambda.den;
        b = ell * lambda.num;
    }
    long long ap = floordiv(a, i), app = a - i * ap;
    long long bp = floordiv(b, i), bpp = b - i * bp;
    auto it = base_roots().find({{static_cast<int>(app), static_cast<int>(bpp)}, i});
    if (it == base_roots().end()) throw std::runtime_error("construct_class: missing base class");
    std::vector<RootVec> out;
    for (const auto& r : it->second) {
        RootVec v = r;
        for (int k = 0; k < 10; ++k) v[k] += ap * h0_[k] + bp * hinf_[k];
        out.push_back(v);
    }
    return out;
}

const TildeDim& BilinearLattice::proj_cover_dim(int k) const {
    if (k < 1 || k > 5) throw std::invalid_argument("proj_cover_dim: k out of range");
    return p_[k - 1];
}

TildeDim BilinearLattice::delta_map(const RootVec& r) const {
    if (!in_r_plus(r)) throw std::invalid_argument("delta_map: not a positive root");
    Slope lam = *slope(r);
    TildeDim d;
    for (int k = 0; k < 10; ++k) d.add(kDeltaVerts[k].first, kDeltaVerts[k].second, r[k]);
    auto addp = [&](int pk, long long coeff) {
        if (coeff == 0) return;
        for (const auto& [v, c] : p_[pk - 1].v) d.add(v.first, v.second, coeff * c);
    };
    auto at = [&](int col, int lev) { return r[delta_vertex_index(col, lev)]; };
    if (lam.inf) {
        addp(1, -std::min(0LL, at(5, -1)));
        addp(3, -std::min(0LL, at(3, 0)));
        addp(5, -std::min(0LL, at(1, 1)));
    } else if (lam.num > 0) {
        // already a genuine covering dimension vector
    } else if (lam.num == 0) {
        addp(2, -std::min(0LL, at(2, 2)));
        addp(4, -std::min(0LL, at(4, 1)));
    } else {
        addp(2, -at(2, 2));
        addp(4, -at(4, 1));
    }
    for (const auto& [v, c] : d.v)
        if (c < 0) throw std::runtime_error("delta_map: negative output entry at column " + std::to_string(v.first));
    d.canonicalize();
    return d;
}

RootVec BilinearLattice::xi_map(const TildeDim& din) const {
    static const int top_level[6] = {0, 2, 2, 1, 1, 0};  // highest window level per column
    static const int p_top_level[6] = {0, 3, 2, 2, 1, 1};
    static const int bottom_col_to_p[6] = {0, 5, 4, 3, 2, 1};  // column of p_k's lowest vertex -> k
    static const int p_bottom_level[6] = {0, -1, -1, 0, 0, 1};

    std::map<std::pair<int, int>, long long> d(din.v.begin(), din.v.end());
    auto subtract_p = [&](int k, int z, long long coeff) {
        for (const auto& [v, c] : p_[k - 1].v) {
            auto key = std::make_pair(v.first, v.second + z);
            d[key] -= coeff * c;
            if (d[key] == 0) d.erase(key);
        }
    };
    // clear everything above the window, highest height first
    for (;;) {
        int best = -1;
        std::pair<int, int> vert;
        long long val = 0;
        for (const auto& [v, c] : d)
            if (v.second > top_level[v.first]) {
                int h = v.first + 2 * v.second;
                if (h > best) {
                    best = h;
                    vert = v;
                    val = c;
                }
            }
        if (best < 0) break;
        subtract_p(vert.first, vert.second - p_top_level[vert.first], val);
    }
    // clear everything below, lowest height first (subtracting only adds entries above)
    for (;;) {
        int best = 1 << 20;
        std::pair<int, int> vert;
        long long val = 0;
        for (const auto& [v, c] : d)
            if (v.second < top_level[v.first] - 1) {
                int h = v.first + 2 * v.second;
                if (h < best) {
                    best = h;
                    vert = v;
                    val = c;
                }
            }
        if (best == 1 << 20) break;
        int k = bottom_col_to_p[vert.first];
        subtract_p(k, vert.second - p_bottom_level[k], val);
    }
    RootVec out{};
    for (const auto& [v, c] : d) {
        int idx = delta_vertex_index(v.first, v.second);
        if (idx < 0) throw std::runtime_error("xi_map: fold left support outside the window");
        out[idx] = c;
    }
    return out;
}

bool BilinearLattice::critical(const RootVec& d, const RootVec& e, bool relaxed) const {
    RootClass cd = classify(d), ce = classify(e);
    if (cd.rank != 6 || ce.rank != 6) return false;
    if (!(cd.slope == ce.slope)) return false;
    if (!relaxed && cd.ql != ce.ql) return false;
    if (pair(d, e) != 0 || pair(e, d) != 0) return false;
    return cd.ql + ce.ql >= 7;
}

bool BilinearLattice::edge(const RootVec& d, const RootVec& e, bool relaxed_critical) const {
    if (pair(d, e) < 0 || pair(e, d) < 0) return false;
    if (!critical(d, e, relaxed_critical)) return true;
    RootVec x = e;
    for (int j = 1; j <= 6; ++j) {
        x = apply_coxeter(x);
        long long v = pair(d, x);
        if (v != 0) return v < 0;
    }
    return false;  // all six pairings vanish: only the non-critical route can grant an edge
}

std::vector<RootVec> BilinearLattice::schur_roots_of_slope(const Slope& lambda) const {
    std::vector<RootVec> out;
    if (lambda.inf)
        out.push_back(h_ab(0, 1));
    else
        out.push_back(h_ab(lambda.den, lambda.num));
    for (int i : {2, 3, 6})
        for (long long ell = 1; ell < i; ++ell)
            for (const auto& r : construct_class(lambda, ell, i)) out.push_back(r);
    return out;
}

std::vector<RootVec> BilinearLattice::schur_slice(long long slope_bound, long long max_ql) const {
    std::vector<Slope> slopes;
    slopes.push_back(Slope::infinity());
    for (long long den = 1; den <= slope_bound; ++den)
        for (long long num = -slope_bound; num <= slope_bound; ++num) {
            Slope s = Slope::of(num, den);
            if (s.den != den || s.num != num) continue;  // not in lowest terms
            slopes.push_back(s);
        }
    std::sort(slopes.begin(), slopes.end());
    std::vector<RootVec> out;
    for (const auto& lam : slopes)
        for (const auto& r : schur_roots_of_slope(lam)) {
            if (classify(r).ql <= max_ql) out.push_back(r);
        }
    return out;
}

const BilinearLattice& lattice() {
    static const BilinearLattice inst;
    return inst;
}

std::string to_string(const RootVec& r) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 10; ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

}  // namespace semican

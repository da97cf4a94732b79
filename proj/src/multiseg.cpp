#include "semican/multiseg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "semican/homext.hpp"

namespace semican {

void Multisegment::add(int i, int j, long long mult) {
    if (i < 1 || j < i) throw std::invalid_argument("Multisegment::add: need 1 <= i <= j");
    if (mult == 0) return;
    auto key = std::make_pair(i, j);
    seg[key] += mult;
    if (seg[key] < 0) throw std::invalid_argument("Multisegment::add: negative multiplicity");
    if (seg[key] == 0) seg.erase(key);
}

int Multisegment::max_vertex() const {
    int m = 0;
    for (const auto& [k, c] : seg) m = std::max(m, k.second);
    return m;
}

long long Multisegment::total_mult() const {
    long long s = 0;
    for (const auto& [k, c] : seg) s += c;
    return s;
}

std::string to_string(const Multisegment& m) {
    if (m.seg.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : m.seg) {
        if (!first) os << "+";
        first = false;
        if (c != 1) os << c;
        os << "[" << k.first << "," << k.second << "]";
    }
    return os.str();
}

Multisegment multisegment_parse(const std::string& s) {
    Multisegment m;
    if (s == "0" || s.empty()) return m;
    size_t p = 0;
    while (p < s.size()) {
        if (s[p] == '+') ++p;
        long long mult = 1;
        size_t q = p;
        while (q < s.size() && isdigit(static_cast<unsigned char>(s[q]))) ++q;
        if (q > p) mult = std::stoll(s.substr(p, q - p));
        if (q >= s.size() || s[q] != '[') throw std::invalid_argument("multisegment_parse: expected '[' in '" + s + "'");
        size_t comma = s.find(',', q), close = s.find(']', q);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("multisegment_parse: malformed segment in '" + s + "'");
        int i = std::stoi(s.substr(q + 1, comma - q - 1));
        int j = std::stoi(s.substr(comma + 1, close - comma - 1));
        m.add(i, j, mult);
        p = close + 1;
    }
    return m;
}

GradedDim degree(const Multisegment& m, int n) {
    GradedDim d(n, 0);
    for (const auto& [k, c] : m.seg) {
        if (k.second > n) throw std::invalid_argument("degree: segment exceeds n");
        for (int v = k.first; v <= k.second; ++v) d[v - 1] += c;
    }
    return d;
}

Multisegment msm_max(const GradedDim& dv) {
    GradedDim d = dv;
    Multisegment m;
    int n = static_cast<int>(d.size());
    for (;;) {
        int a = 0;
        while (a < n && d[a] == 0) ++a;
        if (a == n) break;
        int b = a;
        while (b + 1 < n && d[b + 1] > 0) ++b;
        long long strip = d[a];
        for (int v = a; v <= b; ++v) strip = std::min(strip, d[v]);
        // peeling one copy at a time and peeling `strip` copies agree; take the fast route
        m.add(a + 1, b + 1, strip);
        for (int v = a; v <= b; ++v) d[v] -= strip;
    }
    return m;
}

Rep rep_of(const Multisegment& m, int n) {
    if (m.max_vertex() > n) throw std::invalid_argument("rep_of: segment exceeds n");
    Rep acc(linear_quiver(n), GradedDim(n, 0));
    for (const auto& [k, c] : m.seg)
        for (long long t = 0; t < c; ++t) acc = direct_sum(acc, segment_rep(k.first, k.second, n));
    return acc;
}

void TildeDim::add(int col, int level, long long c) {
    if (c == 0) return;
    v[{col, level}] += c;
    if (v[{col, level}] == 0) v.erase({col, level});
}

int TildeDim::min_level() const {
    bool any = false;
    int m = 0;
    for (const auto& [k, c] : v)
        if (!any || k.second < m) {
            m = k.second;
            any = true;
        }
    return any ? m : 0;
}

int TildeDim::max_level() const {
    bool any = false;
    int m = 0;
    for (const auto& [k, c] : v)
        if (!any || k.second > m) {
            m = k.second;
            any = true;
        }
    return any ? m : 0;
}

void TildeDim::canonicalize() {
    int m = min_level();
    if (m == 0) return;
    std::map<std::pair<int, int>, long long> nv;
    for (const auto& [k, c] : v) nv[{k.first, k.second - m}] = c;
    v = std::move(nv);
}

GradedDim TildeDim::level_row(int level, int n) const {
    GradedDim d(n, 0);
    for (const auto& [k, c] : v)
        if (k.second == level) {
            if (k.first > n) throw std::invalid_argument("TildeDim::level_row: column exceeds n");
            d[k.first - 1] += c;
        }
    return d;
}

Multisegment msm_max_tilde(const TildeDim& d, int n) {
    Multisegment out;
    if (d.v.empty()) return out;
    for (int lev = d.min_level(); lev <= d.max_level(); ++lev) {
        Multisegment part = msm_max(d.level_row(lev, n));
        for (const auto& [k, c] : part.seg) out.add(k.first, k.second, c);
    }
    return out;
}

namespace {

TildeDim make_tilde(std::initializer_list<std::tuple<int, int, long long>> entries) {
    TildeDim t;
    for (auto [i, j, c] : entries) t.add(i, j, c);
    t.canonicalize();
    return t;
}

}  // namespace

const TildeDim& psi_exceptional_first() {
    static const TildeDim t = make_tilde({{1, 2, 1}, {1, 3, 1}, {2, 1, 1}, {2, 2, 1}, {3, 1, 2}, {4, 0, 1}, {4, 1, 1}, {5, 0, 1}});
    return t;
}

const TildeDim& psi_exceptional_second() {
    static const TildeDim t = make_tilde({{1, 3, 1}, {2, 2, 1}, {2, 3, 1}, {3, 2, 2}, {4, 1, 1}, {4, 2, 1}, {5, 0, 1}, {5, 1, 1}});
    return t;
}

Multisegment psi(const TildeDim& d, int n) {
    TildeDim c = d;
    c.canonicalize();
    if (n == 5) {
        if (c == psi_exceptional_first()) return multisegment_parse("2[1,1]+[2,2]+[2,4]+[3,3]+[4,5]");
        if (c == psi_exceptional_second()) return multisegment_parse("[1,2]+[2,4]+[3,3]+[4,4]+2[5,5]");
    }
    return msm_max_tilde(c, n);
}

bool orbit_dim_check(const Rep& x, const Multisegment& m) {
    int n = x.quiver->nverts;
    if (degree(m, n) != x.dims) return false;
    return orbit_dim_check(x);
}

Multisegment projective_multisegment(int j, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("projective_multisegment: j out of range");
    Multisegment m;
    for (int i = 1; i <= n - j + 1; ++i) m.add(i, i + j - 1);
    return m;
}

}  // namespace semican

#include "semican/flags.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semican {

BasisForm basis_form(const Rep& x) {
    BasisForm b;
    b.n = x.quiver->nverts;
    std::vector<int> offset(b.n + 1, 0);
    for (int v = 1; v <= b.n; ++v) offset[v] = offset[v - 1] + static_cast<int>(x.dims[v - 1]);
    int m = offset[b.n];
    b.type.resize(m);
    for (int v = 1; v <= b.n; ++v)
        for (int k = offset[v - 1]; k < offset[v]; ++k) b.type[k] = v;
    b.out.assign(m, {});
    b.in.assign(m, {});
    b.partial_perm = true;
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    b.forest = true;
    for (size_t k = 0; k < x.mats.size(); ++k) {
        const Arrow& ar = x.quiver->arrows[k];
        const Mat& M = x.mats[k];
        std::vector<int> row_ones(M.rows(), 0), col_ones(M.cols(), 0);
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) {
                const Rat& e = M.at(i, j);
                if (e == 0) continue;
                if (e != 1) throw std::invalid_argument("basis_form: entry not in {0,1}");
                ++row_ones[i];
                ++col_ones[j];
                int src = offset[ar.src - 1] + j, tgt = offset[ar.tgt - 1] + i;
                b.out[src].push_back(tgt);
                b.in[tgt].push_back(src);
                int rs = find(src), rt = find(tgt);
                if (rs == rt)
                    b.forest = false;
                else
                    parent[rs] = rt;
            }
        for (int i = 0; i < M.rows(); ++i)
            if (row_ones[i] > 1) b.partial_perm = false;
        for (int j = 0; j < M.cols(); ++j)
            if (col_ones[j] > 1) b.partial_perm = false;
    }
    return b;
}

bool is_tree_basis(const Rep& x) {
    for (const auto& M : x.mats)
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j)
                if (M.at(i, j) != 0 && M.at(i, j) != 1) return false;
    BasisForm b = basis_form(x);
    return b.partial_perm && b.forest;
}

std::vector<Word> words_of_content(const GradedDim& d) {
    Word sorted_letters;
    for (size_t v = 0; v < d.size(); ++v)
        for (long long k = 0; k < d[v]; ++k) sorted_letters.push_back(static_cast<int>(v) + 1);
    std::vector<Word> out;
    Word w = sorted_letters;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Coordinate composition-series DP shared by flag_count and delta_expansion.
// Removing basis vector v from S is legal iff no u in S\{v} maps onto v.
struct CoordDP {
    const BasisForm& b;
    int m;
    explicit CoordDP(const BasisForm& bf) : b(bf), m(static_cast<int>(bf.type.size())) {
        if (m > 24) throw std::invalid_argument("flag DP: module too large");
    }
    bool removable(std::uint32_t S, int v) const {
        for (int u : b.in[v])
            if (u != v && (S >> u & 1)) return false;
        return true;
    }
};

}  // namespace

long long flag_count(const Rep& x, const Word& w) {
    BasisForm b = basis_form(x);
    if (!b.partial_perm || !b.forest) throw std::invalid_argument("flag_count: module has no tree basis");
    GradedDim cw = content(w, b.n);
    if (cw != x.dims) throw std::invalid_argument("flag_count: word content does not match dims");
    CoordDP dp(b);
    int m = dp.m;
    std::unordered_map<std::uint32_t, long long> memo;
    std::function<long long(std::uint32_t)> rec = [&](std::uint32_t S) -> long long {
        if (S == 0) return 1;
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        int k = m - __builtin_popcount(S);  // next letter index
        long long tot = 0;
        for (int v = 0; v < m; ++v) {
            if (!(S >> v & 1) || b.type[v] != w[k]) continue;
            if (dp.removable(S, v)) tot += rec(S & ~(1u << v));
        }
        memo[S] = tot;
        return tot;
    };
    return rec(m == 32 ? ~0u : ((1u << m) - 1));
}

WordPoly delta_expansion(const Rep& x) {
    BasisForm b = basis_form(x);
    if (!b.partial_perm || !b.forest) throw std::invalid_argument("delta_expansion: module has no tree basis");
    CoordDP dp(b);
    int m = dp.m;
    std::unordered_map<std::uint32_t, WordPoly> memo;
    std::function<const WordPoly&(std::uint32_t)> rec = [&](std::uint32_t S) -> const WordPoly& {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        WordPoly out;
        if (S == 0)
            out = wp_one();
        else
            for (int v = 0; v < m; ++v) {
                if (!(S >> v & 1) || !dp.removable(S, v)) continue;
                const WordPoly& sub = rec(S & ~(1u << v));
                for (const auto& [w, k] : sub.c) {
                    Word nw;
                    nw.reserve(w.size() + 1);
                    nw.push_back(b.type[v]);
                    nw.insert(nw.end(), w.begin(), w.end());
                    out.add(nw, k);
                }
            }
        return memo.emplace(S, std::move(out)).first->second;
    };
    return rec(m == 0 ? 0 : (1u << m) - 1);
}

Rep grid_module(const SkewShape& s, int n) {
    auto cells = s.cells();
    std::map<std::pair<int, int>, int> within;  // cell -> index within its vertex
    GradedDim dims(n, 0);
    std::map<std::pair<int, int>, bool> in_shape;
    for (const auto& c : cells) in_shape[c] = true;
    std::vector<std::pair<int, int>> sorted_cells = cells;
    std::sort(sorted_cells.begin(), sorted_cells.end());
    for (const auto& c : sorted_cells) {
        int t = c.first - c.second;
        if (t < 1 || t > n) throw std::invalid_argument("grid_module: cell content out of vertex range");
        within[c] = static_cast<int>(dims[t - 1]++);
    }
    Rep x(double_quiver(linear_quiver(n)), dims);
    for (const auto& c : sorted_cells) {
        int a = c.first, b = c.second, t = a - b;
        if (in_shape.count({a + 1, b}))  // a_t : type t+1 -> t
            x.mat("a" + std::to_string(t)).at(within[c], within[{a + 1, b}]) = 1;
        if (in_shape.count({a, b + 1}))  // a_{t-1}* : type t-1 -> t
            x.mat("a" + std::to_string(t - 1) + "*").at(within[c], within[{a, b + 1}]) = 1;
    }
    return x;
}

// --- point-count engine ------------------------------------------------------

namespace {

long mod_inv(long a, long p) {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

struct ModRep {
    int n;
    long p;
    std::vector<long long> dims;
    std::vector<std::vector<std::vector<long>>> mats;  // per arrow, [tgt][src]
    const std::vector<Arrow>* arrows;
};

ModRep reduce_mod(const Rep& x, long p) {
    ModRep m;
    m.n = x.quiver->nverts;
    m.p = p;
    m.dims = x.dims;
    m.arrows = &x.quiver->arrows;
    for (const auto& M : x.mats) {
        std::vector<std::vector<long>> A(M.rows(), std::vector<long>(M.cols(), 0));
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) {
                const Rat& e = M.at(i, j);
                long num = mpz_fdiv_ui(e.get_num_mpz_t(), static_cast<unsigned long>(p));
                long den = mpz_fdiv_ui(e.get_den_mpz_t(), static_cast<unsigned long>(p));
                if (den == 0) throw std::invalid_argument("flag_count_fp: denominator divisible by p");
                A[i][j] = num * mod_inv(den, p) % p;
            }
        m.mats.push_back(std::move(A));
    }
    return m;
}

// basis of the kernel of the stacked out-arrow matrices at vertex v (the socle there)
std::vector<std::vector<long>> socle_basis(const ModRep& m, int v) {
    int dv = static_cast<int>(m.dims[v - 1]);
    std::vector<std::vector<long>> rows;
    for (size_t k = 0; k < m.arrows->size(); ++k)
        if ((*m.arrows)[k].src == v)
            for (const auto& r : m.mats[k]) rows.push_back(r);
    long p = m.p;
    int R = static_cast<int>(rows.size());
    std::vector<int> pivcol;
    int rr = 0;
    for (int c = 0; c < dv && rr < R; ++c) {
        int pr = -1;
        for (int i = rr; i < R; ++i)
            if (rows[i][c] % p) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[rr]);
        long inv = mod_inv(rows[rr][c], p);
        for (auto& x : rows[rr]) x = x * inv % p;
        for (int i = 0; i < R; ++i) {
            if (i == rr || rows[i][c] == 0) continue;
            long f = rows[i][c];
            for (int j = 0; j < dv; ++j) rows[i][j] = ((rows[i][j] - f * rows[rr][j]) % p + p) % p;
        }
        pivcol.push_back(c);
        ++rr;
    }
    std::vector<bool> is_piv(dv, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<long>> basis;
    for (int f = 0; f < dv; ++f) {
        if (is_piv[f]) continue;
        std::vector<long> vco(dv, 0);
        vco[f] = 1;
        for (size_t k = 0; k < pivcol.size(); ++k) vco[pivcol[k]] = (p - rows[k][f] % p) % p;
        basis.push_back(std::move(vco));
    }
    return basis;
}

// quotient by the line spanned by vec at vertex v; vec must lie in the socle there
ModRep quotient_line(const ModRep& m, int v, std::vector<long> vec) {
    long p = m.p;
    int dv = static_cast<int>(m.dims[v - 1]);
    int piv = -1;
    for (int i = 0; i < dv; ++i)
        if (vec[i] % p) {
            piv = i;
            break;
        }
    long inv = mod_inv(vec[piv], p);
    for (auto& x : vec) x = x * inv % p;
    std::vector<int> keep;
    for (int i = 0; i < dv; ++i)
        if (i != piv) keep.push_back(i);
    ModRep out;
    out.n = m.n;
    out.p = p;
    out.dims = m.dims;
    out.dims[v - 1] -= 1;
    out.arrows = m.arrows;
    for (size_t k = 0; k < m.mats.size(); ++k) {
        const Arrow& a = (*m.arrows)[k];
        const auto& M = m.mats[k];
        if (a.src == v && a.tgt == v) throw std::invalid_argument("quotient_line: loops unsupported");
        if (a.src == v) {
            std::vector<std::vector<long>> A(M.size(), std::vector<long>(keep.size()));
            for (size_t i = 0; i < M.size(); ++i)
                for (size_t j = 0; j < keep.size(); ++j) A[i][j] = M[i][keep[j]];
            out.mats.push_back(std::move(A));
        } else if (a.tgt == v) {
            size_t cols = M.empty() ? static_cast<size_t>(m.dims[a.src - 1]) : M[0].size();
            std::vector<std::vector<long>> A(keep.size(), std::vector<long>(cols));
            for (size_t i = 0; i < keep.size(); ++i)
                for (size_t j = 0; j < cols; ++j) A[i][j] = ((M[keep[i]][j] - vec[keep[i]] * M[piv][j]) % p + p) % p;
            out.mats.push_back(std::move(A));
        } else {
            out.mats.push_back(M);
        }
    }
    return out;
}

long long count_flags_fp(const ModRep& m, const Word& rword, size_t k) {
    if (k == rword.size()) return 1;
    int v = rword[k];
    auto soc = socle_basis(m, v);
    if (soc.empty()) return 0;
    long p = m.p;
    int d = static_cast<int>(soc.size());
    int dv = static_cast<int>(m.dims[v - 1]);
    // enumerate lines: normalized coefficient vectors over the socle basis
    std::vector<long> coeff(d, 0);
    long long total = 0;
    std::function<void(int, bool)> enumerate = [&](int pos, bool lead_set) {
        if (pos == d) {
            if (!lead_set) return;
            std::vector<long> vec(dv, 0);
            for (int t = 0; t < d; ++t) {
                if (coeff[t] == 0) continue;
                for (int j = 0; j < dv; ++j) vec[j] = (vec[j] + coeff[t] * soc[t][j]) % p;
            }
            total += count_flags_fp(quotient_line(m, v, std::move(vec)), rword, k + 1);
            return;
        }
        if (!lead_set) {
            coeff[pos] = 0;
            enumerate(pos + 1, false);
            coeff[pos] = 1;  // first nonzero coefficient normalized to 1
            enumerate(pos + 1, true);
            coeff[pos] = 0;
        } else {
            for (long c = 0; c < p; ++c) {
                coeff[pos] = c;
                enumerate(pos + 1, true);
            }
            coeff[pos] = 0;
        }
    };
    enumerate(0, false);
    return total;
}

}  // namespace

long long flag_count_fp(const Rep& x, const Word& w, long p) {
    GradedDim cw = content(w, x.quiver->nverts);
    if (cw != x.dims) throw std::invalid_argument("flag_count_fp: word content does not match dims");
    ModRep m = reduce_mod(x, p);
    Word rw(w.rbegin(), w.rend());  // build chains bottom-up
    return count_flags_fp(m, rw, 0);
}

const std::vector<long> kPointCountPrimes = {3, 5, 7, 11, 13};

namespace {

// Lagrange value at q = 1 through (primes[i], counts[i]) for i < fit; the
// remaining primes must match the fitted polynomial exactly.
long long interp_at_one(const std::vector<long>& qs, const std::vector<long long>& ys, size_t fit) {
    auto eval = [&](long x) {
        Rat val = rat(0);
        for (size_t i = 0; i < fit; ++i) {
            Rat term = rat(ys[i]);
            for (size_t j = 0; j < fit; ++j)
                if (j != i) term *= Rat(x - qs[j]) / Rat(qs[i] - qs[j]);
            val += term;
        }
        return val;
    };
    for (size_t i = fit; i < qs.size(); ++i)
        if (eval(qs[i]) != rat(ys[i])) throw std::runtime_error("flag point count is not polynomial across the sampled primes");
    Rat v = eval(1);
    if (!rat_is_int(v)) throw std::runtime_error("flag point count interpolation is non-integral at 1");
    return rat_to_ll(v);
}

}  // namespace

long long flag_count_pointcount(const Rep& x, const Word& w) {
    std::vector<long long> ys;
    for (long p : kPointCountPrimes) ys.push_back(flag_count_fp(x, w, p));
    return interp_at_one(kPointCountPrimes, ys, kPointCountPrimes.size() - 1);
}

namespace {

WordPoly expansion_pointcount_impl(const Rep& x, bool parallel) {
    auto words = words_of_content(x.dims);
    std::vector<long long> vals(words.size(), 0);
    bool failed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(words.size()); ++i) {
        try {
            std::vector<long long> ys;
            for (long p : kPointCountPrimes) ys.push_back(flag_count_fp(x, words[i], p));
            vals[i] = interp_at_one(kPointCountPrimes, ys, kPointCountPrimes.size() - 1);
        } catch (...) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
            failed = true;
        }
    }
    if (failed) throw std::runtime_error("delta_expansion_pointcount: interpolation failed");
    WordPoly out;
    for (size_t i = 0; i < words.size(); ++i) out.add(words[i], vals[i]);
    return out;
}

}  // namespace

WordPoly delta_expansion_pointcount(const Rep& x, bool parallel) { return expansion_pointcount_impl(x, parallel); }
WordPoly delta_expansion_pointcount_serial(const Rep& x) { return expansion_pointcount_impl(x, false); }

}  // namespace semican

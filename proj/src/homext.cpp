#include "semican/homext.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semican {

namespace {

struct Offsets {
    std::vector<long long> off;
    long long total = 0;
};

Offsets vertex_hom_offsets(const Rep& x, const Rep& y) {
    Offsets o;
    int n = x.quiver->nverts;
    o.off.resize(n);
    for (int i = 0; i < n; ++i) {
        o.off[i] = o.total;
        o.total += y.dims[i] * x.dims[i];
    }
    return o;
}

bool is_double(const QuiverPtr& q) {
    for (const auto& a : q->arrows)
        if (!a.id.empty() && a.id.back() == '*') return true;
    return false;
}

}  // namespace

long long hom_dim(const Rep& x, const Rep& y) {
    if (x.quiver->name != y.quiver->name) throw std::invalid_argument("hom_dim: quiver mismatch");
    Offsets ph = vertex_hom_offsets(x, y);
    if (ph.total == 0) return 0;
    long long nrows = 0;
    for (const auto& a : x.quiver->arrows) nrows += y.dims[a.tgt - 1] * x.dims[a.src - 1];
    Mat sys(static_cast<int>(nrows), static_cast<int>(ph.total));
    long long r = 0;
    for (size_t k = 0; k < x.quiver->arrows.size(); ++k) {
        const Arrow& a = x.quiver->arrows[k];
        int s = a.src - 1, t = a.tgt - 1;
        const Mat &X = x.mats[k], &Y = y.mats[k];
        for (int i = 0; i < static_cast<int>(y.dims[t]); ++i)
            for (int j = 0; j < static_cast<int>(x.dims[s]); ++j) {
                // (phi_t X - Y phi_s)[i][j] = 0
                for (int c = 0; c < static_cast<int>(x.dims[t]); ++c)
                    sys.at(static_cast<int>(r), static_cast<int>(ph.off[t] + static_cast<long long>(i) * x.dims[t] + c)) += X.at(c, j);
                for (int c = 0; c < static_cast<int>(y.dims[s]); ++c)
                    sys.at(static_cast<int>(r), static_cast<int>(ph.off[s] + static_cast<long long>(c) * x.dims[s] + j)) -= Y.at(i, c);
                ++r;
            }
    }
    return ph.total - sys.rank_destructive();
}

long long ext1_dim(const Rep& x, const Rep& y) {
    if (x.quiver->name != y.quiver->name) throw std::invalid_argument("ext1_dim: quiver mismatch");
    if (!is_double(x.quiver)) throw std::invalid_argument("ext1_dim: expects modules over a double quiver");
    const auto& arrows = x.quiver->arrows;
    Offsets c0 = vertex_hom_offsets(x, y);

    std::vector<long long> aoff(arrows.size());
    long long c1 = 0;
    for (size_t k = 0; k < arrows.size(); ++k) {
        aoff[k] = c1;
        c1 += y.dims[arrows[k].tgt - 1] * x.dims[arrows[k].src - 1];
    }
    if (c1 == 0) return 0;

    // d0 : phi -> (phi_t x_a - y_a phi_s)_a
    long long rank_d0 = 0;
    if (c0.total > 0) {
        Mat d0(static_cast<int>(c1), static_cast<int>(c0.total));
        for (size_t k = 0; k < arrows.size(); ++k) {
            const Arrow& a = arrows[k];
            int s = a.src - 1, t = a.tgt - 1;
            const Mat &X = x.mats[k], &Y = y.mats[k];
            for (int i = 0; i < static_cast<int>(y.dims[t]); ++i)
                for (int j = 0; j < static_cast<int>(x.dims[s]); ++j) {
                    long long row = aoff[k] + static_cast<long long>(i) * x.dims[s] + j;
                    for (int c = 0; c < static_cast<int>(x.dims[t]); ++c)
                        d0.at(static_cast<int>(row), static_cast<int>(c0.off[t] + static_cast<long long>(i) * x.dims[t] + c)) += X.at(c, j);
                    for (int c = 0; c < static_cast<int>(y.dims[s]); ++c)
                        d0.at(static_cast<int>(row), static_cast<int>(c0.off[s] + static_cast<long long>(c) * x.dims[s] + j)) -= Y.at(i, c);
                }
        }
        rank_d0 = d0.rank_destructive();
    }

    // d1 : psi -> at vertex i, sum over arrows a ending at i of
    //   sgn(a) * ( y_a psi_{abar} + psi_a x_{abar} ),  sgn = +1 for reversed arrows.
    long long rank_d1 = 0;
    if (c0.total > 0) {
        Mat d1(static_cast<int>(c0.total), static_cast<int>(c1));
        for (size_t k = 0; k < arrows.size(); ++k) {
            const Arrow& a = arrows[k];
            bool starred = !a.id.empty() && a.id.back() == '*';
            std::string bar_id = starred ? a.id.substr(0, a.id.size() - 1) : a.id + "*";
            size_t kb = static_cast<size_t>(x.quiver->arrow_index(bar_id));
            int sgn = starred ? 1 : -1;
            int s = a.src - 1, t = a.tgt - 1;
            const Mat& Y = y.mats[k];        // y_a : Y_s -> Y_t
            const Mat& Xb = x.mats[kb];      // x_abar : X_t -> X_s
            for (int r = 0; r < static_cast<int>(y.dims[t]); ++r)
                for (int c = 0; c < static_cast<int>(x.dims[t]); ++c) {
                    long long row = c0.off[t] + static_cast<long long>(r) * x.dims[t] + c;
                    // (y_a psi_abar)[r][c], psi_abar : X_t -> Y_s
                    for (int u = 0; u < static_cast<int>(y.dims[s]); ++u)
                        d1.at(static_cast<int>(row), static_cast<int>(aoff[kb] + static_cast<long long>(u) * x.dims[t] + c)) += sgn * Y.at(r, u);
                    // (psi_a x_abar)[r][c], psi_a : X_s -> Y_t
                    for (int u = 0; u < static_cast<int>(x.dims[s]); ++u)
                        d1.at(static_cast<int>(row), static_cast<int>(aoff[k] + static_cast<long long>(r) * x.dims[s] + u)) += sgn * Xb.at(u, c);
                }
        }
        rank_d1 = d1.rank_destructive();
    }
    return c1 - rank_d0 - rank_d1;
}

long long euler_form(const QuiverPtr& q, const GradedDim& d, const GradedDim& e) {
    long long s = 0;
    for (int i = 0; i < q->nverts; ++i) s += d[i] * e[i];
    for (const auto& a : q->arrows) s -= d[a.src - 1] * e[a.tgt - 1];
    return s;
}

namespace {

QuiverPtr base_of(const QuiverPtr& dbl) {
    auto base = std::make_shared<Quiver>();
    base->nverts = dbl->nverts;
    for (const auto& a : dbl->arrows)
        if (a.id.empty() || a.id.back() != '*') base->arrows.push_back(a);
    base->name = dbl->name + "#base";
    return base;
}

}  // namespace

long long ext1_dim_euler(const Rep& x, const Rep& y) {
    auto base = base_of(x.quiver);
    return hom_dim(x, y) + hom_dim(y, x) - euler_form(base, x.dims, y.dims) - euler_form(base, y.dims, x.dims);
}

Rep fiber_sample(const Rep& x_base, std::uint64_t seed, long pool) {
    const QuiverPtr& bq = x_base.quiver;
    QuiverPtr dq = double_quiver(bq);
    const GradedDim& d = x_base.dims;
    int n = bq->nverts;

    // unknowns: entries of all reversed-arrow matrices
    size_t nbase = bq->arrows.size();
    std::vector<long long> uoff(nbase);
    long long nunk = 0;
    for (size_t k = 0; k < nbase; ++k) {
        const Arrow& a = bq->arrows[k];
        uoff[k] = nunk;
        nunk += d[a.src - 1] * d[a.tgt - 1];  // a* : tgt -> src, shape d_src x d_tgt
    }

    Rep out(dq, d);
    for (size_t k = 0; k < nbase; ++k) out.mats[k] = x_base.mats[k];
    if (nunk == 0) return out;

    // relation at vertex v:  sum_{s(a)=v} X_{a*} X_a - sum_{e(a)=v} X_a X_{a*} = 0, linear in X_{a*}
    std::vector<std::vector<Rat>> rows;
    for (int v = 1; v <= n; ++v) {
        int dv = static_cast<int>(d[v - 1]);
        for (int I = 0; I < dv; ++I)
            for (int J = 0; J < dv; ++J) {
                std::vector<Rat> row(static_cast<size_t>(nunk));
                bool nonzero = false;
                for (size_t k = 0; k < nbase; ++k) {
                    const Arrow& a = bq->arrows[k];
                    const Mat& X = x_base.mats[k];
                    if (a.src == v) {
                        // (X_{a*} X_a)[I][J] : X_{a*} is d_v x d_{tgt}
                        for (int c = 0; c < static_cast<int>(d[a.tgt - 1]); ++c) {
                            if (X.at(c, J) == 0) continue;
                            row[static_cast<size_t>(uoff[k] + static_cast<long long>(I) * d[a.tgt - 1] + c)] += X.at(c, J);
                            nonzero = true;
                        }
                    }
                    if (a.tgt == v) {
                        // -(X_a X_{a*})[I][J] : X_{a*} is d_{src} x d_v
                        for (int c = 0; c < static_cast<int>(d[a.src - 1]); ++c) {
                            if (X.at(I, c) == 0) continue;
                            row[static_cast<size_t>(uoff[k] + static_cast<long long>(c) * d[v - 1] + J)] -= X.at(I, c);
                            nonzero = true;
                        }
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }

    std::vector<std::vector<Rat>> kernel;
    if (rows.empty()) {
        kernel.resize(static_cast<size_t>(nunk));
        for (size_t i = 0; i < kernel.size(); ++i) {
            kernel[i].assign(static_cast<size_t>(nunk), rat(0));
            kernel[i][i] = 1;
        }
    } else {
        Mat sys(static_cast<int>(rows.size()), static_cast<int>(nunk));
        for (size_t i = 0; i < rows.size(); ++i)
            for (long long j = 0; j < nunk; ++j) sys.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][static_cast<size_t>(j)];
        kernel = sys.kernel_basis();
    }

    RatPool rng(seed, pool);
    std::vector<Rat> sol(static_cast<size_t>(nunk), rat(0));
    for (const auto& kv : kernel) {
        Rat c = rat(rng.next());
        for (size_t j = 0; j < kv.size(); ++j)
            if (kv[j] != 0) sol[j] += c * kv[j];
    }
    for (size_t k = 0; k < nbase; ++k) {
        const Arrow& a = bq->arrows[k];
        Mat& S = out.mat(a.id + "*");
        for (int i = 0; i < static_cast<int>(d[a.src - 1]); ++i)
            for (int j = 0; j < static_cast<int>(d[a.tgt - 1]); ++j)
                S.at(i, j) = sol[static_cast<size_t>(uoff[k] + static_cast<long long>(i) * d[a.tgt - 1] + j)];
    }
    return out;
}

bool orbit_dim_check(const Rep& x) {
    auto base = base_of(x.quiver);
    long long orbit = 0;
    for (auto di : x.dims) orbit += di * di;
    orbit -= hom_dim(x, x);
    long long comp = 0;
    for (const auto& a : base->arrows) comp += x.dims[a.src - 1] * x.dims[a.tgt - 1];
    return orbit == comp;
}

}  // namespace semican

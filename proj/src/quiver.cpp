#include "semican/quiver.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace semican {

int Quiver::arrow_index(const std::string& id) const {
    for (size_t k = 0; k < arrows.size(); ++k)
        if (arrows[k].id == id) return static_cast<int>(k);
    throw std::invalid_argument("Quiver::arrow_index: no arrow '" + id + "' in " + name);
}

namespace {
std::mutex cache_mtx;
std::map<std::string, QuiverPtr> quiver_cache;

QuiverPtr cache_get(const std::string& name) {
    std::lock_guard<std::mutex> lk(cache_mtx);
    auto it = quiver_cache.find(name);
    return it == quiver_cache.end() ? nullptr : it->second;
}
void cache_put(const QuiverPtr& q) {
    std::lock_guard<std::mutex> lk(cache_mtx);
    quiver_cache.emplace(q->name, q);
}
}  // namespace

QuiverPtr linear_quiver(int n) {
    if (n < 1) throw std::invalid_argument("linear_quiver: n must be positive");
    std::string name = "Q" + std::to_string(n);
    if (auto q = cache_get(name)) return q;
    auto q = std::make_shared<Quiver>();
    q->name = name;
    q->nverts = n;
    for (int i = 1; i < n; ++i) q->arrows.push_back({"a" + std::to_string(i), i + 1, i});
    cache_put(q);
    return q;
}

QuiverPtr double_quiver(const QuiverPtr& q) {
    if (q->has_loops()) throw std::invalid_argument("double_quiver: loops not allowed");
    std::string name = q->name + "bar";
    if (auto d = cache_get(name)) return d;
    auto d = std::make_shared<Quiver>();
    d->name = name;
    d->nverts = q->nverts;
    d->arrows = q->arrows;
    for (const auto& a : q->arrows) d->arrows.push_back({a.id + "*", a.tgt, a.src});
    cache_put(d);
    return d;
}

std::vector<Relation> gp_relations(const QuiverPtr& base, const QuiverPtr& dbl) {
    std::vector<Relation> rels;
    for (int i = 1; i <= base->nverts; ++i) {
        Relation r;
        r.src = r.tgt = i;
        for (const auto& a : base->arrows) {
            int ai = dbl->arrow_index(a.id);
            int as = dbl->arrow_index(a.id + "*");
            if (a.src == i) r.terms.push_back({rat(1), {as, ai}});  // a* a : V_i -> V_i
            if (a.tgt == i) r.terms.push_back({rat(-1), {ai, as}});
        }
        if (!r.terms.empty()) rels.push_back(std::move(r));
    }
    return rels;
}

Rep::Rep(QuiverPtr q, GradedDim d) : quiver(std::move(q)), dims(std::move(d)) {
    if (static_cast<int>(dims.size()) != quiver->nverts) throw std::invalid_argument("Rep: dims size mismatch");
    for (auto x : dims)
        if (x < 0) throw std::invalid_argument("Rep: negative dimension");
    mats.reserve(quiver->arrows.size());
    for (const auto& a : quiver->arrows) mats.emplace_back(static_cast<int>(dims[a.tgt - 1]), static_cast<int>(dims[a.src - 1]));
}

Mat eval_relation(const Rep& x, const Relation& r) {
    const auto& q = *x.quiver;
    Mat acc(static_cast<int>(x.dims[r.tgt - 1]), static_cast<int>(x.dims[r.src - 1]));
    for (const auto& t : r.terms) {
        // leftmost arrow is applied last; matrix product in displayed order
        Mat p = x.mats[t.arrows.front()];
        for (size_t k = 1; k < t.arrows.size(); ++k) {
            if (q.arrows[t.arrows[k - 1]].src != q.arrows[t.arrows[k]].tgt)
                throw std::invalid_argument("eval_relation: path endpoints do not compose");
            p = p * x.mats[t.arrows[k]];
        }
        if (t.coeff != 1)
            for (int i = 0; i < p.rows(); ++i)
                for (int j = 0; j < p.cols(); ++j) p.at(i, j) *= t.coeff;
        acc += p;
    }
    return acc;
}

bool check_relations(const Rep& x, const std::vector<Relation>& rels) {
    for (const auto& r : rels)
        if (!eval_relation(x, r).is_zero()) return false;
    return true;
}

Rep direct_sum(const Rep& x, const Rep& y) {
    if (x.quiver->name != y.quiver->name) throw std::invalid_argument("direct_sum: quiver mismatch");
    GradedDim d(x.dims.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = x.dims[i] + y.dims[i];
    Rep z(x.quiver, d);
    for (size_t k = 0; k < z.mats.size(); ++k) {
        const Arrow& a = x.quiver->arrows[k];
        const Mat &A = x.mats[k], &B = y.mats[k];
        Mat& M = z.mats[k];
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j) M.at(i, j) = A.at(i, j);
        int ro = static_cast<int>(x.dims[a.tgt - 1]), co = static_cast<int>(x.dims[a.src - 1]);
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j) M.at(ro + i, co + j) = B.at(i, j);
    }
    return z;
}

Rep segment_rep(int i, int j, int n) {
    if (!(1 <= i && i <= j && j <= n)) throw std::invalid_argument("segment_rep: need 1 <= i <= j <= n");
    GradedDim d(n, 0);
    for (int v = i; v <= j; ++v) d[v - 1] = 1;
    Rep x(linear_quiver(n), d);
    for (int v = i; v < j; ++v) x.mat("a" + std::to_string(v)).at(0, 0) = 1;  // a_v : v+1 -> v acts as identity
    return x;
}

bool is_nilpotent(const Rep& x) {
    // radical filtration W^{k+1} = sum_a x_a(W^k); nilpotent iff it reaches 0
    int n = x.quiver->nverts;
    std::vector<Mat> span(n);  // columns span W^k at each vertex
    for (int v = 0; v < n; ++v) span[v] = Mat::identity(static_cast<int>(x.dims[v]));
    auto total = [&] {
        long long s = 0;
        for (int v = 0; v < n; ++v) s += span[v].cols() ? span[v].rank() : 0;
        return s;
    };
    long long prev = total();
    while (prev > 0) {
        std::vector<std::vector<std::vector<Rat>>> next(n);
        for (size_t k = 0; k < x.mats.size(); ++k) {
            const Arrow& a = x.quiver->arrows[k];
            const Mat& img = x.mats[k] * span[a.src - 1];
            for (int c = 0; c < img.cols(); ++c) {
                std::vector<Rat> col(img.rows());
                for (int i = 0; i < img.rows(); ++i) col[i] = img.at(i, c);
                next[a.tgt - 1].push_back(std::move(col));
            }
        }
        for (int v = 0; v < n; ++v) {
            Mat m(static_cast<int>(x.dims[v]), static_cast<int>(next[v].size()));
            for (size_t c = 0; c < next[v].size(); ++c)
                for (int i = 0; i < m.rows(); ++i) m.at(i, static_cast<int>(c)) = next[v][c][i];
            span[v] = std::move(m);
        }
        long long cur = total();
        if (cur == 0) return true;
        if (cur >= prev) return false;  // stabilized above zero: some long path acts nontrivially forever
        prev = cur;
    }
    return true;
}

Rep lift_to_double(const Rep& x) {
    auto dq = double_quiver(x.quiver);
    Rep y(dq, x.dims);
    for (size_t k = 0; k < x.mats.size(); ++k) y.mats[k] = x.mats[k];
    return y;
}

}  // namespace semican

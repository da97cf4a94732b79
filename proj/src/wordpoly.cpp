#include "semican/wordpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace semican {

WordPoly wp_one() {
    WordPoly p;
    p.add({}, 1);
    return p;
}

WordPoly wp_word(const Word& w) {
    WordPoly p;
    p.add(w, 1);
    return p;
}

std::string to_string(const WordPoly& p) {
    if (p.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, k] : p.c) {
        if (!first) os << " + ";
        first = false;
        if (k != 1) os << k << " ";
        os << "w[";
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
        os << "]";
    }
    return os.str();
}

namespace {

void shuffle_words(const Word& u, size_t iu, const Word& v, size_t iv, Word& cur, WordPoly& out, long long coeff) {
    if (iu == u.size() && iv == v.size()) {
        out.add(cur, coeff);
        return;
    }
    if (iu < u.size()) {
        cur.push_back(u[iu]);
        shuffle_words(u, iu + 1, v, iv, cur, out, coeff);
        cur.pop_back();
    }
    if (iv < v.size()) {
        cur.push_back(v[iv]);
        shuffle_words(u, iu, v, iv + 1, cur, out, coeff);
        cur.pop_back();
    }
}

}  // namespace

WordPoly shuffle(const WordPoly& p, const WordPoly& q) {
    WordPoly out;
    for (const auto& [u, cu] : p.c)
        for (const auto& [v, cv] : q.c) {
            Word cur;
            cur.reserve(u.size() + v.size());
            shuffle_words(u, 0, v, 0, cur, out, cu * cv);
        }
    return out;
}

WordPoly derivation(int i, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, k] : p.c) {
        if (w.empty() || w.front() != i) continue;
        out.add(Word(w.begin() + 1, w.end()), k);
    }
    return out;
}

WordPoly reverse(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, k] : p.c) {
        Word r(w.rbegin(), w.rend());
        out.add(r, k);
    }
    return out;
}

GradedDim content(const Word& w, int n) {
    GradedDim d(n, 0);
    for (int letter : w) {
        if (letter < 1 || letter > n) throw std::invalid_argument("content: letter out of range");
        d[letter - 1] += 1;
    }
    return d;
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (size_t b = 0; b < lambda.size(); ++b) {
        int m = b < mu.size() ? mu[b] : 0;
        for (int a = m + 1; a <= lambda[b]; ++a) out.push_back({a, static_cast<int>(b) + 1});
    }
    return out;
}

SkewShape minor_shape(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("minor_shape: need equal nonempty row/col sets");
    for (size_t r = 1; r < rows.size(); ++r)
        if (rows[r] <= rows[r - 1] || cols[r] <= cols[r - 1]) throw std::invalid_argument("minor_shape: sequences must increase");
    int k = static_cast<int>(rows.size());
    SkewShape s;
    for (int b = 0; b < k; ++b) {
        s.lambda.push_back(cols[k - 1 - b] + b);
        s.mu.push_back(rows[k - 1 - b] + b);
    }
    return s;
}

WordPoly syt_minor(const std::vector<int>& rows, const std::vector<int>& cols, int n) {
    for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r] > cols[r]) throw std::invalid_argument("syt_minor: zero minor (some i_r > j_r)");
    for (int j : cols)
        if (j > n + 1) throw std::invalid_argument("syt_minor: column exceeds n+1");
    SkewShape s = minor_shape(rows, cols);
    auto cells = s.cells();
    int t = static_cast<int>(cells.size());
    WordPoly out;
    if (t == 0) return wp_one();  // identity minor

    // enumerate standard tableaux: repeatedly pick a cell all of whose left/up
    // neighbours inside the shape are already numbered
    std::vector<int> order;  // indices into cells, in entry order 1..t
    std::vector<bool> used(cells.size(), false);
    auto idx_of = [&](int a, int b) {
        for (size_t k = 0; k < cells.size(); ++k)
            if (cells[k].first == a && cells[k].second == b) return static_cast<int>(k);
        return -1;
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(order.size()) == t) {
            Word w(t);
            for (int r = 0; r < t; ++r) {
                auto [a, b] = cells[order[t - 1 - r]];  // decreasing entry order
                w[r] = a - b;
            }
            out.add(w, 1);
            return;
        }
        for (size_t k = 0; k < cells.size(); ++k) {
            if (used[k]) continue;
            auto [a, b] = cells[k];
            int left = idx_of(a - 1, b), up = idx_of(a, b - 1);
            if (left >= 0 && !used[left]) continue;
            if (up >= 0 && !used[up]) continue;
            used[k] = true;
            order.push_back(static_cast<int>(k));
            rec();
            order.pop_back();
            used[k] = false;
        }
    };
    rec();
    return out;
}

std::vector<std::pair<Word, Word>> comult_expand(const Word& w, const GradedDim& d1, const GradedDim& d2) {
    int n = static_cast<int>(d1.size());
    if (d2.size() != d1.size()) throw std::invalid_argument("comult_expand: content size mismatch");
    GradedDim total = content(w, n);
    for (int i = 0; i < n; ++i)
        if (total[i] != d1[i] + d2[i]) throw std::invalid_argument("comult_expand: contents do not add to the word's content");
    std::vector<std::pair<Word, Word>> out;
    GradedDim c1(n, 0);
    Word w1, w2;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == w.size()) {
            if (c1 == d1) out.push_back({w1, w2});
            return;
        }
        int letter = w[pos];
        if (c1[letter - 1] < d1[letter - 1]) {
            c1[letter - 1]++;
            w1.push_back(letter);
            rec(pos + 1);
            w1.pop_back();
            c1[letter - 1]--;
        }
        w2.push_back(letter);
        rec(pos + 1);
        w2.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace semican

#pragma once

#include <map>
#include <string>
#include <vector>

#include "semican/quiver.hpp"

namespace semican {

using Word = std::vector<int>;

// Finitely supported integer function on words; no zero coefficients stored.
struct WordPoly {
    std::map<Word, long long> c;

    void add(const Word& w, long long k) {
        if (k == 0) return;
        auto it = c.find(w);
        if (it == c.end())
            c.emplace(w, k);
        else if ((it->second += k) == 0)
            c.erase(it);
    }
    bool operator==(const WordPoly& o) const { return c == o.c; }
    bool empty() const { return c.empty(); }
};

WordPoly wp_one();                // the empty-word unit
WordPoly wp_word(const Word& w);  // single word with coefficient 1

// Pretty form "2 w[4,2,3] + w[2,4,3]"; empty poly prints "0".
std::string to_string(const WordPoly& p);

// Classical shuffle product, extended bilinearly.
WordPoly shuffle(const WordPoly& p, const WordPoly& q);

// Strips a leading letter i; a derivation for the shuffle product.
WordPoly derivation(int i, const WordPoly& p);

// Coefficientwise word reversal; an involution.
WordPoly reverse(const WordPoly& p);

GradedDim content(const Word& w, int n);

// Skew shape lambda/mu as weakly decreasing sequences with mu <= lambda.
struct SkewShape {
    std::vector<int> lambda, mu;
    // cells (a,b): 1 <= b <= rows, mu_b < a <= lambda_b
    std::vector<std::pair<int, int>> cells() const;
};

// Shape attached to a k x k minor on rows i_1<..<i_k and columns j_1<..<j_k.
SkewShape minor_shape(const std::vector<int>& rows, const std::vector<int>& cols);

// Sum over standard Young tableaux of the minor's skew shape of the word reading
// cell contents a-b in decreasing entry order. Throws if some i_r > j_r (zero minor).
WordPoly syt_minor(const std::vector<int>& rows, const std::vector<int>& cols, int n);

// All splittings of w into complementary subwords with the given contents.
std::vector<std::pair<Word, Word>> comult_expand(const Word& w, const GradedDim& d1, const GradedDim& d2);

}  // namespace semican

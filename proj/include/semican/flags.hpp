#pragma once

#include <vector>

#include "semican/quiver.hpp"
#include "semican/wordpoly.hpp"

namespace semican {

// A 0/1 representation viewed through its basis vectors: one node per basis
// vector, one edge per matrix entry equal to 1.
struct BasisForm {
    int n = 0;
    std::vector<int> type;              // vertex (1..n) of each basis vector
    std::vector<std::vector<int>> out;  // basis-vector images, over all arrows
    std::vector<std::vector<int>> in;
    bool partial_perm = false;  // <= 1 one per row and per column in every arrow matrix
    bool forest = false;        // coefficient quiver has no (undirected) cycle
};

// Throws unless all entries are 0 or 1.
BasisForm basis_form(const Rep& x);

// Entries in {0,1}, at most one 1 per row/column, forest coefficient quiver.
bool is_tree_basis(const Rep& x);

// All words with the given content, lexicographically.
std::vector<Word> words_of_content(const GradedDim& d);

// Module on the cells of a skew shape: basis vector of vertex a-b per cell
// (a,b); base arrows act leftward along rows, reversed arrows upward along
// columns. Its orbit is dense in its component and its composition types
// biject with the standard tableaux of the shape.
Rep grid_module(const SkewShape& s, int n);

// Number of coordinate composition series of type w (chains of coordinate
// subspaces closed under all arrows, quotient types read top-down).
// Valid as an Euler characteristic only for tree-basis modules.
long long flag_count(const Rep& x, const Word& w);

// Sum of flag_count over all words of content dims(x).
WordPoly delta_expansion(const Rep& x);

// --- point-count engine -----------------------------------------------------
// Counts stable flags over prime fields; the counting function is a polynomial
// in the field size for the modules in play, so the Euler characteristic is the
// value at 1. Works for any exact-rational representation whose entries reduce
// mod the primes used. Fit on the first `fit` primes, verified on the rest.

long long flag_count_fp(const Rep& x, const Word& w, long p);

extern const std::vector<long> kPointCountPrimes;  // {3,5,7,11,13}

long long flag_count_pointcount(const Rep& x, const Word& w);

WordPoly delta_expansion_pointcount(const Rep& x, bool parallel = true);
WordPoly delta_expansion_pointcount_serial(const Rep& x);

}  // namespace semican

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semican/mat.hpp"

namespace semican {

// Per-vertex nonnegative dimensions, vertices 1..n stored 0-based.
using GradedDim = std::vector<long long>;

struct Arrow {
    std::string id;
    int src = 0, tgt = 0;  // vertices, 1-based
};

struct Quiver {
    std::string name;
    int nverts = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& id) const;
    bool has_loops() const {
        for (const auto& a : arrows)
            if (a.src == a.tgt) return true;
        return false;
    }
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Linear quiver 1 <- 2 <- ... <- n with arrows a_i : i+1 -> i.
QuiverPtr linear_quiver(int n);

// Double quiver: one reversed arrow "<id>*" per arrow of q.
QuiverPtr double_quiver(const QuiverPtr& q);

// One term of a relation: coeff * (arrow sequence, leftmost applied last).
struct PathTerm {
    Rat coeff;
    std::vector<int> arrows;  // indices into quiver.arrows
};

struct Relation {
    std::vector<PathTerm> terms;
    int src = 0, tgt = 0;  // shared endpoints of all paths
};

// Gelfand-Ponomarev relation at each vertex of the double quiver:
//   sum_{s(a)=i} a* a  -  sum_{e(a)=i} a a*        (over arrows a of the base quiver)
// Vertices with no incident arrow are omitted.
std::vector<Relation> gp_relations(const QuiverPtr& base, const QuiverPtr& dbl);

// Module over a quiver-with-relations: one matrix per arrow, shape dims(tgt) x dims(src).
struct Rep {
    QuiverPtr quiver;
    GradedDim dims;
    std::vector<Mat> mats;  // indexed like quiver->arrows

    Rep() = default;
    Rep(QuiverPtr q, GradedDim d);

    long long total_dim() const {
        long long s = 0;
        for (auto x : dims) s += x;
        return s;
    }
    Mat& mat(const std::string& id) { return mats[quiver->arrow_index(id)]; }
    const Mat& mat(const std::string& id) const { return mats[quiver->arrow_index(id)]; }
};

// Evaluates the relation on x; zero matrix iff x satisfies it.
Mat eval_relation(const Rep& x, const Relation& r);

bool check_relations(const Rep& x, const std::vector<Relation>& rels);

Rep direct_sum(const Rep& x, const Rep& y);

// Indecomposable Q_n-representation with socle S_i and top S_j; dims = indicator of [i,j].
Rep segment_rep(int i, int j, int n);

// All path compositions of length > total dim vanish (composition series bound).
bool is_nilpotent(const Rep& x);

// Views a base-quiver representation as a module over the double quiver, reversed arrows acting by zero.
Rep lift_to_double(const Rep& x);

}  // namespace semican

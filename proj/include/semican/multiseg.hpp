#pragma once

#include <map>
#include <string>
#include <utility>

#include "semican/quiver.hpp"

namespace semican {

// Multiset of segments [i,j], 1 <= i <= j, with positive multiplicities.
struct Multisegment {
    std::map<std::pair<int, int>, long long> seg;

    void add(int i, int j, long long mult = 1);
    bool operator==(const Multisegment& o) const { return seg == o.seg; }
    bool operator<(const Multisegment& o) const { return seg < o.seg; }
    bool empty() const { return seg.empty(); }
    int max_vertex() const;
    long long total_mult() const;
};

// Display style "2[1,1]+[2,3]"; empty multisegment prints "0".
std::string to_string(const Multisegment& m);
Multisegment multisegment_parse(const std::string& s);

GradedDim degree(const Multisegment& m, int n);

// Multisegment of the dense orbit of rep(Q_n, d): repeatedly split off the
// longest segment starting at the lowest nonzero vertex.
Multisegment msm_max(const GradedDim& d);

// Direct sum of segment representations over Q_n; a point of the orbit labelled by m.
Rep rep_of(const Multisegment& m, int n);

// N-valued function on covering-quiver vertices i_j (column i, level j), up to
// uniform level shift; canonical representative has lowest nonempty level 0.
struct TildeDim {
    std::map<std::pair<int, int>, long long> v;  // (column, level) -> count

    void add(int col, int level, long long c = 1);
    void canonicalize();
    bool operator==(const TildeDim& o) const { return v == o.v; }
    GradedDim level_row(int level, int n) const;
    int min_level() const;
    int max_level() const;
};

// Level-wise msm_max, summed over levels. Invariant under shift.
Multisegment msm_max_tilde(const TildeDim& d, int n);

// msm_max_tilde except on the two exceptional shift-classes (n = 5 only),
// which return fixed multisegments.
Multisegment psi(const TildeDim& d, int n);

const TildeDim& psi_exceptional_first();   // value 2[1,1]+[2,2]+[2,4]+[3,3]+[4,5]
const TildeDim& psi_exceptional_second();  // value [1,2]+[2,4]+[3,3]+[4,4]+2[5,5]

// Spec-facing wrapper: degree(m) must match x.dims, then the orbit-dimension test.
bool orbit_dim_check(const Rep& x, const Multisegment& m);

// Multisegments of the components containing the indecomposable projectives:
// p_j = sum_{i=1}^{n-j+1} [i, i+j-1], j = 1..n.
Multisegment projective_multisegment(int j, int n);

}  // namespace semican

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semican/multiseg.hpp"

namespace semican {

// Vector in the rank-10 lattice, indexed by the ten vertices of the tubular
// algebra in the fixed display order 2_2, 4_1, 1_2, 3_1, 5_0, 2_1, 4_0, 1_1, 3_0, 5_-1.
using RootVec = std::array<long long, 10>;

extern const std::array<std::pair<int, int>, 10> kDeltaVerts;  // (column, level)
int delta_vertex_index(int col, int level);                    // -1 if outside
std::string delta_vertex_name(int idx);

// Slope b/a in lowest terms, or infinity.
struct Slope {
    bool inf = false;
    long long num = 0, den = 1;  // den > 0, gcd(|num|,den) = 1 when finite

    static Slope infinity() { return {true, 1, 0}; }
    static Slope of(long long num, long long den);
    bool operator==(const Slope& o) const { return inf == o.inf && num == o.num && den == o.den; }
    bool operator<(const Slope& o) const;
    std::string str() const;
};

struct RootClass {
    Slope slope;
    int rank = 0;       // Coxeter period, 1, 2, 3 or 6
    long long ql = 0;   // quasi-length
};

// Integer E with <d,e> = d^T E e, built from arrows and relation counts of an
// algebra of global dimension <= 2.
using IntMat10 = std::array<std::array<long long, 10>, 10>;

IntMat10 ringel_form(int nverts, const std::vector<std::pair<int, int>>& arrows,
                     const std::vector<std::pair<int, int>>& relations);

// Coxeter matrix -E^{-1}E^t; throws if E is singular or the result is not integral.
IntMat10 coxeter(const IntMat10& E);

class BilinearLattice {
  public:
    BilinearLattice();

    long long pair(const RootVec& d, const RootVec& e) const;
    long long q(const RootVec& d) const { return pair(d, d); }
    RootVec apply_coxeter(const RootVec& d) const;
    RootVec apply_coxeter_inv(const RootVec& d) const;

    const IntMat10& E() const { return E_; }
    const IntMat10& Phi() const { return phi_; }
    const RootVec& h0() const { return h0_; }
    const RootVec& hinf() const { return hinf_; }
    RootVec h_ab(long long a, long long b) const;

    bool is_root(const RootVec& d) const;
    bool in_r_plus(const RootVec& d) const;
    std::optional<Slope> slope(const RootVec& d) const;  // defined on R+
    RootClass classify(const RootVec& d) const;          // throws outside R+
    // h(d) = sum_{i=1..rk} Phi^i d, returned as (a, b) with h = a h0 + b hinf
    std::pair<long long, long long> orbit_sum_ab(const RootVec& d) const;

    bool is_schur(const RootVec& d) const;

    // The 240 distinguished real roots keyed by ([m,n], rank); generated by
    // reflection closure of the window form and reduced into the slope window.
    const std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>>& base_roots() const;

    // All of R^lambda_ell(i) for i in {2,3,6}; empty when i divides ell.
    std::vector<RootVec> construct_class(const Slope& lambda, long long ell, int i) const;

    TildeDim delta_map(const RootVec& r) const;  // right inverse of xi on R+
    RootVec xi_map(const TildeDim& d) const;     // class in the rank-10 lattice

    // Critical-pair predicate; the relaxed reading allows distinct quasi-lengths
    // within one rank-6 slope class.
    bool critical(const RootVec& d, const RootVec& e, bool relaxed = false) const;

    // Component-graph edge predicate on Schur roots.
    bool edge(const RootVec& d, const RootVec& e, bool relaxed_critical = false) const;

    // Schur roots with slope in the box |num|,|den| <= bound and ql <= max_ql.
    std::vector<RootVec> schur_slice(long long slope_bound, long long max_ql) const;
    std::vector<RootVec> schur_roots_of_slope(const Slope& lambda) const;  // all 39 per slope

    const TildeDim& proj_cover_dim(int k) const;  // covering dimension vectors p_1..p_5

  private:
    IntMat10 E_, phi_, phi_inv_;
    RootVec h0_, hinf_;
    mutable std::map<std::pair<std::pair<int, int>, int>, std::vector<RootVec>> base_;
    std::array<TildeDim, 5> p_;
};

const BilinearLattice& lattice();  // the shared instance

std::string to_string(const RootVec& r);

}  // namespace semican

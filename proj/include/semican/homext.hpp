#pragma once

#include <cstdint>

#include "semican/quiver.hpp"

namespace semican {

// dim Hom(x, y): kernel of the intertwiner system phi_{e(a)} x_a = y_a phi_{s(a)} over all arrows.
long long hom_dim(const Rep& x, const Rep& y);

// dim Ext^1 over the preprojective algebra, as middle homology of the three-term
// complex (+)_i Hom(X_i,Y_i) -> (+)_a Hom(X_{s(a)},Y_{e(a)}) -> (+)_i Hom(X_i,Y_i)
// built from the Gelfand-Ponomarev relations. Both modules must satisfy them.
long long ext1_dim(const Rep& x, const Rep& y);

// Independent route: dim Ext^1 = hom(x,y) + hom(y,x) - <dx,dy>_Q - <dy,dx>_Q
// with <,>_Q the Euler form of the base quiver. Used as an oracle against ext1_dim.
long long ext1_dim_euler(const Rep& x, const Rep& y);

// Euler form of a (loop-free, relation-free) quiver.
long long euler_form(const QuiverPtr& q, const GradedDim& d, const GradedDim& e);

// The reversed-arrow matrices solving the preprojective relations form a linear
// space once the base matrices are fixed; returns a pseudorandom rational point of it.
// Deterministic for fixed seed; coordinates drawn from integers in [-pool, pool].
Rep fiber_sample(const Rep& x_base, std::uint64_t seed, long pool = 10000);

// True iff the orbit of x is dense in its component:
// sum d_i^2 - dim End(x) equals dim rep(Q, d) = sum over base arrows of d_src * d_tgt.
bool orbit_dim_check(const Rep& x);

}  // namespace semican

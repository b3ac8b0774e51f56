#pragma once

#include "ntb/int_types.hpp"

#include <stdexcept>
#include <vector>

namespace ntb {

// One time slice of a fiberwise homotopy on the torus, affine in (x, y, t):
//
//   x' = x + alpha*y + beta*t + gamma
//   y' =     delta*y + eps*t  + zeta
//
// valid for t in [t_lo, t_hi].  The x't coefficient on x is one, so the fixed
// point conditions constrain (y, t) only and leave x free on solutions.
struct AffinePiece {
    Rat t_lo, t_hi;
    Rat alpha, beta, gamma;
    Rat delta, eps, zeta;

    bool contains(const Rat& t) const { return t_lo <= t && t <= t_hi; }
};

using Homotopy = std::vector<AffinePiece>;

// The two-piece homotopy used by the square model: slide in the u direction
// first, then in the v direction.
inline Homotopy square_homotopy(const Int& c1, const Int& c2, const Int& b4) {
    Rat half(1, 2);
    AffinePiece p1{Rat(0), half, Rat(0), Rat(2 * c1), -half, Rat(b4), Rat(0), Rat(0)};
    AffinePiece p2{half, Rat(1), Rat(0), Rat(0), Rat(c1) - half,
                   Rat(b4), Rat(2 * c2), Rat(-c2)};
    return {p1, p2};
}

// The two-piece homotopy used by the triangulated model (fiber map with
// b3 = 1, b4 = -1).
inline Homotopy triangulated_homotopy(const Int& c1, const Int& c2) {
    Rat half(1, 2);
    AffinePiece p1{Rat(0), half, Rat(1), Rat(2 * c1), half, Rat(-1), Rat(0), half};
    AffinePiece p2{half, Rat(1), Rat(1), Rat(0), Rat(c1) + half,
                   Rat(-1), Rat(2 * c2), half - Rat(c2)};
    return {p1, p2};
}

// A rel-endpoint reparametrization of the triangulated homotopy that moves in
// both directions simultaneously.  It has the same boundary maps as the
// two-piece version and realizes the minimal number of fixed circles even
// when c1 and c2 have opposite signs.
inline Homotopy triangulated_straight_homotopy(const Int& c1, const Int& c2) {
    Rat half(1, 2);
    AffinePiece p{Rat(0), Rat(1), Rat(1), Rat(c1), half, Rat(-1), Rat(c2), half};
    return {p};
}

// Verifies that consecutive pieces agree exactly at their junction times.
inline bool pieces_join_continuously(const Homotopy& h) {
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        const AffinePiece& a = h[i];
        const AffinePiece& b = h[i + 1];
        if (a.t_hi != b.t_lo) return false;
        const Rat& t = a.t_hi;
        if (a.alpha != b.alpha || a.delta != b.delta) return false;
        if (a.beta * t + a.gamma != b.beta * t + b.gamma) return false;
        if (a.eps * t + a.zeta != b.eps * t + b.zeta) return false;
    }
    return true;
}

} // namespace ntb

#pragma once

#include "ntb/cell_model.hpp"
#include "ntb/homotopy.hpp"
#include "ntb/int_types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntb {

// An isolated circle of fixed points of the fiberwise map family: at time t
// the whole horizontal circle at height y is fixed (the first coordinate is
// free).
struct FixedCircle {
    Rat t, y;
    friend bool operator==(const FixedCircle& a, const FixedCircle& b) {
        return a.t == b.t && a.y == b.y;
    }
    friend bool operator<(const FixedCircle& a, const FixedCircle& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.y < b.y;
    }
};

// Thrown when the fixed set of a homotopy piece is nonempty but not a finite
// union of isolated circles, so counting circles is meaningless.
struct NonCircleFixedSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Exact range of a*y + b*t for y in [0,1) and t in the closed piece interval.
struct FormRange {
    Rat lo, hi;
    bool lo_open = false, hi_open = false;

    bool admits(const Rat& s) const {
        if (s < lo || (lo_open && s == lo)) return false;
        if (s > hi || (hi_open && s == hi)) return false;
        return true;
    }
};

inline FormRange form_range(const Rat& a, const Rat& b, const Rat& t_lo, const Rat& t_hi) {
    FormRange r;
    if (a > 0) {
        r.lo = 0;
        r.hi = a;
        r.hi_open = true;
    } else if (a < 0) {
        r.lo = a;
        r.hi = 0;
        r.lo_open = true;
    } else {
        r.lo = 0;
        r.hi = 0;
    }
    Rat bt1 = b * t_lo, bt2 = b * t_hi;
    r.lo += std::min(bt1, bt2);
    r.hi += std::max(bt1, bt2);
    return r;
}

} // namespace detail

// Fixed circles of one affine piece.  A point (x, y) at time t is fixed mod
// the integer lattice exactly when
//   alpha*y + beta*t + gamma        is an integer   (first coordinate), and
//   (delta - 1)*y + eps*t + zeta    is an integer   (second coordinate),
// independently of x.  When the two linear forms are independent the
// solutions are isolated (t, y) pairs; otherwise any solution comes in a
// positive dimensional family and the piece is rejected.
inline std::vector<FixedCircle> piece_fixed_circles(const AffinePiece& p) {
    const Rat a1 = p.alpha, b1 = p.beta, g1 = p.gamma;
    const Rat a2 = p.delta - 1, b2 = p.eps, g2 = p.zeta;
    std::vector<FixedCircle> out;

    Rat det = a1 * b2 - b1 * a2;
    if (det != 0) {
        auto r1 = detail::form_range(a1, b1, p.t_lo, p.t_hi);
        auto r2 = detail::form_range(a2, b2, p.t_lo, p.t_hi);
        for (Int k1 = rat_ceil(r1.lo + g1); k1 <= rat_floor(r1.hi + g1); ++k1) {
            for (Int k2 = rat_ceil(r2.lo + g2); k2 <= rat_floor(r2.hi + g2); ++k2) {
                Rat s1 = Rat(k1) - g1, s2 = Rat(k2) - g2;
                Rat y = (s1 * b2 - b1 * s2) / det;
                Rat t = (a1 * s2 - s1 * a2) / det;
                if (y >= 0 && y < 1 && t >= p.t_lo && t <= p.t_hi) out.push_back({t, y});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const bool row1_zero = (a1 == 0 && b1 == 0);
    const bool row2_zero = (a2 == 0 && b2 == 0);
    if (row1_zero && row2_zero) {
        if (is_integer(g1) && is_integer(g2))
            throw NonCircleFixedSet("every point of the piece is fixed");
        return out;
    }

    // Rank one: the rows are proportional.  Solutions of the leading row fill
    // line segments in (y, t); the other row restricts to a congruence on the
    // integer value of the leading form.
    const bool use1 = !row1_zero;
    const Rat a = use1 ? a1 : a2, b = use1 ? b1 : b2, g = use1 ? g1 : g2;
    const Rat ao = use1 ? a2 : a1, bo = use1 ? b2 : b1, go = use1 ? g2 : g1;
    const Rat lambda = (a != 0) ? ao / a : bo / b;
    auto r = detail::form_range(a, b, p.t_lo, p.t_hi);
    for (Int k = rat_ceil(r.lo + g); k <= rat_floor(r.hi + g); ++k) {
        Rat s = Rat(k) - g;
        if (!r.admits(s)) continue;
        if (is_integer(lambda * s + go))
            throw NonCircleFixedSet("fixed set contains a positive dimensional family");
    }
    return out;
}

// Checks a reported circle by sampling points along it and applying the map.
inline bool circle_is_fixed(const Homotopy& h, const FixedCircle& c) {
    for (const AffinePiece& p : h) {
        if (!p.contains(c.t)) continue;
        for (int i = 0; i < 8; ++i) {
            Rat x(i, 8);
            Rat xs = x + p.alpha * c.y + p.beta * c.t + p.gamma;
            Rat ys = p.delta * c.y + p.eps * c.t + p.zeta;
            if (!is_integer(xs - x) || !is_integer(ys - c.y)) return false;
        }
        return true;
    }
    return false;
}

// All fixed circles of the homotopy.  Circles sitting exactly on a junction
// time are found by both adjoining pieces and deduplicated.
inline std::vector<FixedCircle> fixed_circles(const Homotopy& h) {
    std::vector<FixedCircle> all;
    for (std::size_t i = 0; i < h.size(); ++i) {
        try {
            auto part = piece_fixed_circles(h[i]);
            all.insert(all.end(), part.begin(), part.end());
        } catch (const NonCircleFixedSet& e) {
            throw NonCircleFixedSet("piece " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const FixedCircle& c : all)
        if (!circle_is_fixed(h, c))
            throw std::logic_error("enumerated circle failed the pointwise fixedness check");
    return all;
}

inline std::size_t circle_count(const Homotopy& h) { return fixed_circles(h).size(); }

// Whether the time slice at t contains any fixed point of the piece map.
inline bool slice_has_fixed_point(const AffinePiece& p, const Rat& t) {
    const Rat c1 = p.beta * t + p.gamma;
    const Rat c2 = p.eps * t + p.zeta;
    const Rat a1 = p.alpha, a2 = p.delta - 1;
    if (a1 == 0 && a2 == 0) return is_integer(c1) && is_integer(c2);
    auto scan = [](const Rat& a, const Rat& cc, const Rat& ao, const Rat& cco) {
        Rat lo = a > 0 ? Rat(0) : a;
        Rat hi = a > 0 ? a : Rat(0);
        for (Int k = rat_ceil(lo + cc); k <= rat_floor(hi + cc); ++k) {
            Rat y = (Rat(k) - cc) / a;
            if (y >= 0 && y < 1 && is_integer(ao * y + cco)) return true;
        }
        return false;
    };
    if (a1 != 0) return scan(a1, c1, a2, c2);
    return scan(a2, c2, a1, c1);
}

// The family is admissible for trace computations only when the maps at the
// two ends of the deformation have no fixed points at all.
inline bool boundary_fixed_point_free(const Homotopy& h) {
    if (h.empty()) throw std::invalid_argument("empty homotopy");
    return !slice_has_fixed_point(h.front(), h.front().t_lo) &&
           !slice_has_fixed_point(h.back(), h.back().t_hi);
}

// The homotopy used for counting.  The triangulated model's two-piece
// deformation can carry more circles than necessary when the two winding
// parameters have opposite signs; an equivalent single straight piece with
// the same endpoint maps always realizes the minimum, so counts are taken
// there.  The square model's own deformation is already minimal.
inline Homotopy counting_homotopy(const CellModel& m) {
    if (m.kind == ModelKind::Triangulated) return triangulated_straight_homotopy(m.c1, m.c2);
    return m.homotopy;
}

inline std::vector<FixedCircle> model_fixed_circles(const CellModel& m) {
    return fixed_circles(counting_homotopy(m));
}

inline Int model_circle_count(const CellModel& m) {
    return Int(model_fixed_circles(m).size());
}

} // namespace ntb

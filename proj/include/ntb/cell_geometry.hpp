#pragma once

#include "ntb/chains.hpp"
#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"
#include "ntb/ring_elt.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntb {

struct Pt {
    Rat x, y;

    friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
    friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
};

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Oriented 1-cell of a fundamental domain.
struct Seg {
    Pt a, b;
};

// 2-cell given by its vertices in counterclockwise order; orient records the
// orientation the chain basis assigns to the cell (+1 counterclockwise, -1
// clockwise).
struct Poly {
    std::vector<Pt> vs;
    int orient = 1;
};

// A cellular decomposition of the torus, drawn in the plane.  Translating a
// cell by the integer vector (i, j) is the deck action of u^-i v^-j.
struct CellComplex {
    std::vector<Pt> cells0;
    std::vector<Seg> cells1;
    std::vector<Poly> cells2;
};

// An affine self-map of the plane with rational coefficients.
struct AffineMap2 {
    Rat m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    Rat tx = 0, ty = 0;

    Pt apply(const Pt& p) const {
        return {m11 * p.x + m12 * p.y + tx, m21 * p.x + m22 * p.y + ty};
    }
    Pt apply_linear(const Pt& d) const { return {m11 * d.x + m12 * d.y, m21 * d.x + m22 * d.y}; }
    Rat det() const { return m11 * m22 - m12 * m21; }
};

namespace detail {

inline bool is_integral(const Pt& d) { return is_integer(d.x) && is_integer(d.y); }

inline Monomial deck_monomial(const Pt& offset) {
    // Cell + (i, j) equals cell . u^-i v^-j.
    return {-Int(boost::multiprecision::numerator(offset.x)),
            -Int(boost::multiprecision::numerator(offset.y))};
}

inline Pt offset_of(const Monomial& g) { return {Rat(-g.exp_u), Rat(-g.exp_v)}; }

} // namespace detail

// Expresses a point as a deck translate of a 0-cell.
inline std::pair<std::size_t, Monomial> locate_point(const CellComplex& cx, const Pt& p) {
    std::pair<std::size_t, Monomial> found;
    int matches = 0;
    for (std::size_t i = 0; i < cx.cells0.size(); ++i) {
        Pt d = p - cx.cells0[i];
        if (detail::is_integral(d)) {
            found = {i, detail::deck_monomial(d)};
            ++matches;
        }
    }
    if (matches != 1)
        throw std::runtime_error("locate_point: point matches " + std::to_string(matches) +
                                 " cell translates");
    return found;
}

// A formal chain over the cells of one dimension: coefficient ring elements
// indexed by cell.
using CellChain = std::vector<RingElt>;

inline CellChain point_chain(const CellComplex& cx, const Pt& p) {
    CellChain c(cx.cells0.size());
    auto [i, g] = locate_point(cx, p);
    c[i].add(g, 1);
    return c;
}

// Decomposes the oriented segment from P to Q into translates of 1-cells by
// walking it one cell at a time.
inline CellChain segment_chain(const CellComplex& cx, const Pt& p, const Pt& q) {
    CellChain c(cx.cells1.size());
    if (p == q) return c;
    Pt pos = p;
    const Pt target_dir = q - p;
    int guard = 0;
    while (!(pos == q)) {
        if (++guard > 100000) throw std::runtime_error("segment_chain: walk did not terminate");
        Pt remaining = q - pos;
        if (cross(remaining, target_dir) != 0 || dot(remaining, target_dir) <= 0)
            throw std::runtime_error("segment_chain: walk left the segment");
        int matches = 0;
        std::size_t cell = 0;
        int sign = 0;
        Monomial g;
        Pt next;
        for (std::size_t i = 0; i < cx.cells1.size(); ++i) {
            Pt dir = cx.cells1[i].b - cx.cells1[i].a;
            // Forward traversal: the translated cell starts here and points
            // along the remaining direction.
            Pt off_f = pos - cx.cells1[i].a;
            if (detail::is_integral(off_f) && cross(dir, remaining) == 0 &&
                dot(dir, remaining) > 0) {
                ++matches;
                cell = i;
                sign = 1;
                g = detail::deck_monomial(off_f);
                next = pos + dir;
            }
            // Backward traversal: the translated cell ends here.
            Pt off_b = pos - cx.cells1[i].b;
            if (detail::is_integral(off_b) && cross(dir, remaining) == 0 &&
                dot(dir, remaining) < 0) {
                ++matches;
                cell = i;
                sign = -1;
                g = detail::deck_monomial(off_b);
                next = pos - dir;
            }
        }
        if (matches != 1)
            throw std::runtime_error("segment_chain: found " + std::to_string(matches) +
                                     " cell germs at a walk point");
        // Do not overshoot the target.
        Pt step = next - pos;
        if (dot(step, step) > dot(remaining, remaining))
            throw std::runtime_error("segment_chain: cell step overshoots the segment");
        c[cell].add(g, sign);
        pos = next;
    }
    return c;
}

namespace detail {

inline Rat polygon_area2(const std::vector<Pt>& vs) {
    Rat s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Pt& a = vs[i];
        const Pt& b = vs[(i + 1) % vs.size()];
        s += cross(a, b);
    }
    return s; // twice the signed area
}

inline bool point_in_convex_ccw(const std::vector<Pt>& vs, const Pt& p) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Pt& a = vs[i];
        const Pt& b = vs[(i + 1) % vs.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

} // namespace detail

// Decomposes a convex polygon, carrying plane orientation `w` (+1 for
// counterclockwise coverage, -1 for clockwise), into translates of 2-cells.
// The polygon must be exactly tiled by such translates.
inline CellChain polygon_chain(const CellComplex& cx, std::vector<Pt> vs, int w) {
    CellChain c(cx.cells2.size());
    Rat area2 = detail::polygon_area2(vs);
    if (area2 == 0) return c;
    if (area2 < 0) {
        std::reverse(vs.begin(), vs.end());
        area2 = -area2;
    }

    Rat xmin = vs[0].x, xmax = vs[0].x, ymin = vs[0].y, ymax = vs[0].y;
    for (const Pt& p : vs) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    Rat covered2 = 0;
    for (std::size_t j = 0; j < cx.cells2.size(); ++j) {
        const Poly& cell = cx.cells2[j];
        Rat cxmin = cell.vs[0].x, cxmax = cell.vs[0].x;
        Rat cymin = cell.vs[0].y, cymax = cell.vs[0].y;
        for (const Pt& p : cell.vs) {
            cxmin = std::min(cxmin, p.x);
            cxmax = std::max(cxmax, p.x);
            cymin = std::min(cymin, p.y);
            cymax = std::max(cymax, p.y);
        }
        Rat cell_area2 = detail::polygon_area2(cell.vs);
        for (Int dx = rat_ceil(xmin - cxmax); dx <= rat_floor(xmax - cxmin); ++dx) {
            for (Int dy = rat_ceil(ymin - cymax); dy <= rat_floor(ymax - cymin); ++dy) {
                Pt off{Rat(dx), Rat(dy)};
                bool inside = true;
                for (const Pt& p : cell.vs) {
                    if (!detail::point_in_convex_ccw(vs, p + off)) {
                        inside = false;
                        break;
                    }
                }
                if (!inside) continue;
                c[j].add(detail::deck_monomial(off), w * cell.orient);
                covered2 += cell_area2;
            }
        }
    }
    if (covered2 != area2)
        throw std::runtime_error("polygon_chain: region is not an exact union of cell translates");
    return c;
}

// Boundary of a 2-cell as a 1-chain, respecting the cell's chain orientation.
inline CellChain cell2_boundary(const CellComplex& cx, std::size_t j) {
    const Poly& cell = cx.cells2[j];
    CellChain total(cx.cells1.size());
    for (std::size_t i = 0; i < cell.vs.size(); ++i) {
        CellChain part =
            segment_chain(cx, cell.vs[i], cell.vs[(i + 1) % cell.vs.size()]);
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += Int(cell.orient) * part[k];
    }
    return total;
}

} // namespace ntb

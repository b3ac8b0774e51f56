#pragma once

#include "ntb/cell_geometry.hpp"
#include "ntb/chains.hpp"
#include "ntb/homotopy.hpp"
#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"
#include "ntb/ring_elt.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ntb {

enum class ModelKind { Square, Triangulated };

// Tabulated reproduces the published matrix tables verbatim.  Rederived
// recomputes every matrix from the cell geometry and the homotopy, which
// corrects a handful of typos in the tables (see README).
enum class MatrixSource { Tabulated, Rederived };

struct ModelOptions {
    YNegBranch y_branch = YNegBranch::Printed;
    MatrixSource source = MatrixSource::Tabulated;
};

// An equivariant cellular model of the mapping torus fiber: boundary matrices
// of the universal cover complex and the homotopy data D0, D1 for the fiber
// transport, all over the group ring with the twist phi.
struct CellModel {
    ModelKind kind = ModelKind::Square;
    std::string name;
    Int c1, c2, b4;
    Endo phi;
    std::size_t n0 = 0, n1 = 0, n2 = 0;
    RingMat partial1; // n0 x n1
    RingMat partial2; // n1 x n2
    RingMat d0;       // n1 x n0
    RingMat d1;       // n2 x n1
    CellComplex geom;
    Homotopy homotopy;
    ModelOptions options;
};

inline CellComplex square_complex() {
    CellComplex cx;
    Rat h(1, 2);
    cx.cells0 = {{Rat(0), Rat(0)}, {h, Rat(0)}};
    cx.cells1 = {
        {{Rat(0), Rat(0)}, {h, Rat(0)}},
        {{h, Rat(0)}, {Rat(1), Rat(0)}},
        {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}},
        {{h, Rat(0)}, {h, Rat(1)}},
    };
    // The chain basis orients both rectangles clockwise.
    cx.cells2 = {
        {{{Rat(0), Rat(0)}, {h, Rat(0)}, {h, Rat(1)}, {Rat(0), Rat(1)}}, -1},
        {{{h, Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {h, Rat(1)}}, -1},
    };
    return cx;
}

inline CellComplex triangulated_complex() {
    CellComplex cx;
    Rat h(1, 2);
    Pt p00{Rat(0), Rat(0)}, ph0{h, Rat(0)}, p0h{Rat(0), h}, phh{h, h};
    Pt p10{Rat(1), Rat(0)}, p01{Rat(0), Rat(1)}, ph1{h, Rat(1)}, p1h{Rat(1), h};
    Pt p11{Rat(1), Rat(1)};
    cx.cells0 = {p00, ph0, p0h, phh};
    cx.cells1 = {
        {p00, ph0}, // 1
        {ph0, p10}, // 2
        {p00, p0h}, // 3
        {p0h, ph0}, // 4
        {ph0, phh}, // 5
        {phh, p10}, // 6
        {p0h, phh}, // 7
        {phh, p1h}, // 8
        {p0h, p01}, // 9
        {p01, phh}, // 10
        {phh, ph1}, // 11
        {ph1, p1h}, // 12
    };
    // All triangles carry the counterclockwise orientation.
    cx.cells2 = {
        {{p00, ph0, p0h}, 1},  // 1
        {{ph0, phh, p0h}, 1},  // 2
        {{ph0, p10, phh}, 1},  // 3
        {{p10, p1h, phh}, 1},  // 4
        {{p0h, phh, p01}, 1},  // 5
        {{phh, ph1, p01}, 1},  // 6
        {{phh, p1h, ph1}, 1},  // 7
        {{p1h, p11, ph1}, 1},  // 8
    };
    return cx;
}

namespace detail {

inline RingElt mono(Int a, Int b) { return RingElt(Monomial{std::move(a), std::move(b)}); }

inline void fill_square_tabulated(CellModel& m) {
    const RingElt one = RingElt::one();
    const RingElt um1 = mono(-1, 0);
    const RingElt vstep = mono(0, -1) - one; // v^-1 - 1
    const RingElt X = helper_x(m.c1);
    const RingElt Y = helper_y(m.c1, m.options.y_branch);
    const RingElt W2 = helper_w(m.c2);
    const RingElt W4 = helper_w(m.b4);
    const RingElt uc = mono(-m.c1, 0);      // u^-c1
    const RingElt uc1 = mono(1 - m.c1, 0);  // u^{1-c1}

    m.partial1 = RingMat(2, 4);
    m.partial1.at(0, 0) = -one;
    m.partial1.at(0, 1) = um1;
    m.partial1.at(0, 2) = vstep;
    m.partial1.at(1, 0) = one;
    m.partial1.at(1, 1) = -one;
    m.partial1.at(1, 3) = vstep;

    m.partial2 = RingMat(4, 2);
    m.partial2.at(0, 0) = vstep;
    m.partial2.at(1, 1) = vstep;
    m.partial2.at(2, 0) = one;
    m.partial2.at(2, 1) = -um1;
    m.partial2.at(3, 0) = -one;
    m.partial2.at(3, 1) = one;

    m.d0 = RingMat(4, 2);
    m.d0.at(0, 0) = -X;
    m.d0.at(0, 1) = -X;
    m.d0.at(1, 0) = -Y;
    m.d0.at(1, 1) = -X;
    m.d0.at(2, 1) = -(uc * W2);
    m.d0.at(3, 0) = -(uc1 * W2);

    m.d1 = RingMat(2, 4);
    m.d1.at(0, 1) = uc1 * W2;
    m.d1.at(0, 2) = X * W4;
    m.d1.at(0, 3) = X * W4;
    m.d1.at(1, 0) = uc1 * W2;
    m.d1.at(1, 2) = Y * W4;
    m.d1.at(1, 3) = X * W4;
}

inline void fill_triangulated_tabulated(CellModel& m) {
    const RingElt one = RingElt::one();
    const RingElt um1 = mono(-1, 0);
    const RingElt um2 = mono(-2, 0);
    const RingElt vm1 = mono(0, -1);
    const RingElt v1 = mono(0, 1);
    const RingElt X = helper_x(m.c1);
    const RingElt W = helper_w(m.c2);
    const RingElt P = mono(-m.c1, 0);     // u^{-c1}
    const RingElt Q = mono(-m.c1 - 1, 0); // u^{-c1-1}

    m.partial1 = RingMat(4, 12);
    {
        auto& d = m.partial1;
        d.at(0, 0) = -one;
        d.at(0, 1) = um1;
        d.at(0, 2) = -one;
        d.at(0, 5) = um1;
        d.at(0, 8) = vm1;
        d.at(0, 9) = -vm1;
        d.at(1, 0) = one;
        d.at(1, 1) = -one;
        d.at(1, 3) = one;
        d.at(1, 4) = -one;
        d.at(1, 10) = vm1;
        d.at(1, 11) = -vm1;
        d.at(2, 2) = one;
        d.at(2, 3) = -one;
        d.at(2, 6) = -one;
        d.at(2, 7) = um1;
        d.at(2, 8) = -one;
        d.at(2, 11) = um1;
        d.at(3, 4) = one;
        d.at(3, 5) = -one;
        d.at(3, 6) = one;
        d.at(3, 7) = -one;
        d.at(3, 9) = one;
        d.at(3, 10) = -one;
    }

    m.partial2 = RingMat(12, 8);
    {
        auto& d = m.partial2;
        d.at(0, 0) = one;
        d.at(0, 5) = -vm1;
        d.at(1, 2) = one;
        d.at(1, 7) = -vm1;
        d.at(2, 0) = -one;
        d.at(2, 3) = um1;
        d.at(3, 0) = -one;
        d.at(3, 1) = one;
        d.at(4, 1) = one;
        d.at(4, 2) = -one;
        d.at(5, 2) = -one;
        d.at(5, 3) = one;
        d.at(6, 1) = -one;
        d.at(6, 4) = one;
        d.at(7, 3) = -one;
        d.at(7, 6) = one;
        d.at(8, 4) = -one;
        d.at(8, 7) = um1;
        d.at(9, 4) = -one;
        d.at(9, 5) = one;
        d.at(10, 5) = one;
        d.at(10, 6) = -one;
        d.at(11, 6) = -one;
        d.at(11, 7) = one;
    }

    m.d0 = RingMat(12, 4);
    {
        auto& d = m.d0;
        d.at(0, 2) = -(um1 * X);
        d.at(0, 3) = -(um2 * X);
        d.at(1, 2) = -(um1 * X);
        d.at(1, 3) = -(um1 * X);
        d.at(2, 1) = -(vm1 * W);
        d.at(2, 2) = -(Q * W);
        d.at(4, 0) = -(P * vm1 * W);
        d.at(4, 3) = -(Q * W);
        d.at(6, 0) = -(P * X);
        d.at(6, 1) = -(um1 * X);
        d.at(7, 0) = -X;
        d.at(7, 1) = -(um1 * X);
        d.at(8, 1) = -(Q * W);
        d.at(8, 2) = -(Q * W);
        d.at(10, 0) = -(P * W);
        d.at(10, 3) = -(P * W);
    }

    m.d1 = RingMat(8, 12);
    {
        auto& d = m.d1;
        // Column j lists the 2-cell coefficients of the sweep of 1-cell j.
        d.at(2, 0) = P * vm1 * W;
        d.at(3, 0) = P * vm1 * W;
        d.at(6, 0) = P * W;
        d.at(7, 0) = P * W;

        d.at(0, 1) = Q * vm1 * W;
        d.at(1, 1) = Q * vm1 * W;
        d.at(4, 1) = Q * W;
        d.at(5, 1) = Q * W;

        d.at(0, 2) = P * X;
        d.at(1, 2) = P * X;
        d.at(2, 2) = P * X + P * vm1 * W;
        d.at(3, 2) = X + P * W;
        d.at(6, 2) = P * W;
        d.at(7, 2) = P * W;

        d.at(0, 3) = P * X;
        d.at(1, 3) = P * X;
        d.at(2, 3) = P * X;
        d.at(3, 3) = P * X;

        d.at(0, 4) = um2 * X + Q * vm1 * W;
        d.at(1, 4) = um1 * X + Q * W;
        d.at(2, 4) = um1 * X;
        d.at(3, 4) = um1 * X;
        d.at(4, 4) = Q * W;
        d.at(5, 4) = Q * W;

        d.at(0, 5) = um2 * X;
        d.at(1, 5) = um2 * X;
        d.at(2, 5) = um1 * X;
        d.at(3, 5) = um1 * X;

        d.at(0, 6) = Q * vm1 * W;
        d.at(1, 6) = Q * vm1 * W;
        d.at(4, 6) = Q * vm1 * W;
        d.at(5, 6) = Q * vm1 * W;

        d.at(0, 7) = Q * W;
        d.at(1, 7) = Q * W;
        d.at(4, 7) = Q * W;
        d.at(5, 7) = Q * W;

        d.at(0, 8) = Q * W;
        d.at(1, 8) = Q * W;
        d.at(4, 8) = um2 * v1 * X + Q * W;
        d.at(5, 8) = um1 * v1 * X + Q * v1 * W;
        d.at(6, 8) = um1 * v1 * X;
        d.at(7, 8) = um1 * v1 * X;

        d.at(4, 9) = um2 * v1 * X;
        d.at(5, 9) = um2 * v1 * X;
        d.at(6, 9) = um1 * v1 * X;
        d.at(7, 9) = um1 * v1 * X;

        d.at(2, 10) = Q * W;
        d.at(3, 10) = Q * W;
        d.at(4, 10) = um2 * v1 * X;
        d.at(5, 10) = um2 * v1 * X;
        d.at(6, 10) = um2 * v1 * X + Q * W;
        d.at(7, 10) = um1 * v1 * X + Q * v1 * W;

        d.at(4, 11) = um2 * v1 * X;
        d.at(5, 11) = um2 * v1 * X;
        d.at(6, 11) = um2 * v1 * X;
        d.at(7, 11) = um2 * v1 * X;
    }
}

inline AffineMap2 piece_map_at(const AffinePiece& p, const Rat& t) {
    AffineMap2 f;
    f.m11 = 1;
    f.m12 = p.alpha;
    f.m21 = 0;
    f.m22 = p.delta;
    f.tx = p.beta * t + p.gamma;
    f.ty = p.eps * t + p.zeta;
    return f;
}

inline void chain_into_column(const CellChain& chain, RingMat& m, std::size_t col) {
    for (std::size_t i = 0; i < chain.size(); ++i) m.at(i, col) += chain[i];
}

} // namespace detail

// Boundary matrices recomputed from the plane geometry.
inline RingMat derive_partial1(const CellComplex& cx) {
    RingMat m(cx.cells0.size(), cx.cells1.size());
    for (std::size_t j = 0; j < cx.cells1.size(); ++j) {
        auto [ia, ga] = locate_point(cx, cx.cells1[j].a);
        auto [ib, gb] = locate_point(cx, cx.cells1[j].b);
        m.at(ib, j).add(gb, 1);
        m.at(ia, j).add(ga, -1);
    }
    return m;
}

inline RingMat derive_partial2(const CellComplex& cx) {
    RingMat m(cx.cells1.size(), cx.cells2.size());
    for (std::size_t j = 0; j < cx.cells2.size(); ++j)
        detail::chain_into_column(cell2_boundary(cx, j), m, j);
    return m;
}

// The track of each vertex under the homotopy, as a 1-chain, with the
// degree-zero transport sign.
inline RingMat derive_d0(const CellComplex& cx, const Homotopy& h) {
    RingMat m(cx.cells1.size(), cx.cells0.size());
    for (std::size_t j = 0; j < cx.cells0.size(); ++j) {
        for (const AffinePiece& piece : h) {
            Pt from = detail::piece_map_at(piece, piece.t_lo).apply(cx.cells0[j]);
            Pt to = detail::piece_map_at(piece, piece.t_hi).apply(cx.cells0[j]);
            CellChain track = segment_chain(cx, from, to);
            for (std::size_t i = 0; i < track.size(); ++i) m.at(i, j) -= track[i];
        }
    }
    return m;
}

// The sweep of each 1-cell across the homotopy, as a 2-chain.
inline RingMat derive_d1(const CellComplex& cx, const Homotopy& h) {
    RingMat m(cx.cells2.size(), cx.cells1.size());
    for (std::size_t j = 0; j < cx.cells1.size(); ++j) {
        const Seg& s = cx.cells1[j];
        for (const AffinePiece& piece : h) {
            AffineMap2 flo = detail::piece_map_at(piece, piece.t_lo);
            AffineMap2 fhi = detail::piece_map_at(piece, piece.t_hi);
            Pt js = flo.apply_linear(s.b - s.a);
            Pt jt{piece.beta * (piece.t_hi - piece.t_lo), piece.eps * (piece.t_hi - piece.t_lo)};
            Rat orient = cross(js, jt);
            if (orient == 0) continue;
            std::vector<Pt> quad{flo.apply(s.a), flo.apply(s.b), fhi.apply(s.b), fhi.apply(s.a)};
            CellChain part = polygon_chain(cx, quad, orient > 0 ? 1 : -1);
            detail::chain_into_column(part, m, j);
        }
    }
    return m;
}

struct ChainMap {
    RingMat deg0, deg1, deg2;
};

// The cellular chain map induced by an affine map carrying the complex into
// itself up to deck translations.
inline ChainMap cellular_chain_map(const CellComplex& cx, const AffineMap2& f) {
    ChainMap r;
    r.deg0 = RingMat(cx.cells0.size(), cx.cells0.size());
    for (std::size_t j = 0; j < cx.cells0.size(); ++j)
        detail::chain_into_column(point_chain(cx, f.apply(cx.cells0[j])), r.deg0, j);

    r.deg1 = RingMat(cx.cells1.size(), cx.cells1.size());
    for (std::size_t j = 0; j < cx.cells1.size(); ++j)
        detail::chain_into_column(
            segment_chain(cx, f.apply(cx.cells1[j].a), f.apply(cx.cells1[j].b)), r.deg1, j);

    r.deg2 = RingMat(cx.cells2.size(), cx.cells2.size());
    Rat det = f.det();
    if (det != 0) {
        int sdet = det > 0 ? 1 : -1;
        for (std::size_t j = 0; j < cx.cells2.size(); ++j) {
            std::vector<Pt> img;
            for (const Pt& p : cx.cells2[j].vs) img.push_back(f.apply(p));
            CellChain part = polygon_chain(cx, img, sdet * cx.cells2[j].orient);
            detail::chain_into_column(part, r.deg2, j);
        }
    }
    return r;
}

struct BoundaryMaps {
    ChainMap f0, f1;
};

// The chain maps induced by the time-zero and time-one maps of the homotopy.
inline BoundaryMaps boundary_chain_maps(const CellModel& m) {
    if (m.homotopy.empty()) throw std::logic_error("model has no homotopy data");
    AffineMap2 start = detail::piece_map_at(m.homotopy.front(), m.homotopy.front().t_lo);
    AffineMap2 end = detail::piece_map_at(m.homotopy.back(), m.homotopy.back().t_hi);
    return {cellular_chain_map(m.geom, start), cellular_chain_map(m.geom, end)};
}

struct HomotopyIdentityReport {
    bool ok = false;
    // Residues of the transport identity in degrees 0, 1, 2; zero when ok.
    RingMat res0, res1, res2;
};

// Checks the chain transport identity relating the boundary matrices, the
// transport matrices and the two end maps:
//   partial1 D0                      = F0 - F1   (degree 0)
//   partial2 D1 + D0 phi(partial1)   = F0 - F1   (degree 1)
//   D1 phi(partial2)                 = F0 - F1   (degree 2)
inline HomotopyIdentityReport chain_homotopy_identity(const CellModel& m) {
    BoundaryMaps maps = boundary_chain_maps(m);
    HomotopyIdentityReport rep;
    rep.res0 = m.partial1 * m.d0 - (maps.f0.deg0 - maps.f1.deg0);
    rep.res1 = m.partial2 * m.d1 + m.d0 * apply_endo(m.partial1, m.phi) -
               (maps.f0.deg1 - maps.f1.deg1);
    rep.res2 = m.d1 * apply_endo(m.partial2, m.phi) - (maps.f0.deg2 - maps.f1.deg2);
    rep.ok = rep.res0.is_zero() && rep.res1.is_zero() && rep.res2.is_zero();
    return rep;
}

inline CellModel build_square_model(Int c1, Int c2, Int b4, ModelOptions options = {}) {
    CellModel m;
    m.kind = ModelKind::Square;
    m.name = "square";
    m.c1 = std::move(c1);
    m.c2 = std::move(c2);
    m.b4 = std::move(b4);
    m.phi = Endo(1, 0, 0, m.b4);
    m.n0 = 2;
    m.n1 = 4;
    m.n2 = 2;
    m.geom = square_complex();
    m.homotopy = square_homotopy(m.c1, m.c2, m.b4);
    m.options = options;
    if (options.source == MatrixSource::Tabulated) {
        detail::fill_square_tabulated(m);
    } else {
        m.partial1 = derive_partial1(m.geom);
        m.partial2 = derive_partial2(m.geom);
        m.d0 = derive_d0(m.geom, m.homotopy);
        m.d1 = derive_d1(m.geom, m.homotopy);
    }
    return m;
}

inline CellModel build_triangulated_model(Int c1, Int c2, ModelOptions options = {}) {
    CellModel m;
    m.kind = ModelKind::Triangulated;
    m.name = "triangulated";
    m.c1 = std::move(c1);
    m.c2 = std::move(c2);
    m.b4 = -1;
    m.phi = Endo(1, 0, 1, -1);
    m.n0 = 4;
    m.n1 = 12;
    m.n2 = 8;
    m.geom = triangulated_complex();
    m.homotopy = triangulated_homotopy(m.c1, m.c2);
    m.options = options;
    if (options.source == MatrixSource::Tabulated) {
        detail::fill_triangulated_tabulated(m);
    } else {
        m.partial1 = derive_partial1(m.geom);
        m.partial2 = derive_partial2(m.geom);
        m.d0 = derive_d0(m.geom, m.homotopy);
        m.d1 = derive_d1(m.geom, m.homotopy);
    }
    return m;
}

// The square of the boundary must vanish.
inline bool verify_complex(const CellModel& m) { return (m.partial1 * m.partial2).is_zero(); }

// Negating one cell's orientation conjugates all four matrices; the homology
// content of the trace is unchanged.  Used by tests.
inline CellModel flip_cell_orientation(CellModel m, int dim, std::size_t idx) {
    auto negate_row = [](RingMat& mat, std::size_t r) {
        for (std::size_t j = 0; j < mat.cols(); ++j) mat.at(r, j) = -mat.at(r, j);
    };
    auto negate_col = [](RingMat& mat, std::size_t c) {
        for (std::size_t i = 0; i < mat.rows(); ++i) mat.at(i, c) = -mat.at(i, c);
    };
    if (dim == 0) {
        negate_row(m.partial1, idx);
        negate_col(m.d0, idx);
    } else if (dim == 1) {
        negate_col(m.partial1, idx);
        negate_row(m.partial2, idx);
        negate_row(m.d0, idx);
        negate_col(m.d1, idx);
    } else if (dim == 2) {
        negate_col(m.partial2, idx);
        negate_row(m.d1, idx);
    } else {
        throw std::invalid_argument("flip_cell_orientation: dim must be 0, 1 or 2");
    }
    return m;
}

} // namespace ntb

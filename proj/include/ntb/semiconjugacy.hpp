#pragma once

#include "ntb/int_linalg.hpp"
#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ntb {

// Two markers g1, g2 are equivalent when g1 = g * g2 * phi(g)^{-1} for some g.
// On exponent vectors this is the solvability of ([phi] - I) z = theta(g2) - theta(g1),
// and a solution z gives the witness g = u^{z1} v^{z2}.
inline std::optional<Monomial> same_class(const Monomial& g1, const Monomial& g2,
                                          const Endo& phi) {
    IntMat2 m = endo_matrix_minus_identity(phi);
    Vec2 rhs{g2.exp_u - g1.exp_u, g2.exp_v - g1.exp_v};
    auto sol = solve_integer_system(m, rhs);
    if (!sol) return std::nullopt;
    Monomial g{sol->particular[0], sol->particular[1]};
    if (!(g * g2 * phi.apply(g).inverse() == g1))
        throw std::logic_error("semiconjugacy witness failed verification");
    return g;
}

// Deterministic representative of the class of g: reduce the exponent vector
// of g modulo the column lattice of [phi] - I into a fixed fundamental domain.
inline Monomial canonical_marker(const Monomial& g, const Endo& phi) {
    auto basis = column_lattice_basis(endo_matrix_minus_identity(phi));
    Vec2 x{g.exp_u, g.exp_v};
    if (basis.empty()) return g;
    if (basis.size() == 1) {
        const Vec2& w = basis[0];
        if (w[0] != 0) {
            Int q = floor_div(x[0], w[0]);
            // w[0] > 0 by normalization, so this puts x[0] into [0, w[0]).
            x = {x[0] - q * w[0], x[1] - q * w[1]};
        } else {
            Int q = floor_div(x[1], w[1]);
            x = {x[0], x[1] - q * w[1]};
        }
        return {x[0], x[1]};
    }
    // Rank 2, echelon basis {(p, q), (0, s)}: reduce the first coordinate,
    // then the second.
    const Vec2& a = basis[0];
    const Vec2& b = basis[1];
    Int q0 = floor_div(x[0], a[0]);
    x = {x[0] - q0 * a[0], x[1] - q0 * a[1]};
    Int q1 = floor_div(x[1], b[1]);
    x = {x[0], x[1] - q1 * b[1]};
    return {x[0], x[1]};
}

// A semiconjugacy class: its canonical representative together with the
// endomorphism it lives under.
struct SemiClass {
    Monomial rep;
    Endo phi;

    SemiClass() = default;
    SemiClass(Monomial r, Endo p) : rep(std::move(r)), phi(std::move(p)) {}

    static SemiClass of(const Monomial& g, const Endo& phi) {
        return {canonical_marker(g, phi), phi};
    }

    bool contains(const Monomial& g) const { return canonical_marker(g, phi) == rep; }

    friend bool operator==(const SemiClass& x, const SemiClass& y) {
        return x.rep == y.rep && x.phi == y.phi;
    }
    friend bool operator<(const SemiClass& x, const SemiClass& y) {
        if (!(x.rep == y.rep)) return x.rep < y.rep;
        return x.phi < y.phi;
    }

    std::string to_string() const { return rep.to_string(); }
};

} // namespace ntb

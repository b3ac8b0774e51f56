#pragma once

#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace ntb {

using Vec2 = std::array<Int, 2>;

struct IntMat2 {
    Int a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    IntMat2() = default;
    IntMat2(Int a, Int b, Int c, Int d)
        : a11(std::move(a)), a12(std::move(b)), a21(std::move(c)), a22(std::move(d)) {}

    static IntMat2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return a11 * a22 - a12 * a21; }
    bool is_unimodular() const {
        Int d = det();
        return d == 1 || d == -1;
    }
    bool is_identity() const { return a11 == 1 && a12 == 0 && a21 == 0 && a22 == 1; }

    // Inverse of a matrix with determinant +-1.
    IntMat2 inverse_unimodular() const {
        Int d = det();
        if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");
        return {a22 * d, -a12 * d, -a21 * d, a11 * d};
    }

    Vec2 apply(const Vec2& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }

    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }

    friend IntMat2 operator-(const IntMat2& x, const IntMat2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }

    friend bool operator==(const IntMat2& x, const IntMat2& y) {
        return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
    }

    friend bool operator<(const IntMat2& x, const IntMat2& y) {
        return std::tie(x.a11, x.a12, x.a21, x.a22) < std::tie(y.a11, y.a12, y.a21, y.a22);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "[" << a11 << ", " << a12 << "; " << a21 << ", " << a22 << "]";
        return out.str();
    }
};

// Matrix of the endomorphism acting on exponent columns: theta(phi(g)) = M theta(g).
inline IntMat2 endo_matrix(const Endo& phi) { return {phi.b1, phi.b3, phi.b2, phi.b4}; }

inline IntMat2 endo_matrix_minus_identity(const Endo& phi) {
    return endo_matrix(phi) - IntMat2::identity();
}

// Generators of the solution lattice of M z = 0; empty when M is injective,
// one vector for rank one, two for the zero matrix.
using KernelLattice = std::vector<Vec2>;

struct IntegerSolution {
    Vec2 particular;
    KernelLattice kernel;
};

namespace detail {

// Smith normal form for 2x2 integer matrices: U * M * V = diag(s1, s2) with
// U, V unimodular, s1, s2 >= 0 and s1 | s2 whenever both are nonzero.
struct Smith2 {
    IntMat2 U, V;
    Int s1, s2;
};

inline Smith2 smith_form(IntMat2 m) {
    IntMat2 u = IntMat2::identity();
    IntMat2 v = IntMat2::identity();

    auto swap_rows = [&] {
        std::swap(m.a11, m.a21);
        std::swap(m.a12, m.a22);
        std::swap(u.a11, u.a21);
        std::swap(u.a12, u.a22);
    };
    auto swap_cols = [&] {
        std::swap(m.a11, m.a12);
        std::swap(m.a21, m.a22);
        std::swap(v.a11, v.a12);
        std::swap(v.a21, v.a22);
    };
    auto add_row2 = [&](const Int& k) { // row2 += k * row1
        m.a21 += k * m.a11;
        m.a22 += k * m.a12;
        u.a21 += k * u.a11;
        u.a22 += k * u.a12;
    };
    auto add_col2 = [&](const Int& k) { // col2 += k * col1
        m.a12 += k * m.a11;
        m.a22 += k * m.a21;
        v.a12 += k * v.a11;
        v.a22 += k * v.a21;
    };
    auto add_col1 = [&](const Int& k) { // col1 += k * col2
        m.a11 += k * m.a12;
        m.a21 += k * m.a22;
        v.a11 += k * v.a12;
        v.a21 += k * v.a22;
    };

    while (true) {
        // Clear the off-diagonal entries with euclidean steps on the pivot.
        while (m.a12 != 0 || m.a21 != 0) {
            if (m.a11 == 0) {
                if (m.a21 != 0)
                    swap_rows();
                else
                    swap_cols();
                continue;
            }
            if (m.a21 != 0) {
                Int q = floor_div(m.a21, m.a11);
                add_row2(-q);
                if (m.a21 != 0) swap_rows();
                continue;
            }
            Int q = floor_div(m.a12, m.a11);
            add_col2(-q);
            if (m.a12 != 0) swap_cols();
        }
        // Enforce the divisibility chain on the diagonal.
        if (m.a11 != 0 && m.a22 != 0 && m.a22 % m.a11 != 0) {
            add_col1(1); // brings a copy of a22 into column 1; re-clear
            continue;
        }
        break;
    }

    if (m.a11 == 0 && m.a22 != 0) {
        swap_rows();
        swap_cols();
    }
    if (m.a11 < 0) {
        m.a11 = -m.a11;
        u.a11 = -u.a11;
        u.a12 = -u.a12;
    }
    if (m.a22 < 0) {
        m.a22 = -m.a22;
        u.a21 = -u.a21;
        u.a22 = -u.a22;
    }
    return {u, v, m.a11, m.a22};
}

} // namespace detail

// All integer solutions of M z = b, described as particular + lattice.
inline std::optional<IntegerSolution> solve_integer_system(const IntMat2& m, const Vec2& b) {
    auto [u, v, s1, s2] = detail::smith_form(m);
    Vec2 c = u.apply(b);
    Vec2 y{};
    KernelLattice kernel_y;
    const Int svals[2] = {s1, s2};
    for (int i = 0; i < 2; ++i) {
        if (svals[i] == 0) {
            if (c[i] != 0) return std::nullopt;
            y[i] = 0;
            Vec2 e{};
            e[i] = 1;
            kernel_y.push_back(e);
        } else {
            if (c[i] % svals[i] != 0) return std::nullopt;
            y[i] = c[i] / svals[i];
        }
    }
    IntegerSolution sol;
    sol.particular = v.apply(y);
    for (const auto& e : kernel_y) sol.kernel.push_back(v.apply(e));
    return sol;
}

// The lattice of solutions of ([phi] - I) z = 0.
inline KernelLattice kernel_basis(const Endo& phi) {
    auto sol = solve_integer_system(endo_matrix_minus_identity(phi), {0, 0});
    return sol ? sol->kernel : KernelLattice{};
}

// A normalized basis of the column lattice of M, in column echelon form:
// empty for rank 0; a single generator for rank 1 (first nonzero entry
// positive); {(p, q), (0, s)} with p, s > 0 and 0 <= q < s for rank 2.
inline std::vector<Vec2> column_lattice_basis(const IntMat2& m) {
    std::vector<Vec2> cols;
    if (m.a11 != 0 || m.a21 != 0) cols.push_back({m.a11, m.a21});
    if (m.a12 != 0 || m.a22 != 0) cols.push_back({m.a12, m.a22});
    if (cols.empty()) return {};

    if (cols.size() == 2) {
        auto& a = cols[0];
        auto& b = cols[1];
        while (b[0] != 0) {
            if (a[0] == 0) {
                std::swap(a, b);
                continue;
            }
            Int q = floor_div(b[0], a[0]);
            b = {b[0] - q * a[0], b[1] - q * a[1]};
            if (b[0] != 0) std::swap(a, b);
        }
        if (b[1] == 0) {
            cols.pop_back();
        } else if (a[0] == 0) {
            Int g = boost::multiprecision::gcd(a[1], b[1]);
            cols.assign(1, Vec2{Int(0), g});
        }
    }
    if (cols.size() == 1) {
        auto& w = cols[0];
        if (w[0] < 0 || (w[0] == 0 && w[1] < 0)) w = {-w[0], -w[1]};
        return cols;
    }
    auto& a = cols[0];
    auto& b = cols[1];
    if (a[0] < 0) a = {-a[0], -a[1]};
    if (b[1] < 0) b[1] = -b[1];
    a[1] = floor_mod(a[1], b[1]);
    return cols;
}

} // namespace ntb

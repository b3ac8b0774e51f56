#pragma once

#include "ntb/int_types.hpp"

#include <array>
#include <compare>
#include <sstream>
#include <string>
#include <tuple>

namespace ntb {

// A group element u^a v^b of the free abelian group on u, v.
struct Monomial {
    Int exp_u = 0;
    Int exp_v = 0;

    Monomial() = default;
    Monomial(Int a, Int b) : exp_u(std::move(a)), exp_v(std::move(b)) {}

    bool is_identity() const { return exp_u == 0 && exp_v == 0; }

    Monomial inverse() const { return {-exp_u, -exp_v}; }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {x.exp_u + y.exp_u, x.exp_v + y.exp_v};
    }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.exp_u == y.exp_u && x.exp_v == y.exp_v;
    }

    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.exp_u != y.exp_u) return x.exp_u < y.exp_u;
        return x.exp_v < y.exp_v;
    }

    // Exponent vector, the abelianization coordinates of the element.
    std::array<Int, 2> theta() const { return {exp_u, exp_v}; }

    std::string to_string() const {
        if (is_identity()) return "1";
        std::ostringstream out;
        bool first = true;
        auto put = [&](char name, const Int& e) {
            if (e == 0) return;
            if (!first) out << ' ';
            first = false;
            out << name;
            if (e != 1) out << '^' << e;
        };
        put('u', exp_u);
        put('v', exp_v);
        return out.str();
    }
};

inline Monomial u_pow(Int k) { return {std::move(k), 0}; }
inline Monomial v_pow(Int k) { return {0, std::move(k)}; }

// An endomorphism of the group, u -> u^b1 v^b2, v -> u^b3 v^b4.
struct Endo {
    Int b1 = 1, b2 = 0, b3 = 0, b4 = 1;

    Endo() = default;
    Endo(Int b1_, Int b2_, Int b3_, Int b4_)
        : b1(std::move(b1_)), b2(std::move(b2_)), b3(std::move(b3_)), b4(std::move(b4_)) {}

    Monomial apply(const Monomial& m) const {
        return {m.exp_u * b1 + m.exp_v * b3, m.exp_u * b2 + m.exp_v * b4};
    }

    bool is_identity() const { return b1 == 1 && b2 == 0 && b3 == 0 && b4 == 1; }

    friend bool operator==(const Endo& x, const Endo& y) {
        return x.b1 == y.b1 && x.b2 == y.b2 && x.b3 == y.b3 && x.b4 == y.b4;
    }

    friend bool operator<(const Endo& x, const Endo& y) {
        return std::tie(x.b1, x.b2, x.b3, x.b4) < std::tie(y.b1, y.b2, y.b3, y.b4);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "u -> " << apply(u_pow(1)).to_string() << ", v -> " << apply(v_pow(1)).to_string();
        return out.str();
    }
};

// The supported shape for the trace machinery: u is fixed and v moves.
inline bool fixes_u_moves_v(const Endo& phi) {
    return phi.b1 == 1 && phi.b2 == 0 && !(phi.b3 == 0 && phi.b4 == 1);
}

} // namespace ntb

#pragma once

#include "ntb/cell_model.hpp"
#include "ntb/int_linalg.hpp"
#include "ntb/int_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ntb {

// Input data of a fiber preserving self map of a torus bundle over the
// circle: A is the gluing matrix of the bundle, B the matrix induced by the
// map on the fiber, and (c1, c2) the winding vector of the map along the
// deformation direction.
struct BundleMapData {
    IntMat2 A, B;
    Int c1 = 0, c2 = 0;
};

inline BundleMapData conjugate_data(const BundleMapData& d, const IntMat2& p) {
    IntMat2 pinv = p.inverse_unimodular();
    BundleMapData out;
    out.A = p * d.A * pinv;
    out.B = p * d.B * pinv;
    Vec2 c = p.apply({d.c1, d.c2});
    out.c1 = c[0];
    out.c2 = c[1];
    return out;
}

// The map on the fundamental group is well defined exactly when the fiber
// matrix commutes with the gluing matrix.
inline bool pi1_map_consistent(const BundleMapData& d) { return d.A * d.B == d.B * d.A; }

// Whether the fiber map alone can be deformed to a fixed point free map of
// the fiber torus; equivalent to the vanishing of its fixed point count
// det(B - I).
inline bool fiber_deformable(const BundleMapData& d) {
    IntMat2 i{1, 0, 0, 1};
    return (d.B - i).det() == 0;
}

namespace detail {

inline std::string power_word(const Int& p, const Int& q) {
    std::string s;
    auto app = [&s](const char* g, const Int& e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += g;
        if (e != 1) s += '^' + e.str();
    };
    app("a", p);
    app("b", q);
    if (s.empty()) s = "1";
    return s;
}

} // namespace detail

// Presentation of the fundamental group of the bundle and the images of the
// generators under the map, in the generators a, b (fiber) and c (base loop).
struct Pi1Description {
    std::vector<std::string> relations; // of the bundle group
    std::vector<std::string> images;    // of a, b, c under the map
    bool consistent = false;
};

inline Pi1Description pi1_description(const BundleMapData& d) {
    Pi1Description out;
    out.relations = {
        "a b = b a",
        "c a c^-1 = " + detail::power_word(d.A.a11, d.A.a21),
        "c b c^-1 = " + detail::power_word(d.A.a12, d.A.a22),
    };
    out.images = {
        "a -> " + detail::power_word(d.B.a11, d.B.a21),
        "b -> " + detail::power_word(d.B.a12, d.B.a22),
        "c -> " + (d.c1 == 0 && d.c2 == 0 ? std::string("c")
                                          : detail::power_word(d.c1, d.c2) + " c"),
    };
    out.consistent = pi1_map_consistent(d);
    return out;
}

inline std::vector<std::string> validate(const BundleMapData& d) {
    std::vector<std::string> errors;
    if (!d.A.is_unimodular())
        errors.push_back("the gluing matrix must have determinant 1 or -1");
    if (d.A * d.B != d.B * d.A)
        errors.push_back("the fiber matrix must commute with the gluing matrix");
    return errors;
}

enum class BundleCase { I, II, III, IV, V };

inline std::string to_string(BundleCase c) {
    switch (c) {
        case BundleCase::I: return "I";
        case BundleCase::II: return "II";
        case BundleCase::III: return "III";
        case BundleCase::IV: return "IV";
        case BundleCase::V: return "V";
    }
    return "?";
}

struct Classification {
    bool classified = false;
    BundleCase label = BundleCase::I;
    IntMat2 P;      // change of fiber basis realizing the normal form
    IntMat2 A1, B1; // conjugated matrices P A P^-1, P B P^-1
    Int c1 = 0, c2 = 0;
};

namespace detail {

// All change of basis candidates with entries bounded by 8, the identity
// first and then ordered by largest entry and lexicographically, so the
// search is deterministic.
inline const std::vector<IntMat2>& unimodular_pool() {
    static const std::vector<IntMat2> pool = [] {
        std::vector<IntMat2> v;
        const int bound = 8;
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b)
                for (int c = -bound; c <= bound; ++c)
                    for (int d = -bound; d <= bound; ++d) {
                        int det = a * d - b * c;
                        if (det == 1 || det == -1) v.push_back({a, b, c, d});
                    }
        auto maxabs = [](const IntMat2& m) {
            Int r = 0;
            for (const Int* e : {&m.a11, &m.a12, &m.a21, &m.a22})
                if (abs(*e) > r) r = abs(*e);
            return r;
        };
        std::sort(v.begin(), v.end(), [&](const IntMat2& x, const IntMat2& y) {
            bool ix = x.is_identity(), iy = y.is_identity();
            if (ix != iy) return ix;
            Int mx = maxabs(x), my = maxabs(y);
            if (mx != my) return mx < my;
            return x < y;
        });
        return v;
    }();
    return pool;
}

inline bool upper_unit_shape(const IntMat2& b) { return b.a11 == 1 && b.a21 == 0; }

inline bool matches_case(BundleCase which, const IntMat2& a, const IntMat2& b) {
    const IntMat2 ident{1, 0, 0, 1};
    switch (which) {
        case BundleCase::I:
            return b == ident && a.a12 != 0;
        case BundleCase::II:
            return a.a11 == 1 && a.a21 == 0 && a.a22 == 1 && upper_unit_shape(b) &&
                   !(b == ident) && a.a12 * (b.a22 - 1) == 0;
        case BundleCase::III:
            return a.a11 == 1 && a.a21 == 0 && a.a22 == -1 && upper_unit_shape(b) &&
                   !(b == ident) && a.a12 * (b.a22 - 1) == -2 * b.a12;
        case BundleCase::IV:
            return a.a11 == -1 && a.a21 == 0 && a.a22 == -1 && upper_unit_shape(b) &&
                   !(b == ident) && a.a12 * (b.a22 - 1) == 0;
        case BundleCase::V:
            return a.a11 == -1 && a.a21 == 0 && a.a22 == 1 && upper_unit_shape(b) &&
                   !(b == ident) && a.a12 * (b.a22 - 1) == 2 * b.a12;
    }
    return false;
}

} // namespace detail

// Finds a fiber basis in which the pair (A, B) takes one of the five normal
// forms.  Cases are tried in order and the first basis change realizing a
// case wins, so the result is deterministic.
inline Classification classify(const BundleMapData& d) {
    Classification out;
    for (BundleCase which : {BundleCase::I, BundleCase::II, BundleCase::III, BundleCase::IV,
                             BundleCase::V}) {
        for (const IntMat2& p : detail::unimodular_pool()) {
            IntMat2 pinv = p.inverse_unimodular();
            IntMat2 a1 = p * d.A * pinv;
            IntMat2 b1 = p * d.B * pinv;
            if (!detail::matches_case(which, a1, b1)) continue;
            out.classified = true;
            out.label = which;
            out.P = p;
            out.A1 = a1;
            out.B1 = b1;
            Vec2 c = p.apply({d.c1, d.c2});
            out.c1 = c[0];
            out.c2 = c[1];
            return out;
        }
    }
    return out;
}

enum class MfStatus {
    Covered,         // a model computes the minimal circle count
    FiberDeformable, // the fiber map deforms to a fixed point free map; count 0
    FamilyNotListed, // classified, but no model family covers these parameters
    NotCoveredIVV,   // cases IV and V carry no computation here
    Unclassified,    // no bounded basis change reaches a normal form
};

struct MfResult {
    MfStatus status = MfStatus::Unclassified;
    std::optional<Int> mf; // minimal number of fixed circles over the homotopy class
    Classification cls;
    std::optional<ModelKind> route;
    Int route_c1 = 0, route_c2 = 0, route_b4 = 0;
    std::string message;
};

// Decides the minimal fixed circle count |c1 (b4 - 1) - c2 b3| for the
// covered normal forms and routes the parameters to the cellular model that
// certifies it.
inline MfResult mf_number(const BundleMapData& d) {
    MfResult out;
    out.cls = classify(d);
    if (!out.cls.classified) {
        out.status = MfStatus::Unclassified;
        out.message = "no basis change within the search bound reaches a normal form";
        return out;
    }
    switch (out.cls.label) {
        case BundleCase::I:
            out.status = MfStatus::FiberDeformable;
            out.mf = 0;
            out.message = "the fiber map deforms to a fixed point free map, so the "
                          "minimal fixed circle count is 0";
            return out;
        case BundleCase::IV:
        case BundleCase::V:
            out.status = MfStatus::NotCoveredIVV;
            out.message = "normal form " + to_string(out.cls.label) +
                          " is recognized but its minimal circle count is not computed here";
            return out;
        default:
            break;
    }

    const Int b3 = out.cls.B1.a12;
    const Int b4 = out.cls.B1.a22;
    const Int c1 = out.cls.c1;
    const Int c2 = out.cls.c2;
    out.mf = abs(c1 * (b4 - 1) - c2 * b3);

    auto divides = [](const Int& den, const Int& num) {
        if (den == 0) return num == 0;
        return num % den == 0;
    };
    if (divides(b4 - 1, b3)) {
        // Shear the fiber basis once more to clear b3; the winding picks up
        // the matching multiple of c2.
        Int n = b3 / (b4 - 1);
        out.status = MfStatus::Covered;
        out.route = ModelKind::Square;
        out.route_c1 = c1 - n * c2;
        out.route_c2 = c2;
        out.route_b4 = b4;
    } else if (b4 == -1) {
        // b3 is odd here; shear it down to 1.
        Int k = (b3 - 1) / 2;
        out.status = MfStatus::Covered;
        out.route = ModelKind::Triangulated;
        out.route_c1 = c1 + k * c2;
        out.route_c2 = c2;
        out.route_b4 = -1;
    } else {
        out.status = MfStatus::FamilyNotListed;
        out.message = "normal form " + to_string(out.cls.label) +
                      " with these fiber parameters lies outside the model families";
    }
    return out;
}

inline CellModel route_model(const MfResult& mf, ModelOptions options = {}) {
    if (!mf.route) throw std::logic_error("no model route for this classification");
    if (*mf.route == ModelKind::Square)
        return build_square_model(mf.route_c1, mf.route_c2, mf.route_b4, options);
    return build_triangulated_model(mf.route_c1, mf.route_c2, options);
}

} // namespace ntb

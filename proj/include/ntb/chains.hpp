#pragma once

#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"
#include "ntb/ring_elt.hpp"
#include "ntb/semiconjugacy.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ntb {

// Degree-one chains of the twisted complex: Z-linear combinations of g (x) m
// with g, m group elements.  The bimodule structure twists the right action
// by phi, which shows up in the differentials below.
class Chain1 {
public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, Int>;

    Chain1() = default;

    static Chain1 generator(Monomial g, Monomial m, Int c = 1) {
        Chain1 r;
        r.add(std::move(g), std::move(m), std::move(c));
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(Monomial g, Monomial m, const Int& c) {
        if (c == 0) return;
        Key k{std::move(g), std::move(m)};
        auto [it, fresh] = terms_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Bilinear extension of (sum a_x x) (x) (sum b_y y).
    void add_product(const RingElt& left, const RingElt& right, const Int& scale = 1) {
        if (scale == 0) return;
        for (const auto& [g, cg] : left.terms())
            for (const auto& [m, cm] : right.terms()) add(g, m, cg * cm * scale);
    }

    Chain1& operator+=(const Chain1& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    Chain1& operator-=(const Chain1& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
        return *this;
    }
    friend Chain1 operator+(Chain1 a, const Chain1& b) { return a += b; }
    friend Chain1 operator-(Chain1 a, const Chain1& b) { return a -= b; }
    friend Chain1 operator*(const Int& s, const Chain1& a) {
        Chain1 r;
        for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const Chain1& a, const Chain1& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            std::string pair = k.first.to_string() + " (x) " + k.second.to_string();
            if (mag != 1)
                out << mag << " (" << pair << ")";
            else
                out << pair;
        }
        return out.str();
    }

private:
    Terms terms_;
};

// Degree-two chains: combinations of g1 (x) g2 (x) m.
class Chain2 {
public:
    using Key = std::tuple<Monomial, Monomial, Monomial>;
    using Terms = std::map<Key, Int>;

    Chain2() = default;

    static Chain2 generator(Monomial g1, Monomial g2, Monomial m, Int c = 1) {
        Chain2 r;
        r.add(std::move(g1), std::move(g2), std::move(m), std::move(c));
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(Monomial g1, Monomial g2, Monomial m, const Int& c) {
        if (c == 0) return;
        Key k{std::move(g1), std::move(g2), std::move(m)};
        auto [it, fresh] = terms_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Chain2& operator+=(const Chain2& o) {
        for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
        return *this;
    }
    Chain2& operator-=(const Chain2& o) {
        for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
        return *this;
    }
    friend Chain2 operator+(Chain2 a, const Chain2& b) { return a += b; }
    friend Chain2 operator-(Chain2 a, const Chain2& b) { return a -= b; }
    friend bool operator==(const Chain2& a, const Chain2& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            std::string triple = std::get<0>(k).to_string() + " (x) " +
                                 std::get<1>(k).to_string() + " (x) " +
                                 std::get<2>(k).to_string();
            if (mag != 1)
                out << mag << " (" << triple << ")";
            else
                out << triple;
        }
        return out.str();
    }

private:
    Terms terms_;
};

// d1(r (x) m) = m phi(r) - r m, extended linearly.
inline RingElt d1(const Chain1& c, const Endo& phi) {
    RingElt r;
    for (const auto& [k, coeff] : c.terms()) {
        const auto& [g, m] = k;
        r.add(m * phi.apply(g), coeff);
        r.add(g * m, -coeff);
    }
    return r;
}

// d2(r1 (x) r2 (x) m) = r2 (x) m phi(r1) - r1 r2 (x) m + r1 (x) r2 m.
inline Chain1 d2(const Chain2& c, const Endo& phi) {
    Chain1 r;
    for (const auto& [k, coeff] : c.terms()) {
        const auto& [g1, g2, m] = k;
        r.add(g2, m * phi.apply(g1), coeff);
        r.add(g1 * g2, m, -coeff);
        r.add(g1, g2 * m, coeff);
    }
    return r;
}

inline bool is_cycle(const Chain1& c, const Endo& phi) { return d1(c, phi).is_zero(); }

// Marker of a generator g (x) m: the group element g m.  The differentials
// preserve the semiconjugacy class of the marker, so chains split.
inline Monomial marker(const Monomial& g, const Monomial& m) { return g * m; }

using ClassIndexMap = std::map<SemiClass, Int>;

inline std::map<SemiClass, Chain1> split_by_class(const Chain1& c, const Endo& phi) {
    std::map<SemiClass, Chain1> parts;
    for (const auto& [k, coeff] : c.terms()) {
        const auto& [g, m] = k;
        parts[SemiClass::of(marker(g, m), phi)].add(g, m, coeff);
    }
    return parts;
}

// Weighted exponent sum of the left tensor factors.  For a cycle under an
// endomorphism fixing u this lands in the kernel lattice of [phi] - I, and it
// vanishes on boundaries.
inline bool marker_exponent_sum_in_kernel(const Chain1& c, const Endo& phi) {
    Vec2 total{0, 0};
    for (const auto& [k, coeff] : c.terms()) {
        total[0] += coeff * k.first.exp_u;
        total[1] += coeff * k.first.exp_v;
    }
    IntMat2 m = endo_matrix_minus_identity(phi);
    Vec2 image = m.apply(total);
    return image[0] == 0 && image[1] == 0;
}

// Dense matrix over the group ring, used for boundary and homotopy data.
class RingMat {
public:
    RingMat() = default;
    RingMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElt& at(std::size_t r, std::size_t c) { return a_.at(r * cols_ + c); }
    const RingElt& at(std::size_t r, std::size_t c) const { return a_.at(r * cols_ + c); }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend RingMat operator*(const RingMat& x, const RingMat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
        RingMat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend RingMat operator-(const RingMat& x, const RingMat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        RingMat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend RingMat operator+(const RingMat& x, const RingMat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        RingMat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend bool operator==(const RingMat& x, const RingMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RingElt> a_;
};

inline RingMat apply_endo(const RingMat& m, const Endo& phi) {
    RingMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = apply_endo(m.at(i, j), phi);
    return r;
}

// Ordinary ring trace of a square product, sum_i (A B)_{ii}.
inline RingElt product_trace(const RingMat& a, const RingMat& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("trace dimension mismatch");
    RingElt t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a.at(i, k) * b.at(k, i);
    return t;
}

struct TensorTraceResult {
    Chain1 chain;
    // trace(A B) == trace(B phi(A)); equivalent to the chain being a cycle.
    bool cycle_criterion = false;
};

// trace(A (x) B) = sum_{i,k} A_{ik} (x) B_{ki}, extended bilinearly.
inline TensorTraceResult tensor_trace(const RingMat& a, const RingMat& b, const Endo& phi) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("tensor trace dimension mismatch");
    TensorTraceResult res;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            res.chain.add_product(a.at(i, k), b.at(k, i));
    res.cycle_criterion = product_trace(a, b) == product_trace(b, apply_endo(a, phi));
    return res;
}

} // namespace ntb

#pragma once

#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ntb {

// An element of the integral group ring: a finite Z-linear combination of
// monomials u^a v^b.  Terms with coefficient zero are never stored.
class RingElt {
public:
    using Terms = std::map<Monomial, Int>;

    RingElt() = default;
    RingElt(const Monomial& m) { add(m, 1); }
    RingElt(Int scalar) {
        if (scalar != 0) terms_[Monomial{}] = std::move(scalar);
    }

    static RingElt zero() { return {}; }
    static RingElt one() { return RingElt(Monomial{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RingElt& operator+=(const RingElt& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    RingElt& operator-=(const RingElt& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
    friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
    friend RingElt operator-(const RingElt& a) {
        RingElt r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend RingElt operator*(const RingElt& a, const RingElt& b) {
        RingElt r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
        return r;
    }

    friend RingElt operator*(const Int& s, const RingElt& a) {
        RingElt r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
        return r;
    }

    friend bool operator==(const RingElt& a, const RingElt& b) { return a.terms_ == b.terms_; }

    // Canonical form: terms in descending lexicographic order of (exp_u, exp_v),
    // so for example "2 - u^-1 v".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (mag != 1 || m.is_identity()) {
                out << mag;
                if (!m.is_identity()) out << ' ';
            }
            if (!m.is_identity()) out << m.to_string();
        }
        return out.str();
    }

    static RingElt parse(const std::string& text);

private:
    Terms terms_;
};

inline RingElt apply_endo(const RingElt& x, const Endo& phi) {
    RingElt r;
    for (const auto& [m, c] : x.terms()) r.add(phi.apply(m), c);
    return r;
}

namespace detail {

struct RingParser {
    const std::string& s;
    std::size_t i = 0;

    explicit RingParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw std::invalid_argument("expected integer in ring element at offset " +
                                                     std::to_string(start));
        return Int(s.substr(start, i - start));
    }

    // One term: optional coefficient, then optional u-factor and v-factor.
    void parse_term(RingElt& acc, int sign_in) {
        skip_ws();
        Int coeff = sign_in;
        bool saw_any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff *= parse_int();
            saw_any = true;
        }
        Monomial m;
        for (char name : {'u', 'v'}) {
            skip_ws();
            if (i < s.size() && s[i] == name) {
                ++i;
                Int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = parse_int();
                }
                (name == 'u' ? m.exp_u : m.exp_v) = e;
                saw_any = true;
            }
        }
        if (!saw_any) throw std::invalid_argument("empty term in ring element");
        acc.add(m, coeff);
    }

    RingElt run() {
        RingElt acc;
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("empty ring element");
        if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return acc;
        int sign = 1;
        if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (s[i] == '+') {
            ++i;
        }
        parse_term(acc, sign);
        while (!eof()) {
            char op = s[i];
            if (op != '+' && op != '-')
                throw std::invalid_argument("expected + or - in ring element at offset " +
                                            std::to_string(i));
            ++i;
            parse_term(acc, op == '-' ? -1 : 1);
        }
        return acc;
    }
};

} // namespace detail

inline RingElt RingElt::parse(const std::string& text) { return detail::RingParser(text).run(); }

// Branch selection for the negative-argument case of the Y helper sum.  The
// tabulated matrices use Printed; Shifted lowers every exponent in the
// negative branch by one, which is what the rederived cell geometry produces.
enum class YNegBranch { Printed, Shifted };

// Helper sums used throughout the tabulated matrices.
//
//   X(m) = sum_{j=1..m} u^{1-j}            for m > 0, 0 for m = 0,
//          sum_{j=1..-m} -u^j              for m < 0.
//   Y(m) = sum_{j=1..m} u^{2-j}            for m > 0, 0 for m = 0,
//          sum_{j=1..-m} -u^{j+2}          for m < 0 (Printed branch),
//          sum_{j=1..-m} -u^{j+1}          for m < 0 (Shifted branch).
//   W(m) = as X with v in place of u.
enum class HelperKind { X, Y, W };

inline RingElt helper_sum(HelperKind kind, const Int& m,
                          YNegBranch ybranch = YNegBranch::Printed) {
    RingElt r;
    const bool is_w = kind == HelperKind::W;
    auto mono = [&](Int e) { return is_w ? v_pow(std::move(e)) : u_pow(std::move(e)); };
    if (m > 0) {
        Int shift = kind == HelperKind::Y ? 2 : 1;
        for (Int j = 1; j <= m; ++j) r.add(mono(shift - j), 1);
    } else if (m < 0) {
        Int shift = 0;
        if (kind == HelperKind::Y) shift = ybranch == YNegBranch::Printed ? 2 : 1;
        for (Int j = 1; j <= -m; ++j) r.add(mono(j + shift), -1);
    }
    return r;
}

inline RingElt helper_x(const Int& m) { return helper_sum(HelperKind::X, m); }
inline RingElt helper_y(const Int& m, YNegBranch b = YNegBranch::Printed) {
    return helper_sum(HelperKind::Y, m, b);
}
inline RingElt helper_w(const Int& m) { return helper_sum(HelperKind::W, m); }

} // namespace ntb

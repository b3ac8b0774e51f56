#pragma once

#include "ntb/chains.hpp"
#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"
#include "ntb/semiconjugacy.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace ntb {

// Result of rewriting a one-class cycle into the normal form
// index * (u^-1 (x) u * rep), together with a boundary certificate:
//
//   input - index * (u^-1 (x) generator_m) = d2(certificate).
//
// The certificate is verified by substitution before returning.
struct ReduceResult {
    Int index = 0;
    SemiClass cls;
    Monomial generator_m; // u * rep, the right factor of the normal form
    Chain2 certificate;
};

namespace detail {

// Working key (k, l, m, n) for a term coeff * (u^k v^l (x) u^m v^n).
using TermKey = std::array<Int, 4>;
using TermMap = std::map<TermKey, Int>;

inline void put(TermMap& t, Int k, Int l, Int m, Int n, const Int& c) {
    if (c == 0) return;
    TermKey key{std::move(k), std::move(l), std::move(m), std::move(n)};
    auto [it, fresh] = t.emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

inline std::optional<TermKey> find_where(const TermMap& t, auto pred) {
    for (const auto& [k, c] : t)
        if (pred(k)) return k;
    return std::nullopt;
}

} // namespace detail

// Rewrites a cycle supported on a single semiconjugacy class into the normal
// form over the generating set {u^-1 (x) u^m v^n}, producing the class index
// and a degree-two certificate.  Requires an endomorphism that fixes u and
// moves v (so the kernel lattice is spanned by the u direction).
inline ReduceResult reduce_cycle(const Chain1& input, const Endo& phi,
                                 std::optional<SemiClass> expected_class = std::nullopt) {
    if (!fixes_u_moves_v(phi))
        throw std::domain_error("reduce_cycle: unsupported endomorphism shape (requires u fixed, v moved)");
    if (!is_cycle(input, phi)) throw std::invalid_argument("reduce_cycle: input is not a cycle");

    ReduceResult res;
    if (input.is_zero()) {
        if (!expected_class) {
            // An empty cycle carries no marker; normalize against the trivial class.
            res.cls = SemiClass::of(Monomial{}, phi);
        } else {
            res.cls = *expected_class;
        }
        res.generator_m = u_pow(1) * res.cls.rep;
        return res;
    }

    // All markers must lie in one class.
    const auto& first = input.terms().begin()->first;
    SemiClass cls = SemiClass::of(marker(first.first, first.second), phi);
    if (expected_class && !(cls == *expected_class))
        throw std::invalid_argument("reduce_cycle: chain lies in a different class than requested");
    for (const auto& [k, c] : input.terms())
        if (!cls.contains(marker(k.first, k.second)))
            throw std::invalid_argument("reduce_cycle: chain mixes semiconjugacy classes");

    detail::TermMap work;
    for (const auto& [k, c] : input.terms())
        detail::put(work, k.first.exp_u, k.first.exp_v, k.second.exp_u, k.second.exp_v, c);

    Chain2 cert;
    const Int& b3 = phi.b3;
    const Int& b4 = phi.b4;

    // Phase 1: remove negative v-exponents from the left factor.
    while (auto key = detail::find_where(work, [](const detail::TermKey& t) { return t[1] < 0; })) {
        auto [k, l, m, n] = *key;
        Int c = work.at(*key);
        work.erase(*key);
        cert.add({k, l}, {k, -l}, {m - k, n + l}, c);
        detail::put(work, 2 * k, 0, m - k, n + l, c);
        detail::put(work, k, -l, m + l * b3, n + l * (b4 + 1), -c);
    }

    // Phase 2: peel positive v-exponents one at a time; the terms split off
    // with left factor v are collected separately and must cancel to zero,
    // because their d1 image is (sum) * (phi(v) - v) in an integral domain.
    RingElt v_park;
    while (auto key = detail::find_where(work, [](const detail::TermKey& t) { return t[1] > 0; })) {
        auto [k, l, m, n] = *key;
        Int c = work.at(*key);
        work.erase(*key);
        cert.add(v_pow(1), {k, l - 1}, {m, n}, -c);
        detail::put(work, k, l - 1, m + b3, n + b4, c);
        v_park.add({k + m, n + l - 1}, c);
    }
    if (!v_park.is_zero())
        throw std::logic_error("reduce_cycle: v-generator residue did not cancel");

    // Phase 3: collapse the u-exponent of the left factor to -1.
    while (auto key = detail::find_where(work, [](const detail::TermKey& t) { return t[0] != -1; })) {
        auto [k, l, a, b] = *key;
        Int c = work.at(*key);
        work.erase(*key);
        if (k == 0) {
            cert.add(Monomial{}, Monomial{}, {a, b}, c);
        } else if (k == 1) {
            cert.add(u_pow(1), u_pow(-1), {a + 1, b}, c);
            cert.add(Monomial{}, Monomial{}, {a + 1, b}, c);
            detail::put(work, -1, 0, a + 2, b, -c);
        } else if (k >= 2) {
            cert.add(u_pow(k - 1), u_pow(1), {a, b}, -c);
            detail::put(work, 1, 0, a + k - 1, b, c);
            detail::put(work, k - 1, 0, a + 1, b, c);
        } else { // k <= -2
            cert.add(u_pow(k + 1), u_pow(-1), {a, b}, -c);
            detail::put(work, -1, 0, a + k + 1, b, c);
            detail::put(work, k + 1, 0, a - 1, b, c);
        }
    }

    // Phase 4: slide every marker to the canonical representative along the
    // direction (b3, b4 - 1), using the relation
    // u^-1 (x) x phi(v)  ~  u^-1 (x) v x.
    const Monomial target_m = u_pow(1) * cls.rep;
    auto shift_cert = [&](const Monomial& x, const Int& c) {
        // d2 of this pair equals u^-1 (x) x phi(v) - u^-1 (x) v x, scaled by c.
        Chain2 gamma;
        gamma.add(v_pow(1), u_pow(-1), x, c);
        gamma.add(u_pow(-1), v_pow(1), x, -c);
        return gamma;
    };
    detail::TermMap done;
    while (!work.empty()) {
        auto key = work.begin()->first;
        auto [k, l, m, n] = key;
        Int c = work.begin()->second;
        work.erase(work.begin());
        // Solve marker = target + q * (b3, b4 - 1).  The markers of the term
        // and of the target share the u^-1 left factor, so the difference can
        // be read off the right factors directly.
        Int dm = m - target_m.exp_u;
        Int dn = n - target_m.exp_v;
        Int q;
        if (b3 != 0) {
            if (dm % b3 != 0) throw std::logic_error("reduce_cycle: marker off the shift lattice");
            q = dm / b3;
            if (dn != q * (b4 - 1)) throw std::logic_error("reduce_cycle: inconsistent marker shift");
        } else {
            if (dm != 0) throw std::logic_error("reduce_cycle: marker off the shift lattice");
            q = dn / (b4 - 1);
            if (dn != q * (b4 - 1)) throw std::logic_error("reduce_cycle: inconsistent marker shift");
        }
        while (q > 0) {
            Monomial x{m - b3, n - b4};
            cert += shift_cert(x, c);
            m -= b3;
            n -= b4 - 1;
            --q;
        }
        while (q < 0) {
            Monomial x{m, n - 1};
            cert += shift_cert(x, -c);
            m += b3;
            n += b4 - 1;
            ++q;
        }
        detail::put(done, -1, 0, m, n, c);
    }

    Int index = 0;
    if (!done.empty()) {
        if (done.size() != 1) throw std::logic_error("reduce_cycle: normal form not unique");
        const auto& [k, c] = *done.begin();
        if (!(k[0] == -1 && k[1] == 0 && k[2] == target_m.exp_u && k[3] == target_m.exp_v))
            throw std::logic_error("reduce_cycle: normal form landed off target");
        index = c;
    }

    // Verify the certificate by substitution.
    Chain1 check = input;
    check.add(u_pow(-1), target_m, -index);
    if (!(d2(cert, phi) == check))
        throw std::logic_error("reduce_cycle: certificate failed verification");

    res.index = index;
    res.cls = cls;
    res.generator_m = target_m;
    res.certificate = cert;
    return res;
}

} // namespace ntb

#pragma once

/**
 * @file dioph.hpp
 * @brief Solvability of A n^x + B y = C n^z over x >= 0 and y, z in Z.
 *
 * For B not in {0, +-1} the equation reduces to a congruence between the
 * orbits A*N and C'*N modulo |B|, where N = {1, n, n^2, ...} mod |B| is
 * finite and C = C' n^s with n not dividing C'.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bsn/errors.hpp"
#include "bsn/nrational.hpp"

namespace bsn {

struct DiophInstance {
    mpz_class A;
    mpz_class B;
    mpz_class C;
    std::int64_t n;
};

struct DiophSolution {
    std::int64_t x;  // >= 0
    mpz_class y;
    std::int64_t z;

    friend bool operator==(const DiophSolution&, const DiophSolution&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const DiophSolution& s) {
    return os << "(x=" << s.x << ", y=" << s.y << ", z=" << s.z << ")";
}

struct NStripped {
    mpz_class core;  // not divisible by n
    std::int64_t s;  // v = core * n^s
};

inline NStripped strip_n(const mpz_class& v, std::int64_t n) {
    check_ring_parameter(n);
    if (v == 0)
        throw domain_error("strip_n: zero has no n-adic core");
    NStripped out{v, 0};
    const mpz_class base(static_cast<long>(n));
    while (divides(base, out.core)) {
        mpz_divexact(out.core.get_mpz_t(), out.core.get_mpz_t(), base.get_mpz_t());
        ++out.s;
    }
    return out;
}

/// Powers of n modulo |B|, iterated until the first repeat. residues[i] is
/// n^i mod |B| and i is the least exponent reaching that residue.
struct PowerResidues {
    mpz_class modulus;
    std::vector<mpz_class> residues;

    std::optional<std::int64_t> index_of(const mpz_class& r) const {
        for (std::size_t i = 0; i < residues.size(); ++i)
            if (residues[i] == r)
                return static_cast<std::int64_t>(i);
        return std::nullopt;
    }
};

inline mpz_class mod_abs(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline PowerResidues power_residues(std::int64_t n, const mpz_class& B) {
    check_ring_parameter(n);
    if (B == 0)
        throw domain_error("power_residues: modulus must be nonzero");
    PowerResidues out{abs(B), {}};
    const mpz_class step = mod_abs(mpz_class(static_cast<long>(n)), out.modulus);
    std::map<mpz_class, std::int64_t> seen;
    mpz_class cur = mod_abs(1, out.modulus);
    while (seen.emplace(cur, static_cast<std::int64_t>(out.residues.size())).second) {
        out.residues.push_back(cur);
        cur = mod_abs(cur * step, out.modulus);
    }
    return out;
}

/// Exact check of A n^x + B y = C n^z (z may be negative).
inline bool satisfies(const DiophInstance& inst, const DiophSolution& sol) {
    if (sol.x < 0)
        return false;
    mpz_class lhs = inst.A * ipow(inst.n, sol.x) + inst.B * sol.y;
    if (sol.z >= 0)
        return lhs == inst.C * ipow(inst.n, sol.z);
    return lhs * ipow(inst.n, -sol.z) == inst.C;
}

namespace detail {

inline DiophSolution verified(const DiophInstance& inst, DiophSolution sol) {
    if (!satisfies(inst, sol)) {
        std::ostringstream os;
        os << "dioph: produced solution " << sol << " fails exact verification";
        throw internal_error(os.str());
    }
    return sol;
}

/// Least x with A n^x = 0 mod |B|, for B not in {0, +-1}.
inline std::optional<std::int64_t> first_zero_multiple(const mpz_class& A, const PowerResidues& pr) {
    for (std::size_t i = 0; i < pr.residues.size(); ++i)
        if (mod_abs(A * pr.residues[i], pr.modulus) == 0)
            return static_cast<std::int64_t>(i);
    return std::nullopt;
}

} // namespace detail

inline std::optional<DiophSolution> solve(const DiophInstance& inst) {
    check_ring_parameter(inst.n);
    const auto n = inst.n;
    const auto& A = inst.A;
    const auto& B = inst.B;
    const auto& C = inst.C;

    // B = +-1: y absorbs everything.
    if (B == 1 || B == -1)
        return detail::verified(inst, {0, (C - A) / B, 0});

    if (C == 0) {
        if (B == 0) {
            if (A != 0)
                return std::nullopt;
            return detail::verified(inst, {0, 0, 0});
        }
        const auto pr = power_residues(n, B);
        const auto x = detail::first_zero_multiple(A, pr);
        if (!x)
            return std::nullopt;
        mpz_class y;
        mpz_class lhs = -A * ipow(n, *x);
        mpz_divexact(y.get_mpz_t(), lhs.get_mpz_t(), B.get_mpz_t());
        return detail::verified(inst, {*x, y, 0});
    }

    const auto c_strip = strip_n(C, n);

    if (B == 0) {
        if (A == 0)
            return std::nullopt;
        const auto a_strip = strip_n(A, n);
        if (a_strip.core != c_strip.core)
            return std::nullopt;
        return detail::verified(inst, {0, 0, a_strip.s - c_strip.s});
    }

    // A n^x = C' n^z' (mod |B|) with z' = z + s >= 0.
    const auto pr = power_residues(n, B);
    std::map<mpz_class, std::int64_t> c_orbit;
    for (std::size_t j = 0; j < pr.residues.size(); ++j)
        c_orbit.emplace(mod_abs(c_strip.core * pr.residues[j], pr.modulus), static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < pr.residues.size(); ++i) {
        const auto hit = c_orbit.find(mod_abs(A * pr.residues[i], pr.modulus));
        if (hit == c_orbit.end())
            continue;
        const auto x = static_cast<std::int64_t>(i);
        const auto zp = hit->second;
        mpz_class diff = c_strip.core * ipow(n, zp) - A * ipow(n, x);
        mpz_class y;
        mpz_divexact(y.get_mpz_t(), diff.get_mpz_t(), B.get_mpz_t());
        return detail::verified(inst, {x, y, zp - c_strip.s});
    }
    return std::nullopt;
}

} // namespace bsn

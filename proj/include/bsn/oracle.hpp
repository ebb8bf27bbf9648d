#pragma once

/**
 * @file oracle.hpp
 * @brief Bounded brute-force verifiers. They confirm YES answers and give
 * box-bounded evidence for NO answers; they never prove a NO.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "bsn/dioph.hpp"
#include "bsn/endo.hpp"
#include "bsn/errors.hpp"
#include "bsn/group.hpp"
#include "bsn/tcp.hpp"

namespace bsn {

/// Conjugator candidates a^{y/n^x} t^p with |y| <= max_num, 0 <= x <= max_exp,
/// |p| <= max_t.
struct SearchBox {
    std::int64_t max_num = 0;
    std::int64_t max_exp = 0;
    std::int64_t max_t = 0;

    void validate() const {
        if (max_num < 0 || max_exp < 0 || max_t < 0)
            throw domain_error("search box bounds must be non-negative");
    }
};

namespace detail {

/// 0, 1, -1, 2, -2, ..., bound, -bound.
inline std::vector<std::int64_t> signed_sweep(std::int64_t bound) {
    std::vector<std::int64_t> out{0};
    for (std::int64_t k = 1; k <= bound; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

} // namespace detail

/// First g in (x, |y|, |p|) order with (g psi)^-1 u g = v.
inline std::optional<GroupElement> brute_tcp(const TcpInstance& inst, const SearchBox& box) {
    box.validate();
    const auto n = inst.u.ring();
    const auto ys = detail::signed_sweep(box.max_num);
    const auto ps = detail::signed_sweep(box.max_t);
    for (std::int64_t x = 0; x <= box.max_exp; ++x) {
        for (const auto y : ys) {
            // y/n^x with n | y repeats a candidate from a smaller x
            if (x > 0 && y % n == 0)
                continue;
            const auto gamma = NRational::make(mpz_class(static_cast<long>(y)), x, n);
            for (const auto p : ps) {
                const GroupElement g{gamma, p};
                if (is_twisted_conjugator(inst, g))
                    return g;
            }
        }
    }
    return std::nullopt;
}

/// Scans x in [0, xmax] and z' in [0, zmax] where z = z' - s and C = C' n^s.
inline std::optional<DiophSolution> brute_dioph(const DiophInstance& inst, std::int64_t xmax,
                                                std::int64_t zmax) {
    check_ring_parameter(inst.n);
    if (xmax < 0 || zmax < 0)
        throw domain_error("brute_dioph: bounds must be non-negative");
    std::vector<mpz_class> powers{1};
    for (std::int64_t i = 1; i <= std::max(xmax, zmax); ++i)
        powers.push_back(powers.back() * inst.n);

    auto found = [&](DiophSolution sol) -> std::optional<DiophSolution> {
        if (!satisfies(inst, sol))
            throw internal_error("brute_dioph: candidate failed verification");
        return sol;
    };

    if (inst.C == 0) {
        for (std::int64_t x = 0; x <= xmax; ++x) {
            const mpz_class rhs = -inst.A * powers[x];
            if (inst.B == 0) {
                if (rhs == 0)
                    return found({x, 0, 0});
            } else if (divides(inst.B, rhs)) {
                return found({x, rhs / inst.B, 0});
            }
        }
        return std::nullopt;
    }

    const auto c_strip = strip_n(inst.C, inst.n);
    for (std::int64_t x = 0; x <= xmax; ++x) {
        for (std::int64_t zp = 0; zp <= zmax; ++zp) {
            const mpz_class rhs = c_strip.core * powers[zp] - inst.A * powers[x];
            if (inst.B == 0) {
                if (rhs == 0)
                    return found({x, 0, zp - c_strip.s});
            } else if (divides(inst.B, rhs)) {
                return found({x, rhs / inst.B, zp - c_strip.s});
            }
        }
    }
    return std::nullopt;
}

/// Product of generator-power matrices letter by letter; independent of normal forms.
/// a^e is [[1, e], [0, 1]] and t^e is [[n^e, 0], [0, 1]].
inline RatMatrix2 word_matrix(const Word& w, const GroupContext& ctx) {
    RatMatrix2 out = RatMatrix2::identity();
    for (const auto& l : w.letters) {
        if (l.gen == Generator::a) {
            out = out * RatMatrix2(1, mpq_class(mpz_class(static_cast<long>(l.exp))), 0, 1);
        } else {
            const mpz_class p = ipow(ctx.n(), l.exp > 0 ? l.exp : -l.exp);
            out = out * RatMatrix2(l.exp > 0 ? mpq_class(p) : mpq_class(mpz_class(1), p), 0, 0, 1);
        }
    }
    return out;
}

/// to_matrix(g h) == to_matrix(g) to_matrix(h).
inline bool matrix_check(const GroupElement& g, const GroupElement& h) {
    return to_matrix(mul(g, h)) == to_matrix(g) * to_matrix(h);
}

/// Equality decided through the faithful representation.
inline bool matrix_equal(const GroupElement& g, const GroupElement& h) {
    return to_matrix(g) == to_matrix(h);
}

} // namespace bsn

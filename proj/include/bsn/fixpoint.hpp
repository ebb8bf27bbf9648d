#pragma once

/**
 * @file fixpoint.hpp
 * @brief Fixed, outer fixed and weakly fixed points of type I endomorphisms,
 * decided through twisted conjugacy.
 *
 * For u and v with pi(v) = 1, psi is the type I endomorphism a -> u a u^-1,
 * t -> v, and phi_x is a -> a, t -> x with x = u^-1 v u. Then
 * g psi = u (g phi_x) u^-1 for every g.
 */

#include <optional>
#include <string>

#include "bsn/endo.hpp"
#include "bsn/errors.hpp"
#include "bsn/group.hpp"
#include "bsn/tcp.hpp"

namespace bsn {

/// a -> u a u^-1, t -> v. Since u a u^-1 = a^{n^pi(u)}, this is type I with
/// alpha = n^pi(u) and beta read off v = a^beta t.
inline Endo build_psi(const GroupElement& u, const GroupElement& v) {
    if (t_exponent(v) != 1)
        throw domain_error("build_psi: image of t must have t-exponent 1, got " +
                           std::to_string(t_exponent(v)));
    const auto n = u.ring();
    const GroupContext ctx(n);
    Endo psi = Endo::type_i(NRational::power_of_n(u.texp(), n), v.alpha());
    if (apply(psi, a_pow(1, ctx)) != mul(mul(u, a_pow(1, ctx)), inv(u)) ||
        apply(psi, t_pow(1, ctx)) != v)
        throw internal_error("build_psi: generator images do not match");
    return psi;
}

/// a -> a, t -> z.
inline Endo build_phi_z(const GroupElement& z) {
    if (t_exponent(z) != 1)
        throw domain_error("build_phi_z: z must have t-exponent 1, got " + std::to_string(t_exponent(z)));
    return Endo::type_i(NRational::integer(1, z.ring()), z.alpha());
}

/// a^{gamma + mu beta'} t^d for g = a^gamma t^d, where x = u^-1 v u = a^beta' t
/// and mu = geom(1, d). Equals g phi_x.
inline GroupElement construction_image(const GroupElement& u, const GroupElement& v,
                                       const GroupElement& g) {
    const auto x = mul(mul(inv(u), v), u);
    if (t_exponent(x) != 1)
        throw domain_error("construction_image: v must have t-exponent 1");
    const auto mu = geom(1, g.texp(), g.ring());
    return {g.alpha() + mu * x.alpha(), g.texp()};
}

struct FixClassResult {
    TcpResult tcp;                     // decision for u^-1 = (w phi_z)^-1 a^alpha w
    std::optional<GroupElement> fixed; // w^-1 a w when the decision is YES
};

/**
 * Decides whether u^-1 = (w phi_z)^-1 a^alpha w for some w (z = u^-1 v u),
 * and on success returns the fixed element w^-1 a w of psi in the
 * conjugacy class of a. Requires pi(u) = 0 and pi(v) = 1.
 */
inline FixClassResult fix_in_class_of_a(const GroupElement& u, const GroupElement& v,
                                        const NRational& alpha) {
    if (t_exponent(u) != 0)
        throw domain_error("fix_in_class_of_a: u must have t-exponent 0");
    if (t_exponent(v) != 1)
        throw domain_error("fix_in_class_of_a: v must have t-exponent 1");
    const GroupContext ctx(u.ring());
    const auto psi = build_psi(u, v);
    const auto z = mul(mul(inv(u), v), u);
    const auto phi_z = build_phi_z(z);

    FixClassResult out;
    out.tcp = decide_tcp({a_pow(alpha), inv(u), phi_z});
    if (!out.tcp.decision)
        return out;
    const auto& w = *out.tcp.witness;
    const auto fixed = conj(a_pow(1, ctx), w);
    if (!is_fixed(psi, fixed))
        throw internal_error("fix_in_class_of_a: " + to_string(fixed) + " is not fixed by " +
                             to_string(psi));
    out.fixed = fixed;
    return out;
}

/// g psi conjugate to g.
inline TcpResult is_outer_fixed(const Endo& e, const GroupElement& g) {
    return decide_conj(apply(e, g), g);
}

/// g psi conjugate to afix, where afix must be fixed by e.
inline TcpResult is_weakly_fixed(const Endo& e, const GroupElement& g, const GroupElement& afix) {
    if (!is_fixed(e, afix))
        throw domain_error("is_weakly_fixed: " + to_string(afix) + " is not a fixed point of " +
                           to_string(e));
    return decide_conj(apply(e, g), afix);
}

/// Raised when the hypothesis of the weakly-fixed-point identity holds but
/// u^-1 = (g1 phi_x)^-1 g' g1 fails for the computed conjugator g'.
class identity_falsified : public internal_error {
public:
    identity_falsified(const std::string& what, GroupElement conjugator, GroupElement expected)
        : internal_error(what), conjugator_(std::move(conjugator)), expected_(std::move(expected)) {}

    /// g' as returned by decide_conj.
    const GroupElement& conjugator() const noexcept { return conjugator_; }
    /// (g1 phi_x) u^-1 g1^-1, the only g' for which the identity can hold.
    const GroupElement& expected() const noexcept { return expected_; }

private:
    GroupElement conjugator_;
    GroupElement expected_;
};

/**
 * Checks (g1^-1 g2 g1) psi = g1^-1 afix g1 for psi = build_psi(u, v). When it
 * holds, computes g' with afix = g'^-1 (g2 phi_x) g' via decide_conj and
 * verifies u^-1 = (g1 phi_x)^-1 g' g1, returning g'. Returns nullopt when the
 * hypothesis fails; throws identity_falsified when the hypothesis holds and
 * the identity does not.
 */
inline std::optional<GroupElement> verify_prop48(const GroupElement& u, const GroupElement& v,
                                                 const GroupElement& afix, const GroupElement& g1,
                                                 const GroupElement& g2) {
    const auto psi = build_psi(u, v);
    if (!is_fixed(psi, afix))
        throw domain_error("verify_prop48: " + to_string(afix) + " is not fixed by " + to_string(psi));
    const auto x = mul(mul(inv(u), v), u);
    const auto phi_x = build_phi_z(x);

    if (apply(psi, conj(g2, g1)) != conj(afix, g1))
        return std::nullopt;

    const auto image = apply(phi_x, g2);
    const auto conj_res = decide_conj(image, afix);
    if (!conj_res.decision)
        throw internal_error("verify_prop48: hypothesis holds but " + to_string(image) +
                             " is not conjugate to " + to_string(afix));
    const auto& g_prime = *conj_res.witness;

    const auto g1_image = apply(phi_x, g1);
    if (mul(mul(inv(g1_image), g_prime), g1) != inv(u)) {
        auto expected = mul(mul(g1_image, inv(u)), inv(g1));
        throw identity_falsified("verify_prop48: u^-1 != (g1 phi_x)^-1 g' g1 with g' = " +
                                     to_string(g_prime) + " (identity needs g' = " +
                                     to_string(expected) + ")",
                                 g_prime, expected);
    }
    return g_prime;
}

} // namespace bsn

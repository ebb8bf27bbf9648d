#pragma once

/**
 * @file endo.hpp
 * @brief Endomorphisms of BS(1,n).
 *
 * Every endomorphism is one of
 *
 *     type I  (alpha, beta):  a -> a^alpha,  t -> a^beta t      (alpha != 0)
 *     type II (beta, c):      a -> 1,        t -> a^beta t^c
 *
 * Maps act on the right: apply(e, g) is "g e", and compose(e1, e2) applies
 * e1 first, then e2.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "bsn/errors.hpp"
#include "bsn/group.hpp"
#include "bsn/nrational.hpp"

namespace bsn {

struct TypeI {
    NRational alpha;
    NRational beta;
    friend bool operator==(const TypeI&, const TypeI&) = default;
};

struct TypeII {
    NRational beta;
    std::int64_t c;
    friend bool operator==(const TypeII&, const TypeII&) = default;
};

class Endo {
public:
    /// Type I; alpha = 0 is re-classified as type II with c = 1.
    static Endo type_i(NRational alpha, NRational beta) {
        if (alpha.ring() != beta.ring())
            throw domain_error("endomorphism parameters over different rings");
        if (alpha.is_zero())
            return Endo(TypeII{std::move(beta), 1});
        return Endo(TypeI{std::move(alpha), std::move(beta)});
    }

    static Endo type_ii(NRational beta, std::int64_t c) { return Endo(TypeII{std::move(beta), c}); }

    static Endo identity(const GroupContext& ctx) {
        return Endo(TypeI{NRational::integer(1, ctx.n()), NRational(ctx.n())});
    }

    bool is_type_i() const { return std::holds_alternative<TypeI>(v_); }
    bool is_type_ii() const { return std::holds_alternative<TypeII>(v_); }
    const TypeI& as_type_i() const { return std::get<TypeI>(v_); }
    const TypeII& as_type_ii() const { return std::get<TypeII>(v_); }
    const std::variant<TypeI, TypeII>& variant() const { return v_; }

    std::int64_t ring() const {
        return is_type_i() ? as_type_i().beta.ring() : as_type_ii().beta.ring();
    }

    /// The beta parameter, shared by both types (t -> a^beta t^c).
    const NRational& beta() const { return is_type_i() ? as_type_i().beta : as_type_ii().beta; }

    /// The t-exponent of the image of t.
    std::int64_t t_multiplier() const { return is_type_i() ? 1 : as_type_ii().c; }

    friend bool operator==(const Endo&, const Endo&) = default;

private:
    explicit Endo(std::variant<TypeI, TypeII> v) : v_(std::move(v)) {}
    std::variant<TypeI, TypeII> v_;
};

/// "I:alpha=<rat>,beta=<rat>" or "II:beta=<rat>,c=<int>".
inline std::string to_string(const Endo& e) {
    if (e.is_type_i())
        return "I:alpha=" + e.as_type_i().alpha.str() + ",beta=" + e.as_type_i().beta.str();
    return "II:beta=" + e.as_type_ii().beta.str() + ",c=" + std::to_string(e.as_type_ii().c);
}

inline std::ostream& operator<<(std::ostream& os, const Endo& e) { return os << to_string(e); }

/**
 * Image of a^nu t^d:
 *   type I:  a^{nu alpha + geom(1,d) beta} t^d
 *   type II: a^{geom(c,d) beta} t^{cd}
 */
inline GroupElement apply(const Endo& e, const GroupElement& g) {
    const auto n = g.ring();
    const auto d = g.texp();
    if (e.is_type_i()) {
        const auto& f = e.as_type_i();
        return {g.alpha() * f.alpha + geom(1, d, n) * f.beta, d};
    }
    const auto& f = e.as_type_ii();
    return {geom(f.c, d, n) * f.beta, f.c * d};
}

/// e1 first, then e2.
inline Endo compose(const Endo& e1, const Endo& e2) {
    const auto n = e1.ring();
    if (e1.is_type_i() && e2.is_type_i()) {
        const auto& f = e1.as_type_i();
        const auto& g = e2.as_type_i();
        return Endo::type_i(f.alpha * g.alpha, f.beta * g.alpha + g.beta);
    }
    if (e1.is_type_ii() && e2.is_type_ii()) {
        const auto& f = e1.as_type_ii();
        const auto& g = e2.as_type_ii();
        return Endo::type_ii(geom(g.c, f.c, n) * g.beta, f.c * g.c);
    }
    if (e1.is_type_ii()) {
        const auto& f = e1.as_type_ii();
        const auto& g = e2.as_type_i();
        return Endo::type_ii(f.beta * g.alpha + geom(1, f.c, n) * g.beta, f.c);
    }
    return e2;
}

/// gamma_g : x -> g^-1 x g. For g = a^mu t^c this is type I with
/// alpha = n^-c and beta = (n-1) mu n^-c.
inline Endo inner(const GroupElement& g) {
    const auto n = g.ring();
    const auto alpha = NRational::power_of_n(-g.texp(), n);
    return Endo::type_i(alpha, NRational::integer(static_cast<long>(n - 1), n) * g.alpha() * alpha);
}

inline bool is_fixed(const Endo& e, const GroupElement& g) { return apply(e, g) == g; }

struct ParsedEndo {
    Endo endo;
    /// Set when a type I spec with alpha = 0 was re-classified as type II.
    bool reclassified = false;
};

namespace detail {

inline std::string_view take_field(std::string_view& rest, std::string_view key, std::size_t& pos,
                                   std::size_t base) {
    if (rest.substr(0, key.size()) != key)
        throw parse_error("expected \"" + std::string(key) + "\"", base + pos);
    rest.remove_prefix(key.size());
    pos += key.size();
    const auto comma = rest.find(',');
    auto value = rest.substr(0, comma);
    if (comma == std::string_view::npos) {
        rest = {};
    } else {
        rest.remove_prefix(comma + 1);
    }
    return value;
}

} // namespace detail

/// "I:alpha=<rat>,beta=<rat>" | "II:beta=<rat>,c=<int>" | "id" | "inner:<word>".
inline ParsedEndo parse_endo_ex(std::string_view text, const GroupContext& ctx) {
    const auto n = ctx.n();
    if (text == "id")
        return {Endo::identity(ctx)};
    if (text.substr(0, 6) == "inner:") {
        try {
            return {inner(parse_element(text.substr(6), ctx))};
        } catch (const parse_error& e) {
            throw parse_error(std::string("in inner word: ") + e.what(), 6 + e.position());
        }
    }
    if (text.substr(0, 3) == "II:") {
        std::string_view rest = text.substr(3);
        std::size_t pos = 3;
        const auto beta_text = detail::take_field(rest, "beta=", pos, 0);
        const auto beta = NRational::parse(beta_text, n, pos);
        pos += beta_text.size() + 1;
        const auto c_text = detail::take_field(rest, "c=", pos, 0);
        if (!rest.empty())
            throw parse_error("trailing characters in endomorphism spec", pos + c_text.size());
        const auto c_value = NRational::parse(c_text, n, pos);
        if (!c_value.is_integer() || !c_value.num().fits_slong_p())
            throw parse_error("c must be a machine integer", pos);
        return {Endo::type_ii(beta, c_value.num().get_si())};
    }
    if (text.substr(0, 2) == "I:") {
        std::string_view rest = text.substr(2);
        std::size_t pos = 2;
        const auto alpha_text = detail::take_field(rest, "alpha=", pos, 0);
        const auto alpha = NRational::parse(alpha_text, n, pos);
        pos += alpha_text.size() + 1;
        const auto beta_text = detail::take_field(rest, "beta=", pos, 0);
        if (!rest.empty())
            throw parse_error("trailing characters in endomorphism spec", pos + beta_text.size());
        const auto beta = NRational::parse(beta_text, n, pos);
        return {Endo::type_i(alpha, beta), alpha.is_zero()};
    }
    throw parse_error("expected \"id\", \"inner:\", \"I:\" or \"II:\"", 0);
}

inline Endo parse_endo(std::string_view text, const GroupContext& ctx) {
    return parse_endo_ex(text, ctx).endo;
}

} // namespace bsn

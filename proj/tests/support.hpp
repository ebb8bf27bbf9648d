#pragma once

// Random generators and independent reference computations shared by the
// unit and acceptance suites.

#include <array>
#include <cstdint>
#include <random>

#include "bsn/bsn.hpp"

namespace bsn::testing {

inline constexpr std::array<std::int64_t, 6> kRings{-3, -2, 2, 3, 5, 10};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    template <typename Container>
    auto pick(const Container& c) {
        return c[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(c.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

inline NRational random_rat(Rng& rng, std::int64_t n, std::int64_t max_num = 20, std::int64_t max_exp = 3) {
    return NRational::make(mpz_class(static_cast<long>(rng.uniform(-max_num, max_num))),
                           rng.uniform(0, max_exp), n);
}

inline NRational random_nonzero_rat(Rng& rng, std::int64_t n, std::int64_t max_num = 20,
                                    std::int64_t max_exp = 3) {
    for (;;) {
        auto q = random_rat(rng, n, max_num, max_exp);
        if (!q.is_zero())
            return q;
    }
}

inline GroupElement random_element(Rng& rng, std::int64_t n, std::int64_t max_num = 20,
                                   std::int64_t max_exp = 3, std::int64_t max_t = 3) {
    return {random_rat(rng, n, max_num, max_exp), rng.uniform(-max_t, max_t)};
}

inline Word random_word(Rng& rng, std::size_t max_len = 8, std::int64_t max_exp = 3) {
    Word w;
    const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
        std::int64_t e = 0;
        while (e == 0)
            e = rng.uniform(-max_exp, max_exp);
        w.letters.push_back({rng.coin() ? Generator::a : Generator::t, e});
    }
    return w;
}

inline Endo random_type_i(Rng& rng, std::int64_t n, std::int64_t max_num = 6, std::int64_t max_exp = 2) {
    return Endo::type_i(random_nonzero_rat(rng, n, max_num, max_exp), random_rat(rng, n, max_num, max_exp));
}

inline Endo random_type_ii(Rng& rng, std::int64_t n, std::int64_t max_num = 6, std::int64_t max_exp = 2,
                           std::int64_t max_c = 2) {
    return Endo::type_ii(random_rat(rng, n, max_num, max_exp), rng.uniform(-max_c, max_c));
}

inline Endo random_endo(Rng& rng, std::int64_t n) {
    return rng.coin() ? random_type_i(rng, n) : random_type_ii(rng, n);
}

/// Image of a word under the endomorphism determined by the images of a and
/// t, computed letter by letter with group multiplication only.
inline GroupElement word_image(const Word& w, const GroupElement& image_a, const GroupElement& image_t,
                               const GroupContext& ctx) {
    GroupElement out = identity(ctx);
    for (const auto& l : w.letters) {
        const auto& base = l.gen == Generator::a ? image_a : image_t;
        const auto& step = l.exp > 0 ? base : inv(base);
        const auto count = l.exp > 0 ? l.exp : -l.exp;
        for (std::int64_t i = 0; i < count; ++i)
            out = mul(out, step);
    }
    return out;
}

/// Generator images of e, read off by applying it to a and t.
inline GroupElement image_of_a(const Endo& e) {
    const GroupContext ctx(e.ring());
    return apply(e, a_pow(1, ctx));
}

inline GroupElement image_of_t(const Endo& e) {
    const GroupContext ctx(e.ring());
    return apply(e, t_pow(1, ctx));
}

/// Literal geometric sum over Q for geom(c, r), r >= 0.
inline mpq_class geometric_sum(std::int64_t c, std::int64_t r, std::int64_t n) {
    mpq_class sum = 0;
    for (std::int64_t i = 0; i < r; ++i) {
        const std::int64_t e = i * c;
        mpq_class term = e >= 0 ? mpq_class(ipow(n, e)) : mpq_class(mpz_class(1), ipow(n, -e));
        term.canonicalize();
        sum += term;
    }
    return sum;
}

/// u = a^mu t^k, v = a^beta t, and a fixed point afix = a^eta t^d of
/// psi = I{n^k, beta}. beta = (1 - n^k) beta0 so that eta = geom(1, d) beta0
/// when n^k != 1, with d != 0; for k = 0 afix is a^eta.
struct FixedPointSetup {
    GroupElement u;
    GroupElement v;
    GroupElement afix;
};

inline FixedPointSetup random_fixed_point_setup(Rng& rng, std::int64_t n) {
    const auto k = rng.uniform(-1, 1);
    const auto mu = random_rat(rng, n, 6, 2);
    const auto beta0 = random_rat(rng, n, 6, 2);
    if (k == 0) {
        const auto beta = random_rat(rng, n, 6, 2);
        return {{mu, 0}, {beta, 1}, {random_nonzero_rat(rng, n, 6, 2), 0}};
    }
    const auto one = NRational::integer(1, n);
    const auto beta = (one - NRational::power_of_n(k, n)) * beta0;
    const auto d = rng.coin() ? rng.uniform(1, 2) : rng.uniform(-2, -1);
    return {{mu, k}, {beta, 1}, {geom(1, d, n) * beta0, d}};
}

/// g2 = (K afix K^-1) phi_x^-1 with K = (g1 phi_x) u^-1 g1^-1, so that
/// (g1^-1 g2 g1) psi = g1^-1 afix g1.
inline GroupElement prop48_g2(const FixedPointSetup& s, const GroupElement& g1) {
    const auto x = mul(mul(inv(s.u), s.v), s.u);
    const auto phi_x = build_phi_z(x);
    const auto phi_inv = Endo::type_i(NRational::integer(1, x.ring()), -x.alpha());
    const auto k = mul(mul(apply(phi_x, g1), inv(s.u)), inv(g1));
    return apply(phi_inv, mul(mul(k, s.afix), inv(k)));
}

} // namespace bsn::testing

#include <gtest/gtest.h>

#include "bsn/endo.hpp"
#include "support.hpp"

using namespace bsn;
using bsn::testing::Rng;

namespace {

NRational q(long k, std::int64_t p, std::int64_t n) { return NRational::make(mpz_class(k), p, n); }
GroupElement el(std::string_view w, std::int64_t n) { return parse_element(w, GroupContext(n)); }

/// Image of g computed letter by letter from the generator images of e.
GroupElement letterwise(const Endo& e, const GroupElement& g) {
    const GroupContext ctx(g.ring());
    return bsn::testing::word_image(to_word(g), bsn::testing::image_of_a(e), bsn::testing::image_of_t(e), ctx);
}

} // namespace

TEST(EndoParse, Forms) {
    const GroupContext ctx(2);
    EXPECT_EQ(parse_endo("id", ctx), Endo::type_i(q(1, 0, 2), q(0, 0, 2)));
    EXPECT_EQ(parse_endo("II:beta=1,c=2", ctx), Endo::type_ii(q(1, 0, 2), 2));
    EXPECT_EQ(parse_endo("I:alpha=1/n^1,beta=0", ctx), Endo::type_i(q(1, 1, 2), q(0, 0, 2)));
    EXPECT_EQ(parse_endo("inner:t", ctx), inner(t_pow(1, ctx)));
    EXPECT_EQ(parse_endo("II:beta=-3/n^2,c=-1", ctx), Endo::type_ii(q(-3, 2, 2), -1));
}

TEST(EndoParse, ZeroAlphaReclassified) {
    const GroupContext ctx(3);
    const auto parsed = parse_endo_ex("I:alpha=0,beta=2", ctx);
    EXPECT_TRUE(parsed.reclassified);
    EXPECT_EQ(parsed.endo, Endo::type_ii(q(2, 0, 3), 1));
}

TEST(EndoParse, Malformed) {
    const GroupContext ctx(2);
    EXPECT_THROW(parse_endo("", ctx), parse_error);
    EXPECT_THROW(parse_endo("I:alpha=1", ctx), parse_error);
    EXPECT_THROW(parse_endo("II:beta=1,c=1/n^1", ctx), parse_error);
    EXPECT_THROW(parse_endo("II:c=1,beta=1", ctx), parse_error);
    EXPECT_THROW(parse_endo("I:alpha=1,beta=0,c=1", ctx), parse_error);
    EXPECT_THROW(parse_endo("inner:a^0", ctx), parse_error);
}

TEST(EndoParse, RenderRoundTrip) {
    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto e = bsn::testing::random_endo(rng, n);
        EXPECT_EQ(parse_endo(to_string(e), GroupContext(n)), e);
    }
}

// -----------------------------------------------------------------------------
// apply
// -----------------------------------------------------------------------------

TEST(Apply, Examples) {
    const auto half = Endo::type_i(q(1, 1, 2), q(0, 0, 2));
    EXPECT_EQ(apply(half, el("a^2 t", 2)), el("a t", 2));
    EXPECT_EQ(letterwise(half, el("a^2 t", 2)), el("a t", 2));

    const auto kill = Endo::type_ii(q(7, 1, 3), -2);
    EXPECT_TRUE(apply(kill, a_pow(q(11, 2, 3))).is_identity());

    const auto sq = Endo::type_ii(q(1, 0, 2), 2);
    EXPECT_EQ(apply(sq, el("a^5 t", 2)), el("a t^2", 2));
    EXPECT_EQ(letterwise(sq, el("a^5 t", 2)), el("a t^2", 2));
}

TEST(Apply, MatchesLetterwiseImage) {
    Rng rng(32);
    for (int i = 0; i < 3000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto e = bsn::testing::random_endo(rng, n);
        const auto g = bsn::testing::random_element(rng, n, 6, 2, 3);
        ASSERT_EQ(apply(e, g), letterwise(e, g)) << to_string(e) << " on " << to_string(g);
    }
}

TEST(Apply, RelationPreserved) {
    Rng rng(33);
    for (int i = 0; i < 2000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const GroupContext ctx(n);
        const auto e = bsn::testing::random_endo(rng, n);
        const Word relator{{{Generator::t, -1}, {Generator::a, n}, {Generator::t, 1}}};
        // relator image computed from generator images, not from apply on its normal form
        ASSERT_EQ(bsn::testing::word_image(relator, bsn::testing::image_of_a(e), bsn::testing::image_of_t(e), ctx),
                  bsn::testing::image_of_a(e));
    }
}

TEST(Apply, Homomorphism) {
    Rng rng(34);
    for (int i = 0; i < 10000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto e = bsn::testing::random_endo(rng, n);
        const auto g = bsn::testing::random_element(rng, n);
        const auto h = bsn::testing::random_element(rng, n);
        ASSERT_EQ(apply(e, mul(g, h)), mul(apply(e, g), apply(e, h)));
    }
}

TEST(Apply, TExponentBehaviour) {
    Rng rng(35);
    for (int i = 0; i < 1000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto g = bsn::testing::random_element(rng, n);
        const auto e1 = bsn::testing::random_type_i(rng, n);
        const auto e2 = bsn::testing::random_type_ii(rng, n);
        EXPECT_EQ(t_exponent(apply(e1, g)), t_exponent(g));
        EXPECT_EQ(t_exponent(apply(e2, g)), e2.as_type_ii().c * t_exponent(g));
    }
}

// -----------------------------------------------------------------------------
// compose
// -----------------------------------------------------------------------------

TEST(Compose, TypeIExample) {
    const auto e = compose(Endo::type_i(q(2, 0, 5), q(1, 0, 5)), Endo::type_i(q(3, 0, 5), q(0, 0, 5)));
    EXPECT_EQ(e, Endo::type_i(q(6, 0, 5), q(3, 0, 5)));
    const GroupContext ctx(5);
    // a -> a^2 -> a^6, t -> a t -> a^3 t
    EXPECT_EQ(apply(e, a_pow(1, ctx)), a_pow(6, ctx));
    EXPECT_EQ(apply(e, t_pow(1, ctx)), mul(a_pow(3, ctx), t_pow(1, ctx)));
}

TEST(Compose, Identity) {
    Rng rng(36);
    for (int i = 0; i < 200; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto id = Endo::identity(GroupContext(n));
        const auto e = bsn::testing::random_endo(rng, n);
        EXPECT_EQ(compose(id, e), e);
        EXPECT_EQ(compose(e, id), e);
    }
}

TEST(Compose, TypeIThenTypeII) {
    const auto e2 = Endo::type_ii(q(5, 1, 3), -2);
    EXPECT_EQ(compose(Endo::type_i(q(7, 2, 3), q(1, 0, 3)), e2), e2);
}

TEST(Compose, CoherentWithApplyAllPairings) {
    Rng rng(37);
    for (int i = 0; i < 4000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto e1 = (i & 1) ? bsn::testing::random_type_i(rng, n) : bsn::testing::random_type_ii(rng, n);
        const auto e2 = (i & 2) ? bsn::testing::random_type_i(rng, n) : bsn::testing::random_type_ii(rng, n);
        const auto g = bsn::testing::random_element(rng, n);
        const auto e = compose(e1, e2);
        ASSERT_EQ(apply(e, g), apply(e2, apply(e1, g)))
            << to_string(e1) << " ; " << to_string(e2) << " on " << to_string(g);
    }
}

TEST(Compose, ZeroAndNegativeC) {
    const std::int64_t n = 3;
    const GroupContext ctx(n);
    for (std::int64_t c1 : {-2, -1, 0, 1, 2})
        for (std::int64_t c2 : {-2, -1, 0, 1, 2}) {
            const auto e1 = Endo::type_ii(q(2, 1, n), c1);
            const auto e2 = Endo::type_ii(q(-1, 0, n), c2);
            const auto g = el("a^4 t^-3", n);
            EXPECT_EQ(apply(compose(e1, e2), g), apply(e2, apply(e1, g))) << c1 << " " << c2;
        }
}

// -----------------------------------------------------------------------------
// inner / is_fixed
// -----------------------------------------------------------------------------

TEST(Inner, Examples) {
    const GroupContext ctx(2);
    EXPECT_EQ(inner(identity(ctx)), Endo::identity(ctx));
    EXPECT_EQ(inner(t_pow(1, ctx)), Endo::type_i(q(1, 1, 2), q(0, 0, 2)));
    EXPECT_EQ(inner(a_pow(1, ctx)), Endo::type_i(q(1, 0, 2), q(1, 0, 2)));
    EXPECT_EQ(apply(inner(a_pow(1, ctx)), t_pow(1, ctx)), conj(t_pow(1, ctx), a_pow(1, ctx)));
}

TEST(Inner, IsConjugation) {
    Rng rng(38);
    for (int i = 0; i < 3000; ++i) {
        const auto n = rng.pick(bsn::testing::kRings);
        const auto g = bsn::testing::random_element(rng, n);
        const auto h = bsn::testing::random_element(rng, n);
        const auto k = bsn::testing::random_element(rng, n);
        ASSERT_EQ(apply(inner(g), h), conj(h, g));
        ASSERT_EQ(compose(inner(g), inner(k)), inner(mul(g, k)));
    }
}

TEST(IsFixed, Examples) {
    Rng rng(39);
    const GroupContext ctx(2);
    for (int i = 0; i < 50; ++i)
        EXPECT_TRUE(is_fixed(Endo::identity(ctx), bsn::testing::random_element(rng, 2)));
    EXPECT_TRUE(is_fixed(Endo::type_ii(q(3, 0, 2), 4), identity(ctx)));
    EXPECT_FALSE(is_fixed(Endo::type_i(q(1, 1, 2), q(0, 0, 2)), a_pow(1, ctx)));
}

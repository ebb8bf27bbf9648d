#pragma once

/**
 * @file group.hpp
 * @brief Words, normal forms and group operations in BS(1,n) = <a,t | a = t^-1 a^n t>.
 *
 * Every element has a unique normal form a^alpha t^c with alpha in Z[1/n]
 * and c in Z, where a^{k/n^p} abbreviates t^-p a^k t^p. Products follow
 *
 *     (a^x t^c)(a^y t^d) = a^{x + n^c y} t^{c+d}.
 */

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bsn/errors.hpp"
#include "bsn/nrational.hpp"

namespace bsn {

class GroupContext {
public:
    explicit GroupContext(std::int64_t n) : n_(n) { check_ring_parameter(n); }
    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

enum class Generator { a, t };

struct Letter {
    Generator gen;
    std::int64_t exp;  // nonzero

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Raw generator string, not normalized.
struct Word {
    std::vector<Letter> letters;

    friend bool operator==(const Word&, const Word&) = default;

    Word& operator+=(const Word& rhs) {
        letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
};

inline std::string to_string(const Word& w) {
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty())
            out += ' ';
        out += l.gen == Generator::a ? 'a' : 't';
        if (l.exp != 1)
            out += '^' + std::to_string(l.exp);
    }
    return out;
}

/// a^alpha t^texp.
class GroupElement {
public:
    GroupElement(NRational alpha, std::int64_t texp) : alpha_(std::move(alpha)), texp_(texp) {}

    const NRational& alpha() const noexcept { return alpha_; }
    std::int64_t texp() const noexcept { return texp_; }
    std::int64_t ring() const noexcept { return alpha_.ring(); }

    bool is_identity() const { return texp_ == 0 && alpha_.is_zero(); }

    friend bool operator==(const GroupElement& g, const GroupElement& h) {
        return g.texp_ == h.texp_ && g.alpha_ == h.alpha_;
    }
    friend bool operator!=(const GroupElement& g, const GroupElement& h) { return !(g == h); }

private:
    NRational alpha_;
    std::int64_t texp_;
};

inline GroupElement identity(const GroupContext& ctx) { return {NRational(ctx.n()), 0}; }
inline GroupElement a_pow(const NRational& alpha) { return {alpha, 0}; }
inline GroupElement a_pow(long k, const GroupContext& ctx) {
    return {NRational::integer(k, ctx.n()), 0};
}
inline GroupElement t_pow(std::int64_t c, const GroupContext& ctx) { return {NRational(ctx.n()), c}; }

/// pi(g): total t-exponent, a homomorphism onto Z.
inline std::int64_t t_exponent(const GroupElement& g) { return g.texp(); }

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
    return {g.alpha() + h.alpha().scale_pow(g.texp()), g.texp() + h.texp()};
}

inline GroupElement inv(const GroupElement& g) {
    return {-g.alpha().scale_pow(-g.texp()), -g.texp()};
}

/// (a^alpha t^c)^r = a^{geom(c,r) alpha} t^{rc}.
inline GroupElement pow(const GroupElement& g, std::int64_t r) {
    return {geom(g.texp(), r, g.ring()) * g.alpha(), r * g.texp()};
}

/// h^-1 g h.
inline GroupElement conj(const GroupElement& g, const GroupElement& h) {
    return mul(mul(inv(h), g), h);
}

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return mul(g, h); }

/// Left-to-right fold of the product rule over the letters.
inline GroupElement normalize(const Word& w, const GroupContext& ctx) {
    NRational alpha(ctx.n());
    std::int64_t c = 0;
    for (const auto& l : w.letters) {
        if (l.gen == Generator::a)
            alpha += NRational::integer(static_cast<long>(l.exp), ctx.n()).scale_pow(c);
        else
            c += l.exp;
    }
    return {alpha, c};
}

/// A word spelling the normal form: t^-p a^k t^{p+c}.
inline Word to_word(const GroupElement& g) {
    Word w;
    const auto p = g.alpha().exp();
    if (!g.alpha().is_zero()) {
        if (!g.alpha().num().fits_slong_p())
            throw domain_error("to_word: numerator does not fit a machine exponent");
        if (p != 0)
            w.letters.push_back({Generator::t, -p});
        w.letters.push_back({Generator::a, g.alpha().num().get_si()});
        if (p + g.texp() != 0)
            w.letters.push_back({Generator::t, p + g.texp()});
    } else if (g.texp() != 0) {
        w.letters.push_back({Generator::t, g.texp()});
    }
    return w;
}

/// "a^{<rat>} t^{<int>}" with zero parts omitted, "1" for the identity.
inline std::string to_string(const GroupElement& g) {
    std::string out;
    if (!g.alpha().is_zero())
        out = "a^{" + g.alpha().str() + "}";
    if (g.texp() != 0) {
        if (!out.empty())
            out += ' ';
        out += "t^{" + std::to_string(g.texp()) + "}";
    }
    return out.empty() ? "1" : out;
}

inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << to_string(g); }

/**
 * Word grammar:
 *
 *     word := { term }       (whitespace between terms ignored)
 *     term := gen [ "^" exp ] | "1"
 *     gen  := "a" | "t"
 *     exp  := int | "{" rat "}"
 *
 * A braced rational is only meaningful for a; a^{k/n^p} expands to the
 * letters t^-p a^k t^p. Zero exponents are rejected. The braced form makes
 * normal-form renderings parseable as words.
 */
inline Word parse_word(std::string_view text, const GroupContext& ctx) {
    Word w;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) { throw parse_error(msg, pos); };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-')
            ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            fail("expected integer exponent");
        if (pos - digits > 18)
            fail("exponent out of range");
        return std::stoll(std::string(text.substr(start, pos - start)));
    };

    skip_ws();
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == '1') {
            ++pos;
            skip_ws();
            continue;
        }
        if (ch != 'a' && ch != 't')
            fail(std::string("unexpected character '") + ch + "'");
        const Generator gen = ch == 'a' ? Generator::a : Generator::t;
        ++pos;
        std::int64_t e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos < text.size() && text[pos] == '{') {
                const std::size_t open = ++pos;
                const auto close = text.find('}', open);
                if (close == std::string_view::npos)
                    fail("unterminated '{'");
                const auto body = text.substr(open, close - open);
                if (gen == Generator::a) {
                    NRational q = NRational::parse(body, ctx.n(), open);
                    if (q.is_zero())
                        fail("zero exponent");
                    if (!q.num().fits_slong_p())
                        fail("exponent out of range");
                    pos = close + 1;
                    if (q.exp() != 0)
                        w.letters.push_back({Generator::t, -q.exp()});
                    w.letters.push_back({Generator::a, q.num().get_si()});
                    if (q.exp() != 0)
                        w.letters.push_back({Generator::t, q.exp()});
                    skip_ws();
                    continue;
                }
                e = read_int();
                if (pos != close)
                    fail("expected '}'");
                pos = close + 1;
            } else {
                e = read_int();
            }
            if (e == 0)
                fail("zero exponent");
        }
        w.letters.push_back({gen, e});
        skip_ws();
    }
    return w;
}

/// Parse and normalize in one step.
inline GroupElement parse_element(std::string_view text, const GroupContext& ctx) {
    return normalize(parse_word(text, ctx), ctx);
}

/// 2x2 matrix over Q.
class RatMatrix2 {
public:
    RatMatrix2(mpq_class a00, mpq_class a01, mpq_class a10, mpq_class a11)
        : e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {
        for (auto& x : e_)
            x.canonicalize();
    }

    static RatMatrix2 identity() { return {1, 0, 0, 1}; }

    const mpq_class& operator()(int row, int col) const { return e_[row * 2 + col]; }

    mpq_class det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    friend RatMatrix2 operator*(const RatMatrix2& x, const RatMatrix2& y) {
        return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
                x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
    }

    RatMatrix2 inverse() const {
        const mpq_class d = det();
        if (d == 0)
            throw domain_error("singular matrix");
        return {e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d};
    }

    friend bool operator==(const RatMatrix2& x, const RatMatrix2& y) { return x.e_ == y.e_; }

    std::string str() const {
        return "[[" + e_[0].get_str() + "," + e_[1].get_str() + "],[" + e_[2].get_str() + "," +
               e_[3].get_str() + "]]";
    }

private:
    std::array<mpq_class, 4> e_;
};

inline mpq_class to_mpq(const NRational& q) {
    mpq_class out(q.num(), ipow(q.ring(), q.exp()));
    out.canonicalize();
    return out;
}

/// Faithful representation a -> [[1,1],[0,1]], t -> [[n,0],[0,1]];
/// a^alpha t^c maps to [[n^c, alpha],[0,1]].
inline RatMatrix2 to_matrix(const GroupElement& g) {
    return {to_mpq(NRational::power_of_n(g.texp(), g.ring())), to_mpq(g.alpha()), 0, 1};
}

} // namespace bsn

#pragma once

/**
 * @file nrational.hpp
 * @brief Exact arithmetic in the ring Z[1/n].
 *
 * An element is stored as k/n^p with p >= 0 and, whenever p > 0, n not
 * dividing k. This is the same shape as the exponent notation a^{k/n^p} used
 * for the normal-form calculus, so witnesses render readably. Every value
 * carries the ring parameter n; mixing parameters is rejected.
 */

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "bsn/errors.hpp"

namespace bsn {

inline void check_ring_parameter(std::int64_t n) {
    if (n >= -1 && n <= 1)
        throw domain_error("group parameter n must satisfy |n| >= 2, got " + std::to_string(n));
}

/// base^e for e >= 0.
inline mpz_class ipow(const mpz_class& base, std::int64_t e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

inline mpz_class ipow(std::int64_t base, std::int64_t e) {
    return ipow(mpz_class(static_cast<long>(base)), e);
}

inline bool divides(const mpz_class& d, const mpz_class& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

class NRational {
public:
    /// Zero of Z[1/n].
    explicit NRational(std::int64_t n) : ring_(n) { check_ring_parameter(n); }

    /// k / n^p in canonical form.
    static NRational make(mpz_class k, std::int64_t p, std::int64_t n) {
        if (p < 0)
            throw domain_error("denominator exponent must be non-negative");
        NRational out(n);
        out.num_ = std::move(k);
        out.exp_ = p;
        out.canonicalize();
        return out;
    }

    static NRational integer(const mpz_class& k, std::int64_t n) { return make(k, 0, n); }
    static NRational integer(long k, std::int64_t n) { return make(mpz_class(k), 0, n); }

    /// n^c for any integer c.
    static NRational power_of_n(std::int64_t c, std::int64_t n) {
        if (c >= 0)
            return make(ipow(n, c), 0, n);
        return make(mpz_class(1), -c, n);
    }

    const mpz_class& num() const noexcept { return num_; }
    std::int64_t exp() const noexcept { return exp_; }
    std::int64_t ring() const noexcept { return ring_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return sgn(num_); }

    /// value * n^e as an integer; requires e >= exp().
    mpz_class scaled_numerator(std::int64_t e) const {
        if (e < exp_)
            throw domain_error("scaled_numerator: exponent below the denominator exponent");
        return num_ * ipow(ring_, e - exp_);
    }

    /// Multiplication by n^c, c of either sign.
    NRational scale_pow(std::int64_t c) const {
        NRational out = *this;
        if (out.num_ == 0)
            return out;
        if (c >= 0) {
            if (out.exp_ >= c) {
                out.exp_ -= c;
            } else {
                out.num_ *= ipow(ring_, c - out.exp_);
                out.exp_ = 0;
            }
        } else {
            out.exp_ += -c;
        }
        out.canonicalize();
        return out;
    }

    NRational operator-() const {
        NRational out = *this;
        out.num_ = -out.num_;
        return out;
    }

    NRational& operator+=(const NRational& rhs) {
        same_ring(rhs);
        if (exp_ == rhs.exp_) {
            num_ += rhs.num_;
        } else if (exp_ > rhs.exp_) {
            num_ += rhs.num_ * ipow(ring_, exp_ - rhs.exp_);
        } else {
            num_ = num_ * ipow(ring_, rhs.exp_ - exp_) + rhs.num_;
            exp_ = rhs.exp_;
        }
        canonicalize();
        return *this;
    }

    NRational& operator-=(const NRational& rhs) { return *this += -rhs; }

    NRational& operator*=(const NRational& rhs) {
        same_ring(rhs);
        num_ *= rhs.num_;
        exp_ += rhs.exp_;
        canonicalize();
        return *this;
    }

    friend NRational operator+(NRational lhs, const NRational& rhs) { return lhs += rhs; }
    friend NRational operator-(NRational lhs, const NRational& rhs) { return lhs -= rhs; }
    friend NRational operator*(NRational lhs, const NRational& rhs) { return lhs *= rhs; }

    friend bool operator==(const NRational& lhs, const NRational& rhs) {
        return lhs.ring_ == rhs.ring_ && lhs.exp_ == rhs.exp_ && lhs.num_ == rhs.num_;
    }
    friend bool operator!=(const NRational& lhs, const NRational& rhs) { return !(lhs == rhs); }

    /// Canonical-form check; every public operation must preserve it.
    bool is_canonical() const {
        if (exp_ < 0)
            return false;
        if (num_ == 0)
            return exp_ == 0;
        return exp_ == 0 || !divides(mpz_class(static_cast<long>(ring_)), num_);
    }

    /// "k" or "k/n^p".
    std::string str() const {
        std::string out = num_.get_str();
        if (exp_ != 0)
            out += "/n^" + std::to_string(exp_);
        return out;
    }

    /// Inverse of str(): INT | INT "/" "n^" UINT.
    static NRational parse(std::string_view text, std::int64_t n, std::size_t offset = 0) {
        std::size_t pos = 0;
        auto fail = [&](const std::string& msg) { throw parse_error(msg, offset + pos); };

        auto read_digits = [&]() {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start)
                fail("expected digits");
            return std::string(text.substr(start, pos - start));
        };

        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        mpz_class k(read_digits());
        if (negative)
            k = -k;
        std::int64_t p = 0;
        if (pos < text.size()) {
            if (text.substr(pos, 3) != "/n^")
                fail("expected \"/n^\" in rational literal");
            pos += 3;
            std::string digits = read_digits();
            if (digits.size() > 18)
                fail("denominator exponent too large");
            p = std::stoll(digits);
        }
        if (pos != text.size())
            fail("trailing characters in rational literal");
        return make(std::move(k), p, n);
    }

private:
    void same_ring(const NRational& other) const {
        if (other.ring_ != ring_)
            throw domain_error("mixed ring parameters: n=" + std::to_string(ring_) +
                               " and n=" + std::to_string(other.ring_));
    }

    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        const mpz_class n(static_cast<long>(ring_));
        while (exp_ > 0 && divides(n, num_)) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), n.get_mpz_t());
            --exp_;
        }
    }

    mpz_class num_ = 0;
    std::int64_t exp_ = 0;
    std::int64_t ring_;
};

inline std::ostream& operator<<(std::ostream& os, const NRational& q) { return os << q.str(); }

/**
 * Generalized geometric coefficient (n^{rc} - 1) / (n^c - 1) in Z[1/n].
 *
 * At c = 0 the closed form is 0/0 and the value is r, which is what
 * (a^alpha)^r = a^{r alpha} requires. Negative r uses
 * geom(c, r) = -n^{rc} geom(c, -r).
 */
inline NRational geom(std::int64_t c, std::int64_t r, std::int64_t n) {
    check_ring_parameter(n);
    if (c == 0)
        return NRational::integer(static_cast<long>(r), n);
    if (r == 0)
        return NRational(n);
    if (r < 0)
        return -(NRational::power_of_n(r * c, n) * geom(c, -r, n));

    const std::int64_t step = c > 0 ? c : -c;
    mpz_class top = ipow(n, r * step) - 1;
    mpz_class bottom = ipow(n, step) - 1;
    mpz_class sum;
    mpz_divexact(sum.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    if (c > 0)
        return NRational::integer(sum, n);
    // sum_{i<r} n^{-i step} = sum_{i<r} n^{i step} / n^{(r-1) step}
    return NRational::make(std::move(sum), (r - 1) * step, n);
}

} // namespace bsn

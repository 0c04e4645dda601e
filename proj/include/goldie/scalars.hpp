#pragma once

/*
 * Exact scalar arithmetic: the coefficient fields everything else is
 * built over.  Two kinds are supported, chosen once per computation:
 *
 *   - the rationals Q, stored as reduced mpq with positive denominator;
 *   - a prime field F_p with p < 2^31, stored as a residue in [0, p).
 *
 * A FieldValue knows which field it belongs to, and mixing fields in
 * one operation is a hard error (FieldMismatch), never a coercion.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace goldie {

struct FieldMismatch : std::invalid_argument {
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string& what) : std::domain_error(what) {}
};

/** Field selector: modulus 0 means Q, a prime p < 2^31 means F_p. */
class FieldSpec {
public:
    FieldSpec() : p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }

    static FieldSpec prime(std::uint32_t p) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
        FieldSpec f;
        f.p_ = p;
        return f;
    }

    bool is_rational() const { return p_ == 0; }
    std::uint32_t modulus() const { return p_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string str() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

private:
    friend class FieldValue;
    static bool is_prime(std::uint32_t n) {
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

/** One exact scalar: a reduced rational, or a residue mod a prime. */
class FieldValue {
public:
    FieldValue() : p_(0), q_(0) {}

    FieldValue(const FieldSpec& f, long n) : p_(f.modulus()), q_(n) { reduce_(); }

    FieldValue(const FieldSpec& f, const mpq_class& q) : p_(f.modulus()), q_(q) {
        q_.canonicalize();
        reduce_();
    }

    static FieldValue zero(const FieldSpec& f) { return FieldValue(f, 0); }
    static FieldValue one(const FieldSpec& f) { return FieldValue(f, 1); }

    /** Rational n/d reinterpreted in the field (d inverted mod p if needed). */
    static FieldValue ratio(const FieldSpec& f, long n, long d) {
        if (d == 0) throw std::domain_error("FieldValue: zero denominator");
        return FieldValue(f, mpq_class(n, d));
    }

    FieldSpec field() const { return p_ == 0 ? FieldSpec::rationals() : prime_unchecked_(p_); }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return q_ < 0; }  // always false over F_p

    const mpq_class& rat() const { return q_; }

    FieldValue operator-() const { return with_(-q_); }

    FieldValue operator+(const FieldValue& o) const { return with_(q_ + check_(o).q_); }
    FieldValue operator-(const FieldValue& o) const { return with_(q_ - check_(o).q_); }
    FieldValue operator*(const FieldValue& o) const { return with_(q_ * check_(o).q_); }

    FieldValue operator/(const FieldValue& o) const {
        check_(o);
        if (o.is_zero()) throw NotAUnit("FieldValue: division by zero");
        if (p_ == 0) return with_(q_ / o.q_);
        return *this * o.inverse();
    }

    FieldValue inverse() const {
        if (is_zero()) throw NotAUnit("FieldValue: inverse of zero");
        if (p_ == 0) return with_(1 / q_);
        // residue: extended Euclid mod p
        mpz_class r;
        mpz_invert(r.get_mpz_t(), q_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
        FieldValue out = *this;
        out.q_ = mpq_class(r);
        return out;
    }

    bool operator==(const FieldValue& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const FieldValue& o) const { return !(*this == o); }
    bool operator<(const FieldValue& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return q_ < o.q_;
    }

    std::string str() const { return q_.get_str(); }

private:
    static FieldSpec prime_unchecked_(std::uint32_t p) {
        FieldSpec f;
        f.p_ = p;
        return f;
    }

    const FieldValue& check_(const FieldValue& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("FieldValue: operands live in different fields (" +
                                field().str() + " vs " + o.field().str() + ")");
        return o;
    }

    FieldValue with_(const mpq_class& q) const {
        FieldValue v;
        v.p_ = p_;
        v.q_ = q;
        v.q_.canonicalize();
        v.reduce_();
        return v;
    }

    void reduce_() {
        if (p_ == 0) return;
        mpz_class p(p_);
        mpz_class num = q_.get_num(), den = q_.get_den();
        num %= p;
        if (num < 0) num += p;
        if (den != 1) {
            mpz_class dinv;
            den %= p;
            if (den < 0) den += p;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("FieldValue: denominator not invertible mod " + std::to_string(p_));
            num = (num * dinv) % p;
        }
        q_ = mpq_class(num);
    }

    std::uint32_t p_;  // 0 = rationals
    mpq_class q_;      // reduced rational, or integer residue in [0,p)
};

} // namespace goldie

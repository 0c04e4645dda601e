#pragma once

/*
 * Exact univariate polynomial types over a FieldSpec:
 *
 *   Poly        f(t) = c0 + c1 t + ... , coefficients ascending, trailing
 *               zeros stripped, so the representation is canonical.
 *   LaurentPoly t^v * (c0 + c1 t + ...) with both end coefficients nonzero;
 *               supports negative exponents and exact unit inversion.
 *   XYQuotient  elements of k[x,y]/(xy): a constant plus a pure-x tail and
 *               a pure-y tail.  The defining relation xy = 0 is structural:
 *               cross terms are annihilated during multiplication, there is
 *               nothing to reduce after the fact.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace goldie {

class Poly {
public:
    explicit Poly(const FieldSpec& f = FieldSpec()) : field_(f) {}

    Poly(const FieldSpec& f, std::vector<FieldValue> coeffs) : field_(f), c_(std::move(coeffs)) {
        for (const auto& c : c_) check_field_(c);
        strip_();
    }

    static Poly constant(const FieldValue& c) {
        return Poly(c.field(), {c});
    }

    /** c * t^n */
    static Poly monomial(const FieldValue& c, std::size_t n) {
        std::vector<FieldValue> v(n + 1, FieldValue::zero(c.field()));
        v[n] = c;
        return Poly(c.field(), std::move(v));
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /** Degree of the zero polynomial is reported as -1. */
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    FieldValue coeff(std::size_t n) const {
        return n < c_.size() ? c_[n] : FieldValue::zero(field_);
    }

    FieldValue at_zero() const { return coeff(0); }

    Poly operator-() const {
        Poly r(field_);
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(-c);
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_field_(o);
        Poly r(field_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), FieldValue::zero(field_));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = coeff(i) + o.coeff(i);
        r.strip_();
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check_field_(o);
        if (is_zero() || o.is_zero()) return Poly(field_);
        Poly r(field_);
        r.c_.assign(c_.size() + o.c_.size() - 1, FieldValue::zero(field_));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        r.strip_();
        return r;
    }

    Poly operator*(const FieldValue& s) const {
        if (s.is_zero()) return Poly(field_);
        Poly r(field_);
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * s);
        return r;
    }

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /** Descending-power rendering, e.g. "2*t^3 + t - 1"; zero prints "0". */
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long n = degree(); n >= 0; --n)
            append_term(out, coeff(static_cast<std::size_t>(n)), n, var);
        return out;
    }

    static std::string term_str(const FieldValue& c, long n, const std::string& var) {
        std::string mono;
        if (n == 0) return c.str();
        if (n == 1) mono = var;
        else mono = var + "^" + std::to_string(n);
        if (c.is_one()) return mono;
        return c.str() + "*" + mono;
    }

    /** Appends "c*var^n" to a sum, folding the sign into the join. */
    static void append_term(std::string& out, const FieldValue& c, long n, const std::string& var) {
        if (c.is_zero()) return;
        const bool neg = c.is_negative();
        const std::string body = term_str(neg ? -c : c, n, var);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }

private:
    void check_field_(const FieldValue& c) const {
        if (c.field() != field_) throw FieldMismatch("Poly: coefficient from wrong field");
    }
    void check_field_(const Poly& o) const {
        if (o.field_ != field_) throw FieldMismatch("Poly: operands over different fields");
    }
    void strip_() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldSpec field_;
    std::vector<FieldValue> c_;
};

class LaurentPoly {
public:
    explicit LaurentPoly(const FieldSpec& f = FieldSpec()) : field_(f), val_(0) {}

    LaurentPoly(const FieldSpec& f, long valuation, std::vector<FieldValue> coeffs)
        : field_(f), val_(valuation), c_(std::move(coeffs)) {
        normalize_();
    }

    static LaurentPoly constant(const FieldValue& c) { return monomial(c, 0); }

    /** c * t^n, any n in Z. */
    static LaurentPoly monomial(const FieldValue& c, long n) {
        return LaurentPoly(c.field(), n, {c});
    }

    static LaurentPoly from_poly(const Poly& p) {
        std::vector<FieldValue> v;
        for (long i = 0; i <= p.degree(); ++i) v.push_back(p.coeff(static_cast<std::size_t>(i)));
        return LaurentPoly(p.field(), 0, std::move(v));
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /** Lowest exponent with nonzero coefficient (0 for the zero element). */
    long valuation() const { return is_zero() ? 0 : val_; }
    long top_degree() const { return is_zero() ? 0 : val_ + static_cast<long>(c_.size()) - 1; }

    FieldValue coeff(long n) const {
        if (is_zero() || n < val_ || n > top_degree()) return FieldValue::zero(field_);
        return c_[static_cast<std::size_t>(n - val_)];
    }

    /** True when the support lies in n >= 0, i.e. the value is a polynomial. */
    bool is_polynomial() const { return is_zero() || val_ >= 0; }

    Poly to_poly() const {
        if (!is_polynomial()) throw std::domain_error("LaurentPoly: negative exponents present");
        std::vector<FieldValue> v(static_cast<std::size_t>(top_degree() + 1), FieldValue::zero(field_));
        for (long n = valuation(); n <= top_degree(); ++n)
            v[static_cast<std::size_t>(n)] = coeff(n);
        return Poly(field_, std::move(v));
    }

    LaurentPoly operator-() const {
        LaurentPoly r(field_);
        r.val_ = val_;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(-c);
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_field_(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const long lo = std::min(val_, o.val_);
        const long hi = std::max(top_degree(), o.top_degree());
        std::vector<FieldValue> v;
        v.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (long n = lo; n <= hi; ++n) v.push_back(coeff(n) + o.coeff(n));
        return LaurentPoly(field_, lo, std::move(v));
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_field_(o);
        if (is_zero() || o.is_zero()) return LaurentPoly(field_);
        std::vector<FieldValue> v(c_.size() + o.c_.size() - 1, FieldValue::zero(field_));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return LaurentPoly(field_, val_ + o.val_, std::move(v));
    }

    LaurentPoly operator*(const FieldValue& s) const {
        if (s.is_zero()) return LaurentPoly(field_);
        LaurentPoly r(field_);
        r.val_ = val_;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * s);
        return r;
    }

    bool is_monomial() const { return c_.size() == 1; }

    bool operator==(const LaurentPoly& o) const {
        if (field_ != o.field_) return false;
        if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
        return val_ == o.val_ && c_ == o.c_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long n = top_degree(); n >= valuation(); --n)
            Poly::append_term(out, coeff(n), n, var);
        return out;
    }

private:
    void check_field_(const LaurentPoly& o) const {
        if (o.field_ != field_) throw FieldMismatch("LaurentPoly: operands over different fields");
    }
    void normalize_() {
        for (const auto& c : c_)
            if (c.field() != field_) throw FieldMismatch("LaurentPoly: coefficient from wrong field");
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) val_ = 0;
    }

    FieldSpec field_;
    long val_;
    std::vector<FieldValue> c_;  // c_[0] and c_.back() nonzero when nonempty
};

/**
 * Exact inverse of a unit of k[t,t^-1].  The units are precisely the
 * nonzero monomials c*t^n; anything else raises NotAUnit.
 */
inline LaurentPoly laurent_unit_invert(const LaurentPoly& u) {
    if (u.is_zero()) throw NotAUnit("laurent_unit_invert: zero is not a unit");
    if (!u.is_monomial())
        throw NotAUnit("laurent_unit_invert: " + u.str() + " is not a monomial");
    return LaurentPoly::monomial(u.coeff(u.valuation()).inverse(), -u.valuation());
}

/**
 * An element of k[x,y]/(xy): constant + sum a_i x^i + sum b_j y^j,
 * with x_coeffs[0] the coefficient of x^1 and likewise for y.
 */
class XYQuotient {
public:
    explicit XYQuotient(const FieldSpec& f = FieldSpec())
        : field_(f), constant_(FieldValue::zero(f)) {}

    XYQuotient(FieldValue constant, std::vector<FieldValue> x_coeffs, std::vector<FieldValue> y_coeffs)
        : field_(constant.field()), constant_(std::move(constant)),
          x_(std::move(x_coeffs)), y_(std::move(y_coeffs)) {
        strip_(x_);
        strip_(y_);
    }

    static XYQuotient scalar(const FieldValue& c) { return XYQuotient(c, {}, {}); }

    /** c * x^n (n >= 1). */
    static XYQuotient x_power(const FieldValue& c, std::size_t n) {
        std::vector<FieldValue> v(n, FieldValue::zero(c.field()));
        v[n - 1] = c;
        return XYQuotient(FieldValue::zero(c.field()), std::move(v), {});
    }

    /** c * y^n (n >= 1). */
    static XYQuotient y_power(const FieldValue& c, std::size_t n) {
        std::vector<FieldValue> v(n, FieldValue::zero(c.field()));
        v[n - 1] = c;
        return XYQuotient(FieldValue::zero(c.field()), {}, std::move(v));
    }

    const FieldSpec& field() const { return field_; }
    const FieldValue& constant() const { return constant_; }

    FieldValue x_coeff(std::size_t n) const {  // coefficient of x^n, n >= 1
        return (n >= 1 && n <= x_.size()) ? x_[n - 1] : FieldValue::zero(field_);
    }
    FieldValue y_coeff(std::size_t n) const {
        return (n >= 1 && n <= y_.size()) ? y_[n - 1] : FieldValue::zero(field_);
    }
    std::size_t x_degree() const { return x_.size(); }
    std::size_t y_degree() const { return y_.size(); }

    bool is_zero() const { return constant_.is_zero() && x_.empty() && y_.empty(); }

    XYQuotient operator+(const XYQuotient& o) const {
        check_field_(o);
        std::vector<FieldValue> xs(std::max(x_.size(), o.x_.size()), FieldValue::zero(field_));
        std::vector<FieldValue> ys(std::max(y_.size(), o.y_.size()), FieldValue::zero(field_));
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = x_coeff(i + 1) + o.x_coeff(i + 1);
        for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = y_coeff(i + 1) + o.y_coeff(i + 1);
        return XYQuotient(constant_ + o.constant_, std::move(xs), std::move(ys));
    }

    XYQuotient operator-() const {
        std::vector<FieldValue> xs, ys;
        for (const auto& c : x_) xs.push_back(-c);
        for (const auto& c : y_) ys.push_back(-c);
        return XYQuotient(-constant_, std::move(xs), std::move(ys));
    }

    XYQuotient operator-(const XYQuotient& o) const { return *this + (-o); }

    /*
     * (c1 + X1 + Y1)(c2 + X2 + Y2): the X1*Y2 and Y1*X2 cross terms die
     * because xy = yx = 0; pure-x and pure-y tails multiply by exponent
     * addition.
     */
    XYQuotient operator*(const XYQuotient& o) const {
        check_field_(o);
        std::vector<FieldValue> xs, ys;
        if (!x_.empty() || !o.x_.empty()) {
            xs.assign(x_.size() + o.x_.size(), FieldValue::zero(field_));
            for (std::size_t i = 1; i <= x_.size(); ++i) {
                if (x_coeff(i).is_zero()) continue;
                for (std::size_t j = 1; j <= o.x_.size(); ++j)
                    xs[i + j - 1] = xs[i + j - 1] + x_coeff(i) * o.x_coeff(j);
            }
            for (std::size_t i = 1; i <= x_.size(); ++i)
                xs[i - 1] = xs[i - 1] + x_coeff(i) * o.constant_;
            for (std::size_t j = 1; j <= o.x_.size(); ++j)
                xs[j - 1] = xs[j - 1] + constant_ * o.x_coeff(j);
        }
        if (!y_.empty() || !o.y_.empty()) {
            ys.assign(y_.size() + o.y_.size(), FieldValue::zero(field_));
            for (std::size_t i = 1; i <= y_.size(); ++i) {
                if (y_coeff(i).is_zero()) continue;
                for (std::size_t j = 1; j <= o.y_.size(); ++j)
                    ys[i + j - 1] = ys[i + j - 1] + y_coeff(i) * o.y_coeff(j);
            }
            for (std::size_t i = 1; i <= y_.size(); ++i)
                ys[i - 1] = ys[i - 1] + y_coeff(i) * o.constant_;
            for (std::size_t j = 1; j <= o.y_.size(); ++j)
                ys[j - 1] = ys[j - 1] + constant_ * o.y_coeff(j);
        }
        return XYQuotient(constant_ * o.constant_, std::move(xs), std::move(ys));
    }

    bool operator==(const XYQuotient& o) const {
        return field_ == o.field_ && constant_ == o.constant_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const XYQuotient& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t n = x_.size(); n >= 1; --n)
            Poly::append_term(out, x_coeff(n), static_cast<long>(n), "x");
        Poly::append_term(out, constant_, 0, "");
        for (std::size_t n = 1; n <= y_.size(); ++n)
            Poly::append_term(out, y_coeff(n), static_cast<long>(n), "y");
        return out;
    }

private:
    void check_field_(const XYQuotient& o) const {
        if (o.field_ != field_) throw FieldMismatch("XYQuotient: operands over different fields");
    }
    static void strip_(std::vector<FieldValue>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    }

    FieldSpec field_;
    FieldValue constant_;
    std::vector<FieldValue> x_, y_;  // x_[i] = coeff of x^{i+1}; no trailing zeros
};

} // namespace goldie

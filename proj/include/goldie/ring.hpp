#pragma once

/*
 * The graded rings under study, with exact arithmetic and grading
 * bookkeeping.
 *
 *   Nastasescu        k[x,y]/(xy) graded by an infinite-order h:
 *                     component at h^n is k*x^n (n>0), k*y^|n| (n<0), k (n=0).
 *   GradedPolyD       D = k[t] with deg t = h, h of infinite order.
 *   MatrixPoly        M_2(D)(g1,g2): entry (i,j) of the degree-sigma
 *                     component lives in D at g_i^-1 sigma g_j.
 *   MatrixLaurent     same shifts over k[t,t^-1].
 *   MatrixField       same shifts over k concentrated in degree e.
 *   Bazhenov          the subring of M_2(k[t])(e,s) over the infinite
 *                     dihedral group (deg t = r) cut out by the membership
 *                     predicate a(0)=d(0), b(0)=c(0).
 *   GroupAlgebra      k[G] for a finite G, one basis element per group
 *                     element.
 *   DirectSumLaurent  k[x,x^-1] (+) k[y,y^-1], degree-n component
 *                     k*x^n (+) k*y^-n; target of the Nastasescu embedding.
 *
 * Matrix elements are stored as plain matrices (the grading is derived,
 * never enforced on mixed sums), so multiplication is ordinary matrix
 * arithmetic and the degree law is a theorem checked by audits rather
 * than a representation constraint.
 */

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <goldie/group.hpp>
#include <goldie/poly.hpp>

namespace goldie {

struct InstanceMismatch : std::invalid_argument {
    explicit InstanceMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct NotHomogeneous : std::invalid_argument {
    explicit NotHomogeneous(const std::string& w) : std::invalid_argument(w) {}
};
struct UnreachableDegree : std::domain_error {
    explicit UnreachableDegree(const std::string& w) : std::domain_error(w) {}
};
struct ComponentViolation : std::invalid_argument {
    explicit ComponentViolation(const std::string& w) : std::invalid_argument(w) {}
};

enum class RingKind {
    Nastasescu,
    GradedPolyD,
    MatrixPoly,
    MatrixLaurent,
    MatrixField,
    Bazhenov,
    GroupAlgebra,
    DirectSumLaurent,
};

namespace detail {
struct RingData {
    RingKind kind;
    FieldSpec field;
    Group group = Group::integers();
    GroupElement h;                     // degree of the payload variable
    std::vector<GroupElement> shifts;   // matrix kinds only
    bool broken_grading = false;        // audit fixture: flawed degree formula

    bool is_matrix() const {
        return kind == RingKind::MatrixPoly || kind == RingKind::MatrixLaurent ||
               kind == RingKind::MatrixField || kind == RingKind::Bazhenov;
    }
};
} // namespace detail

class RingInstance {
public:
    static RingInstance nastasescu(const FieldSpec& f) {
        return nastasescu(f, Group::integers(), generator(Group::integers(), "g"));
    }
    static RingInstance nastasescu(const FieldSpec& f, const Group& G, const GroupElement& h) {
        require_infinite_(G, h, "nastasescu");
        return make_(RingKind::Nastasescu, f, G, h, {});
    }

    static RingInstance graded_poly(const FieldSpec& f) {
        return graded_poly(f, Group::integers(), generator(Group::integers(), "g"));
    }
    static RingInstance graded_poly(const FieldSpec& f, const Group& G, const GroupElement& h) {
        require_infinite_(G, h, "graded_poly");
        return make_(RingKind::GradedPolyD, f, G, h, {});
    }

    /** M_2(k[t])(e, shift) with deg t = h. */
    static RingInstance matrix_poly(const FieldSpec& f, const Group& G, const GroupElement& shift,
                                    const GroupElement& h) {
        return make_(RingKind::MatrixPoly, f, G, h, {identity(G), shift});
    }

    static RingInstance matrix_laurent(const FieldSpec& f, const Group& G, const GroupElement& shift,
                                       const GroupElement& h) {
        return make_(RingKind::MatrixLaurent, f, G, h, {identity(G), shift});
    }

    /** M_2(k)(e, shift): the base field sits in degree e. */
    static RingInstance matrix_field(const FieldSpec& f, const Group& G, const GroupElement& shift) {
        return make_(RingKind::MatrixField, f, G, identity(G), {identity(G), shift});
    }

    static RingInstance bazhenov(const FieldSpec& f) {
        const Group G = Group::infinite_dihedral();
        return make_(RingKind::Bazhenov, f, G, generator(G, "r"), {identity(G), generator(G, "s")});
    }

    static RingInstance group_algebra(const FieldSpec& f, const Group& G) {
        if (G.family() != Family::FiniteByTable && G.family() != Family::FiniteCyclic)
            throw InstanceMismatch("group_algebra: the group must be finite");
        return make_(RingKind::GroupAlgebra, f, G, identity(G), {});
    }

    static RingInstance direct_sum_laurent(const FieldSpec& f) {
        const Group G = Group::integers();
        return make_(RingKind::DirectSumLaurent, f, G, generator(G, "g"), {});
    }

    /** The standard counterexample over D-infinity: M_2(k[t])(e, s), deg t = r. */
    static RingInstance dihedral_counterexample(const FieldSpec& f) {
        const Group G = Group::infinite_dihedral();
        return matrix_poly(f, G, generator(G, "s"), generator(G, "r"));
    }

    /** The same construction over BS(1,2): M_2(k[t])(e, b), deg t = a. */
    static RingInstance bs_counterexample(const FieldSpec& f) {
        const Group G = Group::baumslag_solitar_12();
        return matrix_poly(f, G, generator(G, "b"), generator(G, "a"));
    }

    /**
     * Audit fixture: arithmetic of the dihedral counterexample, but degrees
     * computed as (g_i g_j^-1) h^m instead of g_i h^m g_j^-1.  The two agree
     * only where h^m commutes past the shifts, so the degree law fails and
     * grading_axiom_audit must catch it.
     */
    static RingInstance broken_grading_fixture(const FieldSpec& f) {
        RingInstance r = dihedral_counterexample(f);
        auto d = std::make_shared<detail::RingData>(*r.d_);
        d->broken_grading = true;
        r.d_ = std::move(d);
        return r;
    }

    RingKind kind() const { return d_->kind; }
    const FieldSpec& field() const { return d_->field; }
    const Group& group() const { return d_->group; }
    const GroupElement& payload_degree() const { return d_->h; }
    const std::vector<GroupElement>& shifts() const { return d_->shifts; }
    std::size_t dim() const { return d_->shifts.size(); }
    bool is_matrix() const { return d_->is_matrix(); }
    bool broken_grading() const { return d_->broken_grading; }

    bool same_as(const RingInstance& o) const {
        return d_->kind == o.d_->kind && d_->field == o.d_->field &&
               d_->group.same_as(o.d_->group) && d_->broken_grading == o.d_->broken_grading;
    }

    std::string describe() const;

private:
    static void require_infinite_(const Group& G, const GroupElement& h, const char* who) {
        if (!element_order(G, h).is_infinite())
            throw InstanceMismatch(std::string(who) + ": grading element must have infinite order");
    }
    static RingInstance make_(RingKind k, const FieldSpec& f, const Group& G, const GroupElement& h,
                              std::vector<GroupElement> shifts) {
        auto d = std::make_shared<detail::RingData>();
        d->kind = k;
        d->field = f;
        d->group = G;
        d->h = h;
        d->shifts = std::move(shifts);
        RingInstance r;
        r.d_ = std::move(d);
        return r;
    }
    RingInstance() = default;
    std::shared_ptr<const detail::RingData> d_;
};

inline std::string RingInstance::describe() const {
    switch (kind()) {
        case RingKind::Nastasescu: return "k[x,y]/(xy) graded by " + group().describe();
        case RingKind::GradedPolyD: return "k[t] graded by " + group().describe();
        case RingKind::MatrixPoly:
            return "M_2(k[t])(e, " + goldie::to_string(group(), shifts()[1]) + ") over " +
                   group().describe();
        case RingKind::MatrixLaurent:
            return "M_2(k[t,t^-1])(e, " + goldie::to_string(group(), shifts()[1]) + ") over " +
                   group().describe();
        case RingKind::MatrixField:
            return "M_2(k)(e, " + goldie::to_string(group(), shifts()[1]) + ") over " +
                   group().describe();
        case RingKind::Bazhenov: return "k<x,y,z> in M_2(k[t])(e, s) over D_inf";
        case RingKind::GroupAlgebra: return "k[" + group().describe() + "]";
        case RingKind::DirectSumLaurent: return "k[x,x^-1] (+) k[y,y^-1]";
    }
    return "?";
}

/* ------------------------------------------------------------------ */
/*  Elements                                                           */
/* ------------------------------------------------------------------ */

namespace detail {
struct MatData {
    std::size_t n = 0;
    std::vector<LaurentPoly> e;  // row-major
    LaurentPoly& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
    bool operator==(const MatData& o) const { return n == o.n && e == o.e; }
};
struct DSPair {
    LaurentPoly x, y;  // second summand keyed by y-exponent as stored
    bool operator==(const DSPair& o) const { return x == o.x && y == o.y; }
};
using ElementData = std::variant<std::map<long, FieldValue>,          // int-keyed terms
                                 MatData,                             // matrix kinds
                                 std::map<GroupElement, FieldValue>,  // group algebra
                                 DSPair>;
} // namespace detail

class GradedElement {
public:
    GradedElement() : kind_(RingKind::Nastasescu), v_(std::map<long, FieldValue>{}) {}
    GradedElement(RingKind k, detail::ElementData v) : kind_(k), v_(std::move(v)) {}

    RingKind kind() const { return kind_; }
    const std::map<long, FieldValue>& int_terms() const {
        return std::get<std::map<long, FieldValue>>(v_);
    }
    const detail::MatData& mat() const { return std::get<detail::MatData>(v_); }
    const std::map<GroupElement, FieldValue>& group_terms() const {
        return std::get<std::map<GroupElement, FieldValue>>(v_);
    }
    const detail::DSPair& pair() const { return std::get<detail::DSPair>(v_); }

    bool operator==(const GradedElement& o) const { return kind_ == o.kind_ && v_ == o.v_; }
    bool operator!=(const GradedElement& o) const { return !(*this == o); }

private:
    RingKind kind_;
    detail::ElementData v_;
};

/* ---------------------------- construction ------------------------ */

namespace detail {

inline void check_instance(const RingInstance& R, const GradedElement& a, const char* op) {
    const bool ok = [&] {
        switch (R.kind()) {
            case RingKind::Nastasescu:
            case RingKind::GradedPolyD: return a.kind() == R.kind();
            case RingKind::MatrixPoly:
            case RingKind::MatrixLaurent:
            case RingKind::MatrixField:
            case RingKind::Bazhenov:
                return a.kind() == R.kind() && a.mat().n == R.dim();
            case RingKind::GroupAlgebra:
            case RingKind::DirectSumLaurent: return a.kind() == R.kind();
        }
        return false;
    }();
    if (!ok)
        throw InstanceMismatch(std::string(op) + ": element does not belong to " + R.describe());
}

inline void strip_zero_terms(std::map<long, FieldValue>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
}
inline void strip_zero_terms(std::map<GroupElement, FieldValue>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

} // namespace detail

inline bool bazhenov_member(const detail::MatData& m) {
    return m.at(0, 0).coeff(0) == m.at(1, 1).coeff(0) && m.at(0, 1).coeff(0) == m.at(1, 0).coeff(0);
}

inline GradedElement ring_zero(const RingInstance& R) {
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD:
            return GradedElement(R.kind(), std::map<long, FieldValue>{});
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            detail::MatData m;
            m.n = R.dim();
            m.e.assign(m.n * m.n, LaurentPoly(R.field()));
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra:
            return GradedElement(R.kind(), std::map<GroupElement, FieldValue>{});
        case RingKind::DirectSumLaurent:
            return GradedElement(R.kind(), detail::DSPair{LaurentPoly(R.field()), LaurentPoly(R.field())});
    }
    throw std::logic_error("ring_zero: unknown kind");
}

/** Single term c at integer grading position n (Nastasescu / GradedPolyD). */
inline GradedElement int_term(const RingInstance& R, long n, const FieldValue& c) {
    if (R.kind() != RingKind::Nastasescu && R.kind() != RingKind::GradedPolyD)
        throw InstanceMismatch("int_term: instance is not integer-graded");
    if (R.kind() == RingKind::GradedPolyD && n < 0)
        throw ComponentViolation("int_term: k[t] has no negative-degree terms");
    if (c.field() != R.field()) throw FieldMismatch("int_term: coefficient from wrong field");
    std::map<long, FieldValue> m;
    if (!c.is_zero()) m.emplace(n, c);
    return GradedElement(R.kind(), std::move(m));
}

inline GradedElement make_matrix(const RingInstance& R, std::vector<std::vector<LaurentPoly>> rows) {
    if (!R.is_matrix()) throw InstanceMismatch("make_matrix: not a matrix instance");
    detail::MatData m;
    m.n = R.dim();
    if (rows.size() != m.n) throw ComponentViolation("make_matrix: wrong row count");
    for (auto& row : rows) {
        if (row.size() != m.n) throw ComponentViolation("make_matrix: wrong column count");
        for (auto& p : row) {
            if (R.kind() == RingKind::MatrixPoly || R.kind() == RingKind::Bazhenov) {
                if (!p.is_polynomial())
                    throw ComponentViolation("make_matrix: entry " + p.str() +
                                             " has negative valuation in a polynomial base");
            } else if (R.kind() == RingKind::MatrixField) {
                if (!p.is_zero() && (p.valuation() != 0 || p.top_degree() != 0))
                    throw ComponentViolation("make_matrix: entry " + p.str() +
                                             " is not a constant over a field base");
            }
            m.e.push_back(std::move(p));
        }
    }
    if (R.kind() == RingKind::Bazhenov && !bazhenov_member(m))
        throw ComponentViolation(
            "make_matrix: membership requires equal diagonal and equal antidiagonal constant terms");
    return GradedElement(R.kind(), std::move(m));
}

inline GradedElement matrix_unit(const RingInstance& R, std::size_t i, std::size_t j,
                                 const LaurentPoly& payload) {
    if (!R.is_matrix()) throw InstanceMismatch("matrix_unit: not a matrix instance");
    std::vector<std::vector<LaurentPoly>> rows(R.dim(),
                                               std::vector<LaurentPoly>(R.dim(), LaurentPoly(R.field())));
    rows.at(i).at(j) = payload;
    return make_matrix(R, std::move(rows));
}

inline GradedElement group_term(const RingInstance& R, const GroupElement& g, const FieldValue& c) {
    if (R.kind() != RingKind::GroupAlgebra) throw InstanceMismatch("group_term: not a group algebra");
    check_family(R.group(), g, "group_term");
    std::map<GroupElement, FieldValue> m;
    if (!c.is_zero()) m.emplace(g, c);
    return GradedElement(R.kind(), std::move(m));
}

inline GradedElement direct_sum_pair(const RingInstance& R, const LaurentPoly& fx,
                                     const LaurentPoly& gy) {
    if (R.kind() != RingKind::DirectSumLaurent)
        throw InstanceMismatch("direct_sum_pair: wrong instance");
    return GradedElement(R.kind(), detail::DSPair{fx, gy});
}

inline GradedElement ring_one(const RingInstance& R) {
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: return int_term(R, 0, FieldValue::one(R.field()));
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            detail::MatData m;
            m.n = R.dim();
            m.e.assign(m.n * m.n, LaurentPoly(R.field()));
            for (std::size_t i = 0; i < m.n; ++i)
                m.at(i, i) = LaurentPoly::constant(FieldValue::one(R.field()));
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra:
            return group_term(R, identity(R.group()), FieldValue::one(R.field()));
        case RingKind::DirectSumLaurent: {
            const LaurentPoly one = LaurentPoly::constant(FieldValue::one(R.field()));
            return GradedElement(R.kind(), detail::DSPair{one, one});
        }
    }
    throw std::logic_error("ring_one: unknown kind");
}

inline bool is_zero(const GradedElement& a) {
    switch (a.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: return a.int_terms().empty();
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            for (const auto& p : a.mat().e)
                if (!p.is_zero()) return false;
            return true;
        }
        case RingKind::GroupAlgebra: return a.group_terms().empty();
        case RingKind::DirectSumLaurent: return a.pair().x.is_zero() && a.pair().y.is_zero();
    }
    return true;
}

/* ---------------------------- arithmetic --------------------------- */

inline GradedElement ring_add(const RingInstance& R, const GradedElement& a, const GradedElement& b) {
    detail::check_instance(R, a, "ring_add");
    detail::check_instance(R, b, "ring_add");
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: {
            auto m = a.int_terms();
            for (const auto& [n, c] : b.int_terms()) {
                auto [it, fresh] = m.emplace(n, c);
                if (!fresh) it->second = it->second + c;
            }
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            detail::MatData m = a.mat();
            for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = m.e[i] + b.mat().e[i];
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra: {
            auto m = a.group_terms();
            for (const auto& [g, c] : b.group_terms()) {
                auto [it, fresh] = m.emplace(g, c);
                if (!fresh) it->second = it->second + c;
            }
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::DirectSumLaurent:
            return GradedElement(
                R.kind(), detail::DSPair{a.pair().x + b.pair().x, a.pair().y + b.pair().y});
    }
    throw std::logic_error("ring_add: unknown kind");
}

inline GradedElement ring_neg(const RingInstance& R, const GradedElement& a) {
    detail::check_instance(R, a, "ring_neg");
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: {
            auto m = a.int_terms();
            for (auto& [n, c] : m) c = -c;
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            detail::MatData m = a.mat();
            for (auto& p : m.e) p = -p;
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra: {
            auto m = a.group_terms();
            for (auto& [g, c] : m) c = -c;
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::DirectSumLaurent:
            return GradedElement(R.kind(), detail::DSPair{-a.pair().x, -a.pair().y});
    }
    throw std::logic_error("ring_neg: unknown kind");
}

inline GradedElement ring_sub(const RingInstance& R, const GradedElement& a, const GradedElement& b) {
    return ring_add(R, a, ring_neg(R, b));
}

inline GradedElement scalar_mul(const RingInstance& R, const FieldValue& c, const GradedElement& a) {
    detail::check_instance(R, a, "scalar_mul");
    if (c.field() != R.field()) throw FieldMismatch("scalar_mul: scalar from wrong field");
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: {
            auto m = a.int_terms();
            for (auto& [n, v] : m) v = v * c;
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            detail::MatData m = a.mat();
            for (auto& p : m.e) p = p * c;
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra: {
            auto m = a.group_terms();
            for (auto& [g, v] : m) v = v * c;
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::DirectSumLaurent:
            return GradedElement(R.kind(), detail::DSPair{a.pair().x * c, a.pair().y * c});
    }
    throw std::logic_error("scalar_mul: unknown kind");
}

inline GradedElement ring_mul(const RingInstance& R, const GradedElement& a, const GradedElement& b) {
    detail::check_instance(R, a, "ring_mul");
    detail::check_instance(R, b, "ring_mul");
    switch (R.kind()) {
        case RingKind::Nastasescu: {
            // x^i * y^j = 0: terms of strictly opposite sign annihilate
            std::map<long, FieldValue> m;
            for (const auto& [n1, c1] : a.int_terms())
                for (const auto& [n2, c2] : b.int_terms()) {
                    if ((n1 > 0 && n2 < 0) || (n1 < 0 && n2 > 0)) continue;
                    const long n = n1 + n2;
                    const FieldValue c = c1 * c2;
                    auto [it, fresh] = m.emplace(n, c);
                    if (!fresh) it->second = it->second + c;
                }
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GradedPolyD: {
            std::map<long, FieldValue> m;
            for (const auto& [n1, c1] : a.int_terms())
                for (const auto& [n2, c2] : b.int_terms()) {
                    const FieldValue c = c1 * c2;
                    auto [it, fresh] = m.emplace(n1 + n2, c);
                    if (!fresh) it->second = it->second + c;
                }
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            const std::size_t n = R.dim();
            detail::MatData m;
            m.n = n;
            m.e.assign(n * n, LaurentPoly(R.field()));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        m.at(i, j) = m.at(i, j) + a.mat().at(i, k) * b.mat().at(k, j);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::GroupAlgebra: {
            std::map<GroupElement, FieldValue> m;
            for (const auto& [g1, c1] : a.group_terms())
                for (const auto& [g2, c2] : b.group_terms()) {
                    const GroupElement g = multiply(R.group(), g1, g2);
                    const FieldValue c = c1 * c2;
                    auto [it, fresh] = m.emplace(g, c);
                    if (!fresh) it->second = it->second + c;
                }
            detail::strip_zero_terms(m);
            return GradedElement(R.kind(), std::move(m));
        }
        case RingKind::DirectSumLaurent:
            return GradedElement(
                R.kind(), detail::DSPair{a.pair().x * b.pair().x, a.pair().y * b.pair().y});
    }
    throw std::logic_error("ring_mul: unknown kind");
}

/* ---------------------------- grading ------------------------------ */

namespace detail {
/** Degree of the monomial t^m sitting at entry (i, j). */
inline GroupElement entry_degree(const RingInstance& R, std::size_t i, std::size_t j, long m) {
    const Group& G = R.group();
    const GroupElement hm = power(G, R.payload_degree(), m);
    if (R.broken_grading())
        return multiply(G, multiply(G, R.shifts()[i], inverse(G, R.shifts()[j])), hm);
    return multiply(G, multiply(G, R.shifts()[i], hm), inverse(G, R.shifts()[j]));
}
} // namespace detail

/** Splits a into homogeneous parts, keyed and ordered by degree. */
inline std::vector<std::pair<GroupElement, GradedElement>> decompose(const RingInstance& R,
                                                                     const GradedElement& a) {
    detail::check_instance(R, a, "decompose");
    std::map<GroupElement, GradedElement> parts;
    auto bump = [&](const GroupElement& deg, GradedElement piece) {
        auto it = parts.find(deg);
        if (it == parts.end())
            parts.emplace(deg, std::move(piece));
        else
            it->second = ring_add(R, it->second, piece);
    };
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: {
            for (const auto& [n, c] : a.int_terms())
                bump(power(R.group(), R.payload_degree(), n), int_term(R, n, c));
            break;
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            const std::size_t n = R.dim();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const LaurentPoly& p = a.mat().at(i, j);
                    if (p.is_zero()) continue;
                    for (long m = p.valuation(); m <= p.top_degree(); ++m) {
                        if (p.coeff(m).is_zero()) continue;
                        // piece construction bypasses the membership predicate:
                        // homogeneous parts of a member need not be members themselves
                        detail::MatData piece;
                        piece.n = n;
                        piece.e.assign(n * n, LaurentPoly(R.field()));
                        piece.at(i, j) = LaurentPoly::monomial(p.coeff(m), m);
                        bump(detail::entry_degree(R, i, j, m),
                             GradedElement(R.kind(), std::move(piece)));
                    }
                }
            break;
        }
        case RingKind::GroupAlgebra: {
            for (const auto& [g, c] : a.group_terms()) bump(g, group_term(R, g, c));
            break;
        }
        case RingKind::DirectSumLaurent: {
            const auto& p = a.pair();
            const LaurentPoly zero(R.field());
            if (!p.x.is_zero())
                for (long n = p.x.valuation(); n <= p.x.top_degree(); ++n)
                    if (!p.x.coeff(n).is_zero())
                        bump(power(R.group(), R.payload_degree(), n),
                             direct_sum_pair(R, LaurentPoly::monomial(p.x.coeff(n), n), zero));
            if (!p.y.is_zero())
                for (long n = p.y.valuation(); n <= p.y.top_degree(); ++n)
                    if (!p.y.coeff(n).is_zero())
                        bump(power(R.group(), R.payload_degree(), -n),
                             direct_sum_pair(R, zero, LaurentPoly::monomial(p.y.coeff(n), n)));
            break;
        }
    }
    return {parts.begin(), parts.end()};
}

/** Degree of a nonzero homogeneous element; nullopt when mixed or zero. */
inline std::optional<GroupElement> degree_of(const RingInstance& R, const GradedElement& a) {
    const auto parts = decompose(R, a);
    if (parts.size() != 1) return std::nullopt;
    return parts.front().first;
}

inline GroupElement require_homogeneous(const RingInstance& R, const GradedElement& a,
                                        const char* who) {
    if (is_zero(a)) throw NotHomogeneous(std::string(who) + ": zero has no degree");
    const auto deg = degree_of(R, a);
    if (!deg)
        throw NotHomogeneous(std::string(who) + ": element mixes several degrees");
    return *deg;
}

/** Degrees with nonzero component, scanning payload exponents |m| <= window. */
inline std::vector<GroupElement> support(const RingInstance& R, long window) {
    std::set<GroupElement> degs;
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::DirectSumLaurent:
            for (long n = -window; n <= window; ++n)
                degs.insert(power(R.group(), R.payload_degree(), n));
            break;
        case RingKind::GradedPolyD:
            for (long n = 0; n <= window; ++n)
                degs.insert(power(R.group(), R.payload_degree(), n));
            break;
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            const bool laurent = R.kind() == RingKind::MatrixLaurent;
            const long lo = laurent ? -window : 0;
            const long hi = R.kind() == RingKind::MatrixField ? 0 : window;
            for (std::size_t i = 0; i < R.dim(); ++i)
                for (std::size_t j = 0; j < R.dim(); ++j)
                    for (long m = lo; m <= hi; ++m) degs.insert(detail::entry_degree(R, i, j, m));
            break;
        }
        case RingKind::GroupAlgebra: {
            if (R.group().family() == Family::FiniteCyclic) {
                for (unsigned long i = 0; i < R.group().cyclic_order(); ++i)
                    degs.insert(GroupElement(Family::FiniteCyclic, i));
            } else {
                for (unsigned long i = 0; i < R.group().table().order; ++i)
                    degs.insert(GroupElement(Family::FiniteByTable, i));
            }
            break;
        }
    }
    return {degs.begin(), degs.end()};
}

/* ---------------------------- components --------------------------- */

struct ComponentPattern {
    std::size_t n = 0;
    std::vector<std::optional<long>> exponent;  // row-major; t-degree allowed at (i,j)

    const std::optional<long>& at(std::size_t i, std::size_t j) const { return exponent[i * n + j]; }
    std::size_t dimension() const {
        std::size_t d = 0;
        for (const auto& e : exponent) d += e.has_value() ? 1 : 0;
        return d;
    }
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < n; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ", ";
                const auto& e = at(i, j);
                if (!e)
                    out += "0";
                else if (*e == 0)
                    out += "k";
                else if (*e == 1)
                    out += "k*t";
                else
                    out += "k*t^" + std::to_string(*e);
            }
            out += "]";
        }
        return out + "]";
    }
};

/** Entry-wise picture of the degree-sigma component of a matrix instance. */
inline ComponentPattern component_pattern(const RingInstance& R, const GroupElement& sigma) {
    if (!R.is_matrix()) throw InstanceMismatch("component_pattern: not a matrix instance");
    check_family(R.group(), sigma, "component_pattern");
    const Group& G = R.group();
    ComponentPattern out;
    out.n = R.dim();
    out.exponent.assign(out.n * out.n, std::nullopt);
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.n; ++j) {
            // solve g_i h^m g_j^-1 = sigma for m (broken fixture: its own formula)
            const GroupElement target =
                R.broken_grading()
                    ? multiply(G, inverse(G, multiply(G, R.shifts()[i], inverse(G, R.shifts()[j]))),
                               sigma)
                    : multiply(G, multiply(G, inverse(G, R.shifts()[i]), sigma), R.shifts()[j]);
            const auto m = solve_power(G, R.payload_degree(), target);
            if (!m) continue;
            const long mm = static_cast<long>(m->get_si());
            if ((R.kind() == RingKind::MatrixPoly || R.kind() == RingKind::Bazhenov) && mm < 0)
                continue;
            if (R.kind() == RingKind::MatrixField && mm != 0) continue;
            out.exponent[i * out.n + j] = mm;
        }
    return out;
}

/** Basis of the degree-sigma component (membership-aware for the subring). */
inline std::vector<GradedElement> enumerate_homogeneous(const RingInstance& R,
                                                        const GroupElement& sigma) {
    const FieldValue one = FieldValue::one(R.field());
    switch (R.kind()) {
        case RingKind::Nastasescu:
        case RingKind::GradedPolyD: {
            const auto n = solve_power(R.group(), R.payload_degree(), sigma);
            if (!n || (R.kind() == RingKind::GradedPolyD && *n < 0))
                throw UnreachableDegree("component at " + goldie::to_string(R.group(), sigma) +
                                        " is zero");
            return {int_term(R, static_cast<long>(n->get_si()), one)};
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField: {
            const ComponentPattern pat = component_pattern(R, sigma);
            std::vector<GradedElement> basis;
            for (std::size_t i = 0; i < pat.n; ++i)
                for (std::size_t j = 0; j < pat.n; ++j)
                    if (pat.at(i, j))
                        basis.push_back(matrix_unit(R, i, j, LaurentPoly::monomial(one, *pat.at(i, j))));
            if (basis.empty())
                throw UnreachableDegree("component at " + goldie::to_string(R.group(), sigma) +
                                        " is zero");
            return basis;
        }
        case RingKind::Bazhenov: {
            const ComponentPattern pat = component_pattern(R, sigma);
            // the membership predicate ties the two constant-term slots together
            std::vector<GradedElement> basis;
            const bool diag_consts = pat.at(0, 0) && *pat.at(0, 0) == 0;
            const bool anti_consts = pat.at(0, 1) && *pat.at(0, 1) == 0;
            if (diag_consts) {
                // equal constants: the identity spans both diagonal slots at once
                basis.push_back(ring_one(R));
            } else {
                if (pat.at(0, 0))
                    basis.push_back(matrix_unit(R, 0, 0, LaurentPoly::monomial(one, *pat.at(0, 0))));
                if (pat.at(1, 1))
                    basis.push_back(matrix_unit(R, 1, 1, LaurentPoly::monomial(one, *pat.at(1, 1))));
            }
            if (anti_consts) {
                detail::MatData z;
                z.n = 2;
                z.e.assign(4, LaurentPoly(R.field()));
                z.at(0, 1) = LaurentPoly::constant(one);
                z.at(1, 0) = LaurentPoly::constant(one);
                basis.push_back(GradedElement(R.kind(), std::move(z)));
            } else {
                if (pat.at(0, 1))
                    basis.push_back(matrix_unit(R, 0, 1, LaurentPoly::monomial(one, *pat.at(0, 1))));
                if (pat.at(1, 0))
                    basis.push_back(matrix_unit(R, 1, 0, LaurentPoly::monomial(one, *pat.at(1, 0))));
            }
            if (basis.empty())
                throw UnreachableDegree("component at " + goldie::to_string(R.group(), sigma) +
                                        " is zero");
            return basis;
        }
        case RingKind::GroupAlgebra: {
            check_family(R.group(), sigma, "enumerate_homogeneous");
            return {group_term(R, sigma, one)};
        }
        case RingKind::DirectSumLaurent: {
            const auto n = solve_power(R.group(), R.payload_degree(), sigma);
            if (!n) throw UnreachableDegree("unreachable degree in the direct sum");
            const long nn = static_cast<long>(n->get_si());
            const LaurentPoly zero(R.field());
            return {direct_sum_pair(R, LaurentPoly::monomial(one, nn), zero),
                    direct_sum_pair(R, zero, LaurentPoly::monomial(one, -nn))};
        }
    }
    throw std::logic_error("enumerate_homogeneous: unknown kind");
}

/* ---------------------------- printing ----------------------------- */

inline std::string element_str(const RingInstance& R, const GradedElement& a) {
    detail::check_instance(R, a, "element_str");
    switch (R.kind()) {
        case RingKind::Nastasescu: {
            if (a.int_terms().empty()) return "0";
            std::string out;
            for (auto it = a.int_terms().rbegin(); it != a.int_terms().rend(); ++it) {
                const auto& [n, c] = *it;
                Poly::append_term(out, c, std::abs(n), n > 0 ? "x" : (n < 0 ? "y" : ""));
            }
            return out;
        }
        case RingKind::GradedPolyD: {
            if (a.int_terms().empty()) return "0";
            std::string out;
            for (auto it = a.int_terms().rbegin(); it != a.int_terms().rend(); ++it)
                Poly::append_term(out, it->second, it->first, "t");
            return out;
        }
        case RingKind::MatrixPoly:
        case RingKind::MatrixLaurent:
        case RingKind::MatrixField:
        case RingKind::Bazhenov: {
            std::string out = "[";
            for (std::size_t i = 0; i < R.dim(); ++i) {
                out += i ? ", [" : "[";
                for (std::size_t j = 0; j < R.dim(); ++j) {
                    if (j) out += ", ";
                    out += a.mat().at(i, j).str();
                }
                out += "]";
            }
            return out + "]";
        }
        case RingKind::GroupAlgebra: {
            if (a.group_terms().empty()) return "0";
            std::string out;
            for (const auto& [g, c] : a.group_terms()) {
                const std::string name = goldie::to_string(R.group(), g);
                const bool neg = c.is_negative();
                const FieldValue mag = neg ? -c : c;
                std::string body;
                if (is_identity(R.group(), g))
                    body = mag.str();
                else if (mag.is_one())
                    body = name;
                else
                    body = mag.str() + "*" + name;
                if (out.empty())
                    out = neg ? "-" + body : body;
                else
                    out += (neg ? " - " : " + ") + body;
            }
            return out;
        }
        case RingKind::DirectSumLaurent:
            return "(" + a.pair().x.str("x") + " | " + a.pair().y.str("y") + ")";
    }
    return "?";
}

/* ---------------------------- audits -------------------------------- */

struct GradingAuditReport {
    unsigned long samples = 0;
    unsigned long products_checked = 0;
    bool passed = false;
    std::string violation;  // first failure, with the witness pair
};

namespace detail {

inline FieldValue rand_coeff(const FieldSpec& f, std::mt19937_64& rng, long bound) {
    const std::uint64_t span = static_cast<std::uint64_t>(2 * bound) + 1;
    return FieldValue(f, static_cast<long>(rng() % span) - bound);
}

/** Random nonzero homogeneous element of the degree-sigma component. */
inline GradedElement rand_homogeneous(const RingInstance& R, const GroupElement& sigma,
                                      std::mt19937_64& rng, long coeff_bound) {
    const auto basis = enumerate_homogeneous(R, sigma);
    GradedElement out = ring_zero(R);
    for (const auto& b : basis)
        out = ring_add(R, out, scalar_mul(R, rand_coeff(R.field(), rng, coeff_bound), b));
    if (is_zero(out)) out = basis.front();  // keep samples nonzero
    return out;
}

} // namespace detail

/**
 * Samples pairs of random homogeneous elements and checks the grading law:
 * a product of degree-sigma and degree-tau elements is zero or lands
 * entirely in degree sigma*tau.
 */
inline GradingAuditReport grading_axiom_audit(const RingInstance& R, unsigned long samples,
                                              long degree_window, std::uint64_t seed = 0) {
    GradingAuditReport rep;
    rep.samples = samples;
    const std::vector<GroupElement> degs = support(R, degree_window);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (unsigned long it = 0; it < samples; ++it) {
        const GroupElement& sigma = degs[rng() % degs.size()];
        const GroupElement& tau = degs[rng() % degs.size()];
        GradedElement a, b;
        try {
            a = detail::rand_homogeneous(R, sigma, rng, 3);
            b = detail::rand_homogeneous(R, tau, rng, 3);
        } catch (const UnreachableDegree&) {
            continue;  // window listed a degree the component rules cannot reach
        }
        const GradedElement ab = ring_mul(R, a, b);
        ++rep.products_checked;
        if (is_zero(ab)) continue;
        const GroupElement want = multiply(R.group(), sigma, tau);
        for (const auto& [deg, part] : decompose(R, ab)) {
            if (deg == want) continue;
            rep.passed = false;
            rep.violation = "product of " + element_str(R, a) + " (degree " +
                            goldie::to_string(R.group(), sigma) + ") and " + element_str(R, b) +
                            " (degree " + goldie::to_string(R.group(), tau) +
                            ") has a part of degree " + goldie::to_string(R.group(), deg) +
                            ", expected " + goldie::to_string(R.group(), want);
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

struct BazhenovAuditReport {
    bool relations_hold = false;      // xy = yx = 0, z^2 = 1, xz = zy, yz = zx
    bool degrees_match = false;       // deg x = r, deg y = r^-1, deg z = s
    bool stated_relation_xz_yx = false;  // the alternative form xz = yx (see note)
    bool membership_closed = false;   // predicate survives + and * on samples
    std::string detail;
};

/**
 * Verifies the generator relations of the subring in its matrix model:
 * x = diag(t, 0), y = diag(0, t), z = antidiag(1, 1).  The relation list
 * is sometimes quoted as "xz = yx"; the matrix model forces xz = zy (and
 * yz = zx) instead, and the audit reports both readings.
 */
inline BazhenovAuditReport bazhenov_audit(const FieldSpec& f, unsigned long samples = 500,
                                          std::uint64_t seed = 0) {
    const RingInstance R = RingInstance::bazhenov(f);
    const FieldValue one = FieldValue::one(f);
    const LaurentPoly t = LaurentPoly::monomial(one, 1);
    const LaurentPoly zero(f);
    const GradedElement x = make_matrix(R, {{t, zero}, {zero, zero}});
    const GradedElement y = make_matrix(R, {{zero, zero}, {zero, t}});
    const GradedElement z = make_matrix(R, {{zero, LaurentPoly::constant(one)},
                                            {LaurentPoly::constant(one), zero}});
    BazhenovAuditReport rep;
    const Group& G = R.group();
    const GroupElement r = generator(G, "r"), s = generator(G, "s");

    rep.relations_hold = is_zero(ring_mul(R, x, y)) && is_zero(ring_mul(R, y, x)) &&
                         ring_mul(R, z, z) == ring_one(R) &&
                         ring_mul(R, x, z) == ring_mul(R, z, y) &&
                         ring_mul(R, y, z) == ring_mul(R, z, x);
    rep.stated_relation_xz_yx = ring_mul(R, x, z) == ring_mul(R, y, x);
    rep.degrees_match = degree_of(R, x) == std::optional<GroupElement>(r) &&
                        degree_of(R, y) == std::optional<GroupElement>(inverse(G, r)) &&
                        degree_of(R, z) == std::optional<GroupElement>(s);

    std::mt19937_64 rng(seed ^ 0xb5297a4d3f5c19e1ull);
    auto rand_member = [&]() {
        // random polynomial entries, then repair the two constant-term ties
        std::vector<std::vector<LaurentPoly>> rows(2, std::vector<LaurentPoly>(2, zero));
        for (auto& row : rows)
            for (auto& p : row)
                for (long d = 0; d <= 3; ++d)
                    p = p + LaurentPoly::monomial(detail::rand_coeff(f, rng, 3), d);
        rows[1][1] = rows[1][1] - LaurentPoly::constant(rows[1][1].coeff(0) - rows[0][0].coeff(0));
        rows[1][0] = rows[1][0] - LaurentPoly::constant(rows[1][0].coeff(0) - rows[0][1].coeff(0));
        return make_matrix(R, std::move(rows));
    };
    rep.membership_closed = true;
    for (unsigned long it = 0; it < samples && rep.membership_closed; ++it) {
        const GradedElement a = rand_member(), b = rand_member();
        rep.membership_closed = bazhenov_member(ring_add(R, a, b).mat()) &&
                                bazhenov_member(ring_mul(R, a, b).mat());
    }
    if (!rep.relations_hold) rep.detail = "matrix-model relations failed";
    else if (!rep.degrees_match) rep.detail = "generator degrees disagree with the grading";
    else if (!rep.membership_closed) rep.detail = "membership predicate not closed";
    return rep;
}

} // namespace goldie

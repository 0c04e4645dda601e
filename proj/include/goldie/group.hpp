#pragma once

/*
 * Grading groups with exact normal forms.
 *
 * Seven families are supported, each with a canonical (unique) element
 * representation, so equality is structural:
 *
 *   Integers            n in Z.
 *   FreeAbelian(r)      exponent vector in Z^r.
 *   FiniteCyclic(n)     index in [0, n).
 *   FiniteByTable       index into a verified multiplication table
 *                       (Latin square, identity at 0, associative,
 *                        order <= 64).  Built-ins: Z_2, S_3, D_4, Q_8, A_4.
 *   InfiniteDihedral    r^k s^f with k in Z, f in {0,1}; the relations
 *                       s^2 = e and s r = r^-1 s rewrite every word into
 *                       this form.
 *   DihedralProduct     the restricted product of the odd dihedral groups
 *                       D_(2i+1), i >= 1: finitely many exceptional
 *                       coordinates (amount mod 2i+1, flip bit) over an
 *                       eventually-constant pure-rotation tail.  An
 *                       exception is stored only when it differs from the
 *                       tail's value at that coordinate, so forms are
 *                       unique and flips occur only in exceptions.
 *   BaumslagSolitar12   <a,b | a b a^-1 = b^2> acting exactly on the
 *                       dyadic rationals: an element is the affine map
 *                       x -> 2^p x + q with p in Z and q dyadic.
 *   DirectProduct       ordered pairs, componentwise operations.
 *
 * Multiplication follows function composition: (g*h) applies h first.
 * For permutation tables this means table[i][j] = perm_i o perm_j.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace goldie {

struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string& w) : std::invalid_argument(w) {}
};
struct FamilyMismatch : std::invalid_argument {
    explicit FamilyMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct ExponentOnlyIntegral : std::invalid_argument {
    explicit ExponentOnlyIntegral(const std::string& w) : std::invalid_argument(w) {}
};
struct BadGroupTable : std::invalid_argument {
    explicit BadGroupTable(const std::string& w) : std::invalid_argument(w) {}
};

enum class Family {
    Integers,
    FreeAbelian,
    FiniteCyclic,
    FiniteByTable,
    InfiniteDihedral,
    DihedralProduct,
    BaumslagSolitar12,
    DirectProduct,
};

struct FiniteTable {
    std::string name;
    std::size_t order = 0;
    std::vector<std::vector<std::uint8_t>> table;   // table[i][j] = i * j
    std::vector<std::string> element_names;
    std::vector<std::pair<std::string, std::size_t>> generators;
};

class Group;

namespace detail {
struct GroupData {
    Family family;
    std::size_t rank = 0;          // FreeAbelian
    unsigned long cyclic_n = 0;    // FiniteCyclic
    std::shared_ptr<const FiniteTable> table;
    std::shared_ptr<const GroupData> left, right;  // DirectProduct

    std::string describe() const;
};
} // namespace detail

/** Immutable handle on a group description; cheap to copy. */
class Group {
public:
    static Group integers() { return make_(Family::Integers); }

    static Group free_abelian(std::size_t rank) {
        if (rank == 0) throw std::invalid_argument("free_abelian: rank must be positive");
        auto d = std::make_shared<detail::GroupData>();
        d->family = Family::FreeAbelian;
        d->rank = rank;
        return Group(std::move(d));
    }

    static Group cyclic(unsigned long n) {
        if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
        auto d = std::make_shared<detail::GroupData>();
        d->family = Family::FiniteCyclic;
        d->cyclic_n = n;
        return Group(std::move(d));
    }

    static Group from_table(FiniteTable t);  // validates; see below

    static Group infinite_dihedral() { return make_(Family::InfiniteDihedral); }
    static Group dihedral_product() { return make_(Family::DihedralProduct); }
    static Group baumslag_solitar_12() { return make_(Family::BaumslagSolitar12); }

    static Group direct_product(const Group& a, const Group& b) {
        auto d = std::make_shared<detail::GroupData>();
        d->family = Family::DirectProduct;
        d->left = a.d_;
        d->right = b.d_;
        return Group(std::move(d));
    }

    // Built-in finite tables.
    static Group z2();
    static Group s3();
    static Group d4();
    static Group q8();
    static Group a4();

    Family family() const { return d_->family; }
    std::size_t rank() const { return d_->rank; }
    unsigned long cyclic_order() const { return d_->cyclic_n; }
    const FiniteTable& table() const {
        if (!d_->table) throw std::logic_error("Group: not a table group");
        return *d_->table;
    }
    Group left() const { return Group(d_->left); }
    Group right() const { return Group(d_->right); }

    std::string describe() const { return d_->describe(); }

    bool same_as(const Group& o) const;

private:
    explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {
        if (!d_) throw std::logic_error("Group: empty descriptor");
    }
    static Group make_(Family f) {
        auto d = std::make_shared<detail::GroupData>();
        d->family = f;
        return Group(std::move(d));
    }
    std::shared_ptr<const detail::GroupData> d_;
};

/* ------------------------------------------------------------------ */
/*  Elements                                                           */
/* ------------------------------------------------------------------ */

class GroupElement;

namespace detail {

struct DinftyElt {
    mpz_class k;
    bool flip = false;
};

struct DihCoord {
    long amount = 0;  // reduced mod 2i+1 at coordinate i
    bool flip = false;
};

struct DProdElt {
    std::map<long, DihCoord> exceptions;  // coordinate i >= 1
    mpz_class tail;
};

struct BSElt {
    long p = 0;      // x -> 2^p x + q
    mpq_class q;     // dyadic: denominator a power of two
};

struct PairBox;  // holds the two components of a direct-product element

using EltData = std::variant<mpz_class,                 // Integers
                             std::vector<mpz_class>,    // FreeAbelian
                             unsigned long,             // FiniteCyclic / FiniteByTable index
                             DinftyElt,
                             DProdElt,
                             BSElt,
                             std::shared_ptr<const PairBox>>;
} // namespace detail

class GroupElement {
public:
    GroupElement() : fam_(Family::Integers), v_(mpz_class(0)) {}
    GroupElement(Family f, detail::EltData v) : fam_(f), v_(std::move(v)) {}

    Family family() const { return fam_; }
    const detail::EltData& data() const { return v_; }

    const mpz_class& as_int() const { return std::get<mpz_class>(v_); }
    const std::vector<mpz_class>& as_vec() const { return std::get<std::vector<mpz_class>>(v_); }
    unsigned long as_index() const { return std::get<unsigned long>(v_); }
    const detail::DinftyElt& as_dinfty() const { return std::get<detail::DinftyElt>(v_); }
    const detail::DProdElt& as_dprod() const { return std::get<detail::DProdElt>(v_); }
    const detail::BSElt& as_bs() const { return std::get<detail::BSElt>(v_); }
    const detail::PairBox& as_pair() const;

    bool operator==(const GroupElement& o) const { return cmp(o) == 0; }
    bool operator!=(const GroupElement& o) const { return cmp(o) != 0; }
    bool operator<(const GroupElement& o) const { return cmp(o) < 0; }

    int cmp(const GroupElement& o) const;

private:
    Family fam_;
    detail::EltData v_;
};

namespace detail {
struct PairBox {
    GroupElement first, second;
};
}

inline const detail::PairBox& GroupElement::as_pair() const {
    return *std::get<std::shared_ptr<const detail::PairBox>>(v_);
}

/* ------------------------------------------------------------------ */
/*  Element order results                                              */
/* ------------------------------------------------------------------ */

struct OrderResult {
    enum class Kind { Finite, Infinite, ExhaustedBound };
    Kind kind = Kind::ExhaustedBound;
    mpz_class order;         // when Finite
    std::string certificate; // structural reason when Infinite; empty = none
    unsigned long bound = 0; // when ExhaustedBound

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }

    static OrderResult finite(mpz_class n) {
        OrderResult r;
        r.kind = Kind::Finite;
        r.order = std::move(n);
        return r;
    }
    static OrderResult infinite(std::string why) {
        OrderResult r;
        r.kind = Kind::Infinite;
        r.certificate = std::move(why);
        return r;
    }
    static OrderResult exhausted(unsigned long bound) {
        OrderResult r;
        r.kind = Kind::ExhaustedBound;
        r.bound = bound;
        return r;
    }
};

/* ------------------------------------------------------------------ */
/*  Core operations                                                    */
/* ------------------------------------------------------------------ */

GroupElement identity(const Group& g);
bool is_identity(const Group& g, const GroupElement& a);
GroupElement multiply(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const Group& g, const GroupElement& a);
GroupElement power(const Group& g, const GroupElement& a, const mpz_class& n);
inline GroupElement power(const Group& g, const GroupElement& a, long n) {
    return power(g, a, mpz_class(n));
}
GroupElement conjugate(const Group& g, const GroupElement& x, const GroupElement& a);  // x a x^-1
OrderResult element_order(const Group& g, const GroupElement& a, unsigned long bound = 10000);
std::string to_string(const Group& g, const GroupElement& a);
GroupElement generator(const Group& g, const std::string& name);
std::vector<std::pair<std::string, GroupElement>> generators(const Group& g);
GroupElement normalize_word(const Group& g, const std::vector<std::pair<std::string, long>>& word);

/** Solve h^n = sigma structurally; nullopt when no exponent exists. */
std::optional<mpz_class> solve_power(const Group& g, const GroupElement& h, const GroupElement& sigma,
                                     unsigned long iteration_bound = 4096);

/** All elements of word length <= radius over the default generators. */
std::vector<GroupElement> word_ball(const Group& g, unsigned radius);

/* ================================================================== */
/*  Implementation                                                     */
/* ================================================================== */

namespace detail {

inline std::string GroupData::describe() const {
    switch (family) {
        case Family::Integers: return "Z";
        case Family::FreeAbelian: return "Z^" + std::to_string(rank);
        case Family::FiniteCyclic: return "Z_" + std::to_string(cyclic_n);
        case Family::FiniteByTable: return table->name;
        case Family::InfiniteDihedral: return "D_inf";
        case Family::DihedralProduct: return "D_prod";
        case Family::BaumslagSolitar12: return "BS(1,2)";
        case Family::DirectProduct: return left->describe() + " x " + right->describe();
    }
    return "?";
}

inline long dih_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long dprod_modulus(long coord) { return 2 * coord + 1; }

/** Value of a DProd element at one coordinate, exceptions applied. */
inline DihCoord dprod_at(const DProdElt& e, long coord) {
    auto it = e.exceptions.find(coord);
    if (it != e.exceptions.end()) return it->second;
    DihCoord c;
    c.amount = dih_mod(static_cast<long>(mpz_class(e.tail % dprod_modulus(coord)).get_si()),
                       dprod_modulus(coord));
    return c;
}

/** Odd-dihedral composition at one coordinate: (a1,f1)*(a2,f2), h applied first. */
inline DihCoord dih_compose(const DihCoord& x, const DihCoord& y, long m) {
    DihCoord r;
    r.amount = dih_mod(x.amount + (x.flip ? -y.amount : y.amount), m);
    r.flip = x.flip != y.flip;
    return r;
}

/** Drop exceptions that agree with the tail, keeping forms unique. */
inline void dprod_canonicalize(DProdElt& e) {
    for (auto it = e.exceptions.begin(); it != e.exceptions.end();) {
        const long m = dprod_modulus(it->first);
        const long tail_here = dih_mod(static_cast<long>(mpz_class(e.tail % m).get_si()), m);
        if (!it->second.flip && it->second.amount == tail_here)
            it = e.exceptions.erase(it);
        else
            ++it;
    }
}

inline bool is_dyadic(const mpq_class& q) {
    mpz_class d = q.get_den();
    // power of two <=> exactly one set bit
    return mpz_popcount(d.get_mpz_t()) == 1;
}

/** q * 2^e, exactly. */
inline mpq_class scale_pow2(const mpq_class& q, long e) {
    mpq_class r = q;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

} // namespace detail

inline bool Group::same_as(const Group& o) const {
    if (family() != o.family()) return false;
    switch (family()) {
        case Family::FreeAbelian: return rank() == o.rank();
        case Family::FiniteCyclic: return cyclic_order() == o.cyclic_order();
        case Family::FiniteByTable:
            return table().name == o.table().name && table().table == o.table().table;
        case Family::DirectProduct:
            return left().same_as(o.left()) && right().same_as(o.right());
        default: return true;
    }
}

inline int GroupElement::cmp(const GroupElement& o) const {
    if (fam_ != o.fam_) return fam_ < o.fam_ ? -1 : 1;
    if (v_.index() != o.v_.index()) return v_.index() < o.v_.index() ? -1 : 1;
    switch (v_.index()) {
        case 0: {
            const auto &a = std::get<0>(v_), &b = std::get<0>(o.v_);
            return ::cmp(a, b) < 0 ? -1 : (a == b ? 0 : 1);
        }
        case 1: {
            const auto &a = std::get<1>(v_), &b = std::get<1>(o.v_);
            if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case 2: {
            const auto a = std::get<2>(v_), b = std::get<2>(o.v_);
            return a == b ? 0 : (a < b ? -1 : 1);
        }
        case 3: {
            const auto &a = std::get<3>(v_), &b = std::get<3>(o.v_);
            if (a.k != b.k) return a.k < b.k ? -1 : 1;
            if (a.flip != b.flip) return a.flip < b.flip ? -1 : 1;
            return 0;
        }
        case 4: {
            const auto &a = std::get<4>(v_), &b = std::get<4>(o.v_);
            if (a.tail != b.tail) return a.tail < b.tail ? -1 : 1;
            auto ia = a.exceptions.begin(), ib = b.exceptions.begin();
            for (; ia != a.exceptions.end() && ib != b.exceptions.end(); ++ia, ++ib) {
                if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
                if (ia->second.amount != ib->second.amount)
                    return ia->second.amount < ib->second.amount ? -1 : 1;
                if (ia->second.flip != ib->second.flip) return ia->second.flip < ib->second.flip ? -1 : 1;
            }
            if (ia != a.exceptions.end()) return 1;
            if (ib != b.exceptions.end()) return -1;
            return 0;
        }
        case 5: {
            const auto &a = std::get<5>(v_), &b = std::get<5>(o.v_);
            if (a.p != b.p) return a.p < b.p ? -1 : 1;
            if (a.q != b.q) return a.q < b.q ? -1 : 1;
            return 0;
        }
        case 6: {
            const auto &a = *std::get<6>(v_), &b = *std::get<6>(o.v_);
            const int c = a.first.cmp(b.first);
            if (c != 0) return c;
            return a.second.cmp(b.second);
        }
    }
    return 0;
}

inline void check_family(const Group& g, const GroupElement& a, const char* op) {
    const bool ok = [&] {
        switch (g.family()) {
            case Family::Integers: return a.family() == Family::Integers;
            case Family::FreeAbelian:
                return a.family() == Family::FreeAbelian &&
                       std::get<std::vector<mpz_class>>(a.data()).size() == g.rank();
            case Family::FiniteCyclic:
            case Family::FiniteByTable:
                return a.family() == g.family();
            default: return a.family() == g.family();
        }
    }();
    if (!ok)
        throw FamilyMismatch(std::string(op) + ": element does not belong to " + g.describe());
}

inline GroupElement identity(const Group& g) {
    switch (g.family()) {
        case Family::Integers: return GroupElement(g.family(), mpz_class(0));
        case Family::FreeAbelian:
            return GroupElement(g.family(), std::vector<mpz_class>(g.rank(), mpz_class(0)));
        case Family::FiniteCyclic:
        case Family::FiniteByTable: return GroupElement(g.family(), 0ul);
        case Family::InfiniteDihedral: return GroupElement(g.family(), detail::DinftyElt{});
        case Family::DihedralProduct: return GroupElement(g.family(), detail::DProdElt{});
        case Family::BaumslagSolitar12: return GroupElement(g.family(), detail::BSElt{});
        case Family::DirectProduct: {
            auto box = std::make_shared<detail::PairBox>();
            box->first = identity(g.left());
            box->second = identity(g.right());
            return GroupElement(g.family(), std::shared_ptr<const detail::PairBox>(box));
        }
    }
    throw std::logic_error("identity: unknown family");
}

inline bool is_identity(const Group& g, const GroupElement& a) {
    return a == identity(g);
}

inline GroupElement pair_element(const Group& g, GroupElement first, GroupElement second) {
    if (g.family() != Family::DirectProduct)
        throw FamilyMismatch("pair_element: not a direct product");
    auto box = std::make_shared<detail::PairBox>();
    box->first = std::move(first);
    box->second = std::move(second);
    return GroupElement(Family::DirectProduct, std::shared_ptr<const detail::PairBox>(box));
}

inline GroupElement dinfty_element(const mpz_class& k, bool flip) {
    return GroupElement(Family::InfiniteDihedral, detail::DinftyElt{k, flip});
}

inline GroupElement dprod_element(std::map<long, detail::DihCoord> exceptions, const mpz_class& tail) {
    detail::DProdElt e;
    for (const auto& [coord, c] : exceptions) {
        if (coord < 1) throw std::invalid_argument("dprod_element: coordinates start at 1");
        detail::DihCoord cc{detail::dih_mod(c.amount, detail::dprod_modulus(coord)), c.flip};
        e.exceptions[coord] = cc;
    }
    e.tail = tail;
    detail::dprod_canonicalize(e);
    return GroupElement(Family::DihedralProduct, std::move(e));
}

inline GroupElement bs_element(long p, const mpq_class& q) {
    mpq_class qc = q;
    qc.canonicalize();
    if (!detail::is_dyadic(qc))
        throw std::invalid_argument("bs_element: translation part must be dyadic");
    return GroupElement(Family::BaumslagSolitar12, detail::BSElt{p, qc});
}

inline GroupElement multiply(const Group& g, const GroupElement& a, const GroupElement& b) {
    check_family(g, a, "multiply");
    check_family(g, b, "multiply");
    switch (g.family()) {
        case Family::Integers:
            return GroupElement(g.family(), mpz_class(a.as_int() + b.as_int()));
        case Family::FreeAbelian: {
            auto v = a.as_vec();
            const auto& w = b.as_vec();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
            return GroupElement(g.family(), std::move(v));
        }
        case Family::FiniteCyclic:
            return GroupElement(g.family(), (a.as_index() + b.as_index()) % g.cyclic_order());
        case Family::FiniteByTable:
            return GroupElement(g.family(),
                                static_cast<unsigned long>(g.table().table[a.as_index()][b.as_index()]));
        case Family::InfiniteDihedral: {
            const auto &x = a.as_dinfty(), &y = b.as_dinfty();
            detail::DinftyElt r;
            r.k = x.flip ? mpz_class(x.k - y.k) : mpz_class(x.k + y.k);
            r.flip = x.flip != y.flip;
            return GroupElement(g.family(), std::move(r));
        }
        case Family::DihedralProduct: {
            const auto &x = a.as_dprod(), &y = b.as_dprod();
            detail::DProdElt r;
            r.tail = x.tail + y.tail;  // x is flip-free outside exceptions
            std::vector<long> coords;
            for (const auto& [c, _] : x.exceptions) coords.push_back(c);
            for (const auto& [c, _] : y.exceptions)
                if (x.exceptions.find(c) == x.exceptions.end()) coords.push_back(c);
            for (long c : coords) {
                const long m = detail::dprod_modulus(c);
                r.exceptions[c] = detail::dih_compose(detail::dprod_at(x, c), detail::dprod_at(y, c), m);
            }
            detail::dprod_canonicalize(r);
            return GroupElement(g.family(), std::move(r));
        }
        case Family::BaumslagSolitar12: {
            const auto &x = a.as_bs(), &y = b.as_bs();
            // (2^p1 . + q1) o (2^p2 . + q2) = 2^(p1+p2) . + (2^p1 q2 + q1)
            detail::BSElt r;
            r.p = x.p + y.p;
            r.q = detail::scale_pow2(y.q, x.p) + x.q;
            r.q.canonicalize();
            return GroupElement(g.family(), std::move(r));
        }
        case Family::DirectProduct: {
            const auto &x = a.as_pair(), &y = b.as_pair();
            return pair_element(g, multiply(g.left(), x.first, y.first),
                                multiply(g.right(), x.second, y.second));
        }
    }
    throw std::logic_error("multiply: unknown family");
}

inline GroupElement inverse(const Group& g, const GroupElement& a) {
    check_family(g, a, "inverse");
    switch (g.family()) {
        case Family::Integers: return GroupElement(g.family(), mpz_class(-a.as_int()));
        case Family::FreeAbelian: {
            auto v = a.as_vec();
            for (auto& c : v) c = -c;
            return GroupElement(g.family(), std::move(v));
        }
        case Family::FiniteCyclic:
            return GroupElement(g.family(), a.as_index() == 0 ? 0ul : g.cyclic_order() - a.as_index());
        case Family::FiniteByTable: {
            const auto& t = g.table().table;
            const auto i = a.as_index();
            for (unsigned long j = 0; j < g.table().order; ++j)
                if (t[i][j] == 0) return GroupElement(g.family(), j);
            throw BadGroupTable("inverse: table row without identity");
        }
        case Family::InfiniteDihedral: {
            const auto& x = a.as_dinfty();
            // reflections are involutions; rotations invert the exponent
            return dinfty_element(x.flip ? x.k : mpz_class(-x.k), x.flip);
        }
        case Family::DihedralProduct: {
            const auto& x = a.as_dprod();
            detail::DProdElt r;
            r.tail = -x.tail;
            for (const auto& [c, coord] : x.exceptions) {
                const long m = detail::dprod_modulus(c);
                detail::DihCoord ic;
                ic.flip = coord.flip;
                ic.amount = coord.flip ? coord.amount : detail::dih_mod(-coord.amount, m);
                r.exceptions[c] = ic;
            }
            detail::dprod_canonicalize(r);
            return GroupElement(g.family(), std::move(r));
        }
        case Family::BaumslagSolitar12: {
            const auto& x = a.as_bs();
            detail::BSElt r;
            r.p = -x.p;
            r.q = detail::scale_pow2(-x.q, -x.p);
            r.q.canonicalize();
            return GroupElement(g.family(), std::move(r));
        }
        case Family::DirectProduct: {
            const auto& x = a.as_pair();
            return pair_element(g, inverse(g.left(), x.first), inverse(g.right(), x.second));
        }
    }
    throw std::logic_error("inverse: unknown family");
}

inline GroupElement power(const Group& g, const GroupElement& a, const mpz_class& n) {
    check_family(g, a, "power");
    if (n == 0) return identity(g);
    GroupElement base = n < 0 ? inverse(g, a) : a;
    mpz_class e = abs(n);
    GroupElement acc = identity(g);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = multiply(g, acc, base);
        e >>= 1;
        if (e > 0) base = multiply(g, base, base);
    }
    return acc;
}

inline GroupElement conjugate(const Group& g, const GroupElement& x, const GroupElement& a) {
    return multiply(g, multiply(g, x, a), inverse(g, x));
}

inline OrderResult element_order(const Group& g, const GroupElement& a, unsigned long bound) {
    check_family(g, a, "element_order");
    auto finite_if_within = [&](const mpz_class& n) {
        if (n <= bound) return OrderResult::finite(n);
        return OrderResult::exhausted(bound);
    };
    switch (g.family()) {
        case Family::Integers:
            if (a.as_int() == 0) return OrderResult::finite(1);
            return OrderResult::infinite("nonzero element of Z");
        case Family::FreeAbelian: {
            for (const auto& c : a.as_vec())
                if (c != 0) return OrderResult::infinite("nonzero exponent vector in a free abelian group");
            return OrderResult::finite(1);
        }
        case Family::FiniteCyclic: {
            const unsigned long n = g.cyclic_order();
            const unsigned long v = a.as_index();
            return finite_if_within(mpz_class(n / std::gcd(n, v == 0 ? n : v)));
        }
        case Family::FiniteByTable: {
            GroupElement x = a;
            for (unsigned long k = 1; k <= g.table().order; ++k) {
                if (is_identity(g, x)) return finite_if_within(mpz_class(k));
                x = multiply(g, x, a);
            }
            throw BadGroupTable("element_order: no power reached the identity");
        }
        case Family::InfiniteDihedral: {
            const auto& x = a.as_dinfty();
            if (x.flip) return OrderResult::finite(2);
            if (x.k == 0) return OrderResult::finite(1);
            return OrderResult::infinite("nontrivial rotation in the infinite dihedral group");
        }
        case Family::DihedralProduct: {
            const auto& x = a.as_dprod();
            if (x.tail != 0)
                return OrderResult::infinite(
                    "nonzero tail rotation: no single n clears n*c mod (2i+1) for every large i");
            mpz_class l(1);
            for (const auto& [c, coord] : x.exceptions) {
                if (coord.flip) {
                    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), 2);
                } else {
                    const long m = detail::dprod_modulus(c);
                    const long o = m / std::gcd(m, coord.amount == 0 ? m : coord.amount);
                    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(o));
                }
            }
            return finite_if_within(l);
        }
        case Family::BaumslagSolitar12: {
            const auto& x = a.as_bs();
            if (x.p == 0 && x.q == 0) return OrderResult::finite(1);
            if (x.p != 0)
                return OrderResult::infinite("scaling part 2^p with p != 0: powers scale by 2^(np)");
            return OrderResult::infinite("pure translation by q != 0: powers translate by n*q");
        }
        case Family::DirectProduct: {
            const auto& x = a.as_pair();
            const OrderResult l = element_order(g.left(), x.first, bound);
            const OrderResult r = element_order(g.right(), x.second, bound);
            if (l.is_infinite()) return OrderResult::infinite("left factor: " + l.certificate);
            if (r.is_infinite()) return OrderResult::infinite("right factor: " + r.certificate);
            if (l.kind == OrderResult::Kind::ExhaustedBound || r.kind == OrderResult::Kind::ExhaustedBound)
                return OrderResult::exhausted(bound);
            mpz_class lc;
            mpz_lcm(lc.get_mpz_t(), l.order.get_mpz_t(), r.order.get_mpz_t());
            return finite_if_within(lc);
        }
    }
    throw std::logic_error("element_order: unknown family");
}

/* ---------------------------- printing ---------------------------- */

namespace detail {
inline std::string pow_str(const std::string& gen, const mpz_class& e) {
    if (e == 1) return gen;
    return gen + "^" + e.get_str();
}
}

inline std::string to_string(const Group& g, const GroupElement& a) {
    check_family(g, a, "to_string");
    if (is_identity(g, a)) return "e";
    switch (g.family()) {
        case Family::Integers: return detail::pow_str("g", a.as_int());
        case Family::FreeAbelian: {
            std::string out;
            const auto& v = a.as_vec();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                if (!out.empty()) out += " ";
                out += detail::pow_str("g" + std::to_string(i + 1), v[i]);
            }
            return out;
        }
        case Family::FiniteCyclic: return detail::pow_str("g", mpz_class(a.as_index()));
        case Family::FiniteByTable: return g.table().element_names[a.as_index()];
        case Family::InfiniteDihedral: {
            const auto& x = a.as_dinfty();
            if (!x.flip) return detail::pow_str("r", x.k);
            if (x.k == 0) return "s";
            return detail::pow_str("r", x.k) + " s";
        }
        case Family::DihedralProduct: {
            const auto& x = a.as_dprod();
            std::string out = "(";
            for (const auto& [c, coord] : x.exceptions) {
                out += std::to_string(c) + ":" + std::to_string(coord.amount) + (coord.flip ? "s" : "");
                out += ", ";
            }
            out += "tail=" + x.tail.get_str() + ")";
            return out;
        }
        case Family::BaumslagSolitar12: {
            const auto& x = a.as_bs();
            const mpz_class num = x.q.get_num();
            const mpz_class den = x.q.get_den();
            const long d = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;  // den = 2^d
            std::string out;
            if (d > 0) out += detail::pow_str("a", mpz_class(-d));
            if (num != 0) {
                if (!out.empty()) out += " ";
                out += detail::pow_str("b", num);
            }
            const mpz_class e2 = mpz_class(d + x.p);
            if (e2 != 0) {
                if (!out.empty()) out += " ";
                out += detail::pow_str("a", e2);
            }
            return out;
        }
        case Family::DirectProduct: {
            const auto& x = a.as_pair();
            return "(" + to_string(g.left(), x.first) + "; " + to_string(g.right(), x.second) + ")";
        }
    }
    throw std::logic_error("to_string: unknown family");
}

/* ---------------------------- generators -------------------------- */

inline std::vector<std::pair<std::string, GroupElement>> generators(const Group& g) {
    std::vector<std::pair<std::string, GroupElement>> out;
    switch (g.family()) {
        case Family::Integers:
            out.emplace_back("g", GroupElement(g.family(), mpz_class(1)));
            break;
        case Family::FreeAbelian:
            for (std::size_t i = 0; i < g.rank(); ++i) {
                std::vector<mpz_class> v(g.rank(), mpz_class(0));
                v[i] = 1;
                out.emplace_back("g" + std::to_string(i + 1), GroupElement(g.family(), std::move(v)));
            }
            break;
        case Family::FiniteCyclic:
            out.emplace_back("g", GroupElement(g.family(), 1ul));
            break;
        case Family::FiniteByTable:
            for (const auto& [name, idx] : g.table().generators)
                out.emplace_back(name, GroupElement(g.family(), static_cast<unsigned long>(idx)));
            break;
        case Family::InfiniteDihedral:
            out.emplace_back("r", dinfty_element(1, false));
            out.emplace_back("s", dinfty_element(0, true));
            break;
        case Family::DihedralProduct:
            // not finitely generated; normalize_word resolves tail/f<j>/r<j> directly
            break;
        case Family::BaumslagSolitar12:
            out.emplace_back("a", bs_element(1, 0));
            out.emplace_back("b", bs_element(0, 1));
            break;
        case Family::DirectProduct:
            for (const auto& [n, e] : generators(g.left()))
                out.emplace_back("l_" + n, pair_element(g, e, identity(g.right())));
            for (const auto& [n, e] : generators(g.right()))
                out.emplace_back("r_" + n, pair_element(g, identity(g.left()), e));
            break;
    }
    return out;
}

inline GroupElement generator(const Group& g, const std::string& name) {
    for (const auto& [n, e] : generators(g))
        if (n == name) return e;
    if (g.family() == Family::DirectProduct && name.size() > 2 && name[1] == '_') {
        if (name[0] == 'l')
            return pair_element(g, generator(g.left(), name.substr(2)), identity(g.right()));
        if (name[0] == 'r')
            return pair_element(g, identity(g.left()), generator(g.right(), name.substr(2)));
    }
    if (g.family() == Family::DihedralProduct) {
        if (name == "tail") return dprod_element({}, 1);
        if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'r')) {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) {
                const long coord = std::stol(name.substr(1));
                if (coord >= 1) {
                    std::map<long, detail::DihCoord> exc;
                    exc[coord] = detail::DihCoord{name[0] == 'r' ? 1 : 0, name[0] == 'f'};
                    return dprod_element(std::move(exc), 0);
                }
            }
        }
    }
    throw UnknownGenerator("unknown generator '" + name + "' for " + g.describe());
}

inline GroupElement normalize_word(const Group& g,
                                   const std::vector<std::pair<std::string, long>>& word) {
    GroupElement acc = identity(g);
    for (const auto& [name, exp] : word)
        acc = multiply(g, acc, power(g, generator(g, name), exp));
    return acc;
}

/* ---------------------------- solve_power ------------------------- */

inline std::optional<mpz_class> solve_power(const Group& g, const GroupElement& h,
                                            const GroupElement& sigma, unsigned long iteration_bound) {
    check_family(g, h, "solve_power");
    check_family(g, sigma, "solve_power");
    auto verified = [&](const mpz_class& n) -> std::optional<mpz_class> {
        if (power(g, h, n) == sigma) return n;
        return std::nullopt;
    };
    switch (g.family()) {
        case Family::Integers: {
            if (h.as_int() == 0) return is_identity(g, sigma) ? std::optional<mpz_class>(0) : std::nullopt;
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sigma.as_int().get_mpz_t(), h.as_int().get_mpz_t());
            if (r != 0) return std::nullopt;
            return q;
        }
        case Family::FreeAbelian: {
            const auto& hv = h.as_vec();
            for (std::size_t i = 0; i < hv.size(); ++i) {
                if (hv[i] == 0) continue;
                mpz_class q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sigma.as_vec()[i].get_mpz_t(), hv[i].get_mpz_t());
                if (r != 0) return std::nullopt;
                return verified(q);
            }
            return is_identity(g, sigma) ? std::optional<mpz_class>(0) : std::nullopt;
        }
        case Family::FiniteCyclic: {
            // n * v = s (mod m), solvable iff gcd(v, m) | s
            const mpz_class m(g.cyclic_order()), v(h.as_index()), s(sigma.as_index());
            if (v == 0) return s == 0 ? std::optional<mpz_class>(0) : std::nullopt;
            mpz_class d, u, w;
            mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
            if (s % d != 0) return std::nullopt;
            mpz_class n = (s / d * u) % (m / d);
            if (n < 0) n += m / d;
            return verified(n);
        }
        case Family::FiniteByTable: {
            const OrderResult ord = element_order(g, h);
            GroupElement x = identity(g);
            for (mpz_class n = 0; n < ord.order; ++n) {
                if (x == sigma) return n;
                x = multiply(g, x, h);
            }
            return std::nullopt;
        }
        case Family::InfiniteDihedral: {
            const auto& hd = h.as_dinfty();
            const auto& sd = sigma.as_dinfty();
            if (hd.flip) {  // h is an involution
                if (is_identity(g, sigma)) return 0;
                if (sigma == h) return 1;
                return std::nullopt;
            }
            if (sd.flip) return std::nullopt;
            if (hd.k == 0) return sd.k == 0 ? std::optional<mpz_class>(0) : std::nullopt;
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sd.k.get_mpz_t(), hd.k.get_mpz_t());
            if (r != 0) return std::nullopt;
            return q;
        }
        case Family::BaumslagSolitar12: {
            const auto& hb = h.as_bs();
            if (hb.p != 0) {
                const long sp = sigma.as_bs().p;
                if (sp % hb.p != 0) return std::nullopt;
                return verified(mpz_class(sp / hb.p));
            }
            if (hb.q == 0) return is_identity(g, sigma) ? std::optional<mpz_class>(0) : std::nullopt;
            // pure translation: h^n translates by n*q
            if (sigma.as_bs().p != 0) return std::nullopt;
            mpq_class ratio = sigma.as_bs().q / hb.q;
            ratio.canonicalize();
            if (ratio.get_den() != 1) return std::nullopt;
            return verified(mpq_class(ratio).get_num());
        }
        case Family::DihedralProduct: {
            const auto& hd = h.as_dprod();
            if (hd.tail != 0) {
                const mpz_class st = sigma.as_dprod().tail;
                mpz_class q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), st.get_mpz_t(), hd.tail.get_mpz_t());
                if (r != 0) return std::nullopt;
                return verified(q);
            }
            const OrderResult ord = element_order(g, h, iteration_bound);
            if (!ord.is_finite()) return std::nullopt;
            GroupElement x = identity(g);
            for (mpz_class n = 0; n < ord.order; ++n) {
                if (x == sigma) return n;
                x = multiply(g, x, h);
            }
            return std::nullopt;
        }
        case Family::DirectProduct: {
            const auto& hp = h.as_pair();
            const auto& sp = sigma.as_pair();
            const OrderResult lo = element_order(g.left(), hp.first, iteration_bound);
            if (lo.is_infinite()) {
                auto n = solve_power(g.left(), hp.first, sp.first, iteration_bound);
                if (!n) return std::nullopt;
                return verified(*n);
            }
            const OrderResult ro = element_order(g.right(), hp.second, iteration_bound);
            if (ro.is_infinite()) {
                auto n = solve_power(g.right(), hp.second, sp.second, iteration_bound);
                if (!n) return std::nullopt;
                return verified(*n);
            }
            if (!lo.is_finite() || !ro.is_finite()) return std::nullopt;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lo.order.get_mpz_t(), ro.order.get_mpz_t());
            if (l > iteration_bound) return std::nullopt;
            GroupElement x = identity(g);
            for (mpz_class n = 0; n < l; ++n) {
                if (x == sigma) return n;
                x = multiply(g, x, h);
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("solve_power: unknown family");
}

/* ---------------------------- word balls -------------------------- */

inline std::vector<GroupElement> word_ball(const Group& g, unsigned radius) {
    std::vector<std::pair<std::string, GroupElement>> gens = generators(g);
    if (gens.empty())
        throw std::invalid_argument("word_ball: " + g.describe() + " has no default generator set");
    std::vector<GroupElement> step;
    for (const auto& [_, e] : gens) {
        step.push_back(e);
        const GroupElement inv = inverse(g, e);
        if (inv != e) step.push_back(inv);
    }
    std::map<GroupElement, bool> seen;
    std::vector<GroupElement> frontier{identity(g)};
    seen[identity(g)] = true;
    std::vector<GroupElement> out{identity(g)};
    for (unsigned d = 0; d < radius; ++d) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& s : step) {
                GroupElement y = multiply(g, x, s);
                if (seen.emplace(y, true).second) {
                    out.push_back(y);
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return out;
}

/* ---------------------------- finite tables ----------------------- */

inline Group Group::from_table(FiniteTable t) {
    const std::size_t n = t.order;
    if (n == 0 || n > 64) throw BadGroupTable("group table: order must be in 1..64");
    if (t.table.size() != n) throw BadGroupTable("group table: row count != order");
    for (const auto& row : t.table) {
        if (row.size() != n) throw BadGroupTable("group table: column count != order");
        for (auto v : row)
            if (v >= n) throw BadGroupTable("group table: entry out of range");
    }
    // Latin square
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen_row[t.table[i][j]]) throw BadGroupTable("group table: repeated entry in row");
            seen_row[t.table[i][j]] = true;
            if (seen_col[t.table[j][i]]) throw BadGroupTable("group table: repeated entry in column");
            seen_col[t.table[j][i]] = true;
        }
    }
    // identity at index 0
    for (std::size_t i = 0; i < n; ++i)
        if (t.table[0][i] != i || t.table[i][0] != i)
            throw BadGroupTable("group table: index 0 is not the identity");
    // associativity, all triples (order <= 64 keeps this cheap)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]])
                    throw BadGroupTable("group table: not associative");
    if (t.element_names.size() != n) {
        t.element_names.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            if (t.element_names[i].empty()) t.element_names[i] = "#" + std::to_string(i);
    }
    for (const auto& [name, idx] : t.generators)
        if (idx >= n) throw BadGroupTable("group table: generator '" + name + "' index out of range");

    auto d = std::make_shared<detail::GroupData>();
    d->family = Family::FiniteByTable;
    d->table = std::make_shared<const FiniteTable>(std::move(t));
    return Group(std::move(d));
}

namespace detail {

/** table[i][j] = index of perm_i o perm_j (right factor applied first). */
inline FiniteTable table_from_perms(std::string name, const std::vector<std::vector<int>>& perms,
                                    std::vector<std::string> names,
                                    std::vector<std::pair<std::string, std::size_t>> gens) {
    const std::size_t n = perms.size();
    auto find = [&](const std::vector<int>& p) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (perms[i] == p) return i;
        throw BadGroupTable(name + ": composition left the element list");
    };
    FiniteTable t;
    t.name = std::move(name);
    t.order = n;
    t.table.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> comp(perms[i].size());
            for (std::size_t x = 0; x < comp.size(); ++x)
                comp[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
            t.table[i][j] = static_cast<std::uint8_t>(find(comp));
        }
    t.element_names = std::move(names);
    t.generators = std::move(gens);
    return t;
}

} // namespace detail

inline Group Group::z2() {
    FiniteTable t;
    t.name = "Z2";
    t.order = 2;
    t.table = {{0, 1}, {1, 0}};
    t.element_names = {"e", "u"};
    t.generators = {{"u", 1}};
    return from_table(std::move(t));
}

inline Group Group::s3() {
    // order: e, (123), (132), (12), (13), (23) on symbols {1,2,3} (0-based inside)
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1},
    };
    return from_table(detail::table_from_perms(
        "S3", perms, {"e", "(123)", "(132)", "(12)", "(13)", "(23)"}, {{"a", 1}, {"b", 3}}));
}

inline Group Group::d4() {
    // r: quarter turn of the square 0123; s: reflection x -> -x mod 4
    std::vector<std::vector<int>> perms;
    std::vector<int> r = {1, 2, 3, 0}, s = {0, 3, 2, 1};
    auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> c(4);
        for (int x = 0; x < 4; ++x) c[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
        return c;
    };
    std::vector<int> e = {0, 1, 2, 3};
    std::vector<int> cur = e;
    for (int i = 0; i < 4; ++i) {  // e, r, r^2, r^3
        perms.push_back(cur);
        cur = compose(r, cur);
    }
    cur = s;
    for (int i = 0; i < 4; ++i) {  // s, r s, r^2 s, r^3 s
        perms.push_back(cur);
        cur = compose(r, cur);
    }
    return from_table(detail::table_from_perms(
        "D4", perms, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, {{"r", 1}, {"s", 4}}));
}

inline Group Group::q8() {
    // 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign)
    struct Q {
        int axis;  // 0=1, 1=i, 2=j, 3=k
        int sign;  // +1 / -1
    };
    const std::vector<Q> elems = {{0, 1}, {0, -1}, {1, 1}, {1, -1}, {2, 1}, {2, -1}, {3, 1}, {3, -1}};
    auto mul = [](Q a, Q b) -> Q {
        static const int axis_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_tab[4][4] = {
            {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        return Q{axis_tab[a.axis][b.axis], a.sign * b.sign * sign_tab[a.axis][b.axis]};
    };
    FiniteTable t;
    t.name = "Q8";
    t.order = 8;
    t.table.assign(8, std::vector<std::uint8_t>(8, 0));
    auto idx = [&](Q q) -> std::size_t {
        return static_cast<std::size_t>(q.axis) * 2 + (q.sign == 1 ? 0 : 1);
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            t.table[i][j] = static_cast<std::uint8_t>(idx(mul(elems[i], elems[j])));
    t.element_names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    t.generators = {{"i", 2}, {"j", 4}};
    return from_table(std::move(t));
}

inline Group Group::a4() {
    // even permutations of {1,2,3,4}: identity, three double transpositions,
    // eight 3-cycles, in a fixed readable order
    auto cyc = [](std::initializer_list<std::pair<int, int>> moves) {
        std::vector<int> p = {0, 1, 2, 3};
        for (auto [from, to] : moves) p[static_cast<std::size_t>(from)] = to;
        return p;
    };
    std::vector<std::vector<int>> perms;
    std::vector<std::string> names;
    auto add = [&](const std::vector<int>& p, const std::string& n) {
        perms.push_back(p);
        names.push_back(n);
    };
    add({0, 1, 2, 3}, "e");
    add(cyc({{0, 1}, {1, 0}, {2, 3}, {3, 2}}), "(12)(34)");
    add(cyc({{0, 2}, {2, 0}, {1, 3}, {3, 1}}), "(13)(24)");
    add(cyc({{0, 3}, {3, 0}, {1, 2}, {2, 1}}), "(14)(23)");
    add(cyc({{0, 1}, {1, 2}, {2, 0}}), "(123)");
    add(cyc({{0, 2}, {2, 1}, {1, 0}}), "(132)");
    add(cyc({{0, 1}, {1, 3}, {3, 0}}), "(124)");
    add(cyc({{0, 3}, {3, 1}, {1, 0}}), "(142)");
    add(cyc({{0, 2}, {2, 3}, {3, 0}}), "(134)");
    add(cyc({{0, 3}, {3, 2}, {2, 0}}), "(143)");
    add(cyc({{1, 2}, {2, 3}, {3, 1}}), "(234)");
    add(cyc({{1, 3}, {3, 2}, {2, 1}}), "(243)");
    return from_table(detail::table_from_perms("A4", perms, std::move(names), {{"a", 4}, {"b", 1}}));
}

} // namespace goldie

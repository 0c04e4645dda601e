#pragma once

/*
 * Commutation-condition witnesses and audits.
 *
 * The two conditions of interest for a group G, with exponents drawn from
 * the positive integers:
 *
 *   (2)   for all g,h there is n      with  g h^n = h^n g
 *   (2)'  for all g,h there are m, n  with  g h^m = h^n g
 *
 * Searches return minimal witnesses so reports are deterministic.  A
 * bounded search that finds nothing is inconclusive, except where a
 * closed-form normal-form identity proves nonexistence outright; those
 * results carry the identity as a certificate and are marked proven.
 */

#include <string>
#include <vector>

#include <goldie/group.hpp>

namespace goldie {

struct PremiseViolated : std::invalid_argument {
    explicit PremiseViolated(const std::string& w) : std::invalid_argument(w) {}
};

struct SearchOutcome {
    enum class Kind { Found, ExhaustedBound, ViolationFound };
    Kind kind = Kind::ExhaustedBound;
    mpz_class m, n;                    // witness exponents (cond2 uses n alone)
    unsigned long bound_m = 0, bound_n = 0;
    std::string certificate;           // closed-form proof, when one applies
    bool proven = false;               // true iff certificate upgrades the bound

    bool found() const { return kind == Kind::Found; }
    bool violation() const { return kind == Kind::ViolationFound; }
    bool exhausted() const { return kind == Kind::ExhaustedBound; }
};

/** Least n in 1..n_max with g h^n = h^n g. */
inline SearchOutcome cond2_witness(const Group& G, const GroupElement& g, const GroupElement& h,
                                   unsigned long n_max) {
    check_family(G, g, "cond2_witness");
    check_family(G, h, "cond2_witness");
    SearchOutcome out;
    GroupElement hn = identity(G);
    for (unsigned long n = 1; n <= n_max; ++n) {
        hn = multiply(G, hn, h);
        if (multiply(G, g, hn) == multiply(G, hn, g)) {
            out.kind = SearchOutcome::Kind::Found;
            out.n = n;
            return out;
        }
    }
    out.bound_n = n_max;
    return out;
}

/** Lexicographically least (m, n) with g h^m = h^n g, both in range. */
inline SearchOutcome cond2prime_witness(const Group& G, const GroupElement& g, const GroupElement& h,
                                        unsigned long m_max, unsigned long n_max) {
    check_family(G, g, "cond2prime_witness");
    check_family(G, h, "cond2prime_witness");
    std::vector<GroupElement> right;  // right[n-1] = h^n g
    {
        GroupElement hn = identity(G);
        for (unsigned long n = 1; n <= n_max; ++n) {
            hn = multiply(G, hn, h);
            right.push_back(multiply(G, hn, g));
        }
    }
    SearchOutcome out;
    GroupElement hm = identity(G);
    for (unsigned long m = 1; m <= m_max; ++m) {
        hm = multiply(G, hm, h);
        const GroupElement lhs = multiply(G, g, hm);
        for (unsigned long n = 1; n <= n_max; ++n)
            if (lhs == right[n - 1]) {
                out.kind = SearchOutcome::Kind::Found;
                out.m = m;
                out.n = n;
                return out;
            }
    }
    out.bound_m = m_max;
    out.bound_n = n_max;
    return out;
}

/**
 * Commuting exponent for an element of the restricted dihedral product:
 * n = 2 * prod(2j+1) over the coordinates j where g has a flip.  h^n is
 * then trivial at every flip coordinate of g (the even part squares
 * reflections away, the odd factors clear the rotation residues) and a
 * pure rotation elsewhere, so it commutes with g.  Flip-free g keeps the
 * leading factor: n = 2.
 */
inline mpz_class klyachko_exponent(const Group& G, const GroupElement& g) {
    if (G.family() != Family::DihedralProduct)
        throw FamilyMismatch("klyachko_exponent: element must come from the dihedral product");
    check_family(G, g, "klyachko_exponent");
    mpz_class n = 2;
    for (const auto& [coord, c] : g.as_dprod().exceptions)
        if (c.flip) n *= detail::dprod_modulus(coord);
    return n;
}

inline bool klyachko_verify(const Group& G, const GroupElement& g, const GroupElement& h) {
    const GroupElement hn = power(G, h, klyachko_exponent(G, g));
    return multiply(G, g, hn) == multiply(G, hn, g);
}

struct StarInductionReport {
    long d_max = 0;
    bool all_pass = false;
    long first_failure = 0;  // 0 when every d passed
};

/**
 * If g h^m g^-1 = h^n, iterated conjugation gives g^d h^(m^d) g^-d = h^(n^d).
 * Verifies the premise, then each d = 1..d_max exactly.
 */
inline StarInductionReport star_induction_check(const Group& G, const GroupElement& g,
                                                const GroupElement& h, long m, long n, long d_max) {
    check_family(G, g, "star_induction_check");
    check_family(G, h, "star_induction_check");
    if (m < 1 || n < 1 || d_max < 1)
        throw std::invalid_argument("star_induction_check: exponents and depth must be positive");
    if (conjugate(G, g, power(G, h, m)) != power(G, h, n))
        throw PremiseViolated("star_induction_check: g h^m g^-1 = h^n fails for m=" +
                              std::to_string(m) + ", n=" + std::to_string(n));
    StarInductionReport rep;
    rep.d_max = d_max;
    rep.all_pass = true;
    mpz_class md(1), nd(1);
    for (long d = 1; d <= d_max; ++d) {
        md *= m;
        nd *= n;
        const GroupElement gd = power(G, g, d);
        const GroupElement lhs = multiply(G, multiply(G, gd, power(G, h, md)), inverse(G, gd));
        if (lhs != power(G, h, nd)) {
            rep.all_pass = false;
            rep.first_failure = d;
            return rep;
        }
    }
    return rep;
}

namespace detail {

/** Attaches a closed-form nonexistence proof for h^k = g h^l g^-1 where one is known. */
inline void attach_obstruction_certificate(const Group& G, const GroupElement& g,
                                           const GroupElement& h, SearchOutcome& out) {
    if (G.family() == Family::InfiniteDihedral) {
        const auto& gd = g.as_dinfty();
        const auto& hd = h.as_dinfty();
        if (gd.flip && !hd.flip && hd.k != 0) {
            out.certificate =
                "conjugation by a reflection inverts rotations: g h^l g^-1 = h^-l, and "
                "h^k = h^-l has no solution with k, l >= 1 since h has infinite order";
            out.proven = true;
        }
        return;
    }
    if (G.family() == Family::BaumslagSolitar12) {
        const auto& gb = g.as_bs();
        const auto& hb = h.as_bs();
        if (gb.p == 0 && gb.q != 0 && hb.p != 0 && hb.q == 0) {
            out.certificate =
                "conjugating the scaling h^l = (x -> 2^(lp) x) by the translation g = (x -> x + q) "
                "gives x -> 2^(lp) x + q(1 - 2^(lp)), whose translation part q(1 - 2^(lp)) is "
                "nonzero for every l >= 1, while every h^k has translation part 0";
            out.proven = true;
        }
        return;
    }
}

} // namespace detail

/**
 * Decides h^k = g h^l g^-1 within bounds.  ViolationFound reports the
 * lexicographically least (k, l); ExhaustedBound means the obstruction
 * held everywhere in range and is upgraded to a proof when a normal-form
 * certificate applies.
 */
inline SearchOutcome conjugate_power_obstruction(const Group& G, const GroupElement& g,
                                                 const GroupElement& h, unsigned long k_max,
                                                 unsigned long l_max) {
    check_family(G, g, "conjugate_power_obstruction");
    check_family(G, h, "conjugate_power_obstruction");
    std::vector<GroupElement> conj;  // conj[l-1] = g h^l g^-1
    {
        const GroupElement gi = inverse(G, g);
        GroupElement hl = identity(G);
        for (unsigned long l = 1; l <= l_max; ++l) {
            hl = multiply(G, hl, h);
            conj.push_back(multiply(G, multiply(G, g, hl), gi));
        }
    }
    SearchOutcome out;
    GroupElement hk = identity(G);
    for (unsigned long k = 1; k <= k_max; ++k) {
        hk = multiply(G, hk, h);
        for (unsigned long l = 1; l <= l_max; ++l)
            if (hk == conj[l - 1]) {
                out.kind = SearchOutcome::Kind::ViolationFound;
                out.m = k;
                out.n = l;
                return out;
            }
    }
    out.bound_m = k_max;
    out.bound_n = l_max;
    detail::attach_obstruction_certificate(G, g, h, out);
    return out;
}

/* ------------------------------------------------------------------ */
/*  Finite-group audits                                                */
/* ------------------------------------------------------------------ */

struct FiniteGroupAnalysis {
    std::vector<unsigned long> commutator_subgroup;          // sorted element indices
    std::vector<unsigned long> center;                       // sorted element indices
    std::vector<std::vector<unsigned long>> centralizers;    // per element index
    unsigned long k = 0;                                     // |G'|
    unsigned long index_cent_derived = 0;                    // |G : Cent G'|
    mpz_class index_bound;                                   // k^(k-1)
    bool index_bound_holds = false;
    unsigned long exponent = 0;
};

inline FiniteGroupAnalysis finite_group_analysis(const Group& G) {
    if (G.family() != Family::FiniteByTable)
        throw FamilyMismatch("finite_group_analysis: needs a finite table group");
    const auto& t = G.table().table;
    const unsigned long n = G.table().order;
    auto mul = [&](unsigned long a, unsigned long b) {
        return static_cast<unsigned long>(t[a][b]);
    };
    auto inv = [&](unsigned long a) {
        for (unsigned long b = 0; b < n; ++b)
            if (mul(a, b) == 0) return b;
        throw BadGroupTable("finite_group_analysis: missing inverse");
    };

    FiniteGroupAnalysis out;

    // derived subgroup: close the commutator set under products
    std::vector<bool> in_derived(n, false);
    in_derived[0] = true;
    for (unsigned long a = 0; a < n; ++a)
        for (unsigned long b = 0; b < n; ++b)
            in_derived[mul(mul(a, b), mul(inv(a), inv(b)))] = true;
    for (bool grew = true; grew;) {
        grew = false;
        for (unsigned long a = 0; a < n; ++a) {
            if (!in_derived[a]) continue;
            for (unsigned long b = 0; b < n; ++b) {
                if (!in_derived[b] || in_derived[mul(a, b)]) continue;
                in_derived[mul(a, b)] = true;
                grew = true;
            }
        }
    }
    for (unsigned long a = 0; a < n; ++a)
        if (in_derived[a]) out.commutator_subgroup.push_back(a);
    out.k = out.commutator_subgroup.size();

    for (unsigned long a = 0; a < n; ++a) {
        std::vector<unsigned long> cent;
        for (unsigned long b = 0; b < n; ++b)
            if (mul(a, b) == mul(b, a)) cent.push_back(b);
        out.centralizers.push_back(std::move(cent));
    }
    for (unsigned long b = 0; b < n; ++b) {
        bool central = true;
        for (unsigned long a = 0; a < n && central; ++a) central = mul(a, b) == mul(b, a);
        if (central) out.center.push_back(b);
    }

    // Cent G' = elements commuting with the whole derived subgroup
    unsigned long cent_derived = 0;
    for (unsigned long b = 0; b < n; ++b) {
        bool ok = true;
        for (unsigned long a : out.commutator_subgroup)
            if (mul(a, b) != mul(b, a)) {
                ok = false;
                break;
            }
        if (ok) ++cent_derived;
    }
    out.index_cent_derived = n / cent_derived;
    mpz_ui_pow_ui(out.index_bound.get_mpz_t(), out.k, out.k == 0 ? 0 : out.k - 1);
    out.index_bound_holds = mpz_class(out.index_cent_derived) <= out.index_bound;

    mpz_class exp_acc(1);
    for (unsigned long a = 0; a < n; ++a) {
        const OrderResult ord = element_order(G, GroupElement(Family::FiniteByTable, a));
        mpz_lcm(exp_acc.get_mpz_t(), exp_acc.get_mpz_t(), ord.order.get_mpz_t());
    }
    out.exponent = exp_acc.get_ui();
    return out;
}

struct Remark1Audit {
    unsigned long k = 0;
    mpz_class n_claimed;              // k^k
    bool holds_uniformly = false;
    bool has_counterexample = false;
    unsigned long ce_g = 0, ce_h = 0;  // first failing pair, scan order (g, h)
    unsigned long minimal_uniform_n = 0;
};

/**
 * Tests the claim that n = k^k (k = |G'|) satisfies g h^n = h^n g for all
 * pairs, and computes the least n for which h^n is central for every h.
 */
inline Remark1Audit remark1_bound_audit(const Group& G) {
    const FiniteGroupAnalysis fga = finite_group_analysis(G);
    const auto& t = G.table().table;
    const unsigned long n = G.table().order;
    auto mul = [&](unsigned long a, unsigned long b) {
        return static_cast<unsigned long>(t[a][b]);
    };
    auto pow_idx = [&](unsigned long a, const mpz_class& e) {
        const OrderResult ord = element_order(G, GroupElement(Family::FiniteByTable, a));
        unsigned long r = mpz_class(e % ord.order).get_ui();
        unsigned long acc = 0;
        for (unsigned long i = 0; i < r; ++i) acc = mul(acc, a);
        return acc;
    };

    Remark1Audit out;
    out.k = fga.k;
    mpz_ui_pow_ui(out.n_claimed.get_mpz_t(), fga.k, fga.k);

    out.holds_uniformly = true;
    for (unsigned long g = 0; g < n && out.holds_uniformly; ++g)
        for (unsigned long h = 0; h < n; ++h) {
            const unsigned long hn = pow_idx(h, out.n_claimed);
            if (mul(g, hn) != mul(hn, g)) {
                out.holds_uniformly = false;
                out.has_counterexample = true;
                out.ce_g = g;
                out.ce_h = h;
                break;
            }
        }

    std::vector<bool> central(n, false);
    for (unsigned long b : fga.center) central[b] = true;
    for (unsigned long cand = 1; cand <= fga.exponent; ++cand) {
        bool ok = true;
        for (unsigned long h = 0; h < n && ok; ++h) ok = central[pow_idx(h, mpz_class(cand))];
        if (ok) {
            out.minimal_uniform_n = cand;
            break;
        }
    }
    return out;
}

/* ------------------------------------------------------------------ */
/*  Degree alignment                                                   */
/* ------------------------------------------------------------------ */

struct AlignmentResult {
    bool found = false;
    std::vector<mpz_class> k_steps;  // k_i aligning h_i with h_{i+1}
    mpz_class k;                     // product of the k_i
    std::size_t failed_index = 0;    // pair index when !found
    unsigned long bound = 0;
};

/**
 * For consecutive pairs finds the least k_i <= step_bound with
 * h_i^{k_i} = h_{i+1}^{k_i}; k = prod k_i then satisfies
 * h_1^k = ... = h_n^k (equal elements stay equal under powering).
 */
inline AlignmentResult degree_alignment(const Group& G, const std::vector<GroupElement>& h_list,
                                        unsigned long step_bound) {
    if (h_list.empty()) throw std::invalid_argument("degree_alignment: empty list");
    AlignmentResult out;
    out.bound = step_bound;
    out.k = 1;
    for (std::size_t i = 0; i + 1 < h_list.size(); ++i) {
        GroupElement a = identity(G), b = identity(G);
        bool step_found = false;
        for (unsigned long cand = 1; cand <= step_bound; ++cand) {
            a = multiply(G, a, h_list[i]);
            b = multiply(G, b, h_list[i + 1]);
            if (a == b) {
                out.k_steps.emplace_back(cand);
                out.k *= cand;
                step_found = true;
                break;
            }
        }
        if (!step_found) {
            out.failed_index = i;
            return out;
        }
    }
    out.found = true;
    // the common-power equality re-verified exactly
    const GroupElement ref = power(G, h_list.front(), out.k);
    for (const auto& h : h_list)
        if (power(G, h, out.k) != ref)
            throw std::logic_error("degree_alignment: common-power verification failed");
    return out;
}

/* ------------------------------------------------------------------ */
/*  Noncommuting partners                                              */
/* ------------------------------------------------------------------ */

struct PartnerResult {
    bool found = false;
    GroupElement partner;
    std::string note;  // why none exists, when structural
};

/**
 * Finds h with g h != h g.  For the dihedral product the partner is
 * constructed coordinatewise (the center is trivial); elsewhere the word
 * ball is scanned.  found = false with a note means no partner exists.
 */
inline PartnerResult noncommuting_partner(const Group& G, const GroupElement& g,
                                          unsigned radius = 3) {
    check_family(G, g, "noncommuting_partner");
    PartnerResult out;
    if (G.family() == Family::DihedralProduct) {
        const auto& d = g.as_dprod();
        for (const auto& [coord, c] : d.exceptions) {
            if (c.flip) {
                // a flip inverts the rotation r at its own coordinate
                out.found = true;
                out.partner = generator(G, "r" + std::to_string(coord));
                return out;
            }
            if (c.amount != 0) {
                out.found = true;
                out.partner = generator(G, "f" + std::to_string(coord));
                return out;
            }
        }
        if (d.tail != 0) {
            // beyond |tail| the residue tail mod (2c+1) is the tail itself, hence
            // nonzero; skip coordinates masked by exceptions
            long coord = static_cast<long>(mpz_class(abs(d.tail)).get_ui());
            while (d.exceptions.count(coord)) ++coord;
            out.found = true;
            out.partner = generator(G, "f" + std::to_string(coord));
            return out;
        }
        out.note = "the identity commutes with everything";
        return out;
    }
    for (const auto& h : word_ball(G, radius))
        if (multiply(G, g, h) != multiply(G, h, g)) {
            out.found = true;
            out.partner = h;
            return out;
        }
    out.note = "no partner within radius " + std::to_string(radius) +
               "; the element is central there";
    return out;
}

} // namespace goldie

/*
 * Acceptance gate: one pass/fail line per criterion, each with a wall-time
 * budget.  Run with no arguments for the full gate, or with a criterion
 * number to run just that one.  Exit 0 iff every selected criterion passes.
 */

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <goldie/suites.hpp>

using namespace goldie;

namespace {

struct Criterion {
    int number;
    std::string description;
    long budget_ms;
    std::function<bool(std::ostream&)> body;
};

bool criterion_gradings(std::ostream& out) {
    const FieldSpec Q = FieldSpec::rationals();
    const std::vector<RingInstance> instances = {
        RingInstance::nastasescu(Q),
        RingInstance::graded_poly(Q),
        RingInstance::dihedral_counterexample(Q),
        RingInstance::bs_counterexample(Q),
        RingInstance::matrix_laurent(Q, Group::infinite_dihedral(),
                                     generator(Group::infinite_dihedral(), "s"),
                                     generator(Group::infinite_dihedral(), "r")),
        RingInstance::matrix_field(Q, Group::z2(), identity(Group::z2())),
        RingInstance::bazhenov(Q),
        RingInstance::group_algebra(Q, Group::z2()),
        RingInstance::group_algebra(Q, Group::s3()),
        RingInstance::group_algebra(Q, Group::q8()),
        RingInstance::direct_sum_laurent(Q),
    };
    bool ok = true;
    for (const auto& R : instances) {
        const auto t0 = std::chrono::steady_clock::now();
        const GradingAuditReport a = grading_axiom_audit(R, 1000, 6, 0);
        const long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
        if (!a.passed || a.samples != 1000 || ms >= 5000) {
            out << "    " << R.describe() << ": " << (a.passed ? "over budget" : a.violation)
                << " (" << ms << " ms)\n";
            ok = false;
        }
    }
    if (ok) out << "    " << instances.size() << " instances, 1000 sampled pairs each\n";
    return ok;
}

bool census_classifies(std::ostream& out, const RingInstance& R) {
    const CensusReport census = regular_census(R, 6, 3);
    if (!census.exhaustive_verdicts()) {
        out << "    census left " << census.bounded_regular << " shapes unresolved\n";
        return false;
    }
    bool ok = true;
    for (const auto& s : census.shapes) {
        if (s.certificate.is_unit()) {
            if (!detail::scalar_diagonal_at_identity(R, s)) {
                out << "    unit outside the scalar diagonals at the identity degree: "
                    << element_str(R, s.representative) << " at degree "
                    << to_string(R.group(), s.degree) << "\n";
                ok = false;
            }
            continue;
        }
        if (!s.certificate.is_zero_divisor()) {
            out << "    unclassified shape " << element_str(R, s.representative) << "\n";
            ok = false;
            continue;
        }
        const GradedElement& w = *s.certificate.witness;
        const GradedElement prod = s.certificate.witness_side == Side::Right
                                       ? ring_mul(R, s.representative, w)
                                       : ring_mul(R, w, s.representative);
        if (is_zero(w) || !is_zero(prod)) {
            out << "    zero-divisor witness fails for " << element_str(R, s.representative)
                << "\n";
            ok = false;
        }
    }
    if (ok)
        out << "    " << census.shapes.size() << " shapes: " << census.units << " units, "
            << census.zero_divisors << " zero divisors\n";
    return ok;
}

bool criterion_dihedral_census(std::ostream& out) {
    return census_classifies(out, RingInstance::dihedral_counterexample(FieldSpec::rationals()));
}

bool criterion_bs_census(std::ostream& out) {
    const FieldSpec Q = FieldSpec::rationals();
    bool ok = census_classifies(out, RingInstance::bs_counterexample(Q));
    const Group B = Group::baumslag_solitar_12();
    const SearchOutcome o =
        conjugate_power_obstruction(B, generator(B, "b"), generator(B, "a"), 50, 50);
    if (o.found() || !o.proven) {
        out << "    conjugate-power obstruction not certified\n";
        ok = false;
    } else {
        out << "    obstruction certificate: " << o.certificate << "\n";
    }
    return ok;
}

bool criterion_nastasescu(std::ostream& out) {
    const FieldSpec Q = FieldSpec::rationals();
    const RingInstance N = RingInstance::nastasescu(Q);
    const GradedElement x = int_term(N, 1, FieldValue::one(Q));
    bool ok = true;

    const CensusReport census = regular_census(N, 10, 3);
    const auto regular = census.regular_shapes();
    if (!census.exhaustive_verdicts() || census.units != 1 || regular.size() != 1 ||
        !(regular[0]->degree == identity(N.group()))) {
        out << "    census did not pin the units to the nonzero constants\n";
        ok = false;
    }

    const ChainReport chain = descending_chain_report(N, x, 10);
    if (!chain.strict_throughout || chain.stabilized_at || chain.steps != 10) {
        out << "    principal chain from x not strict for 10 steps: " << chain.note << "\n";
        ok = false;
    }

    const RingInstance S = RingInstance::direct_sum_laurent(Q);
    const EmbeddingAudit emb = nastasescu_embedding_audit(N, S, 5, 500, 0);
    if (!emb.all_hold()) {
        out << "    embedding audit failed: " << emb.failure_example << "\n";
        ok = false;
    }

    const EFaithfulReport probe = e_faithful_probe(N, x);
    const GradedElement y = int_term(N, -1, FieldValue::one(Q));
    if (probe.passed || !is_zero(ring_mul(N, x, y)) || !is_zero(ring_mul(N, y, x))) {
        out << "    pairing against the inverse degree did not degenerate at x\n";
        ok = false;
    } else {
        out << "    x annihilates the whole component spanned by y on both sides\n";
    }
    return ok;
}

bool criterion_klyachko(std::ostream& out) {
    const Group D = Group::dihedral_product();
    bool ok = true;

    if (klyachko_exponent(D, identity(D)) != 2 ||
        klyachko_exponent(D, dprod_element({{1, {0, true}}}, 0)) != 6 ||
        klyachko_exponent(D, dprod_element({{1, {0, true}}, {2, {0, true}}}, 0)) != 30) {
        out << "    closed-form exponent disagrees on the pinned examples\n";
        ok = false;
    }

    std::mt19937_64 rng(0x51ab);
    for (int it = 0; it < 100; ++it) {
        const GroupElement g = detail::rand_dprod_elt(rng, 3);
        const GroupElement h = detail::rand_dprod_elt(rng, 3);
        if (!klyachko_verify(D, g, h)) {
            out << "    exponent formula failed for g = " << to_string(D, g)
                << ", h = " << to_string(D, h) << "\n";
            ok = false;
            break;
        }
    }

    const OrderResult tail = element_order(D, dprod_element({}, 1), 10);
    if (!tail.is_infinite() || tail.certificate.empty()) {
        out << "    tail element order not certified infinite structurally\n";
        ok = false;
    }

    for (int it = 0; it < 50; ++it) {
        const GroupElement g = detail::rand_dprod_elt(rng, 3);
        if (g == identity(D)) continue;
        const PartnerResult p = noncommuting_partner(D, g);
        if (!p.found || multiply(D, g, p.partner) == multiply(D, p.partner, g)) {
            out << "    no noncommuting partner for " << to_string(D, g) << "\n";
            ok = false;
            break;
        }
    }
    if (ok) out << "    100 exponent pairs, pinned closed forms, 50 partners\n";
    return ok;
}

bool criterion_star_induction(std::ostream& out) {
    const Group B = Group::baumslag_solitar_12();
    const StarInductionReport bs =
        star_induction_check(B, generator(B, "a"), generator(B, "b"), 1, 2, 5);
    const Group S = Group::s3();
    const StarInductionReport s3 =
        star_induction_check(S, generator(S, "b"), generator(S, "a"), 1, 2, 3);
    if (!bs.all_pass || !s3.all_pass) {
        out << "    induction failed at depth " << (bs.all_pass ? s3.first_failure : bs.first_failure)
            << "\n";
        return false;
    }
    out << "    BS(1,2) depths 1..5 and S3 depths 1..3 verified exactly\n";
    return true;
}

bool criterion_uniform_exponent(std::ostream& out) {
    const Remark1Audit q8 = remark1_bound_audit(Group::q8());
    bool ok = true;
    if (!(q8.k == 2 && q8.n_claimed == 4 && q8.holds_uniformly)) {
        out << "    Q8: expected the claimed exponent 4 to hold over all 64 pairs\n";
        ok = false;
    }
    const Remark1Audit s3 = remark1_bound_audit(Group::s3());
    if (!(s3.k == 3 && s3.n_claimed == 27 && !s3.holds_uniformly && s3.has_counterexample &&
          s3.minimal_uniform_n == 6)) {
        out << "    S3: expected a counterexample pair and minimal uniform exponent 6\n";
        ok = false;
    } else {
        const Group S = Group::s3();
        out << "    S3 witness pair: ("
            << to_string(S, GroupElement(Family::FiniteByTable, s3.ce_g)) << ", "
            << to_string(S, GroupElement(Family::FiniteByTable, s3.ce_h))
            << "); minimal uniform exponent 6\n";
    }
    return ok;
}

bool criterion_module_homs(std::ostream& out) {
    const RingInstance R = RingInstance::dihedral_counterexample(FieldSpec::rationals());
    const ModuleAuditReport a = module_audit(R, 200, 8, 0);
    if (!a.all_hold() || a.samples != 200 || a.entry_degree_bound != 8) {
        out << "    " << a.failure_example << "\n";
        return false;
    }
    out << "    four corner maps: additive, right-linear, degree shift verified on 200 samples\n";
    return true;
}

bool criterion_gs_examples(std::ostream& out) {
    const FieldSpec Q = FieldSpec::rationals();
    bool ok = true;

    const Group Z2 = Group::z2();
    const RingInstance M = RingInstance::matrix_field(Q, Z2, identity(Z2));
    const LaurentPoly one = LaurentPoly::constant(FieldValue::one(Q));
    const GradedElement e11 = matrix_unit(M, 0, 0, one), e22 = matrix_unit(M, 1, 1, one);
    const GSCandidateSet mu = gs_candidate_build(
        M, {e11, e22}, {matrix_unit(M, 1, 0, one), matrix_unit(M, 0, 1, one)});
    if (!(mu.aligned && mu.k == 1 && mu.d == ring_one(M) && mu.certificate.is_unit() &&
          mu.d_list.size() == 2 && mu.d_list[0] == e11 && mu.d_list[1] == e22)) {
        out << "    matrix-units example did not produce d_1 = e11, d_2 = e22, d = identity\n";
        ok = false;
    }

    const RingInstance P = RingInstance::graded_poly(Q);
    const GSCandidateSet poly =
        gs_candidate_build(P, {int_term(P, 1, FieldValue::one(Q))}, {ring_one(P)});
    if (!(poly.aligned && element_str(P, poly.d) == "t^2" && poly.containment_ok &&
          poly.annihilator_ok && !poly.certificate.is_zero_divisor())) {
        out << "    polynomial example did not certify t^2 as regular\n";
        ok = false;
    }
    if (ok) out << "    d = 1 (global unit) and d = t^2 (no zero divisor in the window)\n";
    return ok;
}

bool criterion_simplicity(std::ostream& out) {
    const Group G = Group::infinite_dihedral();
    const RingInstance L = RingInstance::matrix_laurent(FieldSpec::rationals(), G,
                                                        generator(G, "s"), generator(G, "r"));
    const SimplicityProbeReport p = gr_simplicity_probe(L, 50, 4, 0);
    if (!p.all_verified || p.samples != 50) {
        out << "    only " << p.verified << "/" << p.samples << " samples reconstructed 1\n";
        return false;
    }
    out << "    50/50 ideals regenerate 1; e.g. " << p.example << "\n";
    return true;
}

bool criterion_determinism(std::ostream& out) {
    SuiteSpec spec;
    spec.suite = "all";
    const Report first = run_suite(spec);
    const Report second = run_suite(spec);
    const std::string a = first.to_json().dump(2);
    const std::string b = second.to_json().dump(2);
    if (a != b) {
        out << "    two runs with seed 0 rendered different JSON\n";
        return false;
    }
    if (first.exit_code() != 0) {
        out << "    the full suite did not exit cleanly (code " << first.exit_code() << ")\n";
        return false;
    }
    out << "    " << first.checks.size() << " checks, " << a.size()
        << " bytes, byte-identical across runs\n";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "grading law holds on 1000 sampled pairs per instance", 5000 * 11, criterion_gradings},
        {2, "dihedral census: units are scalar diagonals at e, rest are zero divisors", 60000,
         criterion_dihedral_census},
        {3, "BS(1,2) census classifies fully and the conjugate-power obstruction is certified",
         60000, criterion_bs_census},
        {4, "constants-only units, strict chain, embedding, degenerate pairing", 30000,
         criterion_nastasescu},
        {5, "commuting exponent formula, infinite-order tail, noncommuting partners", 20000,
         criterion_klyachko},
        {6, "iterated conjugation identities hold exactly", 1000, criterion_star_induction},
        {7, "uniform exponent claim audited on Q8 and S3", 1000, criterion_uniform_exponent},
        {8, "corner module maps: additivity, right-linearity, degree shift", 10000,
         criterion_module_homs},
        {9, "regular-candidate constructions on matrix units and polynomials", 1000,
         criterion_gs_examples},
        {10, "Laurent overring regenerates 1 from sampled homogeneous ideals", 30000,
         criterion_simplicity},
        {11, "full suite JSON is byte-identical across runs at a fixed seed", 60000,
         criterion_determinism},
    };

    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& cr : criteria) {
        if (selected != 0 && cr.number != selected) continue;
        std::ostringstream detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = cr.body(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        const long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
        if (ms >= cr.budget_ms) {
            detail << "    over time budget: " << ms << " ms >= " << cr.budget_ms << " ms\n";
            ok = false;
        }
        std::cout << "criterion " << cr.number << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << cr.description << " (" << ms << " ms)\n"
                  << detail.str();
        if (!ok) ++failures;
    }
    if (selected == 0)
        std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                                    : "acceptance: " + std::to_string(failures) +
                                          " criteria failing\n");
    return failures == 0 ? 0 : 1;
}

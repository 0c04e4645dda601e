#include <catch2/catch_amalgamated.hpp>

#include <goldie/quotient.hpp>

#include "test_util.hpp"

using namespace goldie;

namespace {

const FieldSpec Q = FieldSpec::rationals();

LaurentPoly lp(long c, long n) { return LaurentPoly::monomial(FieldValue(Q, c), n); }
LaurentPoly zero_lp() { return LaurentPoly(Q); }

} // namespace

TEST_CASE("fraction with a period-two denominator lands over the identity component") {
    const RingInstance R = RingInstance::group_algebra(Q, Group::z2());
    const GradedElement one = ring_one(R);
    const GradedElement u = group_term(R, generator(R.group(), "u"), FieldValue::one(Q));

    const FractionReport rep = fraction_normalize_periodic(R, one, u);
    CHECK(rep.k == 2);
    CHECK(element_str(R, rep.fraction.numerator) == "u");
    CHECK(rep.fraction.denominator == one);
    CHECK(rep.denominator_in_identity);
    CHECK(rep.cross_identity);
}

TEST_CASE("denominator already in the identity component keeps k = 1") {
    const RingInstance N = RingInstance::nastasescu(Q);
    const GradedElement x = int_term(N, 1, FieldValue::one(Q));
    const GradedElement two = int_term(N, 0, FieldValue(Q, 2));

    const FractionReport rep = fraction_normalize_periodic(N, x, two);
    CHECK(rep.k == 1);
    CHECK(rep.fraction.numerator == x);
    CHECK(rep.fraction.denominator == two);
    CHECK(rep.denominator_in_identity);
    CHECK(rep.cross_identity);
}

TEST_CASE("fraction normalization over the symmetric-group algebra") {
    const RingInstance R = RingInstance::group_algebra(Q, Group::s3());
    const GroupElement a = generator(R.group(), "a");  // the 3-cycle
    const GradedElement s = group_term(R, a, FieldValue(Q, 2));

    const FractionReport rep = fraction_normalize_periodic(R, ring_one(R), s);
    CHECK(rep.k == 3);
    CHECK(element_str(R, rep.fraction.numerator) == "4*(132)");
    CHECK(element_str(R, rep.fraction.denominator) == "8");
    CHECK(rep.denominator_in_identity);
    CHECK(rep.cross_identity);
}

TEST_CASE("fraction normalization inside the dihedral matrix instance") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);
    const GradedElement z = make_matrix(R, {{zero_lp(), lp(1, 0)}, {lp(1, 0), zero_lp()}});
    const GradedElement r = matrix_unit(R, 0, 0, lp(1, 1));  // t*e11, degree r

    const FractionReport rep = fraction_normalize_periodic(R, r, z);
    CHECK(rep.k == 2);
    CHECK(element_str(R, rep.fraction.numerator) == "[[0, t], [0, 0]]");
    CHECK(rep.fraction.denominator == ring_one(R));
    CHECK(rep.cross_identity);
}

TEST_CASE("fraction normalization rejects unusable denominators") {
    const RingInstance N = RingInstance::nastasescu(Q);
    const GradedElement x = int_term(N, 1, FieldValue::one(Q));
    const GradedElement mixed = ring_add(N, x, ring_one(N));

    CHECK_THROWS_AS(fraction_normalize_periodic(N, ring_one(N), x), InfiniteOrderDegree);
    CHECK_THROWS_AS(fraction_normalize_periodic(N, ring_one(N), mixed), NotHomogeneous);
}

TEST_CASE("exhaustive censuses certify trivial graded quotients") {
    const RingInstance D = RingInstance::dihedral_counterexample(Q);
    const CensusReport dc = regular_census(D, 6);
    const TrivialQuotientClaim dclaim = quotient_is_trivial(D, dc);
    CHECK(dclaim.trivial);
    CHECK(dclaim.unit_shapes == 2);
    CHECK(dclaim.shapes_checked == dc.shapes.size());

    const RingInstance B = RingInstance::bs_counterexample(Q);
    const CensusReport bc = regular_census(B, 6);
    const TrivialQuotientClaim bclaim = quotient_is_trivial(B, bc);
    CHECK(bclaim.trivial);
    CHECK(bclaim.unit_shapes == 1);
}

TEST_CASE("a census with bounded verdicts cannot certify the quotient") {
    const RingInstance P = RingInstance::graded_poly(Q);
    const CensusReport pc = regular_census(P, 4);
    REQUIRE(pc.bounded_regular > 0);  // powers of t stay regular in every window
    CHECK_THROWS_AS(quotient_is_trivial(P, pc), CensusInconclusive);
}

TEST_CASE("embedding of the two-variable quotient ring hits the expected pairs") {
    const RingInstance N = RingInstance::nastasescu(Q);
    const RingInstance S = RingInstance::direct_sum_laurent(Q);
    const GradedElement x = int_term(N, 1, FieldValue::one(Q));
    const GradedElement y = int_term(N, -1, FieldValue::one(Q));

    CHECK(nastasescu_embed(N, S, ring_one(N)) == ring_one(S));
    CHECK(element_str(S, nastasescu_embed(N, S, x)) == "(x | 0)");
    CHECK(element_str(S, nastasescu_embed(N, S, y)) == "(0 | y)");

    const GradedElement xp2 = ring_add(N, x, int_term(N, 0, FieldValue(Q, 2)));
    CHECK(element_str(S, nastasescu_embed(N, S, xp2)) == "(x + 2 | 2)");

    // x*y = 0 on both sides of the embedding
    CHECK(is_zero(nastasescu_embed(N, S, ring_mul(N, x, y))));
    CHECK(is_zero(ring_mul(S, nastasescu_embed(N, S, x), nastasescu_embed(N, S, y))));
}

TEST_CASE("embedding image is cut out by the matching-constant-term condition") {
    const RingInstance N = RingInstance::nastasescu(Q);
    const RingInstance S = RingInstance::direct_sum_laurent(Q);

    const GradedElement good = direct_sum_pair(
        S, LaurentPoly::monomial(FieldValue(Q, 1), 2) + LaurentPoly::constant(FieldValue(Q, 3)),
        LaurentPoly::monomial(FieldValue(Q, 1), 1) + LaurentPoly::constant(FieldValue(Q, 3)));
    REQUIRE(nastasescu_image_member(S, good));
    const GradedElement pre = nastasescu_preimage(N, S, good);
    CHECK(element_str(N, pre) == "x^2 + 3 + y");
    CHECK(nastasescu_embed(N, S, pre) == good);

    // mismatched constants are outside the image
    const GradedElement off =
        direct_sum_pair(S, LaurentPoly::constant(FieldValue(Q, 1)), LaurentPoly(Q));
    CHECK(!nastasescu_image_member(S, off));
    CHECK_THROWS_AS(nastasescu_preimage(N, S, off), std::invalid_argument);

    // negative exponents are outside the image
    const GradedElement laurent =
        direct_sum_pair(S, LaurentPoly::monomial(FieldValue(Q, 1), -1), LaurentPoly(Q));
    CHECK(!nastasescu_image_member(S, laurent));
}

TEST_CASE("embedding audit confirms a unital graded injection with known image") {
    const RingInstance N = RingInstance::nastasescu(Q);
    const RingInstance S = RingInstance::direct_sum_laurent(Q);

    const EmbeddingAudit rep = nastasescu_embedding_audit(N, S, 5, 500);
    CHECK(rep.unital);
    CHECK(rep.additive);
    CHECK(rep.multiplicative);
    CHECK(rep.graded);
    CHECK(rep.injective);
    CHECK(rep.image_characterized);
    CHECK(rep.all_hold());
    CHECK(rep.failure_example.empty());
}

TEST_CASE("shifted-ideal membership inside the dihedral matrix instance") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);

    CHECK(in_shifted_ideal(R, matrix_unit(R, 0, 0, lp(1, 1))));
    CHECK(in_shifted_ideal(R, ring_zero(R)));
    CHECK(!in_shifted_ideal(R, ring_one(R)));
    CHECK(!in_shifted_ideal(R, make_matrix(R, {{lp(1, 1), lp(1, 0)}, {zero_lp(), zero_lp()}})));

    const RingInstance L = RingInstance::matrix_laurent(
        Q, Group::infinite_dihedral(), generator(Group::infinite_dihedral(), "s"), generator(Group::infinite_dihedral(), "r"));
    CHECK_THROWS_AS(in_shifted_ideal(L, ring_one(L)), InstanceMismatch);
}

TEST_CASE("module homomorphisms strip one factor of t and relocate a row") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);
    const GradedElement A =
        make_matrix(R, {{lp(1, 1), lp(2, 1)}, {lp(3, 1), lp(4, 1)}});  // [[t,2t],[3t,4t]]

    CHECK(element_str(R, phi_apply(R, ModuleHom{0, 0}, A)) == "[[1, 2], [0, 0]]");
    CHECK(element_str(R, phi_apply(R, ModuleHom{0, 1}, A)) == "[[3, 4], [0, 0]]");
    CHECK(element_str(R, phi_apply(R, ModuleHom{1, 0}, A)) == "[[0, 0], [1, 2]]");

    const GradedElement tI = make_matrix(R, {{lp(1, 1), zero_lp()}, {zero_lp(), lp(1, 1)}});
    CHECK(element_str(R, phi_apply(R, ModuleHom{1, 1}, tI)) == "[[0, 0], [0, 1]]");

    CHECK_THROWS_AS(phi_apply(R, ModuleHom{0, 0}, ring_one(R)), NotInIdeal);
}

TEST_CASE("module homomorphisms commute with right multiplication") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);
    const GradedElement A = matrix_unit(R, 0, 1, lp(1, 1));      // t*e12
    const GradedElement r = matrix_unit(R, 1, 0, lp(1, 0));      // e21

    const ModuleHom phi{0, 0};
    const GradedElement lhs = phi_apply(R, phi, ring_mul(R, A, r));
    const GradedElement rhs = ring_mul(R, phi_apply(R, phi, A), r);
    CHECK(lhs == rhs);
    CHECK(element_str(R, lhs) == "[[1, 0], [0, 0]]");
}

TEST_CASE("module homomorphisms shift degrees by the degree of their multiplier") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);
    const Group& G = R.group();
    const GroupElement rr = generator(G, "r"), s = generator(G, "s");

    CHECK(module_hom_degree(R, ModuleHom{0, 0}) == power(G, rr, -1));
    CHECK(module_hom_degree(R, ModuleHom{1, 0}) == multiply(G, s, power(G, rr, -1)));

    const GradedElement H = matrix_unit(R, 0, 0, lp(1, 1));  // t*e11, degree r
    const GradedElement img = phi_apply(R, ModuleHom{1, 0}, H);
    REQUIRE(degree_of(R, img));
    CHECK(*degree_of(R, img) == s);
    CHECK(*degree_of(R, img) ==
          multiply(G, module_hom_degree(R, ModuleHom{1, 0}), *degree_of(R, H)));
}

TEST_CASE("module audit holds over random samples") {
    const RingInstance R = RingInstance::dihedral_counterexample(Q);
    const ModuleAuditReport rep = module_audit(R, 200);
    CHECK(rep.ideal_enforced);
    CHECK(rep.additive);
    CHECK(rep.right_linear);
    CHECK(rep.degree_shift_ok);
    CHECK(rep.all_hold());
    CHECK(rep.failure_example.empty());
    CHECK(rep.entry_degree_bound == 8);

    const RingInstance B = RingInstance::bs_counterexample(Q);
    const ModuleAuditReport brep = module_audit(B, 200);
    CHECK(brep.ideal_enforced);
    CHECK(brep.additive);
    CHECK(brep.right_linear);
    CHECK(brep.degree_shift_ok);
}

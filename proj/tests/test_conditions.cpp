#include <catch2/catch_amalgamated.hpp>

#include <goldie/conditions.hpp>

#include "test_util.hpp"

using namespace goldie;

TEST_CASE("commutation witnesses in abelian groups are immediate") {
    const Group f = Group::free_abelian(2);
    const GroupElement g = generator(f, "g1");
    const GroupElement h = generator(f, "g2");
    const SearchOutcome w = cond2_witness(f, g, h, 10);
    REQUIRE(w.found());
    CHECK(w.n == 1);
    const SearchOutcome w2 = cond2prime_witness(f, g, h, 10, 10);
    REQUIRE(w2.found());
    CHECK(w2.m == 1);
    CHECK(w2.n == 1);
}

TEST_CASE("flip against tail needs the full odd modulus") {
    const Group G = Group::dihedral_product();
    const GroupElement g = generator(G, "f1");
    const GroupElement h = generator(G, "tail");
    const SearchOutcome w = cond2_witness(G, g, h, 10);
    REQUIRE(w.found());
    // h^n rotates coordinate 1 by n mod 3; the flip only commutes with 0
    CHECK(w.n == 3);
}

TEST_CASE("reflection never commutes with rotation powers") {
    const Group G = Group::infinite_dihedral();
    const SearchOutcome w = cond2_witness(G, generator(G, "s"), generator(G, "r"), 1000);
    CHECK(w.exhausted());
    CHECK(w.bound_n == 1000);
    const SearchOutcome w2 = cond2prime_witness(G, generator(G, "s"), generator(G, "r"), 100, 100);
    CHECK(w2.exhausted());
}

TEST_CASE("scaling satisfies the asymmetric condition with doubled exponent") {
    const Group G = Group::baumslag_solitar_12();
    const SearchOutcome w = cond2prime_witness(G, generator(G, "a"), generator(G, "b"), 20, 20);
    REQUIRE(w.found());
    CHECK(w.m == 1);
    CHECK(w.n == 2);
    // the symmetric condition fails for the same pair
    CHECK(cond2_witness(G, generator(G, "a"), generator(G, "b"), 64).exhausted());
}

TEST_CASE("commuting exponent formula over the dihedral product") {
    const Group G = Group::dihedral_product();
    CHECK(klyachko_exponent(G, generator(G, "f1")) == 6);       // 2 * 3
    CHECK(klyachko_exponent(G, generator(G, "r1")) == 2);       // no flips
    CHECK(klyachko_exponent(G, identity(G)) == 2);
    const GroupElement g = multiply(G, generator(G, "f1"), generator(G, "f2"));
    CHECK(klyachko_exponent(G, g) == 30);                       // 2 * 3 * 5
    CHECK_THROWS_AS(klyachko_exponent(Group::integers(), identity(Group::integers())),
                    FamilyMismatch);
}

TEST_CASE("commuting exponent verifies against random elements") {
    const Group G = Group::dihedral_product();
    std::mt19937_64 rng(8128);
    auto rand_elt = [&]() {
        std::map<long, detail::DihCoord> exc;
        const int n_exc = static_cast<int>(testutil::rand_long(rng, 0, 5));
        for (int i = 0; i < n_exc; ++i) {
            const long coord = testutil::rand_long(rng, 1, 5);
            exc[coord] = detail::DihCoord{testutil::rand_long(rng, 0, 2 * coord),
                                          testutil::rand_bool(rng)};
        }
        return dprod_element(std::move(exc), testutil::rand_long(rng, -3, 3));
    };
    for (int trial = 0; trial < 400; ++trial) {
        const GroupElement g = rand_elt();
        const GroupElement h = rand_elt();
        CHECK(klyachko_verify(G, g, h));
    }
}

TEST_CASE("iterated conjugation identity") {
    const Group bs = Group::baumslag_solitar_12();
    const StarInductionReport r1 =
        star_induction_check(bs, generator(bs, "a"), generator(bs, "b"), 1, 2, 5);
    CHECK(r1.all_pass);

    const Group s3 = Group::s3();
    const StarInductionReport r2 =
        star_induction_check(s3, generator(s3, "b"), generator(s3, "a"), 1, 2, 3);
    CHECK(r2.all_pass);

    // commuting pair, m = n = 1
    const Group z = Group::integers();
    CHECK(star_induction_check(z, generator(z, "g"), generator(z, "g"), 1, 1, 6).all_pass);

    // premise failure is loud
    CHECK_THROWS_AS(star_induction_check(s3, generator(s3, "a"), generator(s3, "b"), 1, 1, 2),
                    PremiseViolated);
}

TEST_CASE("conjugate power obstruction holds structurally for reflections") {
    const Group G = Group::infinite_dihedral();
    const SearchOutcome o =
        conjugate_power_obstruction(G, generator(G, "s"), generator(G, "r"), 50, 50);
    CHECK(o.exhausted());
    CHECK(o.proven);
    CHECK(o.certificate.find("inverts rotations") != std::string::npos);
}

TEST_CASE("conjugate power obstruction holds structurally for translations vs scalings") {
    const Group G = Group::baumslag_solitar_12();
    const SearchOutcome o =
        conjugate_power_obstruction(G, generator(G, "b"), generator(G, "a"), 30, 30);
    CHECK(o.exhausted());
    CHECK(o.proven);
    CHECK(o.certificate.find("translation part") != std::string::npos);
}

TEST_CASE("conjugate power obstruction reports violations in abelian groups") {
    const Group z = Group::integers();
    const SearchOutcome o =
        conjugate_power_obstruction(z, generator(z, "g"), generator(z, "g"), 5, 5);
    REQUIRE(o.violation());
    CHECK(o.m == 1);
    CHECK(o.n == 1);
}

TEST_CASE("finite group analysis of the symmetric group") {
    const FiniteGroupAnalysis a = finite_group_analysis(Group::s3());
    CHECK(a.k == 3);
    CHECK(a.commutator_subgroup == std::vector<unsigned long>{0, 1, 2});  // e,(123),(132)
    CHECK(a.center == std::vector<unsigned long>{0});
    CHECK(a.index_cent_derived == 2);
    CHECK(a.index_bound == 9);
    CHECK(a.index_bound_holds);
    CHECK(a.exponent == 6);
}

TEST_CASE("finite group analysis of the quaternions") {
    const FiniteGroupAnalysis a = finite_group_analysis(Group::q8());
    CHECK(a.k == 2);
    CHECK(a.commutator_subgroup == std::vector<unsigned long>{0, 1});  // 1, -1
    CHECK(a.center == std::vector<unsigned long>{0, 1});
    CHECK(a.index_cent_derived == 1);
    CHECK(a.exponent == 4);
}

TEST_CASE("finite group analysis of an abelian group") {
    const FiniteGroupAnalysis a = finite_group_analysis(Group::z2());
    CHECK(a.k == 1);
    CHECK(a.commutator_subgroup == std::vector<unsigned long>{0});
    CHECK(a.index_cent_derived == 1);
    CHECK(a.index_bound == 1);
    CHECK(a.index_bound_holds);
}

TEST_CASE("uniform exponent audit finds the failure in the symmetric group") {
    const Remark1Audit a = remark1_bound_audit(Group::s3());
    CHECK(a.k == 3);
    CHECK(a.n_claimed == 27);
    CHECK_FALSE(a.holds_uniformly);
    REQUIRE(a.has_counterexample);
    // first failing pair in scan order: g=(123), h=(12)
    CHECK(a.ce_g == 1);
    CHECK(a.ce_h == 3);
    CHECK(a.minimal_uniform_n == 6);
}

TEST_CASE("uniform exponent audit passes for the quaternions") {
    const Remark1Audit a = remark1_bound_audit(Group::q8());
    CHECK(a.k == 2);
    CHECK(a.n_claimed == 4);
    CHECK(a.holds_uniformly);
    CHECK_FALSE(a.has_counterexample);
    CHECK(a.minimal_uniform_n == 2);
}

TEST_CASE("uniform exponent audit is trivial for abelian groups") {
    const Remark1Audit a = remark1_bound_audit(Group::z2());
    CHECK(a.k == 1);
    CHECK(a.n_claimed == 1);
    CHECK(a.holds_uniformly);
    CHECK(a.minimal_uniform_n == 1);
}

TEST_CASE("degree alignment on equal and conjugate degrees") {
    const Group s3 = Group::s3();
    const GroupElement a = generator(s3, "a");
    const AlignmentResult same = degree_alignment(s3, {a, a, a}, 10);
    REQUIRE(same.found);
    CHECK(same.k == 1);

    const AlignmentResult cube = degree_alignment(s3, {a, power(s3, a, 2)}, 10);
    REQUIRE(cube.found);
    CHECK(cube.k_steps == std::vector<mpz_class>{3});
    CHECK(cube.k == 3);
}

TEST_CASE("degree alignment fails for a rotation and its inverse") {
    const Group G = Group::infinite_dihedral();
    const GroupElement r = generator(G, "r");
    const AlignmentResult out = degree_alignment(G, {r, inverse(G, r)}, 50);
    CHECK_FALSE(out.found);
    CHECK(out.failed_index == 0);
    CHECK(out.bound == 50);
}

TEST_CASE("noncommuting partners exist away from the center") {
    const Group G = Group::dihedral_product();
    const GroupElement f1 = generator(G, "f1");
    const PartnerResult p = noncommuting_partner(G, f1);
    REQUIRE(p.found);
    CHECK(multiply(G, f1, p.partner) != multiply(G, p.partner, f1));

    const GroupElement tail = generator(G, "tail");
    const PartnerResult q = noncommuting_partner(G, tail);
    REQUIRE(q.found);
    CHECK(multiply(G, tail, q.partner) != multiply(G, q.partner, tail));

    CHECK_FALSE(noncommuting_partner(G, identity(G)).found);
    CHECK_FALSE(noncommuting_partner(Group::integers(), generator(Group::integers(), "g")).found);

    const Group s3 = Group::s3();
    const PartnerResult r = noncommuting_partner(s3, generator(s3, "a"));
    REQUIRE(r.found);
}

TEST_CASE("center of the dihedral product is trivial") {
    const Group G = Group::dihedral_product();
    std::mt19937_64 rng(55440);
    for (int trial = 0; trial < 300; ++trial) {
        std::map<long, detail::DihCoord> exc;
        const int n_exc = static_cast<int>(testutil::rand_long(rng, 0, 4));
        for (int i = 0; i < n_exc; ++i) {
            const long coord = testutil::rand_long(rng, 1, 6);
            exc[coord] = detail::DihCoord{testutil::rand_long(rng, 0, 2 * coord),
                                          testutil::rand_bool(rng)};
        }
        const GroupElement g = dprod_element(std::move(exc), testutil::rand_long(rng, -5, 5));
        if (g == identity(G)) continue;
        const PartnerResult p = noncommuting_partner(G, g);
        REQUIRE(p.found);
        CHECK(multiply(G, g, p.partner) != multiply(G, p.partner, g));
    }
}

TEST_CASE("found witnesses reverify and relate across conditions") {
    std::mt19937_64 rng(1729);
    const std::vector<Group> groups = {Group::s3(), Group::q8(), Group::d4(), Group::a4(),
                                       Group::baumslag_solitar_12()};
    for (const Group& G : groups) {
        const auto gens = generators(G);
        auto rand_elt = [&]() {
            GroupElement x = identity(G);
            for (int i = 0; i < 3; ++i) {
                const auto& [_, e] = gens[static_cast<std::size_t>(
                    testutil::rand_long(rng, 0, static_cast<long>(gens.size()) - 1))];
                x = multiply(G, x, testutil::rand_bool(rng) ? e : inverse(G, e));
            }
            return x;
        };
        for (int trial = 0; trial < 60; ++trial) {
            const GroupElement g = rand_elt(), h = rand_elt();
            const SearchOutcome w = cond2_witness(G, g, h, 30);
            if (w.found()) {
                const GroupElement hn = power(G, h, w.n);
                CHECK(multiply(G, g, hn) == multiply(G, hn, g));
                // the asymmetric form is implied
                const SearchOutcome w2 = cond2prime_witness(G, g, h, 30, 30);
                CHECK(w2.found());
                const GroupElement hm = power(G, h, w2.m);
                const GroupElement hn2 = power(G, h, w2.n);
                CHECK(multiply(G, g, hm) == multiply(G, hn2, g));
            }
        }
    }
}

TEST_CASE("finite groups always admit a symmetric witness within the exponent") {
    for (const Group& G : {Group::s3(), Group::q8(), Group::d4(), Group::a4()}) {
        const FiniteGroupAnalysis fga = finite_group_analysis(G);
        for (unsigned long i = 0; i < G.table().order; ++i)
            for (unsigned long j = 0; j < G.table().order; ++j) {
                const SearchOutcome w =
                    cond2_witness(G, GroupElement(Family::FiniteByTable, i),
                                  GroupElement(Family::FiniteByTable, j), fga.exponent);
                REQUIRE(w.found());
                CHECK(w.n <= fga.exponent);
            }
    }
}

TEST_CASE("uniform bound success implies pairwise witnesses at that exponent") {
    const Group G = Group::q8();
    const Remark1Audit audit = remark1_bound_audit(G);
    REQUIRE(audit.holds_uniformly);
    const unsigned long n = audit.n_claimed.get_ui();
    for (unsigned long i = 0; i < G.table().order; ++i)
        for (unsigned long j = 0; j < G.table().order; ++j) {
            const SearchOutcome w = cond2_witness(G, GroupElement(Family::FiniteByTable, i),
                                                  GroupElement(Family::FiniteByTable, j), n);
            REQUIRE(w.found());
        }
}

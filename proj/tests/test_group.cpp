#include <catch2/catch_amalgamated.hpp>

#include <goldie/group.hpp>

#include "test_util.hpp"

using namespace goldie;

namespace {
GroupElement parse1(const Group& g, const std::string& name, long e) {
    return power(g, generator(g, name), e);
}
} // namespace

TEST_CASE("symmetric group on three letters matches the classical table") {
    const Group g = Group::s3();
    const GroupElement a = generator(g, "a");  // (123)
    const GroupElement b = generator(g, "b");  // (12)
    CHECK(to_string(g, a) == "(123)");
    CHECK(to_string(g, b) == "(12)");
    // right factor acts first: (12) after (123)
    CHECK(to_string(g, multiply(g, b, a)) == "(23)");
    CHECK(to_string(g, multiply(g, a, b)) == "(13)");
    CHECK(multiply(g, a, inverse(g, a)) == identity(g));
    CHECK(to_string(g, power(g, a, 2)) == "(132)");
    CHECK(power(g, a, 3) == identity(g));
    CHECK(element_order(g, a).order == 3);
    CHECK(element_order(g, b).order == 2);
    CHECK(word_ball(g, 3).size() == 6);
}

TEST_CASE("quaternion group relations") {
    const Group g = Group::q8();
    const GroupElement i = generator(g, "i");
    const GroupElement j = generator(g, "j");
    const GroupElement k = multiply(g, i, j);
    CHECK(to_string(g, k) == "k");
    CHECK(to_string(g, multiply(g, j, i)) == "-k");
    CHECK(to_string(g, power(g, i, 2)) == "-1");
    CHECK(power(g, i, 4) == identity(g));
    CHECK(element_order(g, i).order == 4);
    CHECK(element_order(g, power(g, i, 2)).order == 2);
    CHECK(word_ball(g, 4).size() == 8);
}

TEST_CASE("dihedral group of the square") {
    const Group g = Group::d4();
    const GroupElement r = generator(g, "r");
    const GroupElement s = generator(g, "s");
    CHECK(element_order(g, r).order == 4);
    CHECK(element_order(g, s).order == 2);
    CHECK(conjugate(g, s, r) == power(g, r, -1));
    CHECK(word_ball(g, 4).size() == 8);
}

TEST_CASE("alternating group on four letters") {
    const Group g = Group::a4();
    const GroupElement a = generator(g, "a");  // (123)
    const GroupElement b = generator(g, "b");  // (12)(34)
    CHECK(element_order(g, a).order == 3);
    CHECK(element_order(g, b).order == 2);
    CHECK(word_ball(g, 6).size() == 12);
    // conjugating (12)(34) by (123) relabels its points: (23)(14)
    CHECK(to_string(g, conjugate(g, a, b)) == "(14)(23)");
}

TEST_CASE("group table validation rejects broken tables") {
    FiniteTable t;
    t.name = "broken";
    t.order = 2;
    t.table = {{0, 1}, {1, 1}};  // not a Latin square
    CHECK_THROWS_AS(Group::from_table(t), BadGroupTable);
    t.table = {{1, 0}, {0, 1}};  // identity not at index 0
    CHECK_THROWS_AS(Group::from_table(t), BadGroupTable);
}

TEST_CASE("integers and free abelian groups") {
    const Group z = Group::integers();
    CHECK(to_string(z, parse1(z, "g", -3)) == "g^-3");
    CHECK(element_order(z, parse1(z, "g", 2)).is_infinite());
    CHECK(element_order(z, identity(z)).order == 1);
    CHECK(word_ball(z, 3).size() == 7);

    const Group f = Group::free_abelian(2);
    const GroupElement x = normalize_word(f, {{"g1", 2}, {"g2", -1}});
    CHECK(to_string(f, x) == "g1^2 g2^-1");
    CHECK(element_order(f, x).is_infinite());
    CHECK(multiply(f, x, inverse(f, x)) == identity(f));
}

TEST_CASE("cyclic group arithmetic") {
    const Group c = Group::cyclic(6);
    const GroupElement g1 = generator(c, "g");
    CHECK(element_order(c, power(c, g1, 2)).order == 3);
    CHECK(power(c, g1, 6) == identity(c));
    CHECK(solve_power(c, power(c, g1, 2), power(c, g1, 4)).value() == 2);
    CHECK_FALSE(solve_power(c, power(c, g1, 2), power(c, g1, 3)).has_value());
}

TEST_CASE("infinite dihedral normal forms") {
    const Group g = Group::infinite_dihedral();
    const GroupElement r = generator(g, "r");
    const GroupElement s = generator(g, "s");
    // (r^2 s)(r^3 s) = r^{2-3} = r^-1
    const GroupElement lhs = multiply(g, multiply(g, power(g, r, 2), s),
                                      multiply(g, power(g, r, 3), s));
    CHECK(lhs == power(g, r, -1));
    CHECK(to_string(g, lhs) == "r^-1");
    CHECK(to_string(g, multiply(g, power(g, r, 2), s)) == "r^2 s");
    CHECK(element_order(g, s).order == 2);
    CHECK(element_order(g, multiply(g, r, s)).order == 2);
    CHECK(element_order(g, r).is_infinite());
    CHECK(conjugate(g, s, r) == power(g, r, -1));
    CHECK(word_ball(g, 2).size() == 8);
    CHECK(solve_power(g, r, power(g, r, -6)).value() == -6);
    CHECK_FALSE(solve_power(g, power(g, r, 2), power(g, r, 3)).has_value());
}

TEST_CASE("baumslag-solitar relation and normal forms") {
    const Group g = Group::baumslag_solitar_12();
    const GroupElement a = generator(g, "a");
    const GroupElement b = generator(g, "b");
    // defining relation: a b a^-1 = b^2
    CHECK(conjugate(g, a, b) == power(g, b, 2));
    // a^3 b a^-3 = b^8
    CHECK(conjugate(g, power(g, a, 3), b) == power(g, b, 8));
    // a^-1 b a translates by one half: shows up in the normal form
    CHECK(to_string(g, conjugate(g, inverse(g, a), b)) == "a^-1 b a");
    CHECK(to_string(g, multiply(g, b, a)) == "b a");
    CHECK(element_order(g, a).is_infinite());
    CHECK(element_order(g, b).is_infinite());
    CHECK(multiply(g, a, inverse(g, a)) == identity(g));
    CHECK(solve_power(g, b, power(g, b, 9)).value() == 9);
    CHECK(solve_power(g, a, power(g, a, -2)).value() == -2);
    CHECK_FALSE(solve_power(g, b, a).has_value());
    CHECK(word_ball(g, 3).size() > 10);
}

TEST_CASE("baumslag-solitar words reparse through normalize_word") {
    const Group g = Group::baumslag_solitar_12();
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<std::string, long>> word;
        const int len = static_cast<int>(testutil::rand_long(rng, 1, 6));
        for (int i = 0; i < len; ++i)
            word.emplace_back(testutil::rand_bool(rng) ? "a" : "b", testutil::rand_long(rng, -3, 3));
        const GroupElement x = normalize_word(g, word);
        // round-trip the canonical word
        std::vector<std::pair<std::string, long>> again;
        std::string rep = to_string(g, x);
        if (rep != "e") {
            std::size_t pos = 0;
            while (pos < rep.size()) {
                std::size_t sp = rep.find(' ', pos);
                if (sp == std::string::npos) sp = rep.size();
                std::string tok = rep.substr(pos, sp - pos);
                const std::size_t caret = tok.find('^');
                if (caret == std::string::npos)
                    again.emplace_back(tok, 1);
                else
                    again.emplace_back(tok.substr(0, caret), std::stol(tok.substr(caret + 1)));
                pos = sp + 1;
            }
            CHECK(normalize_word(g, again) == x);
        }
    }
}

TEST_CASE("restricted dihedral product composition") {
    const Group g = Group::dihedral_product();
    const GroupElement f1 = generator(g, "f1");
    const GroupElement r1 = generator(g, "r1");
    const GroupElement c = generator(g, "tail");
    CHECK(element_order(g, f1).order == 2);
    CHECK(element_order(g, r1).order == 3);
    CHECK(element_order(g, c).is_infinite());
    // at coordinate 1 the flip inverts the rotation
    CHECK(conjugate(g, f1, r1) == power(g, r1, -1));
    // the tail rotates coordinate 1 by 1 mod 3, so tail * r1^-1 fixes it
    const GroupElement d = multiply(g, c, power(g, r1, -1));
    CHECK(to_string(g, d) == "(1:0, tail=1)");
    // flips at different coordinates commute
    const GroupElement f2 = generator(g, "f2");
    CHECK(multiply(g, f1, f2) == multiply(g, f2, f1));
    CHECK(element_order(g, multiply(g, f1, f2)).order == 2);
    // rotation orders multiply: r1 has order 3, r2 has order 5
    const GroupElement r2 = generator(g, "r2");
    CHECK(element_order(g, multiply(g, r1, r2)).order == 15);
    CHECK(solve_power(g, c, power(g, c, 7)).value() == 7);
}

TEST_CASE("dihedral product canonical forms drop redundant exceptions") {
    const Group g = Group::dihedral_product();
    const GroupElement c = generator(g, "tail");
    const GroupElement r1 = generator(g, "r1");
    // tail=1 already rotates coordinate 1 by 1: explicit r1 on top gives amount 2
    const GroupElement x = multiply(g, c, r1);
    CHECK(to_string(g, x) == "(1:2, tail=1)");
    // multiplying tail-only elements never creates exceptions
    CHECK(to_string(g, power(g, c, 5)) == "(tail=5)");
}

TEST_CASE("direct products work componentwise") {
    const Group g = Group::direct_product(Group::s3(), Group::integers());
    const GroupElement x = pair_element(g, generator(g.left(), "a"), identity(g.right()));
    const GroupElement y = pair_element(g, identity(g.left()), generator(g.right(), "g"));
    CHECK(multiply(g, x, y) == multiply(g, y, x));
    CHECK(element_order(g, x).order == 3);
    CHECK(element_order(g, y).is_infinite());
    CHECK(to_string(g, multiply(g, x, y)) == "((123); g)");
    CHECK(solve_power(g, multiply(g, x, y), power(g, multiply(g, x, y), 5)).value() == 5);
}

TEST_CASE("unknown generators are rejected") {
    CHECK_THROWS_AS(generator(Group::integers(), "x"), UnknownGenerator);
    CHECK_THROWS_AS(generator(Group::dihedral_product(), "f0"), UnknownGenerator);
    CHECK_THROWS_AS(normalize_word(Group::s3(), {{"z", 1}}), UnknownGenerator);
}

TEST_CASE("family mismatch is detected") {
    const Group z = Group::integers();
    const Group s3 = Group::s3();
    CHECK_THROWS_AS(multiply(z, identity(z), identity(s3)), FamilyMismatch);
}

TEST_CASE("group axioms hold on random words in every family") {
    std::mt19937_64 rng(271828);
    const std::vector<Group> groups = {
        Group::integers(),      Group::free_abelian(3),
        Group::cyclic(12),      Group::s3(),
        Group::d4(),            Group::q8(),
        Group::a4(),            Group::infinite_dihedral(),
        Group::baumslag_solitar_12(),
        Group::direct_product(Group::infinite_dihedral(), Group::cyclic(4)),
    };
    for (const Group& g : groups) {
        const auto gens = generators(g);
        auto rand_elt = [&]() {
            GroupElement x = identity(g);
            const int len = static_cast<int>(testutil::rand_long(rng, 0, 5));
            for (int i = 0; i < len; ++i) {
                const auto& [_, e] = gens[static_cast<std::size_t>(
                    testutil::rand_long(rng, 0, static_cast<long>(gens.size()) - 1))];
                x = multiply(g, x, testutil::rand_bool(rng) ? e : inverse(g, e));
            }
            return x;
        };
        for (int trial = 0; trial < 120; ++trial) {
            const GroupElement a = rand_elt(), b = rand_elt(), c = rand_elt();
            CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
            CHECK(multiply(g, a, identity(g)) == a);
            CHECK(multiply(g, identity(g), a) == a);
            CHECK(multiply(g, a, inverse(g, a)) == identity(g));
            CHECK(multiply(g, inverse(g, a), a) == identity(g));
            CHECK(power(g, a, 4) == multiply(g, multiply(g, a, a), multiply(g, a, a)));
            CHECK(power(g, a, -2) == inverse(g, multiply(g, a, a)));
        }
    }
}

TEST_CASE("dihedral product axioms on random elements") {
    std::mt19937_64 rng(161803);
    const Group g = Group::dihedral_product();
    auto rand_elt = [&]() {
        std::map<long, detail::DihCoord> exc;
        const int n_exc = static_cast<int>(testutil::rand_long(rng, 0, 3));
        for (int i = 0; i < n_exc; ++i) {
            const long coord = testutil::rand_long(rng, 1, 4);
            exc[coord] = detail::DihCoord{testutil::rand_long(rng, 0, 2 * coord),
                                          testutil::rand_bool(rng)};
        }
        return dprod_element(std::move(exc), testutil::rand_long(rng, -4, 4));
    };
    for (int trial = 0; trial < 300; ++trial) {
        const GroupElement a = rand_elt(), b = rand_elt(), c = rand_elt();
        CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
        CHECK(multiply(g, a, inverse(g, a)) == identity(g));
        CHECK(multiply(g, inverse(g, a), a) == identity(g));
        const OrderResult ord = element_order(g, a, 100000);
        if (ord.is_finite()) CHECK(power(g, a, ord.order) == identity(g));
    }
}

TEST_CASE("solve_power agrees with brute force on random instances") {
    std::mt19937_64 rng(314159);
    const std::vector<Group> groups = {Group::integers(), Group::cyclic(30), Group::s3(),
                                       Group::infinite_dihedral(), Group::baumslag_solitar_12()};
    for (const Group& g : groups) {
        const auto gens = generators(g);
        auto rand_elt = [&]() {
            GroupElement x = identity(g);
            for (int i = 0; i < 3; ++i) {
                const auto& [_, e] = gens[static_cast<std::size_t>(
                    testutil::rand_long(rng, 0, static_cast<long>(gens.size()) - 1))];
                x = multiply(g, x, testutil::rand_bool(rng) ? e : inverse(g, e));
            }
            return x;
        };
        for (int trial = 0; trial < 150; ++trial) {
            const GroupElement h = rand_elt();
            const long n = testutil::rand_long(rng, -6, 6);
            const GroupElement sigma = power(g, h, n);
            const auto found = solve_power(g, h, sigma);
            REQUIRE(found.has_value());
            CHECK(power(g, h, *found) == sigma);
        }
    }
}

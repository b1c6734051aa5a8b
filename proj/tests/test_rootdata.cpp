#include "verma/rootdata.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace verma;

TEST_CASE("positive roots are listed by height then lexicographically") {
    RootDatum rd(3);
    REQUIRE(rd.positive_roots() == std::vector<Root>{{1, 2}, {2, 3}, {1, 3}});

    RootDatum rd4(4);
    REQUIRE(rd4.positive_roots() ==
            std::vector<Root>{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}});
    REQUIRE(rd4.num_gens() == 15);
}

TEST_CASE("generator order is negatives, Cartans, mirrored positives") {
    RootDatum rd(3);
    // ids: E21 E32 E31 | H1 H2 | E13 E23 E12
    REQUIRE(rd.negative_gen(Root{1, 2}) == 0);
    REQUIRE(rd.negative_gen(Root{2, 3}) == 1);
    REQUIRE(rd.negative_gen(Root{1, 3}) == 2);
    REQUIRE(rd.cartan_gen(1) == 3);
    REQUIRE(rd.cartan_gen(2) == 4);
    REQUIRE(rd.positive_gen(Root{1, 3}) == 5);
    REQUIRE(rd.positive_gen(Root{2, 3}) == 6);
    REQUIRE(rd.positive_gen(Root{1, 2}) == 7);

    const Generator& g = rd.gen(0);
    REQUIRE(g.kind == Generator::Kind::Negative);
    REQUIRE(g.row == 2);
    REQUIRE(g.col == 1);
}

TEST_CASE("mirror swaps transpose partners and fixes Cartans") {
    for (int n : {2, 3, 4}) {
        RootDatum rd(n);
        for (int id = 0; id < rd.num_gens(); ++id) {
            int m = rd.mirror(id);
            REQUIRE(rd.mirror(m) == id);
            const Generator& a = rd.gen(id);
            const Generator& b = rd.gen(m);
            if (a.kind == Generator::Kind::Cartan) {
                REQUIRE(m == id);
            } else {
                REQUIRE(a.row == b.col);
                REQUIRE(a.col == b.row);
            }
        }
    }
}

TEST_CASE("root weights in fundamental coordinates") {
    REQUIRE(root_weight(3, Root{1, 2}) == Weight({Rational(2), Rational(-1)}));
    REQUIRE(root_weight(3, Root{2, 3}) == Weight({Rational(-1), Rational(2)}));
    REQUIRE(root_weight(3, Root{1, 3}) == Weight({Rational(1), Rational(1)}));
}

TEST_CASE("coroot pairings and the delta weight") {
    Weight lam({Rational(2), Rational(3)});
    REQUIRE(lambda_on_coroot(lam, Root{1, 2}) == 2);
    REQUIRE(lambda_on_coroot(lam, Root{1, 3}) == 5);
    REQUIRE(m_alpha(lam, Root{1, 3}) == 6);
    REQUIRE(delta_weight(4) == Weight({Rational(1), Rational(1), Rational(1)}));
    REQUIRE(delta_weight(3).is_dominant_integral());
    REQUIRE_FALSE(Weight({Rational(-1), Rational(2)}).is_dominant_integral());
    REQUIRE_FALSE(Weight({Rational(1, 2)}).is_dominant_integral());
    REQUIRE(Weight({Rational(2), Rational(3)}).to_string() == "(2,3)");
    REQUIRE(Weight({Rational(1, 2)}).to_string() == "(1/2)");
}

TEST_CASE("brackets of matrix units") {
    RootDatum rd(3);
    auto gen = [&](int id) { return ChevalleyElement::generator(rd, id); };
    int e12 = rd.positive_gen(Root{1, 2}), e21 = rd.negative_gen(Root{1, 2});
    int e23 = rd.positive_gen(Root{2, 3}), e13 = rd.positive_gen(Root{1, 3});
    int h1 = rd.cartan_gen(1);

    REQUIRE(bracket(rd, gen(e12), gen(e21)) == gen(h1));
    REQUIRE(bracket(rd, gen(e12), gen(e23)) == gen(e13));
    REQUIRE(bracket(rd, gen(h1), gen(e12)) == Rational(2) * gen(e12));
    REQUIRE(bracket(rd, gen(e12), gen(e13)).is_zero());
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
    RootDatum rd(4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, rd.num_gens() - 1), coef(-2, 2);
    auto random_elem = [&] {
        ChevalleyElement x(4);
        for (int k = 0; k < 3; ++k) x.add(pick(rng), coef(rng));
        return x;
    };
    for (int trial = 0; trial < 20; ++trial) {
        ChevalleyElement x = random_elem(), y = random_elem(), z = random_elem();
        ChevalleyElement anti = bracket(rd, x, y);
        anti += bracket(rd, y, x);
        REQUIRE(anti.is_zero());
        ChevalleyElement jac = bracket(rd, x, bracket(rd, y, z));
        jac += bracket(rd, y, bracket(rd, z, x));
        jac += bracket(rd, z, bracket(rd, x, y));
        REQUIRE(jac.is_zero());
    }
}

TEST_CASE("matrix round trip and trace guard") {
    RootDatum rd(3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, rd.num_gens() - 1), coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        ChevalleyElement x(3);
        for (int k = 0; k < 4; ++k) x.add(pick(rng), coef(rng));
        REQUIRE(ChevalleyElement::from_matrix(rd, x.to_matrix(rd)) == x);
    }
    RatMatrix id3(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) id3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    REQUIRE_THROWS_AS(ChevalleyElement::from_matrix(rd, id3), std::invalid_argument);
}

TEST_CASE("flag validation") {
    REQUIRE_THROWS_AS(ParabolicCharacter(3, {}, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(ParabolicCharacter(3, {2, 1}, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(ParabolicCharacter(3, {3}, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(ParabolicCharacter(3, {1}, {1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(ParabolicCharacter(1, {1}, {1}), std::invalid_argument);
}

TEST_CASE("character diagonal coefficients and lambda") {
    // ell l_i placed at flag position n_i contributes to E_tt for t <= n_i.
    ParabolicCharacter a(3, {1}, {3});
    REQUIRE(a.diag_coeff(1) == 3);
    REQUIRE(a.diag_coeff(2) == 0);
    REQUIRE(a.diag_coeff(3) == 0);
    REQUIRE(a.lambda() == Weight({Rational(3), Rational(0)}));
    REQUIRE(a.min_flag() == 3);
    REQUIRE(a.min_all_coords() == 0);

    ParabolicCharacter b(3, {1, 2}, {2, 3});
    REQUIRE(b.diag_coeff(1) == 5);
    REQUIRE(b.diag_coeff(2) == 3);
    REQUIRE(b.diag_coeff(3) == 0);
    REQUIRE(b.lambda() == Weight({Rational(2), Rational(3)}));
    REQUIRE(b.min_flag() == 2);
    REQUIRE(b.min_all_coords() == 2);
    REQUIRE(b.is_full_flag());

    ParabolicCharacter c(4, {2}, {5});
    REQUIRE(c.diag_coeff(1) == 5);
    REQUIRE(c.diag_coeff(2) == 5);
    REQUIRE(c.diag_coeff(3) == 0);
    REQUIRE(c.lambda() == Weight({Rational(0), Rational(5), Rational(0)}));
}

TEST_CASE("character evaluation on the parabolic") {
    RootDatum rd(3);
    ParabolicCharacter pc(3, {1}, {3});
    // H_1 carries lambda_1 = 3, H_2 carries 0, root generators carry 0.
    REQUIRE(eval_character(rd, pc, ChevalleyElement::generator(rd, rd.cartan_gen(1))) == 3);
    REQUIRE(eval_character(rd, pc, ChevalleyElement::generator(rd, rd.cartan_gen(2))) == 0);
    REQUIRE(eval_character(rd, pc, ChevalleyElement::generator(rd, rd.positive_gen(Root{1, 2}))) == 0);
    // E_32 stays inside the Levi block {2,3}, so it is in p with value 0.
    REQUIRE(eval_character(rd, pc, ChevalleyElement::generator(rd, rd.negative_gen(Root{2, 3}))) == 0);
    // E_21 crosses the flag: not in p.
    REQUIRE_THROWS_AS(eval_character(rd, pc, ChevalleyElement::generator(rd, rd.negative_gen(Root{1, 2}))),
                      not_in_parabolic);
    // Linear combination of Cartans: 2 H_1 + H_2 evaluates to 2*3 + 0.
    ChevalleyElement x(3);
    x.add(rd.cartan_gen(1), 2);
    x.add(rd.cartan_gen(2), 1);
    REQUIRE(eval_character(rd, pc, x) == 6);
}

TEST_CASE("character kills commutators of the parabolic") {
    RootDatum rd(4);
    ParabolicCharacter pc(4, {2}, {5});
    std::vector<int> p_ids;
    for (int id = 0; id < rd.num_gens(); ++id)
        if (pc.gen_in_parabolic(rd.gen(id))) p_ids.push_back(id);
    for (int a : p_ids)
        for (int b : p_ids) {
            ChevalleyElement br =
                bracket(rd, ChevalleyElement::generator(rd, a), ChevalleyElement::generator(rd, b));
            REQUIRE(eval_character(rd, pc, br) == 0);
        }
}

TEST_CASE("complement roots cross the flag, in root order") {
    RootDatum rd3(3);
    REQUIRE(complement_roots(rd3, ParabolicCharacter(3, {1, 2}, {0, 0})) ==
            std::vector<Root>{{1, 2}, {2, 3}, {1, 3}});
    REQUIRE(complement_roots(rd3, ParabolicCharacter(3, {1}, {0})) == std::vector<Root>{{1, 2}, {1, 3}});

    RootDatum rd4(4);
    REQUIRE(complement_roots(rd4, ParabolicCharacter(4, {2}, {0})) ==
            std::vector<Root>{{2, 3}, {1, 3}, {2, 4}, {1, 4}});
    REQUIRE(block_of(4, {2}, 2) == 1);
    REQUIRE(block_of(4, {2}, 3) == 2);
}

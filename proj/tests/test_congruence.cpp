#include <catch2/catch_amalgamated.hpp>

#include "etaq/congruence.hpp"

using namespace etaq;

TEST_CASE("c_ell golden values") {
    REQUIRE(c_ell(5) == 26);
    REQUIRE(c_ell(7) == 104);
    REQUIRE(c_ell(11) == 2100);
    REQUIRE(c_ell(13) == 9294);
    // c_31 = 2^10 * 5^2 * 222823; in particular 1024 | c_31.
    REQUIRE(c_ell(31) == Z(5704268800));
    REQUIRE(c_ell(31) % 1024 == 0);
    REQUIRE_THROWS_AS(c_ell(4), std::domain_error);
    REQUIRE_THROWS_AS(c_ell(3), std::domain_error);
}

TEST_CASE("rational congruence predicate") {
    REQUIRE(detail::congruent(Q(26), Q(26), Z(2), 12));
    REQUIRE(detail::congruent(Q(5, 3), Q(1, 3), Z(2), 2));
    REQUIRE_FALSE(detail::congruent(Q(1), Q(2), Z(2), 1));
    REQUIRE(detail::congruent(Q(1, 5), Q(26, 5), Z(5), 0)); // v_5(-5) = 1 >= 0
}

TEST_CASE("multiplicative congruence for alpha, ell = 5 and 7") {
    CongruenceReport r5 = verify_thm_1_1(5, 60);
    REQUIRE(r5.pass());
    REQUIRE(r5.checked == 61);
    REQUIRE(r5.witnesses[0].second == 26);

    CongruenceReport r7 = verify_thm_1_1(7, 40);
    REQUIRE(r7.pass());
    REQUIRE(r7.witnesses[0].second == 104);
}

TEST_CASE("vanishing family for alpha") {
    CongruenceReport a = verify_thm_1_3(1, 7, 30);
    REQUIRE(a.pass());
    REQUIRE(a.checked == 30);

    CongruenceReport b = verify_thm_1_3(2, 7, 20);
    REQUIRE(b.pass());

    CongruenceReport c = verify_thm_1_3(3, 7, 12);
    REQUIRE(c.pass());

    CongruenceReport d = verify_thm_1_3(2, 11, 10);
    REQUIRE(d.pass());

    // ell = 5 == 1 (mod 4) never satisfies ell == -1 at the strength the
    // statement needs, for any i.
    REQUIRE_THROWS_AS(verify_thm_1_3(1, 5, 5), std::domain_error);
    REQUIRE_THROWS_AS(verify_thm_1_3(2, 5, 5), std::domain_error);
    REQUIRE_THROWS_AS(verify_thm_1_3(6, 31, 1), std::domain_error);
}

TEST_CASE("general congruence and its specializations agree") {
    for (long ell : {5L, 7L}) {
        CongruenceReport gen = verify_thm_1_4(-2, 3, 2, ell, 25);
        CongruenceReport special = verify_thm_1_1(ell, 25);
        REQUIRE(gen.pass());
        REQUIRE(special.pass());
        // The general eigenvalue witness is exactly c_ell.
        REQUIRE(gen.witnesses[0].second == special.witnesses[0].second);
        REQUIRE(gen.modulus == "2^12");
    }
}

TEST_CASE("general congruence beyond p = 2") {
    CongruenceReport r = verify_thm_1_4(-4, 3, 3, 5, 8);
    REQUIRE(r.pass());
    REQUIRE(r.modulus == "3^6");
    REQUIRE_THROWS_AS(verify_thm_1_4(2, 3, 2, 5, 5), std::domain_error); // r > 0
    REQUIRE_THROWS_AS(verify_thm_1_4(-2, 3, 4, 5, 5), std::domain_error);
}

TEST_CASE("overpartition triple through the general machinery") {
    CongruenceReport r3 = verify_thm_1_4(-2, 1, 2, 3, 12);
    REQUIRE(r3.pass());
    REQUIRE(r3.witnesses[0].second == 28);
    CongruenceReport r5 = verify_thm_1_4(-2, 1, 2, 5, 8);
    REQUIRE(r5.pass());
    REQUIRE(r5.witnesses[0].second == 126);
    CongruenceReport r7 = verify_thm_1_4(-2, 1, 2, 7, 4);
    REQUIRE(r7.pass());
    REQUIRE(r7.witnesses[0].second == 344); // ell^3 + 1
}

TEST_CASE("eigenvalue along two independent routes") {
    REQUIRE(lambda_two_ways(derive_params(-2, 3, 2, 5), 20) == std::pair<Q, Q>{26, 26});
    REQUIRE(lambda_two_ways(derive_params(-2, 3, 2, 7), 20) == std::pair<Q, Q>{104, 104});
    REQUIRE(lambda_two_ways(derive_params(-2, 3, 2, 13), 20) == std::pair<Q, Q>{9294, 9294});
    // Overpartition triples: lambda = ell^3 + 1 along both routes.
    REQUIRE(lambda_two_ways(derive_params(-2, 1, 2, 3), 20) == std::pair<Q, Q>{28, 28});
    REQUIRE(lambda_two_ways(derive_params(-2, 1, 2, 5), 20) == std::pair<Q, Q>{126, 126});
    REQUIRE(lambda_two_ways(derive_params(-2, 1, 2, 7), 20) == std::pair<Q, Q>{344, 344});
    // Parameters violating the congruence hypotheses are rejected.
    REQUIRE_THROWS_AS(lambda_two_ways(derive_params(2, 3, 2, 5), 20), std::domain_error);
}

TEST_CASE("exact series identities") {
    REQUIRE(verify_e2star_identity(200));
    REQUIRE(verify_kohler_identity(300));
    for (long p : {2L, 3L, 5L, 7L, 13L}) REQUIRE(verify_dq_phi_identity(p, 100));
}

TEST_CASE("mu mod 32 and the c_ell mod 32 pattern") {
    CongruenceReport r = verify_mu_mod32(31);
    REQUIRE(r.pass());
    REQUIRE(r.checked > 0);
    REQUIRE_THROWS_AS(verify_mu_mod32(3), std::domain_error);
}

TEST_CASE("overpartition congruence and corollary") {
    CongruenceReport r3 = verify_overpartition(3, 40);
    REQUIRE(r3.pass());
    REQUIRE(r3.witnesses[0].second == 28);
    CongruenceReport r5 = verify_overpartition(5, 20);
    REQUIRE(r5.pass());
    REQUIRE(r5.witnesses[0].second == 126);
    REQUIRE_THROWS_AS(verify_overpartition(2, 5), std::domain_error);

    CongruenceReport c3 = verify_overpartition_corollary(2, 3, 30);
    REQUIRE(c3.pass());
    REQUIRE(c3.checked == 20); // multiples of 3 skipped
    CongruenceReport c7 = verify_overpartition_corollary(3, 7, 10);
    REQUIRE(c7.pass());
    REQUIRE_THROWS_AS(verify_overpartition_corollary(3, 5, 5), std::domain_error);
}

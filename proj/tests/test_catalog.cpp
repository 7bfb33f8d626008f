#include <catch2/catch_amalgamated.hpp>

#include "psmash/catalog.hpp"
#include "test_util.hpp"

using namespace psmash;

TEST_CASE("every catalog entry constructs and passes its own checks") {
    // construction throws when a self-check fails, so reaching the end is the test
    for (const auto& info : catalog_list()) {
        INFO(info.name);
        if (info.kind == "hopf") {
            REQUIRE_NOTHROW(catalog_hopf<Rat>(info.name));
        } else if (info.kind == "skew-pair") {
            REQUIRE_NOTHROW(zn_skew_pair<Rat>(2));
        } else {
            REQUIRE_NOTHROW(catalog_bimodule<Rat>(info.name));
        }
    }
    REQUIRE_THROWS_AS(catalog_hopf<Rat>("nope"), error);
    REQUIRE_THROWS_AS(catalog_bimodule<Rat>("nope"), error);
}

TEST_CASE("catalog also constructs over a prime field") {
    Fp::set_modulus(7);
    REQUIRE_NOTHROW(sweedler_h4<Fp>());
    REQUIRE_NOTHROW(h4_dual_named<Fp>());
    REQUIRE_NOTHROW(kx_in_h4_bimodule<Fp>());
    REQUIRE_NOTHROW(central_idempotent_kz2<Fp>());
    REQUIRE_NOTHROW(skew_pair_action(zn_skew_pair<Fp>(3)));
}

TEST_CASE("catalog list carries provenance strings") {
    bool found = false;
    for (const auto& info : catalog_list())
        if (info.name == "central-idempotent-kz2") {
            found = true;
            REQUIRE(info.provenance == "§3");
        }
    REQUIRE(found);
}

TEST_CASE("H4 dual on the named basis {1, T, P, TP}") {
    auto named = h4_dual_named<Rat>();
    REQUIRE(named.alg.basis_names == std::vector<std::string>{"1", "T", "P", "TP"});
    auto e = [&](size_t i) { return unit_vec<Rat>(4, i); };
    SECTION("unit of the dual is 1* + c*, i.e. the named basis vector 1") {
        REQUIRE(named.alg.unit == e(0));
    }
    SECTION("T T = 1 because c^2 = 1 dualizes") {
        REQUIRE(named.alg.mul(e(1), e(1)) == e(0));
    }
    SECTION("P P = 0 and T P = TP in the example's convention") {
        REQUIRE(vec_is_zero(named.alg.mul(e(2), e(2))));
        REQUIRE(named.alg.mul(e(1), e(2)) == e(3));
        REQUIRE(named.alg.mul(e(2), e(1)) == vec_scale(Rat(-1), e(3)));
    }
    SECTION("T is group-like and Delta(TP) = TP (x) 1 + T (x) TP") {
        REQUIRE(named.coalg.comult.slice(1, 1)[1] == Rat(1));
        auto terms = sweedler(named.coalg, 3, 2);
        REQUIRE(terms.size() == 2);
    }
    SECTION("the stated basis map is a bialgebra isomorphism onto this presentation") {
        auto h4 = sweedler_h4<Rat>();
        auto iso = h4_dual_iso<Rat>();
        REQUIRE(check_algebra_morphism(iso, h4.alg, named.alg, true, "Ex 3.6 map").ok());
        REQUIRE(check_coalgebra_morphism(iso, h4.coalg, named.coalg, "Ex 3.6 map").ok());
        REQUIRE(iso.bijective());
    }
}

TEST_CASE("k[x] in H4 action values") {
    auto d = kx_in_h4_bimodule<Rat>();
    // basis of the actor: {1, T, P, TP}; A = {1, x}
    SECTION("the dual unit acts as identity") {
        for (size_t a = 0; a < 2; ++a)
            REQUIRE(d.act_left(0, unit_vec<Rat>(2, a)) == unit_vec<Rat>(2, a));
    }
    SECTION("T -> a = 0: T vanishes on (1 + c + cx)/2") {
        REQUIRE(vec_is_zero(d.act_left(1, unit_vec<Rat>(2, 0))));
        REQUIRE(vec_is_zero(d.act_left(1, unit_vec<Rat>(2, 1))));
    }
    SECTION("P -> a = a/2 and TP -> a = -a/2; on the right TP acts by +1/2") {
        for (size_t a = 0; a < 2; ++a) {
            REQUIRE(d.act_left(2, unit_vec<Rat>(2, a)) == vec_scale(Rat(1, 2), unit_vec<Rat>(2, a)));
            REQUIRE(d.act_left(3, unit_vec<Rat>(2, a)) ==
                    vec_scale(Rat(-1, 2), unit_vec<Rat>(2, a)));
            REQUIRE(d.act_right(unit_vec<Rat>(2, a), 3) ==
                    vec_scale(Rat(1, 2), unit_vec<Rat>(2, a)));
        }
    }
}

TEST_CASE("central idempotent example") {
    SECTION("e = (1+g)/2 over kZ2 gives the 1-dimensional partial bimodule") {
        auto d = central_idempotent_kz2<Rat>();
        REQUIRE(d.A.dim == 1);
        REQUIRE(check_partial_bimodule(d).ok());
        REQUIRE(check_symmetry_assumption(d).ok());
    }
    SECTION("e = 1_H degenerates to the trivial global coaction") {
        auto z2 = group_algebra<Rat>(2);
        auto d = central_idempotent_example(z2, Vec<Rat>{Rat(1), Rat(0)});
        // f -> x = f(1) x
        REQUIRE(d.left(0, 0, 0) == Rat(1));
        REQUIRE(d.left(1, 0, 0) == Rat(0));
        for (size_t f = 0; f < 2; ++f)
            REQUIRE(d.act_left(f, d.A.unit) == vec_scale(d.H.coalg.counit[f], d.A.unit));
    }
    SECTION("eps(e) = 0 is rejected with a precise error") {
        auto z2 = group_algebra<Rat>(2);
        REQUIRE_THROWS_WITH(central_idempotent_example(z2, Vec<Rat>{Rat(1, 2), Rat(-1, 2)}),
                            Catch::Matchers::ContainsSubstring("counit"));
    }
    SECTION("non-central e is rejected") {
        auto h4 = sweedler_h4<Rat>();
        // (1+c)/2 is idempotent with eps = 1 but not central in H4
        Vec<Rat> e = {Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)};
        REQUIRE_THROWS_WITH(central_idempotent_example(h4, e),
                            Catch::Matchers::ContainsSubstring("central"));
    }
}

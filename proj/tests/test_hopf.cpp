#include <catch2/catch_amalgamated.hpp>

#include "psmash/catalog.hpp"
#include "test_util.hpp"

using namespace psmash;

namespace {

AlgebraData<Rat> scalar_algebra() {
    AlgebraData<Rat> a;
    a.dim = 1;
    a.mult = Tensor3<Rat>(1, 1, 1);
    a.mult(0, 0, 0) = Rat::one();
    a.unit = {Rat::one()};
    return a;
}

} // namespace

TEST_CASE("H4 passes all Hopf axioms") {
    auto h4 = sweedler_h4<Rat>();
    auto rep = check_structure(h4, StructureLevel::hopf);
    for (const auto& c : rep.checks) INFO(c.name);
    REQUIRE(rep.ok());
    REQUIRE(rep.checks.size() == 12);
}

TEST_CASE("corrupting Delta(x) to x(x)1 breaks the counit axiom at x") {
    auto h4 = sweedler_h4<Rat>();
    h4.coalg.comult(2, 1, 2) = Rat::zero(); // drop the c(x)x term
    auto rep = check_structure(h4, StructureLevel::hopf);
    REQUIRE(!rep.ok());
    const auto* c = rep.find("left counit");
    REQUIRE(c != nullptr);
    REQUIRE(c->status == CheckStatus::fail);
    REQUIRE(c->counterexample->indices == std::vector<size_t>{2});
}

TEST_CASE("group algebras are Hopf algebras") {
    auto z2 = group_algebra<Rat>(2);
    REQUIRE(check_structure(z2, StructureLevel::hopf).ok());
    // group-likes: Delta(g) = g (x) g and S = id on kZ2
    REQUIRE(z2.coalg.comult(1, 1, 1) == Rat::one());
    REQUIRE(z2.antipode == Matrix<Rat>::identity(2));
    REQUIRE(check_structure(group_algebra<Rat>(3), StructureLevel::hopf).ok());
    Fp::set_modulus(7);
    REQUIRE(check_structure(group_algebra<Fp>(3), StructureLevel::hopf).ok());
}

TEST_CASE("dual of kZ2 is isomorphic to kZ2") {
    auto z2 = group_algebra<Rat>(2);
    auto dual = dual_hopf(z2);
    REQUIRE(check_structure(dual, StructureLevel::hopf).ok());
    // 1 -> p0 + p1, g -> p0 - p1 is a Hopf isomorphism
    LinMap<Rat> iso(2, 2);
    iso.set_image(0, {Rat(1), Rat(1)});
    iso.set_image(1, {Rat(1), Rat(-1)});
    REQUIRE(check_algebra_morphism(iso, z2.alg, dual.alg, true, "self-dual").ok());
    REQUIRE(check_coalgebra_morphism(iso, z2.coalg, dual.coalg, "self-dual").ok());
    REQUIRE(iso.bijective());
}

TEST_CASE("dual of H4 and double dual") {
    auto h4 = sweedler_h4<Rat>();
    auto dual = dual_hopf(h4);
    REQUIRE(check_structure(dual, StructureLevel::hopf).ok());
    SECTION("double dual equals H4 on the nose") {
        auto dd = dual_hopf(dual);
        REQUIRE(dd.alg.mult == h4.alg.mult);
        REQUIRE(dd.coalg.comult == h4.coalg.comult);
        REQUIRE(dd.alg.unit == h4.alg.unit);
        REQUIRE(dd.coalg.counit == h4.coalg.counit);
        REQUIRE(dd.antipode == h4.antipode);
    }
    SECTION("the stated basis map composed with S is a Hopf isomorphism onto the standard dual") {
        // stated: 1 -> 1*+c*, c -> 1*-c*, x -> x*+(cx)*, cx -> x*-(cx)*
        Matrix<Rat> stated(4, 4);
        stated.set_col(0, {Rat(1), Rat(1), Rat(0), Rat(0)});
        stated.set_col(1, {Rat(1), Rat(-1), Rat(0), Rat(0)});
        stated.set_col(2, {Rat(0), Rat(0), Rat(1), Rat(1)});
        stated.set_col(3, {Rat(0), Rat(0), Rat(1), Rat(-1)});
        LinMap<Rat> tau(stated * h4.antipode);
        REQUIRE(check_algebra_morphism(tau, h4.alg, dual.alg, true, "H4 ~ H4*").ok());
        REQUIRE(check_coalgebra_morphism(tau, h4.coalg, dual.coalg, "H4 ~ H4*").ok());
        REQUIRE(tau.bijective());
    }
    SECTION("against the standard dual the stated map reverses products: T.P = -TP, P.T = TP") {
        Vec<Rat> T = {Rat(1), Rat(-1), Rat(0), Rat(0)};
        Vec<Rat> P = {Rat(0), Rat(0), Rat(1), Rat(1)};
        Vec<Rat> TP = {Rat(0), Rat(0), Rat(1), Rat(-1)};
        REQUIRE(dual.alg.mul(T, P) == vec_scale(Rat(-1), TP));
        REQUIRE(dual.alg.mul(P, T) == TP);
    }
}

TEST_CASE("convolution algebra") {
    auto h4 = sweedler_h4<Rat>();
    SECTION("u.eps is a two-sided convolution unit on a basis of Hom(H4, H4)") {
        LinMap<Rat> unit = convolution_unit(h4.coalg, h4.alg);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                LinMap<Rat> f(4, 4);
                f.mat(i, j) = Rat::one();
                auto l = convolution(unit, f, h4.coalg, h4.alg);
                auto r = convolution(f, unit, h4.coalg, h4.alg);
                REQUIRE(l.mat == f.mat);
                REQUIRE(r.mat == f.mat);
            }
    }
    SECTION("id * S = u.eps restates the antipode axiom") {
        LinMap<Rat> id(Matrix<Rat>::identity(4));
        LinMap<Rat> s(h4.antipode);
        auto conv = convolution(id, s, h4.coalg, h4.alg);
        REQUIRE(conv.mat == convolution_unit(h4.coalg, h4.alg).mat);
    }
    SECTION("evaluation functionals multiply by the dual product") {
        auto dual = dual_hopf(h4);
        auto k = scalar_algebra();
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                LinMap<Rat> pi(4, 1), pj(4, 1);
                pi.mat(0, i) = Rat::one();
                pj.mat(0, j) = Rat::one();
                auto prod = convolution(pi, pj, h4.coalg, k);
                // coordinates of p_i p_j in the dual algebra
                Vec<Rat> want = dual.alg.mul(unit_vec<Rat>(4, i), unit_vec<Rat>(4, j));
                for (size_t t = 0; t < 4; ++t) REQUIRE(prod.mat(0, t) == want[t]);
            }
    }
}

TEST_CASE("antipode inverse") {
    SECTION("kZ2: S = id so S^-1 = id") {
        auto z2 = group_algebra<Rat>(2);
        REQUIRE(antipode_inverse(z2) == Matrix<Rat>::identity(2));
    }
    SECTION("H4: S^2 != id and S^-1 = S^3") {
        auto h4 = sweedler_h4<Rat>();
        Matrix<Rat> s2 = h4.antipode * h4.antipode;
        REQUIRE(s2 != Matrix<Rat>::identity(4));
        REQUIRE(s2 * s2 == Matrix<Rat>::identity(4));
        Matrix<Rat> sinv = antipode_inverse(h4);
        REQUIRE(sinv == s2 * h4.antipode);
        REQUIRE(sinv * h4.antipode == Matrix<Rat>::identity(4));
    }
    SECTION("a singular claimed antipode is an error") {
        auto h4 = sweedler_h4<Rat>();
        h4.antipode = Matrix<Rat>(4, 4);
        REQUIRE_THROWS_AS(antipode_inverse(h4), error);
    }
}

TEST_CASE("tensor and endomorphism algebras") {
    auto h4 = sweedler_h4<Rat>();
    SECTION("k (x) B recovers B") {
        auto t = tensor_algebra(scalar_algebra(), h4.alg);
        REQUIRE(t.dim == 4);
        REQUIRE(t.mult == h4.alg.mult);
        REQUIRE(t.unit == h4.alg.unit);
    }
    SECTION("dim(A (x) H) is the product of dimensions and the result is associative") {
        auto dual = dual_hopf(h4);
        auto t = tensor_algebra(h4.alg, dual.alg);
        REQUIRE(t.dim == 16);
        REQUIRE(check_algebra(t).ok());
    }
    SECTION("matrix units") {
        REQUIRE(end_algebra<Rat>(1).dim == 1);
        auto e2 = end_algebra<Rat>(2);
        REQUIRE(e2.dim == 4);
        // E01 E10 = E00
        Vec<Rat> prod = e2.mul(unit_vec<Rat>(4, 0 * 2 + 1), unit_vec<Rat>(4, 1 * 2 + 0));
        REQUIRE(prod == unit_vec<Rat>(4, 0));
        auto e4 = end_algebra<Rat>(4);
        REQUIRE(e4.dim == 16);
        REQUIRE(check_algebra(e4).ok());
    }
}

TEST_CASE("antipode solver reproduces the closed form on H4") {
    auto h4 = sweedler_h4<Rat>();
    auto s = solve_antipode(h4.alg, h4.coalg);
    REQUIRE(s == h4.antipode);
    REQUIRE(s.col(1) == unit_vec<Rat>(4, 1));                  // S(c) = c
    REQUIRE(s.col(2) == vec_scale(Rat(-1), unit_vec<Rat>(4, 3))); // S(x) = -cx
}

TEST_CASE("left-nested Sweedler expansion of Delta^2(x) in H4") {
    auto h4 = sweedler_h4<Rat>();
    auto terms = sweedler(h4.coalg, 2, 3);
    // (Delta (x) id) Delta(x) = x(x)1(x)1 + c(x)x(x)1 + c(x)c(x)x
    REQUIRE(terms.size() == 3);
    std::vector<std::vector<size_t>> legs;
    for (const auto& t : terms) {
        REQUIRE(t.coeff == Rat::one());
        legs.push_back(t.legs);
    }
    std::sort(legs.begin(), legs.end());
    REQUIRE(legs == std::vector<std::vector<size_t>>{{1, 1, 2}, {1, 2, 0}, {2, 0, 0}});
}

TEST_CASE("rebasing and op-cop transport preserve the Hopf axioms") {
    auto h4 = sweedler_h4<Rat>();
    REQUIRE(check_structure(op_cop_hopf(h4), StructureLevel::hopf).ok());
    Matrix<Rat> basis(4, 4);
    basis(0, 0) = Rat(1); basis(0, 1) = Rat(1);
    basis(1, 1) = Rat(2);
    basis(2, 2) = Rat(1); basis(2, 3) = Rat(-3);
    basis(3, 3) = Rat(1, 2);
    auto rb = rebase_hopf(h4, basis, {});
    REQUIRE(check_structure(rb, StructureLevel::hopf).ok());
    // rebasing back recovers the original constants
    auto back = rebase_hopf(rb, *invert(basis), {"1", "c", "x", "cx"});
    REQUIRE(back.alg.mult == h4.alg.mult);
    REQUIRE(back.coalg.comult == h4.coalg.comult);
    REQUIRE(back.antipode == h4.antipode);
}

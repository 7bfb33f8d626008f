#include <catch2/catch_amalgamated.hpp>

#include "psmash/linalg.hpp"
#include "test_util.hpp"

using namespace psmash;
using testutil::Lcg;

namespace {
Rat q(long n) { return Rat(n); }
Rat q(long n, unsigned long d) { return Rat(n, d); }
} // namespace

TEST_CASE("scalar field axioms hold on random triples") {
    SECTION("rationals") {
        Lcg g(42);
        for (int t = 0; t < 50; ++t) {
            Rat a(g.small_int(-9, 9), (unsigned long)g.small_int(1, 9));
            Rat b(g.small_int(-9, 9), (unsigned long)g.small_int(1, 9));
            Rat c(g.small_int(-9, 9), (unsigned long)g.small_int(1, 9));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + Rat::zero() == a);
            REQUIRE(a * Rat::one() == a);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Rat::one());
        }
    }
    SECTION("prime field") {
        Fp::set_modulus(7);
        Lcg g(43);
        for (int t = 0; t < 50; ++t) {
            Fp a(g.small_int(-20, 20)), b(g.small_int(-20, 20)), c(g.small_int(-20, 20));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Fp::one());
        }
        REQUIRE_THROWS_AS(Fp::set_modulus(6), error);
    }
}

TEST_CASE("scalar serialization is canonical") {
    REQUIRE(q(1, 2).str() == "1/2");
    REQUIRE(q(-4, 2).str() == "-2");
    REQUIRE(Rat::parse("3/6") == q(1, 2));
    REQUIRE(Rat::parse("-7") == q(-7));
    REQUIRE_THROWS_AS(Rat::parse("1.5"), error);
    REQUIRE_THROWS_AS(Rat::parse(""), error);
    Fp::set_modulus(5);
    REQUIRE(Fp::parse("-1") == Fp(4));
    REQUIRE(Fp(9).str() == "4");
    REQUIRE_THROWS_AS(Fp::parse("x"), error);
}

TEST_CASE("rref: stated examples") {
    SECTION("identity 3x3 maps to itself with pivots 0,1,2") {
        auto [r, piv] = rref(Matrix<Rat>::identity(3));
        REQUIRE(r == Matrix<Rat>::identity(3));
        REQUIRE(piv == std::vector<size_t>{0, 1, 2});
    }
    SECTION("zero 2x4 maps to itself with no pivots") {
        auto [r, piv] = rref(Matrix<Rat>(2, 4));
        REQUIRE(r == Matrix<Rat>(2, 4));
        REQUIRE(piv.empty());
    }
    SECTION("over F2, [[1,1],[1,1]] reduces to [[1,1],[0,0]]") {
        Fp::set_modulus(2);
        Matrix<Fp> m(2, 2);
        m(0, 0) = Fp(1); m(0, 1) = Fp(1); m(1, 0) = Fp(1); m(1, 1) = Fp(1);
        auto [r, piv] = rref(m);
        Matrix<Fp> want(2, 2);
        want(0, 0) = Fp(1); want(0, 1) = Fp(1);
        REQUIRE(r == want);
        REQUIRE(piv == std::vector<size_t>{0});
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    Lcg g(7);
    for (int t = 0; t < 30; ++t) {
        auto m = testutil::random_matrix<Rat>(g, 1 + t % 5, 1 + (t * 3) % 6);
        auto r1 = rref(m).first;
        REQUIRE(rref(r1).first == r1);
    }
    Fp::set_modulus(5);
    for (int t = 0; t < 30; ++t) {
        auto m = testutil::random_matrix<Fp>(g, 1 + t % 5, 1 + (t * 3) % 6);
        auto r1 = rref(m).first;
        REQUIRE(rref(r1).first == r1);
    }
}

TEST_CASE("span_basis: stated examples") {
    SECTION("colinear vectors collapse to one row") {
        auto b = span_basis<Rat>({{q(1), q(0)}, {q(2), q(0)}});
        REQUIRE(b.rows() == 1);
        REQUIRE(b.row(0) == Vec<Rat>{q(1), q(0)});
    }
    SECTION("empty input gives zero rows") {
        REQUIRE(span_basis<Rat>({}).rows() == 0);
    }
    SECTION("dependent triple over Q has rank 2") {
        auto b = span_basis<Rat>({{q(1), q(1), q(0)}, {q(0), q(1), q(1)}, {q(1), q(0), q(-1)}});
        REQUIRE(b.rows() == 2);
    }
}

TEST_CASE("membership: stated examples") {
    Matrix<Rat> basis = Matrix<Rat>::from_rows({{q(1), q(0)}});
    SECTION("zero vector has all-zero coordinates") {
        auto c = membership<Rat>({q(0), q(0)}, basis);
        REQUIRE(c.has_value());
        REQUIRE(vec_is_zero(*c));
    }
    SECTION("a basis row maps to a standard unit vector") {
        Matrix<Rat> b2 = Matrix<Rat>::from_rows({{q(1), q(2)}, {q(0), q(1)}});
        auto c = membership<Rat>({q(0), q(1)}, b2);
        REQUIRE(c.has_value());
        REQUIRE(*c == Vec<Rat>{q(0), q(1)});
    }
    SECTION("vector outside the span is flagged") {
        REQUIRE(!membership<Rat>({q(1), q(1)}, basis).has_value());
    }
}

TEST_CASE("membership agrees with the minor-rank oracle on dims <= 6") {
    Lcg g(11);
    for (int t = 0; t < 40; ++t) {
        size_t rows = 1 + t % 4, cols = 2 + t % 5;
        auto m = testutil::random_matrix<Rat>(g, rows, cols);
        Vec<Rat> v(cols, Rat::zero());
        for (size_t j = 0; j < cols; ++j) v[j] = testutil::random_scalar<Rat>(g);
        // oracle: v in rowspan(m) iff appending v leaves the rank unchanged
        size_t r0 = testutil::minor_rank(m);
        Matrix<Rat> stacked(rows + 1, cols);
        for (size_t i = 0; i < rows; ++i) stacked.set_row(i, m.row(i));
        stacked.set_row(rows, v);
        bool in_span_oracle = testutil::minor_rank(stacked) == r0;
        auto basis = span_basis<Rat>([&] {
            std::vector<Vec<Rat>> rs;
            for (size_t i = 0; i < rows; ++i) rs.push_back(m.row(i));
            return rs;
        }());
        auto c = membership(v, basis);
        REQUIRE(c.has_value() == in_span_oracle);
        if (c) {
            Vec<Rat> rec = basis.apply_left(*c);
            REQUIRE(rec == v);
        }
        REQUIRE(rank(m) == r0);
        REQUIRE(testutil::bareiss_rank(m) == r0);
    }
}

TEST_CASE("invert: stated examples and round trips") {
    SECTION("identity inverts to identity") {
        auto i3 = Matrix<Rat>::identity(3);
        REQUIRE(invert(i3).value() == i3);
    }
    SECTION("the swap involution is its own inverse") {
        Matrix<Rat> s(2, 2);
        s(0, 1) = q(1); s(1, 0) = q(1);
        REQUIRE(invert(s).value() == s);
    }
    SECTION("a rank-one square matrix is singular") {
        Matrix<Rat> m(2, 2);
        m(0, 0) = q(1); m(0, 1) = q(1);
        REQUIRE(!invert(m).has_value());
    }
    SECTION("random invertible matrices round-trip") {
        Lcg g(13);
        int done = 0;
        while (done < 15) {
            auto m = testutil::random_matrix<Rat>(g, 4, 4);
            auto inv = invert(m);
            if (!inv) continue;
            REQUIRE(*inv * m == Matrix<Rat>::identity(4));
            REQUIRE(m * *inv == Matrix<Rat>::identity(4));
            ++done;
        }
    }
}

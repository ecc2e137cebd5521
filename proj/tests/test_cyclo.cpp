#include <doctest.h>

#include <random>

#include "prescount/cyclo.hpp"
#include "testutil.hpp"

using namespace prescount;
using prescount::testing::ratio;

namespace {

CycloNum from_coords(const CycloCtx& ctx, std::vector<long> v) {
    CycloNum z = ctx.zero();
    for (std::size_t i = 0; i < v.size(); ++i) z.c[i] = Rat(v[i]);
    return z;
}

CycloNum random_value(const CycloCtx& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    CycloNum z = ctx.zero();
    for (auto& c : z.c) c = ratio(num(rng), den(rng));
    return z;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1).c == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(4).c == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(9).c == std::vector<Int>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_poly(12).c == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_poly(0), invalid_input);
}

TEST_CASE("roots of unity reduce modulo Phi_R") {
    CycloCtx c4(4);
    CHECK(c4.root_of_unity(2) == c4.from_rational(Rat(-1)));
    CHECK(c4.root_of_unity(0) == c4.one());
    CHECK(c4.root_of_unity(-1) == c4.root_of_unity(3));

    CycloCtx c6(6);
    CHECK(c6.root_of_unity(3) == c6.from_rational(Rat(-1)));

    CycloCtx c9(9);
    // x^6 = -x^3 - 1 mod x^6+x^3+1
    CHECK(c9.root_of_unity(6) == from_coords(c9, {-1, 0, 0, -1, 0, 0}));
}

TEST_CASE("cyclotomic ring arithmetic") {
    CycloCtx c4(4);
    CycloNum one_plus_i = from_coords(c4, {1, 1});
    CycloNum one_minus_i = from_coords(c4, {1, -1});
    CHECK(c4.mul(one_plus_i, one_minus_i) == c4.from_rational(Rat(2)));
    CycloNum i = c4.root_of_unity(1);
    CHECK(c4.mul(i, i) == c4.from_rational(Rat(-1)));

    CycloCtx c8(8);
    CHECK(c8.mul(c8.root_of_unity(1), c8.root_of_unity(1)) == c8.root_of_unity(2));
}

TEST_CASE("conjugation") {
    CycloCtx c4(4);
    CHECK(c4.conjugate(c4.root_of_unity(1)) == c4.root_of_unity(3));
    CHECK(c4.conjugate(c4.from_rational(ratio(7, 3))) == c4.from_rational(ratio(7, 3)));

    CycloCtx c8(8);
    CycloNum v = c8.add(c8.one(), c8.root_of_unity(1));
    CHECK(c8.conjugate(v) == c8.add(c8.one(), c8.root_of_unity(7)));
}

TEST_CASE("rationality check") {
    CycloCtx c4(4);
    CHECK(c4.to_rational(c4.from_rational(Rat(2))) == 2);
    CHECK_THROWS_AS(c4.to_rational(c4.root_of_unity(1)), not_rational);

    CycloCtx c6(6);
    CycloNum v = c6.add(c6.root_of_unity(1), c6.root_of_unity(5));
    CHECK(c6.to_rational(v) == 1);  // 2 cos(pi/3)
}

TEST_CASE("root powers and orthogonality sums") {
    for (int R = 1; R <= 24; ++R) {
        CycloCtx ctx(R);
        for (std::int64_t k = 0; k < R; ++k) {
            CycloNum w = ctx.root_of_unity(k);
            CycloNum acc = ctx.one();
            for (int e = 0; e < R; ++e) acc = ctx.mul(acc, w);
            CHECK(acc == ctx.one());  // w^R = 1
        }
        for (int m = -24; m <= 24; ++m) {
            CycloNum acc = ctx.zero();
            for (std::int64_t k = 0; k < R; ++k)
                ctx.add_assign(acc, ctx.root_of_unity(k * m));
            Rat expect = (((m % R) + R) % R == 0) ? Rat(R) : Rat(0);
            CHECK(ctx.to_rational(acc) == expect);
        }
    }
}

TEST_CASE("conjugation is an involution and a ring homomorphism") {
    std::mt19937 rng(7);
    for (int R : {3, 4, 6, 8, 9, 12}) {
        CycloCtx ctx(R);
        for (int iter = 0; iter < 25; ++iter) {
            CycloNum a = random_value(ctx, rng), b = random_value(ctx, rng);
            CHECK(ctx.conjugate(ctx.conjugate(a)) == a);
            CHECK(ctx.conjugate(ctx.mul(a, b)) == ctx.mul(ctx.conjugate(a), ctx.conjugate(b)));
        }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(11);
    for (int R : {4, 6, 8, 9}) {
        CycloCtx ctx(R);
        for (int iter = 0; iter < 25; ++iter) {
            CycloNum a = random_value(ctx, rng), b = random_value(ctx, rng),
                     c = random_value(ctx, rng);
            CHECK(ctx.mul(a, b) == ctx.mul(b, a));
            CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
        }
    }
}

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "prescount/class_group.hpp"
#include "testutil.hpp"

using namespace prescount;

namespace {

Prescription q2_I22() { return Prescription::type_one(FieldCtx::prime_field(2), 2, 2); }
Prescription q3_I21() { return Prescription::type_one(FieldCtx::prime_field(3), 2, 1); }

ClassRep cls(const Prescription& p, const std::string& poly) {
    return class_of(p, poly_parse(p.field, poly)).value();
}

}  // namespace

TEST_CASE("canonical representatives") {
    Prescription p = q2_I22();
    CHECK(cls(p, "1") == cls(p, "1,0,0,0,1"));            // <1> = <x^4+1>
    CHECK(cls(p, "1,0,1").rep == poly_parse(p.field, "1,0,1,0,1"));  // x^2+1 -> x^4+x^2+1
    CHECK(!class_of(p, poly_parse(p.field, "0,1")).has_value());     // f(0) = 0 -> Zero
    CHECK_THROWS_AS(class_of(q3_I21(), poly_parse(FieldCtx::prime_field(3), "1,2")), invalid_input);

    Prescription pII = Prescription::type_two(FieldCtx::prime_field(2), 3);
    CHECK(cls(pII, "0,0,0,0,0,1").rep == poly_parse(pII.field, "0,0,0,1"));  // x^5 -> x^3
    CHECK(class_identity(pII).rep == poly_parse(pII.field, "0,0,0,1"));
}

TEST_CASE("class multiplication orders") {
    Prescription p = q2_I22();
    ClassRep xi1 = cls(p, "1,1");
    CHECK(class_pow(p, xi1, 4) == class_identity(p));
    CHECK(class_pow(p, xi1, 2) != class_identity(p));

    Prescription pII = Prescription::type_two(FieldCtx::prime_field(3), 3);
    ClassRep g = cls(pII, "1,1");
    CHECK(class_pow(pII, g, 9) == class_identity(pII));
    CHECK(class_pow(pII, g, 3) != class_identity(pII));
}

TEST_CASE("identity is neutral on every class") {
    for (const Prescription& p : {q2_I22(), Prescription::type_two(FieldCtx::prime_field(2), 3)}) {
        GroupStructure gs = decompose(p);
        ClassRep id = class_identity(p);
        for (std::size_t i = 0; i < static_cast<std::size_t>(gs.order()); ++i)
            CHECK(class_mul(p, id, gs.rep_at(i)) == gs.rep_at(i));
    }
}

TEST_CASE("inverse recursion") {
    Prescription p = q2_I22();
    CHECK(class_inverse(p, class_identity(p)) == class_identity(p));
    ClassRep a = cls(p, "1,0,1,0,1");  // xi1^2, self-inverse
    CHECK(class_inverse(p, a) == a);

    Prescription pII = Prescription::type_two(FieldCtx::prime_field(3), 2);
    ClassRep b = cls(pII, "0,1,1");  // <x^2+x>
    CHECK(class_mul(pII, class_inverse(pII, b), b) == class_identity(pII));

    // inverse really inverts, for every element of small groups
    for (const Prescription& pr :
         {q2_I22(), q3_I21(), Prescription::type_two(FieldCtx::from_q(4), 2)}) {
        GroupStructure gs = decompose(pr);
        for (std::size_t i = 0; i < static_cast<std::size_t>(gs.order()); ++i) {
            CHECK(class_mul(pr, class_inverse(pr, gs.rep_at(i)), gs.rep_at(i)) ==
                  class_identity(pr));
        }
    }
}

TEST_CASE("decomposition orders match the known structures") {
    auto orders_of = [](const Prescription& p) { return decompose(p).orders(); };
    CHECK(orders_of(q2_I22()) == std::vector<std::int64_t>{4, 2});
    CHECK(orders_of(q3_I21()) == std::vector<std::int64_t>{6, 3});
    CHECK(orders_of(Prescription::type_two(FieldCtx::prime_field(2), 3)) ==
          std::vector<std::int64_t>{4, 2});
    CHECK(orders_of(Prescription::type_two(FieldCtx::prime_field(2), 4)) ==
          std::vector<std::int64_t>{8, 2});
    CHECK(orders_of(Prescription::type_two(FieldCtx::prime_field(2), 5)) ==
          std::vector<std::int64_t>{8, 2, 2});
    CHECK(orders_of(Prescription::type_two(FieldCtx::prime_field(3), 3)) ==
          std::vector<std::int64_t>{9, 3});

    GroupStructure gs = decompose(q2_I22());
    CHECK(gs.order() == 8);
    CHECK(q2_I22().group_order() == 8);
    CHECK(decompose(q3_I21()).order() == 18);
}

TEST_CASE("type II prime-field generators come from the x^j+1 family") {
    Prescription p = Prescription::type_two(FieldCtx::prime_field(2), 3);
    GroupStructure gs = decompose(p);
    CHECK(gs.generators()[0] == cls(p, "1,1"));      // <x+1>, order 4
    CHECK(gs.generators()[1] == cls(p, "1,0,0,1"));  // <x^3+1>, order 2
    CHECK(gs.dlog(cls(p, "1,0,0,1")) == ExponentVector{0, 1});

    Prescription p3 = Prescription::type_two(FieldCtx::prime_field(3), 3);
    GroupStructure gs3 = decompose(p3);
    CHECK(gs3.generators()[0] == cls(p3, "1,1"));    // order 9
    CHECK(gs3.generators()[1] == cls(p3, "1,0,1"));  // <x^2+1>, order 3
}

TEST_CASE("dlog is a bijection consistent with multiplication") {
    for (const Prescription& p :
         {q2_I22(), q3_I21(), Prescription::type_two(FieldCtx::from_q(4), 2)}) {
        GroupStructure gs = decompose(p);
        CHECK(gs.dlog(class_identity(p)) == ExponentVector(gs.factor_count(), 0));
        std::int64_t prod = 1;
        for (auto r : gs.orders()) prod *= r;
        CHECK(prod == gs.order());
        for (std::size_t i = 0; i < static_cast<std::size_t>(gs.order()); ++i) {
            ExponentVector v = gs.exponents_at(i);
            CHECK(gs.class_from_exponents(v) == gs.rep_at(i));
            CHECK(gs.index_of(gs.rep_at(i)) == i);
            // rebuild from generator powers
            ClassRep prod_rep = class_identity(p);
            for (std::size_t k = 0; k < v.size(); ++k)
                prod_rep = class_mul(p, prod_rep, class_pow(p, gs.generators()[k], v[k]));
            CHECK(prod_rep == gs.rep_at(i));
        }
    }
}

TEST_CASE("dlog example: xi1^2 for q=2 type I") {
    Prescription p = q2_I22();
    GroupStructure gs = decompose(p);
    CHECK(gs.dlog(cls(p, "1,0,1,0,1")) == ExponentVector{2, 0});
    ClassRep bogus{poly_parse(p.field, "1,1")};
    CHECK_THROWS_AS(gs.dlog(bogus), unknown_class);
}

TEST_CASE("prescribe_to_class") {
    Prescription pII = Prescription::type_two(FieldCtx::prime_field(2), 3);
    auto fe = [&](std::initializer_list<std::int64_t> v) {
        std::vector<Fe> out;
        for (auto x : v) out.push_back(pII.field.fe(x));
        return out;
    };
    CHECK(prescribe_to_class(pII, fe({0, 0, 1}), std::nullopt) == cls(pII, "1,0,0,1"));
    CHECK(prescribe_to_class(pII, fe({0, 0, 0}), std::nullopt) == class_identity(pII));
    CHECK_THROWS_AS(prescribe_to_class(pII, fe({0, 0, 1}), std::vector<Fe>{pII.field.one()}),
                    invalid_input);

    Prescription pI = q2_I22();
    CHECK(prescribe_to_class(pI, fe({0, 0}), fe({1, 1})) == cls(pI, "1,1,0,0,1"));
    CHECK_THROWS_AS(prescribe_to_class(pI, fe({0, 0}), fe({0, 1})), zero_constant);
}

TEST_CASE("group axioms on all groups of order <= 64") {
    std::mt19937 rng(2024);
    std::vector<Prescription> ps = {q2_I22(),
                                    q3_I21(),
                                    Prescription::type_two(FieldCtx::prime_field(2), 3),
                                    Prescription::type_two(FieldCtx::prime_field(2), 5),
                                    Prescription::type_two(FieldCtx::from_q(4), 2),
                                    Prescription::type_two(FieldCtx::prime_field(5), 2),
                                    Prescription::type_one(FieldCtx::from_q(4), 1, 1)};
    for (const Prescription& p : ps) {
        GroupStructure gs = decompose(p);
        REQUIRE(gs.order() <= 64);
        std::size_t n = static_cast<std::size_t>(gs.order());
        // closure + cancellation via the dlog table
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                CHECK_NOTHROW(gs.index_of(class_mul(p, gs.rep_at(a), gs.rep_at(b))));
        // associativity on sampled triples
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int iter = 0; iter < 50; ++iter) {
            const ClassRep &a = gs.rep_at(pick(rng)), &b = gs.rep_at(pick(rng)),
                           &c = gs.rep_at(pick(rng));
            CHECK(class_mul(p, class_mul(p, a, b), c) == class_mul(p, a, class_mul(p, b, c)));
        }
    }
}

TEST_CASE("class_of is a homomorphism (well-definedness)") {
    std::mt19937 rng(555);
    for (const Prescription& p :
         {q2_I22(), q3_I21(), Prescription::type_two(FieldCtx::prime_field(2), 4)}) {
        bool nz = p.kind == Kind::I;
        std::uniform_int_distribution<int> deg(0, p.tau() + 4);
        for (int iter = 0; iter < 200; ++iter) {
            FPoly f = prescount::testing::random_monic(p.field, deg(rng), rng, nz);
            FPoly g = prescount::testing::random_monic(p.field, deg(rng), rng, nz);
            auto lhs = class_of(p, poly_mul(p.field, f, g));
            REQUIRE(lhs.has_value());
            CHECK(*lhs == class_mul(p, class_of(p, f).value(), class_of(p, g).value()));
        }
    }
}

TEST_CASE("each class has exactly q^{d-deg} members of degree d") {
    for (const Prescription& p : {q2_I22(), q3_I21()}) {
        GroupStructure gs = decompose(p);
        int base = p.rep_degree();
        for (int d = base; d <= base + 2; ++d) {
            std::map<std::size_t, Int> tally;
            for_each_monic(p.field, d, true, [&](const FPoly& f) {
                tally[gs.index_of(class_of(p, f).value())] += 1;
            });
            Int expect = nt::pow_int(p.field.q(), static_cast<unsigned long>(d - base));
            CHECK(tally.size() == static_cast<std::size_t>(gs.order()));
            for (const auto& [idx, count] : tally) CHECK(count == expect);
        }
    }
    // type II analogue: no constant-term restriction
    Prescription p = Prescription::type_two(FieldCtx::prime_field(3), 2);
    GroupStructure gs = decompose(p);
    for (int d = 2; d <= 4; ++d) {
        std::map<std::size_t, Int> tally;
        for_each_monic(p.field, d, false, [&](const FPoly& f) {
            tally[gs.index_of(class_of(p, f).value())] += 1;
        });
        Int expect = nt::pow_int(3, static_cast<unsigned long>(d - 2));
        CHECK(tally.size() == 9);
        for (const auto& [idx, count] : tally) CHECK(count == expect);
    }
}

TEST_CASE("generator orders are exact") {
    for (const Prescription& p : {q2_I22(), Prescription::type_two(FieldCtx::prime_field(2), 5)}) {
        GroupStructure gs = decompose(p);
        for (std::size_t i = 0; i < gs.factor_count(); ++i) {
            CHECK(class_pow(p, gs.generators()[i], gs.orders()[i]) == class_identity(p));
            for (auto [pr, e] : nt::factorize(gs.orders()[i]))
                CHECK(class_pow(p, gs.generators()[i], gs.orders()[i] / pr) != class_identity(p));
        }
    }
}

TEST_CASE("group cap") {
    CHECK_THROWS_AS(decompose(q2_I22(), 4), group_too_large);
}

#include <doctest.h>

#include "prescount/oracle.hpp"
#include "testutil.hpp"

using namespace prescount;

namespace {

Prescription q2_I22() { return Prescription::type_one(FieldCtx::prime_field(2), 2, 2); }

Int big_budget() { return Int(1) << 22; }

std::size_t class_index(const Prescription& p, const GroupStructure& gs, const std::string& poly) {
    return gs.index_of(class_of(p, poly_parse(p.field, poly)).value());
}

}  // namespace

TEST_CASE("necklace formula") {
    CHECK(total_irreducibles(2, 1) == 2);
    CHECK(total_irreducibles(2, 4) == 3);
    CHECK(total_irreducibles(3, 6) == 116);
    CHECK_THROWS_AS(total_irreducibles(2, 0), invalid_input);
}

TEST_CASE("brute_I distributions") {
    Prescription p = q2_I22();
    GroupStructure gs = decompose(p);

    std::vector<Int> d2 = brute_I(p, gs, 2, big_budget());
    Int sum2 = 0;
    for (const Int& v : d2) sum2 += v;
    CHECK(sum2 == 1);  // x^2+x+1 only
    CHECK(d2[class_index(p, gs, "1,1,1")] == 1);

    std::vector<Int> d4 = brute_I(p, gs, 4, big_budget());
    Int sum4 = 0;
    for (const Int& v : d4) sum4 += v;
    CHECK(sum4 == 3);
    CHECK(d4[class_index(p, gs, "1,1,0,0,1")] == 1);

    Prescription p3 = Prescription::type_one(FieldCtx::prime_field(3), 2, 1);
    GroupStructure gs3 = decompose(p3);
    std::vector<Int> d3 = brute_I(p3, gs3, 3, big_budget());
    Int sum3 = 0;
    for (const Int& v : d3) sum3 += v;
    CHECK(sum3 == 8);  // (27 - 3)/3
    CHECK(sum3 == total_irreducibles(3, 3));

    // totals match the necklace count across degrees
    for (int d = 1; d <= 8; ++d) {
        Int sum = 0;
        for (const Int& v : brute_I(p, gs, d, big_budget())) sum += v;
        CHECK(sum == total_irreducibles(2, d));
    }
}

TEST_CASE("brute_F tallies") {
    Prescription p1 = Prescription::type_two(FieldCtx::prime_field(2), 1);
    GroupStructure gs1 = decompose(p1);
    std::vector<Int> n1 = brute_F(p1, gs1, 1, big_budget());
    CHECK(n1 == std::vector<Int>{1, 1});  // trace 0 and trace 1

    Prescription p = q2_I22();
    GroupStructure gs = decompose(p);
    std::vector<Int> n4 = brute_F(p, gs, 4, big_budget());
    CHECK(n4[gs.index_of(class_identity(p))] == 1);
    CHECK(n4[class_index(p, gs, "1,1,0,0,1")] == 4);  // xi2
    CHECK(n4[class_index(p, gs, "1,0,1,0,1")] == 2);  // xi1^2
    ExponentVector v_x12x2 = gs.dlog(class_mul(
        p, class_of(p, poly_parse(p.field, "1,0,1")).value(),
        class_of(p, poly_parse(p.field, "1,1,0,0,1")).value()));
    CHECK(n4[gs.linear_index(v_x12x2)] == 0);  // xi1^2 xi2
    Int sum = 0;
    for (const Int& v : n4) sum += v;
    CHECK(sum == 15);  // q^n - 1 for type I

    // type II includes alpha = 0
    Prescription pII = Prescription::type_two(FieldCtx::prime_field(3), 2);
    GroupStructure gsII = decompose(pII);
    for (int n = 1; n <= 5; ++n) {
        Int s = 0;
        for (const Int& v : brute_F(pII, gsII, n, big_budget())) s += v;
        CHECK(s == nt::pow_int(3, static_cast<unsigned long>(n)));
    }
}

TEST_CASE("characteristic polynomial is constant on Frobenius orbits") {
    FieldCtx F3 = FieldCtx::prime_field(3);
    ExtField E(F3, 4);
    for (std::uint64_t i : {1ull, 5ull, 17ull, 42ull, 80ull}) {
        FPoly alpha = E.element(i);
        FPoly beta = E.pow(alpha, 3);  // alpha^q
        CHECK(char_poly(E, alpha) == char_poly(E, beta));
    }
    // and it really is the characteristic polynomial: monic of degree n
    FPoly q = char_poly(E, E.element(7));
    CHECK(q.degree() == 4);
    CHECK(q.is_monic());
}

TEST_CASE("oracle equals pipeline on a sample") {
    Prescription p = q2_I22();
    GroupStructure gs = decompose(p);
    Counter counter(p, gs);
    OracleReport rep = verify_counts(p, gs, counter, 8, 8, big_budget());
    CHECK(rep.pass);
    CHECK(rep.checks.size() == 2u * 8u * 8u);
    CHECK(rep.first_mismatch.empty());
}

TEST_CASE("serial and OpenMP kernels tally identically") {
    Prescription p = Prescription::type_two(FieldCtx::prime_field(2), 3);
    GroupStructure gs = decompose(p);
    CHECK(brute_F(p, gs, 10, big_budget(), Exec::serial) ==
          brute_F(p, gs, 10, big_budget(), Exec::parallel));
    CHECK(brute_I(p, gs, 11, big_budget(), Exec::serial) ==
          brute_I(p, gs, 11, big_budget(), Exec::parallel));

    Prescription p4 = Prescription::type_two(FieldCtx::from_q(4), 2);
    GroupStructure gs4 = decompose(p4);
    CHECK(brute_F(p4, gs4, 5, big_budget(), Exec::serial) ==
          brute_F(p4, gs4, 5, big_budget(), Exec::parallel));
}

TEST_CASE("budget is enforced") {
    Prescription p = q2_I22();
    GroupStructure gs = decompose(p);
    CHECK_THROWS_AS(brute_F(p, gs, 12, Int(100)), budget_exceeded);
    CHECK_THROWS_AS(brute_I(p, gs, 12, Int(100)), budget_exceeded);
}

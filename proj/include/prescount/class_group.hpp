#pragma once

// Equivalence classes of monic polynomials with prescribed coefficients.
//
// Type I prescribes the ell leading coefficients and the t ending
// coefficients (constant term nonzero); the class group has order
// (q-1) q^{ell+t-1} and canonical representatives are the monic polynomials
// of degree ell+t with nonzero constant term.  Type II prescribes the ell
// leading coefficients; the group has order q^ell and representatives are
// the monic polynomials of degree ell.  Multiplication is <f><g> = <fg>.

#include <cstdint>
#include <optional>
#include <vector>

#include "prescount/fq.hpp"

namespace prescount {

enum class Kind { I, II };

struct Prescription {
    FieldCtx field;
    Kind kind;
    int ell = 1;
    int t = 0;  // 0 for type II

    static Prescription type_one(FieldCtx field, int ell, int t);
    static Prescription type_two(FieldCtx field, int ell);

    // truncation depth of the character-sum polynomials
    int tau() const { return kind == Kind::I ? ell + t - 1 : ell - 1; }
    // degree of canonical representatives
    int rep_degree() const { return kind == Kind::I ? ell + t : ell; }
    Int group_order() const;  // (q-1)q^{ell+t-1} or q^ell
};

// Canonical class representative (see Prescription::rep_degree).
struct ClassRep {
    FPoly rep;
    friend bool operator==(const ClassRep& a, const ClassRep& b) { return a.rep == b.rep; }
    friend bool operator!=(const ClassRep& a, const ClassRep& b) { return a.rep != b.rep; }
};

// Discrete-log coordinates on the cyclic basis, v[i] in [0, orders[i]).
using ExponentVector = std::vector<std::int64_t>;

// Canonical representative of <f>, or nullopt for the distinguished Zero
// element (type I with f(0) = 0, absorbed by the group-algebra zero).
// Leading coefficients are read from x^{deg-1} downward and ending
// coefficients from the constant term upward; missing coefficients are zero.
std::optional<ClassRep> class_of(const Prescription& p, const FPoly& f);

ClassRep class_identity(const Prescription& p);
ClassRep class_mul(const Prescription& p, const ClassRep& a, const ClassRep& b);
ClassRep class_pow(const Prescription& p, const ClassRep& a, std::int64_t e);

// Inverse via the two triangular recursions of the group proof
// (leading block g_d = -sum f_j g_{d-j}; ending block scaled by 1/f_{ell+t}),
// not by group-order exponentiation.
ClassRep class_inverse(const Prescription& p, const ClassRep& a);

// Build the canonical representative from prescribed coefficients.
// Type I requires `ending` with nonzero constant (throws zero_constant
// otherwise: no such class exists); type II requires `ending` absent.
ClassRep prescribe_to_class(const Prescription& p, const std::vector<Fe>& leading,
                            const std::optional<std::vector<Fe>>& ending);

// integer key of a representative: the encoding of its non-leading
// coefficients, unique per class for a fixed prescription
std::uint64_t rep_key(const Prescription& p, const ClassRep& c);

class GroupStructure {
  public:
    const Prescription& prescription() const { return presc_; }
    const std::vector<ClassRep>& generators() const { return gens_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::int64_t order() const { return order_; }
    std::int64_t root_order() const { return R_; }  // lcm of the cyclic orders
    std::size_t factor_count() const { return orders_.size(); }

    // total dlog table, a bijection onto [r_1) x ... x [r_f)
    ExponentVector dlog(const ClassRep& c) const;  // throws unknown_class
    std::size_t index_of(const ClassRep& c) const;
    const ClassRep& class_from_exponents(const ExponentVector& v) const;

    // mixed-radix linear index, last coordinate fastest
    std::size_t linear_index(const ExponentVector& v) const;
    ExponentVector exponents_at(std::size_t index) const;
    const ClassRep& rep_at(std::size_t index) const { return reps_[index]; }

  private:
    friend GroupStructure decompose(const Prescription&, std::int64_t);
    Prescription presc_{FieldCtx::prime_field(2), Kind::II, 1, 0};
    std::vector<ClassRep> gens_;
    std::vector<std::int64_t> orders_;
    std::int64_t order_ = 1;
    std::int64_t R_ = 1;
    std::vector<std::int64_t> strides_;
    std::vector<ClassRep> reps_;                          // by linear index
    std::unordered_map<std::uint64_t, std::size_t> idx_;  // rep key -> linear index
};

// Cyclic decomposition with explicit generators and a complete dlog table.
// Generator search: for type II over a prime field, first the <x^j + 1>
// family with gcd(j, p) = 1 and j <= ell (ascending j, independence verified
// against the span); otherwise greedy by maximal order over classes in
// ascending representative order, accepting only generators independent of
// the span so far.  Orders are listed descending.
GroupStructure decompose(const Prescription& p, std::int64_t max_order = std::int64_t{1} << 20);

}  // namespace prescount

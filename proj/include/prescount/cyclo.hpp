#pragma once

// Exact arithmetic in the cyclotomic field Q(w_R), w_R = exp(2*pi*i/R).
// Values are coordinate vectors of length phi(R) in the power basis
// 1, w, ..., w^{phi(R)-1} modulo the R-th cyclotomic polynomial Phi_R,
// with arbitrary-precision rational coordinates.  Representation is unique,
// so rationality is a coordinate check.

#include <cstdint>
#include <vector>

#include "prescount/errors.hpp"
#include "prescount/util.hpp"

namespace prescount {

// integer polynomial, constant first (used for Phi_R and zeta trivial factors)
struct IPoly {
    std::vector<Int> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

// Phi_R, computed by exact division of x^R - 1 by the product of all Phi_d
// over proper divisors d | R.
IPoly cyclotomic_poly(int R);

struct CycloNum {
    std::vector<Rat> c;  // phi(R) rationals, power-basis coordinates
    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c == b.c; }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return a.c != b.c; }
};

class CycloCtx {
  public:
    explicit CycloCtx(int R);

    int R() const { return R_; }
    int degree() const { return deg_; }  // phi(R)
    const IPoly& phi() const { return phi_; }

    CycloNum zero() const;
    CycloNum one() const { return from_rational(Rat(1)); }
    CycloNum from_rational(const Rat& r) const;
    CycloNum root_of_unity(std::int64_t k) const;  // w_R^k, k taken mod R

    CycloNum add(const CycloNum& a, const CycloNum& b) const;
    CycloNum sub(const CycloNum& a, const CycloNum& b) const;
    CycloNum neg(const CycloNum& a) const;
    CycloNum mul(const CycloNum& a, const CycloNum& b) const;
    CycloNum scalar_mul(const CycloNum& a, const Rat& s) const;
    void add_assign(CycloNum& a, const CycloNum& b) const;

    // Galois automorphism w -> w^{-1}
    CycloNum conjugate(const CycloNum& a) const;

    bool is_zero(const CycloNum& a) const;
    bool is_rational(const CycloNum& a) const;
    // coefficient of the basis vector 1, provided all higher coordinates
    // vanish; throws not_rational otherwise
    Rat to_rational(const CycloNum& a) const;

  private:
    void check(const CycloNum& a) const;

    int R_ = 1;
    int deg_ = 1;
    IPoly phi_;
    std::vector<std::vector<Int>> xpow_;  // x^m mod Phi_R, m = 0 .. max(R-1, 2 phi-2)
};

}  // namespace prescount

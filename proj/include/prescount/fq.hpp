#pragma once

// Exact arithmetic in F_q = F_{p^r} and in the polynomial ring F_q[x].
//
// Field elements are stored by their canonical integer encoding
// sum coeffs[i] * p^i in [0, q), where coeffs are the coordinates in the
// polynomial basis of F_p[y]/(modulus).  The encoding is the wire form used
// everywhere (CLI, JSON, hash keys).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prescount/errors.hpp"
#include "prescount/util.hpp"

namespace prescount {

struct Fe {
    std::int64_t v = 0;  // canonical encoding in [0, q)
    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
};

class FieldCtx {
  public:
    // F_p, p prime (checked by trial division).
    static FieldCtx prime_field(std::int64_t p);
    // F_{p^r} with the given modulus over F_p (constant-first digits,
    // monic of degree r, irreducibility checked), or the library default:
    // the monic irreducible of degree r with least encoding.
    static FieldCtx extension_field(std::int64_t p, int r,
                                    std::vector<std::int64_t> modulus = {});
    // F_q for a prime power q, with default modulus.
    static FieldCtx from_q(std::int64_t q);
    // parse "q=9" or "q=9,mod=2,2,1"
    static FieldCtx parse(const std::string& spec);

    std::int64_t p() const { return p_; }
    int r() const { return r_; }
    std::int64_t q() const { return q_; }
    // empty for r = 1
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    std::string to_spec() const;

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe fe(std::int64_t encoding) const;  // range-checked

    Fe add(Fe a, Fe b) const {
        if (!add_tab_.empty()) return Fe{add_tab_[a.v * q_ + b.v]};
        return add_slow(a, b);
    }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe neg(Fe a) const {
        if (!neg_tab_.empty()) return Fe{neg_tab_[a.v]};
        return neg_slow(a);
    }
    Fe mul(Fe a, Fe b) const {
        if (!mul_tab_.empty()) return Fe{mul_tab_[a.v * q_ + b.v]};
        return mul_slow(a, b);
    }
    Fe inv(Fe a) const {
        if (a.v == 0) throw division_by_zero("inverse of zero field element");
        if (!inv_tab_.empty()) return Fe{inv_tab_[a.v]};
        return pow(a, q_ - 2);
    }
    Fe pow(Fe a, std::int64_t e) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
    }

  private:
    FieldCtx() = default;
    void build_tables();
    Fe add_slow(Fe a, Fe b) const;
    Fe neg_slow(Fe a) const;
    Fe mul_slow(Fe a, Fe b) const;

    std::int64_t p_ = 0;
    int r_ = 1;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_;  // r+1 digits, constant first, monic
    // lookup tables for small q (the hot loops live there)
    std::vector<std::int64_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

// Dense polynomial over F_q, constant term first, no trailing zeros stored.
// The zero polynomial is the empty vector; degree() is -1 for it.
struct FPoly {
    std::vector<Fe> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Fe coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Fe{0};
    }
    Fe constant_term() const { return coeff(0); }
    bool is_monic() const { return !c.empty() && c.back().v == 1; }
    friend bool operator==(const FPoly& a, const FPoly& b) { return a.c == b.c; }
    friend bool operator!=(const FPoly& a, const FPoly& b) { return a.c != b.c; }
};

// construction / io
FPoly poly_from_encodings(const FieldCtx& F, const std::vector<std::int64_t>& enc);
FPoly poly_x(const FieldCtx& F);           // x
FPoly poly_one(const FieldCtx& F);         // 1
FPoly poly_xn(const FieldCtx& F, int n);   // x^n
std::string poly_to_string(const FPoly& f);              // "1,1,0,0,1"
FPoly poly_parse(const FieldCtx& F, const std::string&);  // inverse of the above

// arithmetic
FPoly poly_add(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly poly_sub(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly poly_mul(const FieldCtx& F, const FPoly& a, const FPoly& b);
// (quotient, remainder), deg rem < deg b; throws division_by_zero for b = 0
std::pair<FPoly, FPoly> poly_divmod(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly poly_mod(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly poly_gcd(const FieldCtx& F, FPoly a, FPoly b);  // monic gcd, or 0
FPoly poly_powmod(const FieldCtx& F, FPoly base, std::int64_t e, const FPoly& mod);

// Irreducibility of a monic polynomial of degree >= 1: trial division by all
// monic polynomials of degree <= deg/2 for small degrees, the Frobenius
// distinct-degree criterion above that.
bool is_irreducible(const FieldCtx& F, const FPoly& f);

// Monic polynomials of degree d, indexed 0 .. q^d - 1 by the canonical
// encoding of the d lower coefficients (ascending index = enumeration order).
Int monic_count(const FieldCtx& F, int d, bool nonzero_constant);
FPoly monic_by_index(const FieldCtx& F, int d, std::uint64_t index);

// convenience stream over monic polynomials of degree d
template <typename Fn>
void for_each_monic(const FieldCtx& F, int d, bool nonzero_constant, Fn&& fn) {
    if (d < 0) throw invalid_input("negative degree in monic enumeration");
    Int total = monic_count(F, d, false);
    std::uint64_t n = total.get_ui();
    if (!total.fits_ulong_p()) throw budget_exceeded("monic enumeration too large");
    for (std::uint64_t i = 0; i < n; ++i) {
        if (nonzero_constant && d > 0 && i % static_cast<std::uint64_t>(F.q()) == 0) continue;
        fn(monic_by_index(F, d, i));
    }
}

// least-encoding monic irreducible of degree d
FPoly least_irreducible(const FieldCtx& F, int d);

}  // namespace prescount

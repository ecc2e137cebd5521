#pragma once

// The counting pipeline: spectra E_d of classes hit by monic degree-d
// polynomials, character sums c_{d,j} over them, the numerator polynomials
// P_j(z) = 1 + sum_{k<=tau} c_{k,j} z^k, exact log-series extraction
// b_n = n [z^n] ln P_j(z), the counts N_n(eps) of field elements whose
// characteristic polynomial lies in a class, and the irreducible counts
// I_d(eps) via Moebius inversion over divisors and power congruences.
//
// All arithmetic is exact; every emitted count is checked to be a
// nonnegative rational integer, never rounded.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "prescount/class_group.hpp"
#include "prescount/cyclo.hpp"

namespace prescount {

// character index against the cyclic basis; the all-zero vector is the
// trivial character
using CharIndex = ExponentVector;

inline bool is_trivial_char(const CharIndex& j) {
    for (auto x : j)
        if (x) return false;
    return true;
}

// P_j(z) as tau+1 cyclotomic coefficients, c[0] = 1
struct PPoly {
    std::vector<CycloNum> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

// spectra[d-1] = E_d as deduplicated exponent vectors, ascending linear index
using Spectra = std::vector<std::vector<ExponentVector>>;

// E_d = { <f> : f monic of degree d (type I: f(0) != 0) }, 1 <= d <= tau
std::vector<ExponentVector> spectrum_E_d(const Prescription& p, const GroupStructure& gs, int d);
Spectra all_spectra(const Prescription& p, const GroupStructure& gs);

// c_{d,j} = sum over the spectrum of prod_i w_{r_i}^{v_i j_i},
// with w_{r_i} embedded as w_R^{R/r_i}
CycloNum char_coeff(const GroupStructure& gs, const std::vector<ExponentVector>& spectrum,
                    const CharIndex& j, const CycloCtx& ctx);

PPoly build_P(const GroupStructure& gs, const Spectra& spectra, const CharIndex& j,
              const CycloCtx& ctx);
PPoly build_P(const Prescription& p, const GroupStructure& gs, const CharIndex& j,
              const CycloCtx& ctx);

// b_n = n [z^n] ln P(z) for n = 1..n_max via the logarithmic-derivative
// recurrence b_n = n c_n - sum_{k=1}^{n-1} b_k c_{n-k}; returns a vector
// indexed by n with [0] = 0
std::vector<CycloNum> log_series(const PPoly& P, int n_max, const CycloCtx& ctx);

// all s with k s = t componentwise mod the given orders (empty if unsolvable)
std::vector<ExponentVector> solve_power_congruence(const std::vector<std::int64_t>& orders,
                                                   std::int64_t k, const ExponentVector& t);

// trivial zeta factor (1-z)/(1-qz) for type I, 1/(1-qz) for type II,
// plus every nontrivial numerator P_j keyed by its character index
struct ZetaData {
    IPoly trivial_num, trivial_den;
    std::vector<std::pair<CharIndex, PPoly>> numerators;
};

// Batch evaluator: caches spectra, the P_j, and their log series across all
// queries for one (prescription, group) instance.  Rows are exact and the
// per-character and per-class work items may run in parallel (Exec).
class Counter {
  public:
    Counter(const Prescription& p, const GroupStructure& gs);

    const CycloCtx& ctx() const { return ctx_; }
    const Spectra& spectra() const { return spectra_; }
    const GroupStructure& group() const { return gs_; }

    // N_n(eps): the number of alpha in F_{q^n} whose characteristic
    // polynomial lies in the class eps
    Int n_of(const ExponentVector& eps, int n, Exec exec = Exec::serial);
    // I_d(eps): monic irreducibles of degree d in the class
    Int i_of(const ExponentVector& t, int d, Exec exec = Exec::serial);

    // N values for every class (by linear index) at one n, cached
    const std::vector<Int>& n_row(int n, Exec exec = Exec::serial);
    // rows n = 1..n_max
    std::vector<std::vector<Int>> n_table(int n_max, Exec exec = Exec::serial);
    std::vector<std::vector<Int>> i_table(int d_max, Exec exec = Exec::serial);

    const PPoly& numerator(std::size_t j_linear_index) const;  // 1 <= idx < |E|
    ZetaData zeta_numerators() const;

    // extend the cached log series to n_max
    void ensure_series(int n_max, Exec exec = Exec::serial);

  private:
    Int assemble_n(std::size_t class_index, int n) const;

    Prescription presc_;
    const GroupStructure& gs_;
    CycloCtx ctx_;
    Spectra spectra_;
    std::vector<PPoly> numerators_;          // by j linear index, [0] unused
    std::vector<std::vector<CycloNum>> b_;   // b_[j][n], [0] unused
    int built_n_ = 0;
    std::map<int, std::vector<Int>> rows_;
};

}  // namespace prescount

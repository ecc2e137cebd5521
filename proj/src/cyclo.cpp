#include "prescount/cyclo.hpp"

#include <algorithm>

namespace prescount {

namespace {

void inormalize(IPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

IPoly imul(const IPoly& a, const IPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    IPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    inormalize(out);
    return out;
}

// exact division, both monic in our uses
IPoly idiv_exact(IPoly a, const IPoly& b) {
    IPoly q;
    if (a.degree() < b.degree()) {
        if (!a.c.empty()) throw not_rational("inexact integer polynomial division");
        return q;
    }
    q.c.assign(a.degree() - b.degree() + 1, Int(0));
    while (a.degree() >= b.degree() && !a.c.empty()) {
        int shift = a.degree() - b.degree();
        Int f = a.c.back() / b.c.back();
        if (f * b.c.back() != a.c.back()) throw not_rational("inexact division");
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) a.c[shift + i] -= f * b.c[i];
        inormalize(a);
    }
    if (!a.c.empty()) throw not_rational("nonzero remainder in exact division");
    return q;
}

IPoly xn_minus_1(int n) {
    IPoly f;
    f.c.assign(n + 1, Int(0));
    f.c[0] = -1;
    f.c[n] = 1;
    return f;
}

// Phi_d for every divisor d of R, keyed by position in nt::divisors(R).
std::vector<IPoly> cyclotomic_family(int R) {
    auto divs = nt::divisors(R);
    std::vector<IPoly> fam(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        IPoly num = xn_minus_1(static_cast<int>(divs[i]));
        for (std::size_t j = 0; j < i; ++j)
            if (divs[i] % divs[j] == 0) num = idiv_exact(std::move(num), fam[j]);
        fam[i] = std::move(num);
    }
    return fam;
}

}  // namespace

IPoly cyclotomic_poly(int R) {
    if (R < 1) throw invalid_input("cyclotomic order must be >= 1");
    return cyclotomic_family(R).back();
}

CycloCtx::CycloCtx(int R) : R_(R) {
    if (R < 1) throw invalid_input("cyclotomic order must be >= 1");
    auto family = cyclotomic_family(R);
    phi_ = family.back();
    deg_ = phi_.degree();

    // construction checks: Phi_R monic, and the full product over divisors
    // reassembles x^R - 1
    if (phi_.c.back() != 1) throw not_rational("cyclotomic polynomial not monic");
    IPoly prod{{Int(1)}};
    for (const IPoly& f : family) prod = imul(prod, f);
    IPoly target = xn_minus_1(R);
    if (prod.c != target.c) throw not_rational("cyclotomic product check failed");

    // x^m mod Phi_R for every power reachable by products of basis vectors
    // and by root_of_unity / conjugate lookups
    int top = std::max(R_ - 1, 2 * deg_ - 2);
    xpow_.resize(top + 1);
    for (int m = 0; m <= top; ++m) {
        if (m < deg_) {
            xpow_[m].assign(deg_, Int(0));
            xpow_[m][m] = 1;
            continue;
        }
        // x * xpow_[m-1], then fold the degree-phi term via
        // x^phi = -(phi_[0] + phi_[1] x + ... + phi_[phi-1] x^{phi-1})
        std::vector<Int> v(deg_ + 1, Int(0));
        for (int i = 0; i < deg_; ++i) v[i + 1] = xpow_[m - 1][i];
        Int lead = v[deg_];
        v.pop_back();
        if (lead != 0)
            for (int i = 0; i < deg_; ++i) v[i] -= lead * phi_.c[i];
        xpow_[m] = std::move(v);
    }
}

void CycloCtx::check(const CycloNum& a) const {
    if (static_cast<int>(a.c.size()) != deg_)
        throw invalid_input("cyclotomic value has wrong coordinate count");
}

CycloNum CycloCtx::zero() const {
    CycloNum z;
    z.c.assign(deg_, Rat(0));
    return z;
}

CycloNum CycloCtx::from_rational(const Rat& r) const {
    CycloNum z = zero();
    z.c[0] = r;
    return z;
}

CycloNum CycloCtx::root_of_unity(std::int64_t k) const {
    std::int64_t m = ((k % R_) + R_) % R_;
    CycloNum z = zero();
    for (int i = 0; i < deg_; ++i) z.c[i] = Rat(xpow_[m][i]);
    return z;
}

CycloNum CycloCtx::add(const CycloNum& a, const CycloNum& b) const {
    check(a);
    check(b);
    CycloNum out = a;
    for (int i = 0; i < deg_; ++i) out.c[i] += b.c[i];
    return out;
}

void CycloCtx::add_assign(CycloNum& a, const CycloNum& b) const {
    check(a);
    check(b);
    for (int i = 0; i < deg_; ++i) a.c[i] += b.c[i];
}

CycloNum CycloCtx::sub(const CycloNum& a, const CycloNum& b) const {
    check(a);
    check(b);
    CycloNum out = a;
    for (int i = 0; i < deg_; ++i) out.c[i] -= b.c[i];
    return out;
}

CycloNum CycloCtx::neg(const CycloNum& a) const {
    check(a);
    CycloNum out = a;
    for (auto& x : out.c) x = -x;
    return out;
}

CycloNum CycloCtx::mul(const CycloNum& a, const CycloNum& b) const {
    check(a);
    check(b);
    std::vector<Rat> conv(2 * deg_ - 1, Rat(0));
    for (int i = 0; i < deg_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) {
            if (b.c[j] == 0) continue;
            conv[i + j] += a.c[i] * b.c[j];
        }
    }
    CycloNum out = zero();
    for (int m = 0; m < static_cast<int>(conv.size()); ++m) {
        if (conv[m] == 0) continue;
        if (m < deg_) {
            out.c[m] += conv[m];
        } else {
            for (int i = 0; i < deg_; ++i)
                if (xpow_[m][i] != 0) out.c[i] += conv[m] * Rat(xpow_[m][i]);
        }
    }
    return out;
}

CycloNum CycloCtx::scalar_mul(const CycloNum& a, const Rat& s) const {
    check(a);
    CycloNum out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

CycloNum CycloCtx::conjugate(const CycloNum& a) const {
    check(a);
    CycloNum out = zero();
    for (int i = 0; i < deg_; ++i) {
        if (a.c[i] == 0) continue;
        int m = (R_ - i) % R_;
        for (int k = 0; k < deg_; ++k)
            if (xpow_[m][k] != 0) out.c[k] += a.c[i] * Rat(xpow_[m][k]);
    }
    return out;
}

bool CycloCtx::is_zero(const CycloNum& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](const Rat& x) { return x == 0; });
}

bool CycloCtx::is_rational(const CycloNum& a) const {
    check(a);
    for (int i = 1; i < deg_; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

Rat CycloCtx::to_rational(const CycloNum& a) const {
    if (!is_rational(a)) throw not_rational("cyclotomic value has nonzero root-of-unity part");
    return a.c[0];
}

}  // namespace prescount

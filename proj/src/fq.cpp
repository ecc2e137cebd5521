#include "prescount/fq.hpp"

#include <algorithm>
#include <sstream>

namespace prescount {

namespace {

constexpr std::int64_t kMaxP = (std::int64_t{1} << 31) - 1;
constexpr std::int64_t kTableQ = 256;  // build LUTs up to this field size

std::vector<std::int64_t> decode_digits(std::int64_t v, std::int64_t p, int r) {
    std::vector<std::int64_t> d(r);
    for (int i = 0; i < r; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::int64_t encode_digits(const std::vector<std::int64_t>& d, std::int64_t p) {
    std::int64_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

}  // namespace

FieldCtx FieldCtx::prime_field(std::int64_t p) {
    if (p < 2 || p > kMaxP || !nt::is_prime(p))
        throw invalid_input("field characteristic must be a prime < 2^31");
    FieldCtx F;
    F.p_ = p;
    F.r_ = 1;
    F.q_ = p;
    F.build_tables();
    return F;
}

FieldCtx FieldCtx::extension_field(std::int64_t p, int r, std::vector<std::int64_t> modulus) {
    if (r < 1) throw invalid_input("extension degree must be >= 1");
    FieldCtx base = prime_field(p);
    if (r == 1) {
        if (!modulus.empty()) throw invalid_input("modulus given for prime field");
        return base;
    }
    Int q = nt::pow_int(p, static_cast<unsigned long>(r));
    if (!q.fits_slong_p() || q.get_si() > kMaxP)
        throw invalid_input("field too large: q must fit below 2^31");
    if (modulus.empty()) {
        FPoly m = least_irreducible(base, r);
        modulus.resize(r + 1);
        for (int i = 0; i <= r; ++i) modulus[i] = m.coeff(i).v;
    } else {
        if (static_cast<int>(modulus.size()) != r + 1 || modulus[r] != 1)
            throw invalid_input("modulus must be monic of degree r");
        std::vector<Fe> c;
        for (auto d : modulus) c.push_back(base.fe(d));
        if (!is_irreducible(base, FPoly{c}))
            throw invalid_input("modulus polynomial is reducible");
    }
    FieldCtx F;
    F.p_ = p;
    F.r_ = r;
    F.q_ = q.get_si();
    F.modulus_ = std::move(modulus);
    F.build_tables();
    return F;
}

FieldCtx FieldCtx::from_q(std::int64_t q) {
    if (q < 2) throw invalid_input("q must be >= 2");
    auto fac = nt::factorize(q);
    if (fac.size() != 1) throw invalid_input("q must be a prime power");
    return extension_field(fac[0].first, fac[0].second);
}

FieldCtx FieldCtx::parse(const std::string& spec) {
    // "q=9" or "q=9,mod=2,2,1"
    auto mod_pos = spec.find(",mod=");
    std::string qpart = spec.substr(0, mod_pos);
    if (qpart.rfind("q=", 0) != 0) throw invalid_input("field spec must start with q=");
    std::int64_t q = std::stoll(qpart.substr(2));
    if (mod_pos == std::string::npos) return from_q(q);
    auto fac = nt::factorize(q);
    if (fac.size() != 1) throw invalid_input("q must be a prime power");
    std::vector<std::int64_t> digits;
    std::stringstream ss(spec.substr(mod_pos + 5));
    std::string tok;
    while (std::getline(ss, tok, ',')) digits.push_back(std::stoll(tok));
    return extension_field(fac[0].first, fac[0].second, std::move(digits));
}

std::string FieldCtx::to_spec() const {
    std::string s = "q=" + std::to_string(q_);
    if (r_ > 1) {
        s += ",mod=";
        for (int i = 0; i <= r_; ++i) {
            if (i) s += ',';
            s += std::to_string(modulus_[i]);
        }
    }
    return s;
}

Fe FieldCtx::fe(std::int64_t encoding) const {
    if (encoding < 0 || encoding >= q_) throw invalid_input("field element encoding out of range");
    return Fe{encoding};
}

Fe FieldCtx::add_slow(Fe a, Fe b) const {
    if (r_ == 1) return Fe{(a.v + b.v) % p_};
    auto da = decode_digits(a.v, p_, r_), db = decode_digits(b.v, p_, r_);
    for (int i = 0; i < r_; ++i) da[i] = (da[i] + db[i]) % p_;
    return Fe{encode_digits(da, p_)};
}

Fe FieldCtx::neg_slow(Fe a) const {
    if (r_ == 1) return Fe{a.v ? p_ - a.v : 0};
    auto d = decode_digits(a.v, p_, r_);
    for (auto& x : d) x = x ? p_ - x : 0;
    return Fe{encode_digits(d, p_)};
}

Fe FieldCtx::mul_slow(Fe a, Fe b) const {
    if (r_ == 1) return Fe{(a.v * b.v) % p_};
    auto da = decode_digits(a.v, p_, r_), db = decode_digits(b.v, p_, r_);
    std::vector<std::int64_t> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // fold x^i for i >= r via x^r = -(modulus mod x^r)
    for (int i = 2 * r_ - 2; i >= r_; --i) {
        std::int64_t c = prod[i];
        if (!c) continue;
        for (int k = 0; k < r_; ++k) {
            prod[i - r_ + k] = ((prod[i - r_ + k] - c * modulus_[k]) % p_ + p_) % p_;
        }
        prod[i] = 0;
    }
    prod.resize(r_);
    return Fe{encode_digits(prod, p_)};
}

Fe FieldCtx::pow(Fe a, std::int64_t e) const {
    Fe res = one(), base = a;
    while (e > 0) {
        if (e & 1) res = mul(res, base);
        base = mul(base, base);
        e >>= 1;
    }
    return res;
}

void FieldCtx::build_tables() {
    if (q_ > kTableQ) return;
    add_tab_.resize(q_ * q_);
    mul_tab_.resize(q_ * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (std::int64_t a = 0; a < q_; ++a) {
        neg_tab_[a] = neg_slow(Fe{a}).v;
        for (std::int64_t b = 0; b < q_; ++b) {
            add_tab_[a * q_ + b] = add_slow(Fe{a}, Fe{b}).v;
            std::int64_t m = mul_slow(Fe{a}, Fe{b}).v;
            mul_tab_[a * q_ + b] = m;
            if (m == 1) inv_tab_[a] = b;
        }
    }
}

// ---------------------------------------------------------------------------
// polynomials

namespace {
void normalize(FPoly& f) {
    while (!f.c.empty() && f.c.back().v == 0) f.c.pop_back();
}
}  // namespace

FPoly poly_from_encodings(const FieldCtx& F, const std::vector<std::int64_t>& enc) {
    FPoly f;
    f.c.reserve(enc.size());
    for (auto e : enc) f.c.push_back(F.fe(e));
    normalize(f);
    return f;
}

FPoly poly_x(const FieldCtx& F) { return FPoly{{F.zero(), F.one()}}; }
FPoly poly_one(const FieldCtx& F) { return FPoly{{F.one()}}; }

FPoly poly_xn(const FieldCtx& F, int n) {
    FPoly f;
    f.c.assign(n + 1, F.zero());
    f.c[n] = F.one();
    return f;
}

std::string poly_to_string(const FPoly& f) {
    std::string s;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.c[i].v);
    }
    return s.empty() ? "0" : s;
}

FPoly poly_parse(const FieldCtx& F, const std::string& s) {
    std::vector<std::int64_t> enc;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw invalid_input("empty coefficient in polynomial string");
        enc.push_back(std::stoll(tok));
    }
    return poly_from_encodings(F, enc);
}

FPoly poly_add(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    FPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.add(a.coeff(i), b.coeff(i));
    normalize(out);
    return out;
}

FPoly poly_sub(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    FPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.sub(a.coeff(i), b.coeff(i));
    normalize(out);
    return out;
}

FPoly poly_mul(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    normalize(out);
    return out;
}

std::pair<FPoly, FPoly> poly_divmod(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (a.degree() < b.degree()) return {FPoly{}, a};
    FPoly rem = a, quot;
    quot.c.assign(a.degree() - b.degree() + 1, F.zero());
    Fe lead_inv = F.inv(b.c.back());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Fe factor = F.mul(rem.c.back(), lead_inv);
        quot.c[shift] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(factor, b.c[i]));
        normalize(rem);
    }
    normalize(quot);
    return {quot, rem};
}

FPoly poly_mod(const FieldCtx& F, const FPoly& a, const FPoly& b) {
    return poly_divmod(F, a, b).second;
}

FPoly poly_gcd(const FieldCtx& F, FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back().v != 1) {
        Fe inv = F.inv(a.c.back());
        for (auto& x : a.c) x = F.mul(x, inv);
    }
    return a;
}

FPoly poly_powmod(const FieldCtx& F, FPoly base, std::int64_t e, const FPoly& mod) {
    FPoly res = poly_mod(F, poly_one(F), mod);
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if (e & 1) res = poly_mod(F, poly_mul(F, res, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return res;
}

namespace {

// Rabin: f of degree d is irreducible iff x^{q^d} = x (mod f) and
// gcd(x^{q^{d/s}} - x, f) = 1 for every prime s | d.
bool irreducible_frobenius(const FieldCtx& F, const FPoly& f) {
    int d = f.degree();
    FPoly x = poly_x(F);
    std::vector<FPoly> frob(d + 1);  // frob[i] = x^{q^i} mod f
    frob[0] = poly_mod(F, x, f);
    for (int i = 1; i <= d; ++i) frob[i] = poly_powmod(F, frob[i - 1], F.q(), f);
    if (frob[d] != frob[0]) return false;
    for (auto [s, e] : nt::factorize(d)) {
        FPoly g = poly_gcd(F, poly_sub(F, frob[d / s], x), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

bool irreducible_trial(const FieldCtx& F, const FPoly& f) {
    int d = f.degree();
    for (int e = 1; e <= d / 2; ++e) {
        bool found = false;
        for_each_monic(F, e, false, [&](const FPoly& g) {
            if (!found && poly_mod(F, f, g).is_zero()) found = true;
        });
        if (found) return false;
    }
    return true;
}

}  // namespace

bool is_irreducible(const FieldCtx& F, const FPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw invalid_input("irreducibility test requires a monic polynomial of degree >= 1");
    if (f.degree() <= 12) return irreducible_trial(F, f);
    return irreducible_frobenius(F, f);
}

Int monic_count(const FieldCtx& F, int d, bool nonzero_constant) {
    if (d < 0) throw invalid_input("negative degree");
    if (d == 0) return 1;  // the constant 1 (nonzero either way)
    Int qd1 = nt::pow_int(F.q(), static_cast<unsigned long>(d - 1));
    return nonzero_constant ? Int((F.q() - 1) * qd1) : Int(F.q() * qd1);
}

FPoly monic_by_index(const FieldCtx& F, int d, std::uint64_t index) {
    FPoly f;
    f.c.resize(d + 1, F.zero());
    f.c[d] = F.one();
    for (int i = 0; i < d; ++i) {
        f.c[i] = Fe{static_cast<std::int64_t>(index % static_cast<std::uint64_t>(F.q()))};
        index /= static_cast<std::uint64_t>(F.q());
    }
    return f;
}

FPoly least_irreducible(const FieldCtx& F, int d) {
    if (d < 1) throw invalid_input("degree must be >= 1");
    Int total = monic_count(F, d, false);
    for (std::uint64_t i = 0; i < total.get_ui(); ++i) {
        FPoly f = monic_by_index(F, d, i);
        if (is_irreducible(F, f)) return f;
    }
    throw invalid_input("no irreducible polynomial found");  // unreachable
}

}  // namespace prescount

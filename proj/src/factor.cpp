#include "ellk3/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace ellk3 {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (ascending coefficients, no trailing zeros).

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    q.clear();
    if (b.empty()) return false;
    ZPoly r = a;
    ztrim(r);
    if (r.empty()) return true;
    q.assign(r.size(), Int(0));
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return false;
        int k = zdeg(r) - zdeg(b);
        q[static_cast<std::size_t>(k)] = qc;
        for (std::size_t i = 0; i < b.size(); ++i) r[static_cast<std::size_t>(k) + i] -= qc * b[i];
        ztrim(r);
    }
    if (!r.empty()) return false;
    ztrim(q);
    return true;
}

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly z_primitive_part(ZPoly p) {
    ztrim(p);
    Int cont = zcontent(p);
    if (cont > 1)
        for (Int& c : p) c /= cont;
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}

ZPoly z_from_q(const QPoly& p) {
    Int den = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat scaled = p.coeff(i) * Rat(den);
        r[i] = scaled.get_num();
    }
    return z_primitive_part(r);
}

QPoly to_qpoly_monic(const ZPoly& p) {
    std::vector<Rat> c(p.size());
    Rat lead(p.back());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]) / lead;
    return QPoly(std::move(c));
}

Int symmetric_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

ZPoly zmod_sym(const ZPoly& a, const Int& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = symmetric_mod(a[i], m);
    ztrim(r);
    return r;
}

// ---------------------------------------------------------------------------
// Arithmetic mod a word-sized prime.

using FPoly = std::vector<std::uint64_t>;

struct Fp {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

void ftrim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fdeg(const FPoly& a) { return static_cast<int>(a.size()) - 1; }

FPoly fmul(const Fp& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ftrim(r);
    return r;
}

FPoly fsub(const Fp& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    ftrim(r);
    return r;
}

FPoly fscale(const Fp& F, const FPoly& a, std::uint64_t s) {
    FPoly r = a;
    for (auto& c : r) c = F.mul(c, s);
    ftrim(r);
    return r;
}

FPoly fmonic(const Fp& F, const FPoly& a) {
    if (a.empty()) return a;
    return fscale(F, a, F.inv(a.back()));
}

FPoly fmod(const Fp& F, FPoly a, const FPoly& m) {
    ftrim(a);
    const std::uint64_t inv_lead = F.inv(m.back());
    while (fdeg(a) >= fdeg(m)) {
        std::uint64_t f = F.mul(a.back(), inv_lead);
        int k = fdeg(a) - fdeg(m);
        for (std::size_t i = 0; i < m.size(); ++i)
            a[static_cast<std::size_t>(k) + i] = F.sub(a[static_cast<std::size_t>(k) + i], F.mul(f, m[i]));
        ftrim(a);
    }
    return a;
}

FPoly fquot(const Fp& F, FPoly a, const FPoly& b) {
    ftrim(a);
    FPoly q(a.size(), 0);
    const std::uint64_t inv_lead = F.inv(b.back());
    while (fdeg(a) >= fdeg(b)) {
        std::uint64_t f = F.mul(a.back(), inv_lead);
        int k = fdeg(a) - fdeg(b);
        q[static_cast<std::size_t>(k)] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(k) + i] = F.sub(a[static_cast<std::size_t>(k) + i], F.mul(f, b[i]));
        ftrim(a);
    }
    ftrim(q);
    return q;
}

FPoly fgcd(const Fp& F, FPoly a, FPoly b) {
    ftrim(a);
    ftrim(b);
    while (!b.empty()) {
        a = fmod(F, a, b);
        std::swap(a, b);
    }
    return fmonic(F, a);
}

FPoly fmulmod(const Fp& F, const FPoly& a, const FPoly& b, const FPoly& m) {
    return fmod(F, fmul(F, a, b), m);
}

FPoly fpowmod(const Fp& F, FPoly base, Int e, const FPoly& m) {
    FPoly r{1};
    base = fmod(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fmulmod(F, r, base, m);
        base = fmulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

FPoly fderiv(const Fp& F, const FPoly& a) {
    if (a.size() <= 1) return {};
    FPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
    ftrim(r);
    return r;
}

// Cantor-Zassenhaus equal-degree splitting; rng seeding is fixed, so the
// whole factorization is deterministic for a given input.
void equal_degree_split(const Fp& F, const FPoly& f, int d, std::vector<FPoly>& out,
                        std::mt19937_64& rng) {
    if (fdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Int exponent(static_cast<unsigned long>(F.p));
    mpz_pow_ui(exponent.get_mpz_t(), exponent.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        FPoly r(static_cast<std::size_t>(fdeg(f)), 0);
        for (auto& c : r) c = rng() % F.p;
        ftrim(r);
        if (fdeg(r) < 1) continue;
        FPoly h = fpowmod(F, r, exponent, f);
        if (h.empty()) continue;
        h[0] = F.sub(h[0], 1);
        ftrim(h);
        FPoly g = fgcd(F, h, f);
        if (fdeg(g) > 0 && fdeg(g) < fdeg(f)) {
            equal_degree_split(F, g, d, out, rng);
            equal_degree_split(F, fmonic(F, fquot(F, f, g)), d, out, rng);
            return;
        }
    }
}

std::vector<FPoly> factor_mod_p(const Fp& F, FPoly f) {
    std::vector<FPoly> out;
    f = fmonic(F, f);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ F.p);
    FPoly h{0, 1};  // x
    FPoly rest = f;
    int d = 0;
    while (fdeg(rest) > 0) {
        ++d;
        if (2 * d > fdeg(rest)) {
            out.push_back(rest);
            break;
        }
        h = fpowmod(F, h, Int(static_cast<unsigned long>(F.p)), rest);
        FPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        ftrim(hx);
        FPoly g = fgcd(F, hx, rest);
        if (fdeg(g) > 0) {
            equal_degree_split(F, g, d, out, rng);
            rest = fmonic(F, fquot(F, rest, g));
            if (fdeg(rest) > 0) h = fmod(F, h, rest);
        }
    }
    return out;
}

// Extended gcd mod p: s*a + t*b = 1 for coprime a, b.
void fp_exgcd(const Fp& F, FPoly a, FPoly b, FPoly& s, FPoly& t) {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    ftrim(r0);
    ftrim(r1);
    while (!r1.empty()) {
        FPoly q = fquot(F, r0, r1);
        FPoly r2 = fsub(F, r0, fmul(F, q, r1));
        FPoly s2 = fsub(F, s0, fmul(F, q, s1));
        FPoly t2 = fsub(F, t0, fmul(F, q, t1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    const std::uint64_t ilead = F.inv(r0.back());
    s = fscale(F, s0, ilead);
    t = fscale(F, t0, ilead);
}

ZPoly from_fp(const FPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    ztrim(r);
    return r;
}

FPoly to_fp(const Fp& F, const ZPoly& a) {
    FPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int c;
        mpz_mod_ui(c.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(F.p));
        r[i] = c.get_ui();
    }
    ftrim(r);
    return r;
}

Int mignotte_bound(const ZPoly& f) {
    Int sumsq = 0;
    for (const Int& c : f) sumsq += c * c;
    Int norm = sqrt(sumsq) + 1;
    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(f) + 2));
    return two_n * norm;
}

// Lift the mod-p factorization of the monic transform fm to mod p^k, k with
// p^k > 2 * mignotte(fm).  Linear lift, all factors simultaneously.
struct LiftedFactors {
    std::vector<ZPoly> factors;  // monic factors of fm mod pk
    Int pk;
};

LiftedFactors hensel_lift(const Fp& F, const ZPoly& fm, const std::vector<FPoly>& fm_factors_p) {
    std::vector<ZPoly> fac;
    fac.reserve(fm_factors_p.size());
    for (const FPoly& g : fm_factors_p) fac.push_back(from_fp(g));

    const Int bound = 2 * mignotte_bound(fm) + 1;
    Int pk(static_cast<unsigned long>(F.p));
    while (pk < bound) {
        Int pk_next = pk * Int(static_cast<unsigned long>(F.p));
        ZPoly prod{Int(1)};
        for (const ZPoly& g : fac) prod = zmod_sym(zmul(prod, g), pk_next);
        ZPoly err(fm.size(), Int(0));
        for (std::size_t i = 0; i < fm.size(); ++i)
            err[i] = symmetric_mod(fm[i] - (i < prod.size() ? prod[i] : Int(0)), pk_next);
        ztrim(err);
        if (!err.empty()) {
            ZPoly e_over(err.size());
            for (std::size_t i = 0; i < err.size(); ++i) e_over[i] = err[i] / pk;
            FPoly e_fp = to_fp(F, e_over);
            for (std::size_t idx = 0; idx < fac.size(); ++idx) {
                FPoly cof{1};
                for (std::size_t j = 0; j < fac.size(); ++j)
                    if (j != idx) cof = fmul(F, cof, to_fp(F, fac[j]));
                FPoly s, t, self = to_fp(F, fac[idx]);
                fp_exgcd(F, cof, self, s, t);
                FPoly delta = fmod(F, fmul(F, e_fp, s), self);
                ZPoly dz = from_fp(delta);
                ZPoly& g = fac[idx];
                if (g.size() < dz.size()) g.resize(dz.size(), Int(0));
                for (std::size_t i = 0; i < dz.size(); ++i)
                    g[i] = symmetric_mod(g[i] + dz[i] * pk, pk_next);
                ztrim(g);
            }
        }
        pk = pk_next;
    }
    return {fac, pk};
}

// Factor a squarefree primitive integer polynomial into irreducibles over Z.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    std::vector<ZPoly> result;
    if (zdeg(f) <= 1) {
        if (zdeg(f) >= 1) result.push_back(f);
        return result;
    }

    static const std::uint64_t kPrimes[] = {1048583, 1048589, 1048601, 1048609, 1048613,
                                            1048627, 1048633, 1048661, 1048681, 1048703,
                                            1048709, 1048717, 1048721, 1048759, 1048783};
    Fp F{0};
    FPoly fp;
    for (std::uint64_t p : kPrimes) {
        Fp cand{p};
        if (f.back() % Int(static_cast<unsigned long>(p)) == 0) continue;
        FPoly r = to_fp(cand, f);
        if (fdeg(r) != zdeg(f)) continue;
        if (fdeg(fgcd(cand, r, fderiv(cand, r))) != 0) continue;
        F = cand;
        fp = r;
        break;
    }
    if (F.p == 0) throw internal_error("no suitable factorization prime");

    std::vector<FPoly> fp_factors = factor_mod_p(F, fp);
    if (fp_factors.size() == 1) {
        result.push_back(f);
        return result;
    }

    // Monic transform fm(x) = lc^(n-1) f(x/lc); its mod-p factors are the
    // rescaled images of the factors of f.
    const Int lc = f.back();
    const int n = zdeg(f);
    ZPoly fm(f.size());
    {
        Int scale = 1;
        for (int i = n; i >= 0; --i) {
            fm[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * scale;
            if (i > 0) scale *= lc;
        }
    }
    std::vector<FPoly> fm_factors_p;
    {
        Int c;
        mpz_mod_ui(c.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(F.p));
        const std::uint64_t inv_lc = F.inv(c.get_ui());
        for (FPoly g : fp_factors) {
            std::uint64_t acc = 1;
            for (std::size_t i = 0; i < g.size(); ++i) {
                g[i] = F.mul(g[i], acc);
                acc = F.mul(acc, inv_lc);
            }
            fm_factors_p.push_back(fmonic(F, g));
        }
    }

    LiftedFactors lifted = hensel_lift(F, fm, fm_factors_p);
    const std::vector<ZPoly>& modular = lifted.factors;
    const Int& pk = lifted.pk;

    // Subset recombination.  A true factor of f is the primitive part of
    // G(lc*x) where G is a subset product of the lifted monic factors.
    auto candidate = [&](const std::vector<std::size_t>& subset) -> ZPoly {
        ZPoly g{Int(1)};
        for (std::size_t idx : subset) g = zmod_sym(zmul(g, modular[idx]), pk);
        ZPoly h(g.size());
        Int acc = 1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            h[i] = g[i] * acc;
            acc *= lc;
        }
        return z_primitive_part(h);
    };

    ZPoly remaining = f;
    std::vector<bool> used(modular.size(), false);
    std::size_t live = modular.size();

    for (std::size_t take = 1; take <= live / 2; ++take) {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < modular.size(); ++i)
            if (!used[i]) avail.push_back(i);
        if (avail.size() < take) break;
        std::vector<std::size_t> comb(take);
        for (std::size_t i = 0; i < take; ++i) comb[i] = i;
        for (;;) {
            std::vector<std::size_t> subset(take);
            for (std::size_t i = 0; i < take; ++i) subset[i] = avail[comb[i]];
            ZPoly cand = candidate(subset);
            ZPoly q;
            if (zdeg(cand) >= 1 && zdivide_exact(remaining, cand, q)) {
                result.push_back(cand);
                remaining = z_primitive_part(q);
                for (std::size_t idx : subset) used[idx] = true;
                live -= take;
                avail.clear();
                for (std::size_t i = 0; i < modular.size(); ++i)
                    if (!used[i]) avail.push_back(i);
                if (avail.size() < take || take > live / 2) break;
                for (std::size_t i = 0; i < take; ++i) comb[i] = i;
                continue;
            }
            bool advanced = false;
            for (std::size_t i = take; i-- > 0;) {
                if (comb[i] + (take - i) < avail.size()) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (take > live / 2) break;
    }
    if (zdeg(remaining) >= 1) result.push_back(remaining);
    return result;
}

}  // namespace

std::vector<SquarefreePart> squarefree_decomposition(const QPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree decomposition of zero");
    std::vector<SquarefreePart> out;
    QPoly f = p.monic();
    if (f.degree() == 0) return out;

    // Yun's algorithm (characteristic zero).
    QPoly fprime = f.derivative();
    QPoly a = gcd(f, fprime);
    QPoly b = f / a;
    QPoly c = fprime / a;
    QPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly g = gcd(b, d);
        if (g.degree() > 0) out.push_back({g.monic(), i});
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    std::sort(out.begin(), out.end(), [](const SquarefreePart& x, const SquarefreePart& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        if (x.factor != y.factor) return poly_less(x.factor, y.factor);
        return x.multiplicity < y.multiplicity;
    });
    return out;
}

Factorization factor_over_q(const QPoly& p) {
    if (p.is_zero()) throw domain_error("factorization of zero");
    Factorization out;
    out.unit = p.leading();
    std::vector<SquarefreePart> irred;
    for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
        ZPoly fz = z_from_q(sqf);
        for (const ZPoly& g : factor_squarefree_z(fz)) {
            if (zdeg(g) < 1) continue;
            irred.push_back({to_qpoly_monic(g), mult});
        }
    }
    std::sort(irred.begin(), irred.end(), [](const SquarefreePart& x, const SquarefreePart& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        if (x.factor != y.factor) return poly_less(x.factor, y.factor);
        return x.multiplicity < y.multiplicity;
    });
    out.factors = std::move(irred);
    return out;
}

bool is_irreducible_over_q(const QPoly& p) {
    if (p.degree() <= 0) return false;
    if (p.degree() == 1) return true;
    Factorization f = factor_over_q(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
           f.factors[0].factor.degree() == p.degree();
}

}  // namespace ellk3

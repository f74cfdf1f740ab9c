#include "ecforge/dioph.hpp"

#include <algorithm>
#include <numeric>

#include "ecforge/errors.hpp"

namespace ecforge {

namespace {

Rational esym_k(const std::vector<Rational>& v, int k) {
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = 1;
    for (const auto& x : v)
        for (int i = k; i >= 1; --i) e[i] += e[i - 1] * x;
    return e[k];
}

std::array<Rational, 6> esym6(const std::array<Rational, 6>& v) {
    // e[k] via the usual accumulation
    std::array<Rational, 7> e;
    e.fill(Rational(0));
    e[0] = 1;
    for (const auto& x : v)
        for (int k = 6; k >= 1; --k) e[k] += e[k - 1] * x;
    std::array<Rational, 6> out;
    for (int k = 1; k <= 6; ++k) out[k - 1] = e[k];
    return out;
}

bool same_multiset(std::array<Rational, 6> a, std::array<Rational, 6> b) {
    auto lt = [](const Rational& x, const Rational& y) { return x < y; };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

Rational product_of(const std::vector<Rational>& v) {
    Rational p(1);
    for (const auto& x : v) p *= x;
    return p;
}

}  // namespace

SymmetricFunctions symmetric_functions(const std::array<Rational, 6>& a,
                                       const std::array<Rational, 6>& b) {
    SymmetricFunctions f;
    f.s = esym6(a);
    f.t = esym6(b);
    for (int i = 0; i < 6; ++i) f.d[i] = f.s[i] - f.t[i];
    return f;
}

namespace {

Rational norm_f1(const Rational& u1, const Rational& u2, const Rational& v1, const Rational& v2,
                 const Rational& w1, const Rational& w2) {
    return u1 * v1 * w1 - u1 * v2 * w2 - u2 * v1 * w2 - u2 * v2 * w1 - u2 * v2 * w2;
}

Rational norm_f2(const Rational& u1, const Rational& u2, const Rational& v1, const Rational& v2,
                 const Rational& w1, const Rational& w2) {
    return -u1 * v1 * w1 - u1 * v1 * w2 - u1 * v2 * w1 - u2 * v1 * w1 + u2 * v2 * w2;
}

}  // namespace

TripleChain te2_chains(const Rational& p1, const Rational& p2, const Rational& q1,
                       const Rational& q2, const Rational& r1, const Rational& r2) {
    TripleChain c;
    auto triple = [](Rational t1, Rational t2) {
        std::array<Rational, 3> t{std::move(t1), std::move(t2), Rational(0)};
        t[2] = -t[0] - t[1];
        return t;
    };
    c.triples[0] = triple(norm_f1(p1, p2, q1, q2, r1, r2), norm_f2(p1, p2, q1, q2, r1, r2));
    c.triples[1] = triple(norm_f1(p2, p1, q1, q2, r1, r2), norm_f2(p2, p1, q1, q2, r1, r2));
    c.triples[2] = triple(norm_f1(p1, p2, q2, q1, r1, r2), norm_f2(p1, p2, q2, q1, r1, r2));
    c.triples[3] = triple(norm_f1(p1, p2, q1, q2, r2, r1), norm_f2(p1, p2, q1, q2, r2, r1));
    c.s = -(p1 * p1 + p1 * p2 + p2 * p2) * (q1 * q1 + q1 * q2 + q2 * q2) *
          (r1 * r1 + r1 * r2 + r2 * r2);
    // any two triples coinciding as sets collapses the chain
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto x = c.triples[i], y = c.triples[j];
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            if (x == y) throw DegenerateParameters("two chain triples coincide");
        }
    return c;
}

std::array<std::array<Rational, 3>, 3> sumsprod_param(const Rational& p) {
    const Rational one(1);
    const Rational p2 = p * p;
    const Rational fm = p2 - 2 * p - 1, fp = p2 + 2 * p - 1;
    std::array<std::array<Rational, 3>, 3> t;
    t[0] = {2 * (p2 + 1) * (p2 + 1) * (p2 + 1), -(p - 1) * (p + 1) * fm * fp, 2 * p * fm * fp};
    t[1] = {(p2 + 1) * fp * fp, -2 * (p - 1) * (p2 + 1) * fm, 2 * p * (p + 1) * (p2 + 1) * fm};
    t[2] = {(p2 + 1) * fm * fm, 2 * (p + 1) * (p2 + 1) * fp, -2 * p * (p - 1) * (p2 + 1) * fp};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto x = t[i], y = t[j];
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            if (x == y) throw DegenerateParameters("two sums/products triples coincide");
        }
    return t;
}

QuadChain quads_from_triples(const std::array<std::array<Rational, 3>, 3>& t) {
    // guard: the input must satisfy its own chain equalities
    const Rational sq0 = t[0][0] * t[0][0] + t[0][1] * t[0][1] + t[0][2] * t[0][2];
    const Rational pr0 = t[0][0] * t[0][1] * t[0][2];
    for (int i = 1; i < 3; ++i) {
        const Rational sq = t[i][0] * t[i][0] + t[i][1] * t[i][1] + t[i][2] * t[i][2];
        const Rational pr = t[i][0] * t[i][1] * t[i][2];
        if (sq != sq0 || pr != pr0) throw ChainViolation("input fails the sums/products chains");
    }
    QuadChain q;
    for (int i = 0; i < 3; ++i) {
        const Rational &x = t[i][0], &y = t[i][1], &z = t[i][2];
        q.quads[i] = {x - y - z, y - z - x, z - x - y, x + y + z};
    }
    return q;
}

SexticPair fam3_sol1(const Rational& m, const Rational& n, const Rational& p, const Rational& q,
                     const Rational& r, const Rational& s, const Rational& u, const Rational& v) {
    SexticPair out;
    out.a = {(p + 2 * q) * m - (p - q) * n,       -(2 * p + q) * m - (p + 2 * q) * n,
             (p - q) * m + (2 * p + q) * n,       (r + 2 * s) * u - (r - s) * v,
             -(2 * r + s) * u - (r + 2 * s) * v,  (r - s) * u + (2 * r + s) * v};
    out.b = {(p - q) * m - (p + 2 * q) * n,       -(2 * p + q) * m - (p - q) * n,
             (p + 2 * q) * m + (2 * p + q) * n,   (r - s) * u - (r + 2 * s) * v,
             -(2 * r + s) * u - (r - s) * v,      (r + 2 * s) * u + (2 * r + s) * v};
    if (same_multiset(out.a, out.b)) throw DegenerateParameters("sextuples coincide");
    out.sym = symmetric_functions(out.a, out.b);
    return out;
}

namespace {

Rational fam3_f1(const std::array<Rational, 5>& p) {
    const Rational &p1 = p[0], &p2 = p[1], &p3 = p[2], &p4 = p[3], &p5 = p[4];
    return (p2 * p3 - 2 * p2 * p4 + p2 * p5 - p3 * p3 + p3 * p4 + p4 * p5 - p5 * p5) * p1 * p1 -
           (3 * p2 * p2 * p3 - 6 * p2 * p2 * p4 + 3 * p2 * p2 * p5 - 4 * p2 * p3 * p3 +
            8 * p2 * p3 * p4 - 4 * p2 * p3 * p5 - 4 * p2 * p4 * p4 + 8 * p2 * p4 * p5 -
            4 * p2 * p5 * p5 + p3 * p3 * p3 - 2 * p3 * p3 * p4 + p3 * p3 * p5 + p3 * p4 * p4 -
            4 * p3 * p4 * p5 + 3 * p3 * p5 * p5 + 3 * p4 * p4 * p5 - 4 * p4 * p5 * p5 +
            p5 * p5 * p5) *
               p1 +
           (2 * p3 - 4 * p4 + 2 * p5) * p2 * p2 * p2 -
           3 * (p3 - 2 * p4 + p5) * (p3 - p4 + p5) * p2 * p2 +
           (p3 * p3 * p3 - 6 * p3 * p3 * p4 + 5 * p3 * p3 * p5 + 7 * p3 * p4 * p4 -
            12 * p3 * p4 * p5 + 5 * p3 * p5 * p5 - 2 * p4 * p4 * p4 + 7 * p4 * p4 * p5 -
            6 * p4 * p5 * p5 + p5 * p5 * p5) *
               p2 +
           (p4 - p5) * (p3 - p4) * (p3 * p3 + 2 * p3 * p5 - 2 * p4 * p5 + p5 * p5);
}

Rational fam3_f2(const std::array<Rational, 5>& p) {
    const Rational &p1 = p[0], &p2 = p[1], &p3 = p[2], &p4 = p[3], &p5 = p[4];
    return (p2 - p3 + p4 - p5) * p1 * p1 -
           (p2 * p2 - 2 * p2 * p3 + 4 * p2 * p4 - 2 * p2 * p5 + p3 * p3 - 2 * p3 * p4 + p4 * p4 -
            2 * p4 * p5 + p5 * p5) *
               p1 -
           (p3 - 3 * p4 + p5) * p2 * p2 + (p3 - 3 * p4 + p5) * (p3 - p4 + p5) * p2 +
           (p3 - p4) * (p3 + p5) * (p4 - p5);
}

/// Clears denominators, divides by integer content, fixes the sign so the
/// first nonzero entry of a is positive ("on appropriate scaling").
void normalize_pair(std::array<Rational, 6>& a, std::array<Rational, 6>& b) {
    Integer den(1);
    for (const auto* arr : {&a, &b})
        for (const auto& x : *arr) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    Integer content(0);
    for (auto* arr : {&a, &b})
        for (auto& x : *arr) {
            x *= Rational(den);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
        }
    if (content > 1)
        for (auto* arr : {&a, &b})
            for (auto& x : *arr) x /= Rational(content);
    for (const auto& x : a) {
        if (x == 0) continue;
        if (x < 0)
            for (auto* arr : {&a, &b})
                for (auto& y : *arr) y = -y;
        break;
    }
}

}  // namespace

SexticPair fam3_sol2(const Rational& m, const Rational& n, const std::array<Rational, 5>& p) {
    const Rational u = fam3_f2(p);
    const Rational v = -fam3_f1(p);
    if (u == 0 && v == 0) throw DegenerateParameters("f1 = f2 = 0");
    if (m * m * v * v == n * n * u * u)
        throw DegenerateParameters("m^2 v^2 = n^2 u^2 collapses the residual");
    const Rational &p1 = p[0], &p2 = p[1], &p3 = p[2], &p4 = p[3], &p5 = p[4];
    SexticPair out;
    const Rational k1 = (p1 - p2) * u + v;
    const Rational k2 = (p1 - 2 * p2 + p3) * u + v;
    const Rational k3 = (p1 - 2 * p2 + 2 * p3 - p4) * u + v;
    const Rational k4 = (p1 - 2 * p2 + 2 * p3 - 2 * p4 + p5) * u + v;
    const Rational k5 = (p2 - p3 + p4 - p5) * u - v;
    const Rational p6 = p1 - p2 + p3 - p4 + p5;
    out.a = {m * p1 * v + n * v,  m * p2 * v - k1 * n, m * p3 * v + k2 * n,
             m * p4 * v - k3 * n, m * p5 * v + k4 * n, p6 * m * v + k5 * n};
    out.b = {m * p1 * v - n * v,  m * p2 * v + k1 * n, m * p3 * v - k2 * n,
             m * p4 * v + k3 * n, m * p5 * v - k4 * n, p6 * m * v - k5 * n};
    normalize_pair(out.a, out.b);
    if (same_multiset(out.a, out.b)) throw DegenerateParameters("sextuples coincide");
    out.sym = symmetric_functions(out.a, out.b);
    return out;
}

SexticPair fam4_sol(const Rational& p, const Rational& q, const Rational& r, const Rational& u,
                    const Rational& v, const Rational& w, const Rational& h1, const Rational& h2) {
    if (h1 == 0 || h2 == 0) throw DegenerateParameters("h1 h2 = 0");
    SexticPair out;
    out.a = {h1 * p * (p * q - r * r), -h1 * q * (p * p - q * r), h1 * r * (p * r - q * q),
             h2 * u * (u * v - w * w), -h2 * v * (u * u - v * w), h2 * w * (u * w - v * v)};
    out.b = {h1 * q * (p * q - r * r), -h1 * r * (p * p - q * r), h1 * p * (p * r - q * q),
             h2 * v * (u * v - w * w), -h2 * w * (u * u - v * w), h2 * u * (u * w - v * v)};
    if (same_multiset(out.a, out.b)) throw DegenerateParameters("sextuples coincide");
    out.sym = symmetric_functions(out.a, out.b);
    return out;
}

std::pair<Rational, Rational> fam4_special_h(const Rational& p, const Rational& q,
                                             const Rational& r, const Rational& u,
                                             const Rational& v, const Rational& w) {
    auto sq = [](const Rational& x) { return x * x; };
    const Rational h1 = sq(u - v) * sq(v - w) * sq(u - w) * sq(u + v + w) *
                        sq(u * v + u * w + v * w) * (p * q - r * r) * (p * p - q * r) *
                        (p * r - q * q) * p * q * r;
    const Rational h2 = sq(p - q) * sq(q - r) * sq(p - r) * sq(p + q + r) *
                        sq(p * q + p * r + q * r) * (u * u - v * w) * (u * v - w * w) *
                        (u * w - v * v) * u * v * w;
    if (h1 == 0 || h2 == 0) throw ZeroScale("special h1/h2 vanishes for these parameters");
    return {h1, h2};
}

Fam5Solution fam5_sol(const Rational& p1, const Rational& p2, const Rational& q1,
                      const Rational& q2, const Rational& u1, const Rational& u2,
                      const Rational& v) {
    const Rational m1 = p1 * p1 * q1 + p1 * q1 * q1 - u1 * u2 * u2 * p2 * p2 * q2 -
                        u1 * u2 * u2 * p2 * q2 * q2;
    const Rational n1 = -p1 * p1 * q1 - p1 * q1 * q1 + u1 * u1 * u2 * p2 * p2 * q2 +
                        u1 * u1 * u2 * p2 * q2 * q2;
    const Rational m2 = u1 * m1;
    const Rational n2 = u2 * n1;
    const Rational f1 = (p1 * p1 + p1 * q1 + q1 * q1) * (m1 * m1 + m1 * n1 + n1 * n1) -
                        (p2 * p2 + p2 * q2 + q2 * q2) * (m2 * m2 + m2 * n2 + n2 * n2);
    if (f1 == 0) throw DegenerateParameters("f1 = 0 (h, r undefined)");
    const Rational f2 =
        (p1 - q1) * (p1 + 2 * q1) * (2 * p1 + q1) * (m1 - n1) * (m1 + 2 * n1) * (2 * m1 + n1) -
        (p2 - q2) * (p2 + 2 * q2) * (2 * p2 + q2) * (m2 - n2) * (m2 + 2 * n2) * (2 * m2 + n2);
    Fam5Solution out;
    out.h = f2 * v / ((v * v + 3) * f1);
    out.r = f2 / ((v * v + 3) * f1);
    auto sext = [&out](const Rational& p, const Rational& q, const Rational& m,
                       const Rational& n) {
        const Rational& r = out.r;
        return std::array<Rational, 6>{
            (p + 2 * q) * m - (p - q) * n + r,  -(2 * p + q) * m - (p + 2 * q) * n + r,
            (p - q) * m + (2 * p + q) * n + r,  -(p - q) * m + (p + 2 * q) * n - r,
            (2 * p + q) * m + (p - q) * n - r,  -(p + 2 * q) * m - (2 * p + q) * n - r};
    };
    out.pair.a = sext(p1, q1, m1, n1);
    out.pair.b = sext(p2, q2, m2, n2);
    if (same_multiset(out.pair.a, out.pair.b)) throw DegenerateParameters("sextuples coincide");
    out.pair.sym = symmetric_functions(out.pair.a, out.pair.b);
    return out;
}

namespace {

/// Largest divisor t <= sqrt(|N|) of N with t = N/t (mod 2), by trial
/// division from isqrt downward. |N| in the worked examples stays tiny.
Rational default_t(const Integer& N) {
    if (N == 0) return Rational(1);
    Integer absN(abs(N));
    Integer root;
    mpz_sqrt(root.get_mpz_t(), absN.get_mpz_t());
    for (Integer t = root; t >= 1; --t) {
        if (!mpz_divisible_p(absN.get_mpz_t(), t.get_mpz_t())) continue;
        Integer q = N / t;
        if (mpz_even_p(Integer(q - t).get_mpz_t())) return Rational(t);
    }
    return Rational(1);
}

}  // namespace

Sec2Solution sec2_solution(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::optional<Rational>& t_opt) {
    const bool t_given = t_opt.has_value();
    const Rational t_in = t_given ? *t_opt : Rational(0);
    if (a.size() != b.size() || (a.size() != 3 && a.size() != 4))
        throw Error("sec2_solution needs two triples or two quadruples");
    const int n = static_cast<int>(a.size());
    // equal e1..e_{n-1} is the caller's contract; re-check cheaply
    std::vector<Rational> av(a.begin(), a.end()), bv(b.begin(), b.end());
    for (int k = 1; k < n; ++k)
        if (esym_k(av, k) != esym_k(bv, k))
            throw ChainViolation("tuples do not share the lower symmetric functions");
    const Rational N = product_of(av) - product_of(bv);
    Rational t = t_in;
    if (!t_given) {
        t = is_integer(N) ? default_t(N.get_num()) : Rational(1);
    } else if (t == 0) {
        throw ZeroT("t = 0");
    }
    Sec2Solution sol;
    sol.a = a;
    sol.b = b;
    sol.b0 = (t + N / t) / 2;
    sol.a0 = (N / t - t) / 2;
    return sol;
}

ResidualReport verify_system(const SexticPair& pair, SystemId id) {
    ResidualReport rep;
    const auto f = symmetric_functions(pair.a, pair.b);  // recompute from scratch
    switch (id) {
        case SystemId::Fam3:
            rep.push("s1 - t1", f.s[0] - f.t[0]);
            rep.push("s2 - t2", f.s[1] - f.t[1]);
            rep.push("(s1 s3 - 2 s4) - (t1 t3 - 2 t4)",
                     f.s[0] * f.s[2] - 2 * f.s[3] - (f.t[0] * f.t[2] - 2 * f.t[3]));
            break;
        case SystemId::Fam4:
            rep.push("s1", f.s[0]);
            rep.push("t1", f.t[0]);
            rep.push("s3 - t3", f.s[2] - f.t[2]);
            rep.push("s6 - t6", f.s[5] - f.t[5]);
            break;
        case SystemId::Fam5:
            rep.push("s1", f.s[0]);
            rep.push("t1", f.t[0]);
            rep.push("s3 - t3", f.s[2] - f.t[2]);
            rep.push("(s2 s3 - 2 s5) - (t2 t3 - 2 t5)",
                     f.s[1] * f.s[2] - 2 * f.s[4] - (f.t[1] * f.t[2] - 2 * f.t[4]));
            break;
        default:
            throw Error("verify_system: wrong overload for this system id");
    }
    return rep;
}

ResidualReport verify_system(const TripleChain& chain) {
    ResidualReport rep;
    for (int i = 0; i < 4; ++i) {
        const auto& t = chain.triples[i];
        rep.push("sum triple " + std::to_string(i), t[0] + t[1] + t[2]);
        rep.push("psi triple " + std::to_string(i),
                 t[0] * t[1] + t[1] * t[2] + t[2] * t[0] - chain.s);
    }
    return rep;
}

ResidualReport verify_system(const QuadChain& chain) {
    ResidualReport rep;
    for (int r = 1; r <= 3; ++r) {
        auto pow_sum = [&](const std::array<Rational, 4>& q) {
            Rational s(0);
            for (const auto& x : q) {
                Rational p(1);
                for (int i = 0; i < r; ++i) p *= x;
                s += p;
            }
            return s;
        };
        const Rational s0 = pow_sum(chain.quads[0]);
        rep.push("power sum r=" + std::to_string(r) + " (b)", pow_sum(chain.quads[1]) - s0);
        rep.push("power sum r=" + std::to_string(r) + " (c)", pow_sum(chain.quads[2]) - s0);
    }
    return rep;
}

ResidualReport verify_system(const Sec2Solution& sol) {
    ResidualReport rep;
    const int n = static_cast<int>(sol.a.size());
    for (int k = 1; k < n; ++k)
        rep.push("e" + std::to_string(k), esym_k(sol.a, k) - esym_k(sol.b, k));
    rep.push("prod a + a0^2 - prod b - b0^2",
             product_of(sol.a) + sol.a0 * sol.a0 - product_of(sol.b) - sol.b0 * sol.b0);
    return rep;
}

ResidualReport verify_system(const Fam5Solution& sol) {
    ResidualReport rep = verify_system(sol.pair, SystemId::Fam5);
    const auto& d = sol.pair.sym.d;
    const auto& s = sol.pair.sym.s;
    rep.push("x^6 constraint",
             2 * d[1] * sol.h * sol.h + d[1] * d[1] - 2 * d[1] * s[1] + 4 * d[3]);
    return rep;
}

}  // namespace ecforge

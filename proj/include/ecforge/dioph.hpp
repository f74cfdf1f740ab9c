#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ecforge/rational.hpp"

namespace ecforge {

/// Four zero-sum triples sharing psi(t1,t2,t3) = t1 t2 + t2 t3 + t3 t1 = s.
struct TripleChain {
    std::array<std::array<Rational, 3>, 4> triples;  // a, b, c, d
    Rational s;
};

/// Three quadruples with equal power sums for r = 1, 2, 3.
struct QuadChain {
    std::array<std::array<Rational, 4>, 3> quads;  // a, b, c
};

/// Elementary symmetric functions s_i of {a_i}, t_i of {b_i}, d_i = s_i - t_i.
struct SymmetricFunctions {
    std::array<Rational, 6> s, t, d;
};

/// Two rational sextuples tied by one of the symmetric systems.
struct SexticPair {
    std::array<Rational, 6> a, b;
    SymmetricFunctions sym;
};

struct Fam5Solution {
    SexticPair pair;
    Rational h, r;
};

/// a0, a1..an | b0, b1..bn with equal e1, e2 (and e3 when n = 4) and
/// prod a_i + a0^2 = prod b_i + b0^2.
struct Sec2Solution {
    Rational a0, b0;
    std::vector<Rational> a, b;  // size 3 or 4
};

SymmetricFunctions symmetric_functions(const std::array<Rational, 6>& a,
                                       const std::array<Rational, 6>& b);

// --- generators -----------------------------------------------------------

/// Norm-form solution of the four simultaneous degree-2 chains.
TripleChain te2_chains(const Rational& p1, const Rational& p2, const Rational& q1,
                       const Rational& q2, const Rational& r1, const Rational& r2);

/// One-parameter solution of the equal sums-of-squares / equal products
/// chains; feedstock for the quadruple chains.
std::array<std::array<Rational, 3>, 3> sumsprod_param(const Rational& p);

/// a_i = (±x ± y ± z) per triple; equal power sums for r = 1, 2, 3 follow.
QuadChain quads_from_triples(const std::array<std::array<Rational, 3>, 3>& t);

/// s1=t1, s2=t2, s1 s3 - 2 s4 = t1 t3 - 2 t4.
SexticPair fam3_sol1(const Rational& m, const Rational& n, const Rational& p, const Rational& q,
                     const Rational& r, const Rational& s, const Rational& u, const Rational& v);

/// Same system, the five-parameter elimination solution. Output is scaled
/// integral with content 1 and a1 > 0.
SexticPair fam3_sol2(const Rational& m, const Rational& n, const std::array<Rational, 5>& p);

/// s1=t1=0, s3=t3, s6=t6.
SexticPair fam4_sol(const Rational& p, const Rational& q, const Rational& r, const Rational& u,
                    const Rational& v, const Rational& w, const Rational& h1, const Rational& h2);

/// The h1, h2 choice killing the constant term of the family-F quartic.
std::pair<Rational, Rational> fam4_special_h(const Rational& p, const Rational& q,
                                             const Rational& r, const Rational& u,
                                             const Rational& v, const Rational& w);

/// s1=t1=0, s3=t3, s2 s3 - 2 s5 = t2 t3 - 2 t5 plus the x^6 constraint
/// 2 d2 h^2 + d2^2 - 2 d2 s2 + 4 d4 = 0.
Fam5Solution fam5_sol(const Rational& p1, const Rational& p2, const Rational& q1,
                      const Rational& q2, const Rational& u1, const Rational& u2,
                      const Rational& v);

/// Completes two equal-e1/e2 tuples with a0, b0 via the difference of
/// squares: b0 = (t + N/t)/2, a0 = (N/t - t)/2, N = prod a - prod b.
/// t = 0 picks the default: the largest divisor t of N with t <= sqrt|N|
/// and a0, b0 integral, falling back to t = 1.
Sec2Solution sec2_solution(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::optional<Rational>& t = std::nullopt);

// --- verification ---------------------------------------------------------

enum class SystemId { Sec2Cubic, Sec2Quartic, Te2Chains, SumsProd, QuadChains, Fam3, Fam4, Fam5 };

struct ResidualReport {
    bool ok = true;
    std::vector<std::pair<std::string, Rational>> residuals;  // equation -> residual
    void push(std::string name, Rational residual) {
        if (residual != 0) ok = false;
        residuals.emplace_back(std::move(name), std::move(residual));
    }
};

ResidualReport verify_system(const SexticPair& pair, SystemId id);
ResidualReport verify_system(const TripleChain& chain);
ResidualReport verify_system(const QuadChain& chain);
ResidualReport verify_system(const Sec2Solution& sol);
ResidualReport verify_system(const Fam5Solution& sol);

}  // namespace ecforge

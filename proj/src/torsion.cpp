#include "ecforge/torsion.hpp"

#include <omp.h>

#include <numeric>

#include "ecforge/errors.hpp"

namespace ecforge {

WeierstrassCurve integral_model(const WeierstrassCurve& e) {
    Integer u(1);
    for (const Rational* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
        mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), a->get_den().get_mpz_t());
    const Rational uq(u);
    return WeierstrassCurve(e.a1 * uq, e.a2 * uq * uq, e.a3 * uq * uq * uq,
                            e.a4 * uq * uq * uq * uq, e.a6 * uq * uq * uq * uq * uq * uq);
}

namespace {

long mod_of(const Rational& q, long p) {
    Integer r;
    mpz_mod_ui(r.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

}  // namespace

long count_points_mod_p(const WeierstrassCurve& e, long p, CountMode mode) {
    // y^2 + (a1 x + a3) y = f(x): complete the square (p odd), then
    // #solutions over x is sum of 1 + chi(D(x)) with
    // D = (a1 x + a3)^2 + 4 f(x).
    const long a1 = mod_of(e.a1, p), a2 = mod_of(e.a2, p), a3 = mod_of(e.a3, p),
               a4 = mod_of(e.a4, p), a6 = mod_of(e.a6, p);
    // quadratic residue table
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (long y = 1; y <= (p - 1) / 2; ++y) chi[y * y % p] = 1;

    long total = 0;
    auto body = [&](long x) -> long {
        const long fx = (((x + a2) % p * x + a4) % p * x + a6) % p;
        const long l = (a1 * x + a3) % p;
        const long D = (l * l + 4 * fx) % p;
        return 1 + chi[D];
    };
    if (mode == CountMode::Parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
        for (long x = 0; x < p; ++x) total += body(x);
    } else {
        for (long x = 0; x < p; ++x) total += body(x);
    }
    return total + 1;  // the point at infinity
}

Integer torsion_bound(const WeierstrassCurve& e, int prime_budget, CountMode mode) {
    for (const Rational* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
        if (!is_integer(*a)) throw NotIntegral("torsion bound needs an integral model");
    if (prime_budget < 1) throw Error("prime budget must be positive");
    const Integer disc2 = 2 * e.discriminant().get_num();
    Integer bound(0);
    int used = 0;
    for (long p = 3; used < prime_budget; p += 2) {
        bool prime = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (mpz_divisible_ui_p(disc2.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const long n = count_points_mod_p(e, p, mode);
        Integer np(n);
        mpz_gcd(bound.get_mpz_t(), bound.get_mpz_t(), np.get_mpz_t());
        ++used;
        if (bound == 1) break;  // cannot shrink further
    }
    return bound;
}

}  // namespace ecforge

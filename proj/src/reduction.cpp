#include "ecforge/reduction.hpp"

#include <algorithm>

#include "ecforge/errors.hpp"

namespace ecforge {

CurvePoint LinearStep::forward(const CurvePoint& pt) const {
    if (pt.infinity) return pt;
    // source (x, y) = (p X + q, r Y + s X + t)
    const Rational X = (pt.x - q) / p;
    const Rational Y = (pt.y - s * X - t) / r;
    return CurvePoint(X, Y);
}

CurvePoint LinearStep::backward(const CurvePoint& pt) const {
    if (pt.infinity) return pt;
    return CurvePoint(p * pt.x + q, r * pt.y + s * pt.x + t);
}

CurvePoint InversionStep::forward(const CurvePoint& pt) const {
    if (pt.infinity) throw UndefinedMap("inversion of the point at infinity");
    if (pt.x == 0) throw UndefinedMap("inversion undefined at x = 0");
    return CurvePoint(1 / pt.x, pt.y / (pt.x * pt.x));
}

CurvePoint BasePointStep::forward(const CurvePoint& pt) const {
    if (pt.infinity) throw UndefinedMap("quartic models have no point at infinity");
    const Rational u = pt.x - x0;
    const Rational c3 = 8 * q;
    Rational T, Z;
    if (u == 0) {
        if (pt.y == q) throw UndefinedMap("base point blows up under the reduction");
        T = 0;
        Z = -B;
    } else {
        T = (pt.y + q + d / (2 * q) * u + mu * u * u) / (u * u);
        Z = 2 * ((T - mu) * (T - mu) - a) * u - (B + d / q * T);
    }
    return CurvePoint(c3 * T, c3 * Z);
}

CurvePoint SquareLeadStep::forward(const CurvePoint& pt) const {
    if (pt.infinity) throw UndefinedMap("quartic models have no point at infinity");
    const Rational c3 = 8 * alpha;
    const Rational W = pt.y + alpha * pt.x * pt.x + b / (2 * alpha) * pt.x + mu;
    Rational Z;
    if (W == 0) {
        Z = R;
        return CurvePoint(Rational(0), c3 * Z);
    }
    Z = 4 * alpha * pt.x * W + (b / alpha) * W + R;
    return CurvePoint(c3 * W, c3 * Z);
}

CurvePoint ModelMap::apply(const CurvePoint& pt) const {
    CurvePoint cur = pt;
    for (const auto& step : steps)
        cur = std::visit([&](const auto& s) { return s.forward(cur); }, step);
    return cur;
}

bool ModelMap::invertible() const {
    for (const auto& step : steps)
        if (!std::holds_alternative<LinearStep>(step) && !std::holds_alternative<IsoStep>(step))
            return false;
    return true;
}

CurvePoint ModelMap::apply_inverse(const CurvePoint& pt) const {
    if (!invertible()) throw UndefinedMap("map chain is not invertible");
    CurvePoint cur = pt;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (const auto* lin = std::get_if<LinearStep>(&*it))
            cur = lin->backward(cur);
        else
            cur = std::get<IsoStep>(*it).backward(cur);
    }
    return cur;
}

void ModelMap::append(const ModelMap& tail) {
    steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
}

Reduction cubic_to_weierstrass(const GeneralCubic& g) {
    const Rational c3 = g.phi()[3], c2 = g.phi()[2], c1 = g.phi()[1], c0 = g.phi()[0];
    WeierstrassCurve curve(Rational(0), c2, Rational(0), c1 * c3, c0 * c3 * c3);
    // x = X/c3, y = Y/c3
    ModelMap map{{LinearStep{1 / c3, Rational(0), 1 / c3, Rational(0), Rational(0)}}};
    return {std::move(curve), std::move(map)};
}

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

ReducedShortForm reduce_short_form(const Rational& A, const Rational& B) {
    // clear denominators with x = X/w scaling (w integral)
    Integer w;
    mpz_lcm(w.get_mpz_t(), A.get_den().get_mpz_t(), B.get_den().get_mpz_t());
    Rational u = make_rational(1, w);
    const Rational w4 = Rational(w * w * w * w);
    const Rational Ar = A * w4;
    const Rational Br = B * w4 * Rational(w * w);
    Integer An(Ar.get_num()), Bn(Br.get_num());
    for (unsigned long p : small_primes()) {
        Integer p4, p6;
        mpz_ui_pow_ui(p4.get_mpz_t(), p, 4);
        mpz_ui_pow_ui(p6.get_mpz_t(), p, 6);
        while ((An == 0 || mpz_divisible_p(An.get_mpz_t(), p4.get_mpz_t())) &&
               mpz_divisible_p(Bn.get_mpz_t(), p6.get_mpz_t())) {
            An /= p4;
            Bn /= p6;
            u *= Rational(static_cast<long>(p));
        }
    }
    return {WeierstrassCurve::short_form(Rational(An), Rational(Bn)), u};
}

Reduction jacobian_of(const QuarticModel& q, const WeierstrassCurve& from) {
    const Rational I = q.invariant_I(), J = q.invariant_J();
    auto reduced = reduce_short_form(-27 * I, -27 * J);
    auto iso = find_isomorphism(from, reduced.curve);
    if (!iso) throw Error("internal: reduction output not isomorphic to the Jacobian");
    ModelMap map{{IsoStep{*iso}}};
    return {reduced.curve, std::move(map)};
}

Reduction quartic_to_weierstrass(const QuarticModel& q, const CurvePoint& base,
                                 QuarticStrategy strategy) {
    const UniPoly& phi = q.phi();
    auto alpha = rational_sqrt(phi[4]);

    const bool want_square = strategy == QuarticStrategy::Auto || strategy == QuarticStrategy::SquareLead;
    const bool want_zero = strategy == QuarticStrategy::Auto || strategy == QuarticStrategy::ZeroConstant;
    const bool want_base = strategy == QuarticStrategy::Auto || strategy == QuarticStrategy::BasePoint;

    if (want_square && alpha && *alpha != 0) {
        SquareLeadStep step;
        step.alpha = *alpha;
        step.b = phi[3];
        step.c = phi[2];
        step.d = phi[1];
        step.mu = (phi[2] - phi[3] * phi[3] / (4 * phi[4])) / (2 * step.alpha);
        step.R = phi[1] - phi[3] * step.mu / step.alpha;
        const Rational S = phi[0] - step.mu * step.mu;
        const Rational c3 = 8 * step.alpha;
        const Rational c2 = phi[3] * phi[3] / phi[4] - 16 * step.alpha * step.mu;
        const Rational c1 = 2 * phi[3] * step.R / step.alpha - 8 * step.alpha * S;
        const Rational c0 = step.R * step.R;
        WeierstrassCurve mid(Rational(0), c2, Rational(0), c1 * c3, c0 * c3 * c3);
        ModelMap map{{MapStep{step}}};
        auto jac = jacobian_of(q, mid);
        map.append(jac.map);
        return {jac.curve, std::move(map)};
    }

    if (want_zero && phi[0] == 0) {
        // y^2 = x(c4 x^3 + c3 x^2 + c2 x + c1); x = 1/X turns it into the
        // cubic Y^2 = c1 X^3 + c2 X^2 + c3 X + c4.
        if (phi[1] == 0) throw Degenerate("double root at x = 0");
        GeneralCubic cubic(UniPoly({phi[4], phi[3], phi[2], phi[1]}));
        auto mon = cubic_to_weierstrass(cubic);
        ModelMap map{{MapStep{InversionStep{}}}};
        map.append(mon.map);
        auto jac = jacobian_of(q, mon.curve);
        map.append(jac.map);
        return {jac.curve, std::move(map)};
    }

    if (want_base && !base.infinity && base.y != 0) {
        if (!q.contains(base)) throw Error("base point is not on the quartic");
        BasePointStep step;
        step.x0 = base.x;
        step.q = base.y;
        UniPoly g = phi.shifted(base.x);
        step.a = g[4];
        step.b = g[3];
        step.c = g[2];
        step.d = g[1];
        step.mu = (step.c - step.d * step.d / (4 * step.q * step.q)) / (2 * step.q);
        step.B = step.b - step.d * step.mu / step.q;
        const Rational c3 = 8 * step.q;
        const Rational c2 = step.d * step.d / (step.q * step.q) - 16 * step.q * step.mu;
        const Rational c1 = 2 * step.B * step.d / step.q + 8 * step.q * (step.mu * step.mu - step.a);
        const Rational c0 = step.B * step.B;
        WeierstrassCurve mid(Rational(0), c2, Rational(0), c1 * c3, c0 * c3 * c3);
        ModelMap map{{MapStep{step}}};
        auto jac = jacobian_of(q, mid);
        map.append(jac.map);
        return {jac.curve, std::move(map)};
    }

    throw NoRationalPoint("no reduction strategy applies to this quartic");
}

}  // namespace ecforge

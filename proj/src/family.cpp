#include "ecforge/family.hpp"

#include <algorithm>
#include <random>

#include "ecforge/errors.hpp"

namespace ecforge {

char family_letter(FamilyId id) { return "ABCDEFG"[static_cast<int>(id)]; }

FamilyId family_from_letter(char c) {
    if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw Error("unknown family");
    return static_cast<FamilyId>(c - 'A');
}

namespace {

Rational product_of(const std::vector<Rational>& v) {
    Rational p(1);
    for (const auto& x : v) p *= x;
    return p;
}

/// Smallest positive integer lambda with lambda^2 * phi integral; scaling
/// y by lambda keeps y^2 = phi exact. Worked examples in the source
/// material carry exactly this normalization.
Integer square_clear_scale(const UniPoly& phi) {
    Integer den(1);
    for (const auto& c : phi.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    // lambda = prod p^ceil(e/2) over the factorization of den
    Integer lambda(1), rest(den);
    for (Integer p(2); rest > 1;) {
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                rest /= p;
                ++e;
            }
            for (int i = 0; i < (e + 1) / 2; ++i) lambda *= p;
        }
        p += 1;
        if (p * p > rest && rest > 1) {  // rest is prime
            lambda *= rest;
            break;
        }
    }
    return lambda;
}

/// Clears phi's denominators by the minimal square and rescales the point
/// ordinates to match.
void square_clear(UniPoly& phi, std::vector<PointRecord>& pts) {
    const Integer lambda = square_clear_scale(phi);
    if (lambda == 1) return;
    const Rational l(lambda);
    phi = (l * l) * phi;
    for (auto& p : pts) p.pt.y *= l;
}

void check_points(const UniPoly& phi, const std::vector<PointRecord>& pts) {
    for (const auto& p : pts)
        if (phi.eval(p.pt.x) != p.pt.y * p.pt.y)
            throw Error("internal: built-in point off the model at x = " + to_string(p.pt.x));
}

/// Runs the reduction, maps the model points, drops whatever blows up.
void reduce_and_map(FamilyInstance& inst, const QuarticModel& q, const CurvePoint& base) {
    Reduction red = quartic_to_weierstrass(q, base);
    inst.weierstrass = red.curve;
    inst.map = std::move(red.map);
    for (const auto& mp : inst.model_points) {
        try {
            CurvePoint image = inst.map.apply(mp.pt);
            if (!inst.weierstrass.contains(image))
                throw Error("internal: mapped point off the reduced curve");
            inst.points.push_back({std::move(image), mp.provenance});
        } catch (const UndefinedMap&) {
            inst.notes.push_back("point " + mp.provenance + " lost under the reduction (base point)");
        }
    }
}

std::vector<Rational> to_vec(const std::array<Rational, 6>& a) {
    return std::vector<Rational>(a.begin(), a.end());
}

}  // namespace

FamilyInstance build_family_A(const Sec2Solution& sol) {
    if (sol.a.size() != 3) throw Error("family A needs triples");
    auto rep = verify_system(sol);
    if (!rep.ok) throw ChainViolation("system violation: the input does not satisfy the cubic system");
    UniPoly phi = product_of_linear(std::vector<Rational>(sol.a.begin(), sol.a.end())) +
                  UniPoly::constant(sol.a0 * sol.a0);
    UniPoly phi_b = product_of_linear(std::vector<Rational>(sol.b.begin(), sol.b.end())) +
                    UniPoly::constant(sol.b0 * sol.b0);
    if (phi != phi_b) throw ChainViolation("system violation: the two sides disagree");
    if (discriminant(phi) == 0) throw Degenerate("discriminant of phi vanishes");

    // monic cubic: already a Weierstrass equation
    FamilyInstance inst(FamilyId::A, WeierstrassCurve(Rational(0), phi[2], Rational(0), phi[1], phi[0]));
    inst.params = {sol.a0};
    inst.params.insert(inst.params.end(), sol.a.begin(), sol.a.end());
    inst.params.push_back(sol.b0);
    inst.params.insert(inst.params.end(), sol.b.begin(), sol.b.end());
    inst.phi = phi;
    inst.source = sol;
    inst.model_is_quartic = false;
    for (int i = 0; i < 3; ++i)
        inst.model_points.push_back({CurvePoint(-sol.a[i], sol.a0), "-a" + std::to_string(i + 1)});
    for (int i = 0; i < 3; ++i)
        inst.model_points.push_back({CurvePoint(-sol.b[i], sol.b0), "-b" + std::to_string(i + 1)});
    check_points(phi, inst.model_points);
    inst.points = inst.model_points;
    return inst;
}

FamilyInstance build_family_B(const Sec2Solution& sol) {
    if (sol.a.size() != 4) throw Error("family B needs quadruples");
    auto rep = verify_system(sol);
    if (!rep.ok) throw ChainViolation("system violation: the input does not satisfy the quartic system");
    UniPoly phi = product_of_linear(std::vector<Rational>(sol.a.begin(), sol.a.end())) +
                  UniPoly::constant(sol.a0 * sol.a0);
    UniPoly phi_b = product_of_linear(std::vector<Rational>(sol.b.begin(), sol.b.end())) +
                    UniPoly::constant(sol.b0 * sol.b0);
    if (phi != phi_b) throw ChainViolation("system violation: the two sides disagree");

    QuarticModel model(phi);  // checks disc != 0
    FamilyInstance inst(FamilyId::B, WeierstrassCurve::short_form(Rational(-1), Rational(0)));
    inst.params = {sol.a0};
    inst.params.insert(inst.params.end(), sol.a.begin(), sol.a.end());
    inst.params.push_back(sol.b0);
    inst.params.insert(inst.params.end(), sol.b.begin(), sol.b.end());
    inst.phi = phi;
    inst.source = sol;
    inst.model_is_quartic = true;
    for (int i = 0; i < 4; ++i)
        inst.model_points.push_back({CurvePoint(-sol.a[i], sol.a0), "-a" + std::to_string(i + 1)});
    for (int i = 0; i < 4; ++i)
        inst.model_points.push_back({CurvePoint(-sol.b[i], sol.b0), "-b" + std::to_string(i + 1)});
    check_points(phi, inst.model_points);
    reduce_and_map(inst, model, inst.model_points.front().pt);
    return inst;
}

FamCData fam_c_data(const TripleChain& chain) {
    FamCData d;
    for (int i = 0; i < 4; ++i)
        d.pi[i] = chain.triples[i][0] * chain.triples[i][1] * chain.triples[i][2];
    d.s = chain.s;
    const Rational g1 = d.pi[0] + d.pi[1] - d.pi[2] - d.pi[3];
    const Rational g2 = d.pi[0] - d.pi[1] + d.pi[2] - d.pi[3];
    const Rational g3 = d.pi[0] - d.pi[1] - d.pi[2] + d.pi[3];
    if (g1 == 0 || g2 == 0 || g3 == 0)
        throw DegeneratePi("an alternating pi-sum vanishes");
    d.k = 2 * g1 * g2 * g3;
    return d;
}

FamilyInstance build_family_C(const TripleChain& chain) {
    const FamCData cd = fam_c_data(chain);
    const Rational &s = cd.s;
    const Rational g1 = cd.pi[0] + cd.pi[1] - cd.pi[2] - cd.pi[3];
    const Rational G = cd.k * cd.k / 4;  // (g1 g2 g3)^2
    Rational sum_pi(0), sum_pi2(0), prod_pi(1);
    for (const auto& p : cd.pi) {
        sum_pi += p;
        sum_pi2 += p * p;
        prod_pi *= p;
    }
    const Rational C = (2 * sum_pi2 - sum_pi * sum_pi) * (2 * sum_pi2 - sum_pi * sum_pi) -
                       64 * prod_pi;
    // displayed model: Y^2 = X^3 + 4sG X + GC
    WeierstrassCurve big = WeierstrassCurve::short_form(4 * s * G, G * C);

    // raw phi: bracket^2 minus the product pairs; a cubic with leading
    // coefficient -g2 g3 / (2 g1)
    const Rational m = (cd.pi[0] * cd.pi[1] - cd.pi[2] * cd.pi[3]) / g1;
    UniPoly w({m, s, Rational(0), Rational(1)});  // x^3 + s x + m
    UniPoly br1 = w + UniPoly::constant(g1 / 4);
    UniPoly br2 = w - UniPoly::constant(g1 / 4);
    std::vector<Rational> a_and_b, c_and_d;
    for (int t = 0; t < 2; ++t)
        for (const auto& v : chain.triples[t]) a_and_b.push_back(v);
    for (int t = 2; t < 4; ++t)
        for (const auto& v : chain.triples[t]) c_and_d.push_back(v);
    UniPoly phi = br1 * br1 - product_of_linear(a_and_b);
    if (phi != br2 * br2 - product_of_linear(c_and_d))
        throw Error("internal: the 3.1 identity failed to close");
    if (phi.degree() != 3) throw DegeneratePi("phi degenerated below a cubic");
    if (discriminant(phi) == 0) throw Degenerate("discriminant of phi vanishes");

    FamilyInstance inst(FamilyId::C, big);
    inst.phi = phi;
    inst.source = chain;
    inst.model_is_quartic = false;

    // model points on y^2 = phi; ordinates straight from the brackets
    const char* tags = "abcd";
    for (int t = 0; t < 4; ++t) {
        const UniPoly& br = t < 2 ? br1 : br2;
        for (int i = 0; i < 3; ++i) {
            const Rational x0 = -chain.triples[t][i];
            inst.model_points.push_back(
                {CurvePoint(x0, br.eval(x0)), std::string("k*") + tags[t] + std::to_string(i + 1)});
        }
    }
    check_points(phi, inst.model_points);

    // family transformation onto the displayed model: X = -k x, Y = -2 g1 k y
    LinearStep family_map{-1 / cd.k, Rational(0), -1 / (2 * g1 * cd.k), Rational(0), Rational(0)};
    auto reduced = reduce_short_form(big.a4, big.a6);
    auto iso = find_isomorphism(big, reduced.curve);
    if (!iso) throw Error("internal: reduction lost the curve");
    inst.weierstrass = reduced.curve;
    inst.map.steps = {MapStep{family_map}, MapStep{IsoStep{*iso}}};
    for (const auto& mp : inst.model_points) {
        CurvePoint image = inst.map.apply(mp.pt);
        if (!inst.weierstrass.contains(image))
            throw Error("internal: mapped point off the reduced curve");
        inst.points.push_back({std::move(image), mp.provenance});
    }
    return inst;
}

FamilyInstance build_family_D(const QuadChain& chain, const std::array<int, 3>& roles,
                              int base_index) {
    QuadChain q;
    for (int i = 0; i < 3; ++i) q.quads[i] = chain.quads[roles[i]];
    // the paper's excluded antisymmetric shape
    bool excluded = true;
    for (const auto& quad : q.quads)
        excluded = excluded && quad[2] == -quad[0] && quad[3] == -quad[1];
    if (excluded) throw ExcludedSolution("antisymmetric quadruples are excluded");

    auto rep = verify_system(q);
    if (!rep.ok) throw ChainViolation("quadruples fail the power-sum chains");

    std::vector<Rational> a(q.quads[0].begin(), q.quads[0].end());
    const Rational Pa = product_of(a);
    const Rational Pb = product_of({q.quads[1].begin(), q.quads[1].end()});
    const Rational Pc = product_of({q.quads[2].begin(), q.quads[2].end()});
    const Rational K = 2 * Pa - Pb - Pc;
    if (K == 0) throw Degenerate("2 prod a - prod b - prod c = 0");

    std::vector<Rational> neg_a;
    for (const auto& v : a) neg_a.push_back(-v);
    UniPoly phi = (8 * K) * product_of_linear(neg_a) + UniPoly::constant((Pb - Pc) * (Pb - Pc));
    QuarticModel model(phi);

    FamilyInstance inst(FamilyId::D, WeierstrassCurve::short_form(Rational(-1), Rational(0)));
    inst.phi = phi;
    inst.source = q;
    inst.model_is_quartic = true;
    const Rational ya = Pb - Pc;
    const Rational yb = 4 * Pa - 3 * Pb - Pc;
    const Rational yc = 4 * Pa - Pb - 3 * Pc;
    const char* tags = "abc";
    const Rational* ords[3] = {&ya, &yb, &yc};
    for (int t = 0; t < 3; ++t)
        for (int i = 0; i < 4; ++i)
            inst.model_points.push_back(
                {CurvePoint(q.quads[t][i], *ords[t]), std::string(1, tags[t]) + std::to_string(i + 1)});
    check_points(phi, inst.model_points);
    if (base_index < 0 || base_index >= static_cast<int>(inst.model_points.size()))
        throw Error("base index out of range");
    reduce_and_map(inst, model, inst.model_points[base_index].pt);
    return inst;
}

namespace {

/// phi and bracket pair of the 3.3 family, from the printed coefficient
/// formulas, cross-checked against the direct expansion.
UniPoly phi_fam3(const SexticPair& pair, UniPoly& br1, UniPoly& br2) {
    const auto& sf = pair.sym;
    const Rational &d3 = sf.d[2], &d4 = sf.d[3], &d5 = sf.d[4], &d6 = sf.d[5];
    if (d3 == 0) throw ZeroD3("d3 = 0");
    const Rational d3sq = d3 * d3;
    UniPoly phi({(d3sq * d3sq + 8 * d3sq * d6 - 16 * d3sq * sf.s[5] + 16 * d6 * d6) / (16 * d3sq),
                 (d3sq * d5 - 2 * d3sq * sf.s[4] + 4 * d5 * d6) / (2 * d3sq),
                 (d3sq * d4 - 2 * d3sq * sf.s[3] + 4 * d4 * d6 + 2 * d5 * d5) / (2 * d3sq),
                 (d3sq * d3 - 2 * d3sq * sf.s[2] + 4 * d3 * d6 + 4 * d4 * d5) / (2 * d3sq),
                 -(d3sq * sf.s[1] - 2 * d3 * d5 - d4 * d4) / d3sq});
    UniPoly core({d6 / d3, d5 / d3, d4 / d3, Rational(1)});
    br1 = core + UniPoly::constant(d3 / 4);
    br2 = core - UniPoly::constant(d3 / 4);
    UniPoly direct = br1 * br1 - product_of_linear(to_vec(pair.a));
    UniPoly direct_b = br2 * br2 - product_of_linear(to_vec(pair.b));
    if (direct != phi || direct_b != phi)
        throw ChainViolation("pair does not satisfy the 3.3 system");
    return phi;
}

UniPoly phi_fam4(const SexticPair& pair, UniPoly& br1, UniPoly& br2) {
    const auto& sf = pair.sym;
    if (sf.s[0] != 0 || sf.t[0] != 0 || sf.d[2] != 0 || sf.d[5] != 0)
        throw ChainViolation("pair does not satisfy the 3.4 system");
    const Rational &d2 = sf.d[1], &d4 = sf.d[3], &d5 = sf.d[4];
    if (d2 == 0) throw ZeroD2("d2 = 0");
    const Rational d2sq = d2 * d2;
    UniPoly phi({(-16 * d2sq * sf.s[5] + 16 * d5 * d5) / (16 * d2sq),
                 -8 * ((sf.s[4] + sf.t[4]) * d2sq - 4 * d4 * d5) / (16 * d2sq),
                 (d2sq * d2sq - 8 * (sf.s[3] + sf.t[3]) * d2sq + 16 * d4 * d4) / (16 * d2sq),
                 -16 * (d2 * sf.s[2] - 2 * d5) * d2 / (16 * d2sq),
                 -8 * ((sf.s[1] + sf.t[1]) * d2 - 4 * d4) * d2 / (16 * d2sq)});
    UniPoly core({d5 / d2, d4 / d2, Rational(0), Rational(1)});  // x^3 + (d4 x + d5)/d2
    UniPoly quarter({Rational(0), d2 / 4});
    br1 = core + quarter;
    br2 = core - quarter;
    UniPoly direct = br1 * br1 - product_of_linear(to_vec(pair.a));
    UniPoly direct_b = br2 * br2 - product_of_linear(to_vec(pair.b));
    if (direct != phi || direct_b != phi)
        throw ChainViolation("pair does not satisfy the 3.4 system");
    return phi;
}

FamilyInstance build_sextic_family(FamilyId fam, const SexticPair& pair, const UniPoly& phi,
                                   const UniPoly& br1, const UniPoly& br2) {
    FamilyInstance inst(fam, WeierstrassCurve::short_form(Rational(-1), Rational(0)));
    inst.phi = phi;
    inst.source = pair;
    inst.model_is_quartic = true;
    for (int i = 0; i < 6; ++i)
        inst.model_points.push_back(
            {CurvePoint(-pair.a[i], br1.eval(-pair.a[i])), "-a" + std::to_string(i + 1)});
    for (int i = 0; i < 6; ++i)
        inst.model_points.push_back(
            {CurvePoint(-pair.b[i], br2.eval(-pair.b[i])), "-b" + std::to_string(i + 1)});
    square_clear(inst.phi, inst.model_points);
    check_points(inst.phi, inst.model_points);
    reduce_and_map(inst, QuarticModel(inst.phi), inst.model_points.front().pt);
    return inst;
}

}  // namespace

FamilyInstance build_family_E(const SexticPair& pair) {
    UniPoly br1, br2;
    UniPoly phi = phi_fam3(pair, br1, br2);
    if (phi.degree() != 4) throw Degenerate("phi degenerated below a quartic");
    if (discriminant(phi) == 0) throw Degenerate("discriminant of phi vanishes");
    return build_sextic_family(FamilyId::E, pair, phi, br1, br2);
}

FamilyInstance build_family_F(const SexticPair& pair) {
    UniPoly br1, br2;
    UniPoly phi = phi_fam4(pair, br1, br2);
    if (phi.degree() != 4) throw Degenerate("phi degenerated below a quartic");
    if (discriminant(phi) == 0) throw Degenerate("discriminant of phi vanishes");
    return build_sextic_family(FamilyId::F, pair, phi, br1, br2);
}

FamilyInstance build_family_G(const Fam5Solution& sol) {
    const auto& pair = sol.pair;
    const auto& sf = pair.sym;
    const Rational &d2 = sf.d[1], &d4 = sf.d[3], &d5 = sf.d[4], &d6 = sf.d[5];
    if (d2 == 0) throw ZeroD2("d2 = 0");
    if (2 * d2 * sol.h * sol.h + d2 * d2 - 2 * d2 * sf.s[1] + 4 * d4 != 0)
        throw ChainViolation("x^6 constraint violated");
    const Rational h2 = sol.h * sol.h;
    UniPoly core({d6 / d2, d5 / d2, d4 / d2, Rational(0), Rational(1)});
    UniPoly xh({-h2, Rational(0), Rational(1)});  // x^2 - h^2
    UniPoly br1 = core + (d2 / 4) * xh;
    UniPoly br2 = core - (d2 / 4) * xh;
    UniPoly phi = br1 * br1 - xh * product_of_linear(to_vec(pair.a));
    if (phi != br2 * br2 - xh * product_of_linear(to_vec(pair.b)))
        throw ChainViolation("pair does not satisfy the 3.5 system");
    if (phi.degree() != 4) throw Degenerate("phi did not reduce to a quartic");
    if (discriminant(phi) == 0) throw Degenerate("discriminant of phi vanishes");

    FamilyInstance inst(FamilyId::G, WeierstrassCurve::short_form(Rational(-1), Rational(0)));
    inst.phi = phi;
    inst.source = sol;
    inst.model_is_quartic = true;
    for (int i = 0; i < 6; ++i)
        inst.model_points.push_back(
            {CurvePoint(-pair.a[i], br1.eval(-pair.a[i])), "-a" + std::to_string(i + 1)});
    for (int i = 0; i < 6; ++i)
        inst.model_points.push_back(
            {CurvePoint(-pair.b[i], br2.eval(-pair.b[i])), "-b" + std::to_string(i + 1)});
    inst.model_points.push_back({CurvePoint(sol.h, br1.eval(sol.h)), "+h"});
    inst.model_points.push_back({CurvePoint(-sol.h, br1.eval(-sol.h)), "-h"});
    square_clear(inst.phi, inst.model_points);
    check_points(inst.phi, inst.model_points);
    reduce_and_map(inst, QuarticModel(inst.phi), inst.model_points.front().pt);
    return inst;
}

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 12) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

void check(IdentityReport& rep, const std::string& what, bool ok) {
    rep.checks.push_back(what);
    if (!ok) {
        rep.ok = false;
        rep.failures.push_back(what);
    }
}

void verify_instance_identity(IdentityReport& rep, const FamilyInstance& inst,
                              const std::string& label) {
    // phi is square-cleared, so each built-in point must sit on it exactly
    // and its phi-value must be the square the identity promises.
    bool pts_ok = true, sq_ok = true;
    for (const auto& p : inst.model_points) {
        pts_ok = pts_ok && inst.phi.eval(p.pt.x) == p.pt.y * p.pt.y;
        sq_ok = sq_ok && rational_sqrt(inst.phi.eval(p.pt.x)).has_value();
    }
    check(rep, label + ": built-in points satisfy y^2 = phi exactly", pts_ok);
    check(rep, label + ": phi is a perfect square at every designated abscissa", sq_ok);
    bool mapped_ok = true;
    for (const auto& p : inst.points) mapped_ok = mapped_ok && inst.weierstrass.contains(p.pt);
    check(rep, label + ": mapped points lie on the Weierstrass model", mapped_ok);
}

}  // namespace

IdentityReport verify_identity(const FamilyInstance& inst, int trials, unsigned seed) {
    IdentityReport rep;
    verify_instance_identity(rep, inst, "instance");

    // structural form of the defining identity for the instance's own data
    if (const auto* pair = std::get_if<SexticPair>(&inst.source)) {
        UniPoly diff = product_of_linear(to_vec(pair->a)) - product_of_linear(to_vec(pair->b));
        const auto& d = pair->sym.d;
        if (inst.family == FamilyId::E) {
            UniPoly expect({d[5], d[4], d[3], d[2]});
            check(rep, "prod(x+a) - prod(x+b) = d3 x^3 + d4 x^2 + d5 x + d6", diff == expect);
        } else if (inst.family == FamilyId::F) {
            UniPoly expect({Rational(0), d[4], d[3], Rational(0), d[1]});
            check(rep, "prod(x+a) - prod(x+b) = d2 x^4 + d4 x^2 + d5 x", diff == expect);
        }
    } else if (const auto* sol = std::get_if<Fam5Solution>(&inst.source)) {
        const auto& pair5 = sol->pair;
        UniPoly diff = product_of_linear(to_vec(pair5.a)) - product_of_linear(to_vec(pair5.b));
        const auto& d = pair5.sym.d;
        UniPoly expect({d[5], d[4], d[3], d[2], d[1]});
        check(rep, "prod(x+a) - prod(x+b) = d2 x^4 + d3 x^3 + d4 x^2 + d5 x + d6", diff == expect);
    } else if (const auto* sec2 = std::get_if<Sec2Solution>(&inst.source)) {
        std::vector<Rational> na, nb;
        for (const auto& v : sec2->a) na.push_back(v);
        for (const auto& v : sec2->b) nb.push_back(v);
        UniPoly lhs = product_of_linear(na) + UniPoly::constant(sec2->a0 * sec2->a0);
        UniPoly rhs = product_of_linear(nb) + UniPoly::constant(sec2->b0 * sec2->b0);
        check(rep, "prod(x+a) + a0^2 = prod(x+b) + b0^2 as polynomials", lhs == rhs);
    } else if (const auto* chain = std::get_if<QuadChain>(&inst.source)) {
        std::vector<Rational> qa, qb;
        for (const auto& v : chain->quads[0]) qa.push_back(-v);
        for (const auto& v : chain->quads[1]) qb.push_back(-v);
        UniPoly diff = product_of_linear(qa) - product_of_linear(qb);
        Rational pa(1), pb(1);
        for (const auto& v : chain->quads[0]) pa *= v;
        for (const auto& v : chain->quads[1]) pb *= v;
        check(rep, "prod(x-a) - prod(x-b) is the constant prod a - prod b",
              diff == UniPoly::constant(pa - pb));
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::string label = "trial " + std::to_string(t);
        try {
            switch (inst.family) {
                case FamilyId::A: {
                    auto chain = te2_chains(random_rational(rng), random_rational(rng),
                                            random_rational(rng), random_rational(rng),
                                            random_rational(rng), random_rational(rng));
                    std::vector<Rational> a(chain.triples[0].begin(), chain.triples[0].end());
                    std::vector<Rational> b(chain.triples[1].begin(), chain.triples[1].end());
                    auto sol = sec2_solution(a, b);
                    verify_instance_identity(rep, build_family_A(sol), label);
                    break;
                }
                case FamilyId::B: {
                    auto t3 = sumsprod_param(random_rational(rng));
                    auto quads = quads_from_triples(t3);
                    std::vector<Rational> a(quads.quads[0].begin(), quads.quads[0].end());
                    std::vector<Rational> b(quads.quads[1].begin(), quads.quads[1].end());
                    auto sol = sec2_solution(a, b);
                    verify_instance_identity(rep, build_family_B(sol), label);
                    break;
                }
                case FamilyId::C: {
                    auto chain = te2_chains(random_rational(rng), random_rational(rng),
                                            random_rational(rng), random_rational(rng),
                                            random_rational(rng), random_rational(rng));
                    verify_instance_identity(rep, build_family_C(chain), label);
                    break;
                }
                case FamilyId::D: {
                    auto t3 = sumsprod_param(random_rational(rng));
                    verify_instance_identity(rep, build_family_D(quads_from_triples(t3)), label);
                    break;
                }
                case FamilyId::E: {
                    auto pair = fam3_sol1(random_rational(rng), random_rational(rng),
                                          random_rational(rng), random_rational(rng),
                                          random_rational(rng), random_rational(rng),
                                          random_rational(rng), random_rational(rng));
                    verify_instance_identity(rep, build_family_E(pair), label);
                    break;
                }
                case FamilyId::F: {
                    auto pair = fam4_sol(random_rational(rng), random_rational(rng),
                                         random_rational(rng), random_rational(rng),
                                         random_rational(rng), random_rational(rng),
                                         random_rational(rng), random_rational(rng));
                    verify_instance_identity(rep, build_family_F(pair), label);
                    break;
                }
                case FamilyId::G: {
                    auto sol = fam5_sol(random_rational(rng), random_rational(rng),
                                        random_rational(rng), random_rational(rng),
                                        random_rational(rng), random_rational(rng),
                                        random_rational(rng));
                    verify_instance_identity(rep, build_family_G(sol), label);
                    break;
                }
            }
        } catch (const DegeneracyError&) {
            rep.checks.push_back(label + ": declared degeneracy (skipped)");
        }
    }
    return rep;
}

}  // namespace ecforge

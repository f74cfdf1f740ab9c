#include "ecforge/heights.hpp"

#include <omp.h>

#include "ecforge/errors.hpp"
#include "ecforge/torsion.hpp"

namespace ecforge {

BigFloat BigFloat::log_of(const Integer& n) {
    BigFloat x;
    mpfr_set_z(x.raw(), n.get_mpz_t(), MPFR_RNDN);
    BigFloat r;
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log_height(const Rational& q) {
    Integer n(::abs(q.get_num()));
    const Integer& d = q.get_den();
    const Integer& m = n > d ? n : d;
    if (m <= 1) return BigFloat();
    return log_of(m);
}

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Interval Interval::around(const BigFloat& value, const BigFloat& error) {
    Interval r;
    mpfr_sub(r.lo.raw(), value.raw(), error.raw(), MPFR_RNDD);
    mpfr_add(r.hi.raw(), value.raw(), error.raw(), MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_add(r.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
    mpfr_add(r.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r;
    mpfr_sub(r.lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
    mpfr_sub(r.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    // min/max over the four endpoint products, each with outward rounding.
    mpfr_t p;
    mpfr_init2(p, BigFloat::kPrec);
    Interval r;
    bool first = true;
    for (const BigFloat* x : {&a.lo, &a.hi})
        for (const BigFloat* y : {&b.lo, &b.hi}) {
            mpfr_mul(p, x->raw(), y->raw(), MPFR_RNDD);
            if (first || mpfr_cmp(p, r.lo.raw()) < 0) mpfr_set(r.lo.raw(), p, MPFR_RNDD);
            mpfr_mul(p, x->raw(), y->raw(), MPFR_RNDU);
            if (first || mpfr_cmp(p, r.hi.raw()) > 0) mpfr_set(r.hi.raw(), p, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(p);
    return r;
}

BigFloat naive_height(const CurvePoint& p) {
    if (p.infinity) throw InfinityPoint("naive height of the point at infinity");
    return BigFloat::log_height(p.x);
}

HeightValue canonical_height(const WeierstrassCurve& e, const CurvePoint& p, int doublings) {
    if (p.infinity) return {BigFloat(), BigFloat()};
    CurvePoint q = p;
    BigFloat est = naive_height(p);
    BigFloat err;
    bool have_err = false;
    BigFloat quarter(0.25);
    BigFloat scale(1.0);
    for (int n = 1; n <= doublings; ++n) {
        q = e.dbl(q);
        if (q.infinity) return {BigFloat(), BigFloat()};  // torsion: height exactly 0
        scale = scale * quarter;
        BigFloat prev = est;
        est = naive_height(q) * scale;
        BigFloat raw = (est - prev).abs() / BigFloat(3.0);
        if (!have_err || raw < err) err = raw;  // refinement never widens
        have_err = true;
    }
    return {est, err};
}

HeightValue pairing(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q,
                    int doublings) {
    if (p == q) return canonical_height(e, p, doublings);
    HeightValue hp = canonical_height(e, p, doublings);
    HeightValue hq = canonical_height(e, q, doublings);
    HeightValue hs = canonical_height(e, e.add(p, q), doublings);
    BigFloat half(0.5);
    return {(hs.value - hp.value - hq.value) * half, (hs.error + hp.error + hq.error) * half};
}

BigFloat determinant(const std::vector<std::vector<BigFloat>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BigFloat(1.0);
    std::vector<BigFloat> d(size_t(1) << n);
    d[0] = BigFloat(1.0);
    for (size_t mask = 1; mask < d.size(); ++mask) {
        const int row = __builtin_popcountll(mask) - 1;
        BigFloat acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            BigFloat term = m[row][j] * d[mask ^ (size_t(1) << j)];
            acc = (pos % 2 == 0) ? acc + term : acc - term;
            ++pos;
        }
        d[mask] = std::move(acc);
    }
    return d.back();
}

Interval interval_determinant(const std::vector<std::vector<Interval>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Interval(BigFloat(1.0));
    std::vector<Interval> d(size_t(1) << n);
    d[0] = Interval(BigFloat(1.0));
    for (size_t mask = 1; mask < d.size(); ++mask) {
        const int row = __builtin_popcountll(mask) - 1;
        Interval acc(BigFloat(0.0));
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            Interval term = m[row][j] * d[mask ^ (size_t(1) << j)];
            acc = (pos % 2 == 0) ? acc + term : acc - term;
            ++pos;
        }
        d[mask] = std::move(acc);
    }
    return d.back();
}

SubsetRegulator subset_regulator(const IndependenceReport& rep, const std::vector<int>& indices) {
    const int m = static_cast<int>(indices.size());
    std::vector<std::vector<BigFloat>> mid(m, std::vector<BigFloat>(m));
    std::vector<std::vector<Interval>> box(m, std::vector<Interval>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const HeightValue& h = rep.gram[indices[i]][indices[j]];
            mid[i][j] = h.value;
            box[i][j] = h.interval();
        }
    BigFloat det = determinant(mid);
    Interval idet = interval_determinant(box);
    BigFloat err = (idet.hi - det) > (det - idet.lo) ? idet.hi - det : det - idet.lo;
    return {{det, err}, !idet.contains_zero() && det.sign() > 0};
}

IndependenceReport gram_regulator(const WeierstrassCurve& e,
                                  const std::vector<CurvePoint>& points, int doublings,
                                  GramMode mode) {
    const int m = static_cast<int>(points.size());
    IndependenceReport report;
    report.points = points;
    report.doublings = doublings;
    report.gram.assign(m, std::vector<HeightValue>(m));

    // diagonal first, then the independent off-diagonal entries
    std::vector<HeightValue> diag(m);
    if (mode == GramMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < m; ++i) diag[i] = canonical_height(e, points[i], doublings);
    } else {
        for (int i = 0; i < m; ++i) diag[i] = canonical_height(e, points[i], doublings);
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    auto entry = [&](int i, int j) {
        HeightValue hs = canonical_height(e, e.add(points[i], points[j]), doublings);
        BigFloat half(0.5);
        return HeightValue{(hs.value - diag[i].value - diag[j].value) * half,
                           (hs.error + diag[i].error + diag[j].error) * half};
    };

    if (mode == GramMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            report.gram[i][j] = entry(i, j);
        }
    } else {
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            report.gram[i][j] = entry(i, j);
        }
    }
    for (int i = 0; i < m; ++i) {
        report.gram[i][i] = diag[i];
        for (int j = i + 1; j < m; ++j) report.gram[j][i] = report.gram[i][j];
    }

    std::vector<std::vector<BigFloat>> mid(m, std::vector<BigFloat>(m));
    std::vector<std::vector<Interval>> box(m, std::vector<Interval>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            mid[i][j] = report.gram[i][j].value;
            box[i][j] = report.gram[i][j].interval();
        }
    BigFloat det = determinant(mid);
    Interval idet = interval_determinant(box);
    BigFloat err = (idet.hi - det) > (det - idet.lo) ? idet.hi - det : det - idet.lo;
    report.regulator = {det, err};
    report.certified_independent = !idet.contains_zero() && det.sign() > 0;
    return report;
}

}  // namespace ecforge

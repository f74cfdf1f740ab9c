#include "ecforge/unipoly.hpp"

#include <sstream>

#include "ecforge/errors.hpp"

namespace ecforge {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Rational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::linear(Rational c) { return UniPoly({std::move(c), Rational(1)}); }

UniPoly UniPoly::monomial(int degree, Rational c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::operator[](int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(const Rational& shift) const {
    // Horner on the coefficient list: p(x+shift) built highest degree first.
    UniPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * UniPoly::linear(shift) + UniPoly::constant(*it);
    return r;
}

UniPoly UniPoly::dilated(const Rational& k) const {
    std::vector<Rational> v(coeffs_);
    Rational pow(1);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] *= pow;
        pow *= k;
    }
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& k, const UniPoly& p) {
    std::vector<Rational> v(p.coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = k * p.coeffs_[i];
    return UniPoly(std::move(v));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        if (ac != 1 || i == 0) os << to_string(ac);
        if (i > 0) {
            if (ac != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly product_of_linear(const std::vector<Rational>& values) {
    UniPoly p = UniPoly::constant(Rational(1));
    for (const auto& v : values) p = p * UniPoly::linear(v);
    return p;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    const int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= p[0];
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= q[0];
        return r;
    }
    // Sylvester matrix, (m+n) x (m+n); determinant by fraction-free elimination
    // would do, but the sizes here are tiny (<= 7x7), so plain Gaussian
    // elimination over Q is fine and exact.
    const int N = m + n;
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = p[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = q[n - i];
    Rational det(1);
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        for (int r = col; r < N; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(M[pivot], M[col]);
            det = -det;
        }
        det *= M[col][col];
        const Rational inv = Rational(1) / M[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col] == 0) continue;
            const Rational f = M[r][col] * inv;
            for (int c = col; c < N; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return det;
}

Rational discriminant(const UniPoly& p) {
    const int n = p.degree();
    if (n != 3 && n != 4) throw UnsupportedDegree("discriminant needs degree 3 or 4");
    const Rational res = resultant(p, p.derivative());
    const int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return Rational(16 * sign) * res / p.leading();
}

}  // namespace ecforge

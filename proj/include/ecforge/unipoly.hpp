#pragma once

#include <vector>

#include "ecforge/rational.hpp"

namespace ecforge {

/// Dense univariate polynomial over Rational. Index = degree; the
/// coefficient list never ends in a zero (the zero polynomial is empty,
/// degree -1). Everything here is exact.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(Rational c);
    /// x + c
    static UniPoly linear(Rational c);
    static UniPoly monomial(int degree, Rational c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;

    UniPoly derivative() const;
    /// p(x + shift)
    UniPoly shifted(const Rational& shift) const;
    /// p(kx)
    UniPoly dilated(const Rational& k) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend UniPoly operator*(const Rational& k, const UniPoly& p);
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// prod (x + v) over the given values.
UniPoly product_of_linear(const std::vector<Rational>& values);

/// Sylvester resultant of p and q.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Discriminant of the genus-one model y^2 = p(x) for deg p in {3,4}:
/// 16 * (-1)^{n(n-1)/2} Res(p,p') / lc(p). The factor 16 makes the cubic
/// case agree with the curve discriminant of y^2 = x^3 + Ax + B.
/// Throws UnsupportedDegree outside degrees 3 and 4.
Rational discriminant(const UniPoly& p);

}  // namespace ecforge

#pragma once

#include <mpfr.h>

#include <string>

#include "ecforge/rational.hpp"

namespace ecforge {

/// 256-bit MPFR value with round-to-nearest arithmetic. Heights and
/// regulators live here; exact data stays in Rational.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(long n) : BigFloat() { mpfr_set_si(v_, n, MPFR_RNDN); }
    explicit BigFloat(const Rational& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    /// log of a positive integer.
    static BigFloat log_of(const Integer& n);
    /// log max(|num|, |den|) of a rational in lowest terms; zero maps to 0.
    static BigFloat log_height(const Rational& q);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

  private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded arithmetic.
struct Interval {
    BigFloat lo, hi;

    Interval() = default;
    explicit Interval(const BigFloat& v) : lo(v), hi(v) {}
    Interval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}
    static Interval around(const BigFloat& value, const BigFloat& error);

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    BigFloat width() const { return hi - lo; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval operator-() const { return Interval(-hi, -lo); }
};

}  // namespace ecforge

#pragma once

#include "k3aut/integer.hpp"

#include <mpfr.h>

#include <string>

namespace k3aut {

/// Multiple-precision binary float (MPFR) used only to render logs, square
/// roots and ratios; all decisions are made in exact arithmetic.
class Real {
public:
    static constexpr mpfr_prec_t default_bits = 256;

    explicit Real(mpfr_prec_t bits = default_bits);
    Real(const Integer& n, mpfr_prec_t bits = default_bits);
    Real(const Rational& q, mpfr_prec_t bits = default_bits);
    Real(double x, mpfr_prec_t bits = default_bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(Real other) noexcept;
    ~Real();

    friend Real operator+(const Real& x, const Real& y);
    friend Real operator-(const Real& x, const Real& y);
    friend Real operator*(const Real& x, const Real& y);
    friend Real operator/(const Real& x, const Real& y);
    friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }

    friend Real log(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real abs(const Real& x);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal rendering with `digits` significant digits ("%.{digits}Rg").
    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

} // namespace k3aut

#include "k3aut/real.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace k3aut {

namespace {

mpfr_prec_t max_prec(const mpfr_t a, const mpfr_t b)
{
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

} // namespace

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Integer& n, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(double x, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(mpfr_get_prec(other.v_))
{
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(Real other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

#define K3AUT_REAL_BINOP(op, fn)                                                                               \
    Real operator op(const Real& x, const Real& y)                                                             \
    {                                                                                                          \
        Real r(max_prec(x.v_, y.v_));                                                                          \
        fn(r.v_, x.v_, y.v_, MPFR_RNDN);                                                                       \
        return r;                                                                                              \
    }

K3AUT_REAL_BINOP(+, mpfr_add)
K3AUT_REAL_BINOP(-, mpfr_sub)
K3AUT_REAL_BINOP(*, mpfr_mul)
K3AUT_REAL_BINOP(/, mpfr_div)

#undef K3AUT_REAL_BINOP

Real log(const Real& x)
{
    Real r(mpfr_get_prec(x.v_));
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x)
{
    Real r(mpfr_get_prec(x.v_));
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x)
{
    Real r(mpfr_get_prec(x.v_));
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const
{
    digits = std::clamp(digits, 1, 1000);
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v_);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

} // namespace k3aut

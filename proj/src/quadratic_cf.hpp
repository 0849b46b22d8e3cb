#pragma once

#include "k3aut/integer.hpp"

namespace k3aut {

// Continued fraction expansion of the quadratic irrational (P0 + sqrt(d)) / Q0,
// with Q0 | d - P0^2. Tracks the complete-quotient state (P_i, Q_i) and the
// convergents A_{i-1}/B_{i-1} after i steps.
class QuadraticCf {
public:
    QuadraticCf(Integer d, Integer p0, Integer q0)
        : d_(std::move(d)), s_(isqrt(d_)), p_(std::move(p0)), q_(std::move(q0))
    {
    }

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& a_prev() const { return a1_; }
    const Integer& b_prev() const { return b1_; }

    // floor((P + sqrt d) / Q), exact for either sign of Q
    Integer next_partial_quotient() const
    {
        if (q_ > 0) return floor_div(p_ + s_, q_);
        return floor_div(p_ + s_ + 1, q_);
    }

    void step()
    {
        const Integer a = next_partial_quotient();
        Integer an = a * a1_ + a2_;
        Integer bn = a * b1_ + b2_;
        a2_ = std::move(a1_);
        a1_ = std::move(an);
        b2_ = std::move(b1_);
        b1_ = std::move(bn);
        const Integer p = a * q_ - p_;
        q_ = (d_ - p * p) / q_;
        p_ = p;
    }

private:
    Integer d_, s_, p_, q_;
    Integer a1_ = 1, a2_ = 0;
    Integer b1_ = 0, b2_ = 1;
};

} // namespace k3aut

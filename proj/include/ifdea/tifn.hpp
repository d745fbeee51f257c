// tifn.hpp - triangular intuitionistic fuzzy numbers.
//
// A TIFN is described by five ordered reals (pL, pM, pU; p'L, p'U) with
// p'L <= pL <= pM <= pU <= p'U. Membership rises linearly from pL to the
// mode pM and falls to pU; non-membership falls from p'L to the mode and
// rises to p'U. The non-membership middle coincides with the mode and is
// not stored separately.

#pragma once

#include <string>
#include <string_view>

namespace ifdea {

class Tifn {
public:
    // Throws std::invalid_argument naming the first violated ordering pair.
    Tifn(double mem_lower, double mode, double mem_upper,
         double nonmem_lower, double nonmem_upper);

    // Degenerate TIFN with all five components equal to c.
    static Tifn from_crisp(double c);

    double mem_lower() const { return mem_lower_; }
    double mode() const { return mode_; }
    double mem_upper() const { return mem_upper_; }
    double nonmem_lower() const { return nonmem_lower_; }
    double nonmem_upper() const { return nonmem_upper_; }

    bool is_degenerate() const { return nonmem_lower_ == nonmem_upper_; }

    // (p'L + pL + 4 pM + pU + p'U) / 8
    double expected_value() const;

    // Piecewise-linear grades. Zero-width legs follow the limiting
    // convention: membership 1 exactly at the mode, non-membership 0
    // exactly at the mode.
    double membership_at(double x) const;
    double nonmembership_at(double x) const;
    double hesitation_at(double x) const;

    // Textual form "(pL,pM,pU;p'L,p'U)". parse() throws
    // std::invalid_argument on malformed text or ordering violations.
    std::string to_string() const;
    static Tifn parse(std::string_view text);

    friend bool operator==(const Tifn&, const Tifn&) = default;

private:
    double mem_lower_;
    double mode_;
    double mem_upper_;
    double nonmem_lower_;
    double nonmem_upper_;
};

// Componentwise addition; subtraction pairs reversed spreads.
Tifn operator+(const Tifn& p, const Tifn& q);
Tifn operator-(const Tifn& p, const Tifn& q);

// Componentwise product / spread-reversed quotient approximations.
// Both require strictly positive non-membership lower bounds and throw
// std::domain_error otherwise.
Tifn operator*(const Tifn& p, const Tifn& q);
Tifn operator/(const Tifn& p, const Tifn& q);

// Componentwise for lambda >= 0, order-reversing for lambda < 0.
Tifn scalar_mul(double lambda, const Tifn& p);

}  // namespace ifdea

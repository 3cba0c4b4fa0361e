#pragma once

#include "grtoda/exppoly.hpp"

namespace grtoda {

// Whittaker-class function P * exp(L + E): an exponential-polynomial
// prefactor P, a linear phase L = sum c_v * v with ParamScalar coefficients,
// and an exponential phase E (pure-rational exponents). Closed under
// differentiation and multiplication by ExpPoly.
class ExpFunction {
public:
    ExpFunction() : prefactor_(ParamScalar(1)) {}
    ExpFunction(ExpPoly prefactor, std::map<VarId, ParamScalar> phase_linear, ExpPoly phase_exp);

    const ExpPoly& prefactor() const { return prefactor_; }
    const std::map<VarId, ParamScalar>& phase_linear() const { return phase_linear_; }
    const ExpPoly& phase_exp() const { return phase_exp_; }

    bool same_phase(const ExpFunction& o) const {
        return phase_linear_ == o.phase_linear_ && phase_exp_ == o.phase_exp_;
    }
    friend bool operator==(const ExpFunction& a, const ExpFunction& b) {
        return a.prefactor_ == b.prefactor_ && a.same_phase(b);
    }

    ExpFunction with_prefactor(ExpPoly p) const {
        return ExpFunction(std::move(p), phase_linear_, phase_exp_);
    }

    // d/dv: same phase; prefactor -> dP/dv + P*(L_v + dE/dv)
    ExpFunction diff(VarId v) const;
    ExpFunction mul(const ExpPoly& c) const;
    ExpFunction add_same_phase(const ExpFunction& o) const;

    // If *this equals s * f for a single ParamScalar s (same phase, constant
    // prefactor ratio against f with prefactor 1), return s.
    std::optional<ParamScalar> scalar_vs(const ExpFunction& f) const;

    std::complex<double> eval(const std::map<VarId, std::complex<double>>& vals,
                              const std::vector<double>& lambda, double hbar,
                              int vs_sign) const;

    std::string str() const;

private:
    ExpPoly prefactor_;
    std::map<VarId, ParamScalar> phase_linear_; // no zero coefficients
    ExpPoly phase_exp_;                         // pure-rational exponents, no powers
};

} // namespace grtoda

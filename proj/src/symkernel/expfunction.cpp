#include "grtoda/expfunction.hpp"

#include <sstream>

namespace grtoda {

ExpFunction::ExpFunction(ExpPoly prefactor, std::map<VarId, ParamScalar> phase_linear,
                         ExpPoly phase_exp)
    : prefactor_(std::move(prefactor)),
      phase_linear_(std::move(phase_linear)),
      phase_exp_(std::move(phase_exp)) {
    for (auto it = phase_linear_.begin(); it != phase_linear_.end();) {
        if (it->second.is_zero()) it = phase_linear_.erase(it);
        else ++it;
    }
    for (const auto& [k, c] : phase_exp_.terms()) {
        if (!k.powers.empty())
            throw std::invalid_argument("ExpFunction: phase_exp must be purely exponential");
        for (const auto& [v, e] : k.exps)
            if (!e.is_rational())
                throw std::invalid_argument("ExpFunction: phase_exp exponents must be rational");
    }
}

ExpFunction ExpFunction::diff(VarId v) const {
    ExpPoly p = prefactor_.diff(v);
    auto it = phase_linear_.find(v);
    if (it != phase_linear_.end()) {
        ExpPoly t = prefactor_;
        t *= it->second;
        p += t;
    }
    ExpPoly de = phase_exp_.diff(v);
    if (!de.is_zero()) p += prefactor_ * de;
    return with_prefactor(std::move(p));
}

ExpFunction ExpFunction::mul(const ExpPoly& c) const {
    return with_prefactor(prefactor_ * c);
}

ExpFunction ExpFunction::add_same_phase(const ExpFunction& o) const {
    if (!same_phase(o)) throw std::invalid_argument("ExpFunction: phases differ");
    return with_prefactor(prefactor_ + o.prefactor_);
}

std::optional<ParamScalar> ExpFunction::scalar_vs(const ExpFunction& f) const {
    if (!same_phase(f)) return std::nullopt;
    if (prefactor_.is_zero()) return ParamScalar();
    if (!f.prefactor().is_constant() || !prefactor_.is_constant()) return std::nullopt;
    ParamScalar denom = f.prefactor().constant_value();
    if (!denom.is_constant()) return std::nullopt;
    GaussRat d = denom.constant_value();
    if (d.is_zero()) return std::nullopt;
    ParamScalar num = prefactor_.constant_value();
    ParamScalar r;
    for (const auto& [m, c] : num.terms()) {
        ParamScalar t = ParamScalar(c / d);
        for (const auto& [s, e] : m.factors) t *= ParamScalar::sym(s, e);
        r += t;
    }
    return r;
}

std::complex<double> ExpFunction::eval(const std::map<VarId, std::complex<double>>& vals,
                                       const std::vector<double>& lambda, double hbar,
                                       int vs_sign) const {
    std::complex<double> arg = 0.0;
    for (const auto& [v, c] : phase_linear_) {
        auto it = vals.find(v);
        if (it == vals.end()) throw std::invalid_argument("ExpFunction::eval: missing " + v.str());
        arg += c.eval(lambda, hbar, vs_sign) * it->second;
    }
    arg += phase_exp_.eval(vals, lambda, hbar, vs_sign);
    return prefactor_.eval(vals, lambda, hbar, vs_sign) * std::exp(arg);
}

std::string ExpFunction::str() const {
    std::ostringstream os;
    os << "(" << prefactor_.str() << ") * exp(";
    bool first = true;
    for (const auto& [v, c] : phase_linear_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << v.str();
        first = false;
    }
    if (!phase_exp_.is_zero()) {
        if (!first) os << " + ";
        os << phase_exp_.str();
        first = false;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

} // namespace grtoda

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "grtoda/paramscalar.hpp"

namespace grtoda {

// Exponent of one variable inside an exponential monomial:
// (rational constant) + (linear form in nu_1..nu_N with rational coefficients).
struct ExpExponent {
    mpq_class c0{0};
    std::vector<std::pair<int, mpq_class>> nu; // sorted by index, coeff != 0

    ExpExponent() = default;
    ExpExponent(mpq_class c) : c0(std::move(c)) { c0.canonicalize(); }
    ExpExponent(long n) : c0(n) {}

    static ExpExponent nu_term(int k, mpq_class coeff = 1);

    bool is_zero() const { return c0 == 0 && nu.empty(); }
    bool is_rational() const { return nu.empty(); }

    ExpExponent& operator+=(const ExpExponent& o);
    ExpExponent operator-() const;
    friend ExpExponent operator+(ExpExponent a, const ExpExponent& b) { return a += b; }
    friend bool operator==(const ExpExponent&, const ExpExponent&);
    std::strong_ordering operator<=>(const ExpExponent& o) const;

    ParamScalar to_scalar() const;
    std::complex<double> eval(const std::vector<double>& lambda) const;
    std::string str() const; // e.g. "1/2+nu[1]-2*nu[3]"
};

// Key of an exponential monomial: integer powers and exponential exponents
// per variable. Zero entries are absent.
struct MonoKey {
    std::vector<std::pair<VarId, int>> powers;       // sorted, power > 0
    std::vector<std::pair<VarId, ExpExponent>> exps; // sorted, exponent != 0

    auto operator<=>(const MonoKey&) const = default;
    bool is_unit() const { return powers.empty() && exps.empty(); }

    int power_of(VarId v) const;
    const ExpExponent* exp_of(VarId v) const;
};

MonoKey key_mul(const MonoKey& a, const MonoKey& b);

// Finite sum of parameter-coefficient monomials v^p * exp(sum e_v v).
// Canonical form: map keyed by MonoKey, no zero coefficients; equality is
// syntactic after normalization.
class ExpPoly {
public:
    ExpPoly() = default;
    ExpPoly(ParamScalar c);
    ExpPoly(long n) : ExpPoly(ParamScalar(n)) {}

    static ExpPoly monomial(ParamScalar coeff, MonoKey key);
    // exp(e * v), single variable
    static ExpPoly exp_of(VarId v, ExpExponent e);
    // exp(sum_i e_i * v_i)
    static ExpPoly exp_linear(const std::vector<std::pair<VarId, ExpExponent>>& entries,
                              ParamScalar coeff = ParamScalar(1));
    static ExpPoly var(VarId v, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<MonoKey, ParamScalar>& terms() const { return terms_; }

    bool is_constant() const;           // single unit-key term or zero
    ParamScalar constant_value() const; // requires is_constant()

    ExpPoly operator-() const;
    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
    ExpPoly& operator*=(const ParamScalar& s);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    ExpPoly diff(VarId v) const;
    ExpPoly subst_zero(VarId v) const;       // v -> 0
    ExpPoly subst_vs(int sign) const;
    // replace every exponential monomial exp(a*x[i] + ...) by its value with
    // the given variable substitution map applied to exponentials only
    std::complex<double> eval(const std::map<VarId, std::complex<double>>& vals,
                              const std::vector<double>& lambda, double hbar,
                              int vs_sign) const;

    void add_term(MonoKey k, ParamScalar c);

    std::string str() const;

private:
    std::map<MonoKey, ParamScalar> terms_;
};

} // namespace grtoda

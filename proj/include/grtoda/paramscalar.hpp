#pragma once

#include <complex>
#include <map>
#include <vector>
#include <string>

#include "grtoda/gaussrat.hpp"
#include "grtoda/symbols.hpp"

namespace grtoda {

// Monomial in the parameter symbols. Exponents of nu_k and vs are
// non-negative; h carries an integer (Laurent) exponent. vs^2 rewrites to 1.
struct ParamMonomial {
    std::vector<std::pair<ParamSym, int>> factors; // sorted by symbol, exp != 0

    auto operator<=>(const ParamMonomial&) const = default;
    bool empty() const { return factors.empty(); }
};

// Canonical multivariate polynomial over Gaussian rationals in
// {nu_1..nu_N, h, vs}; the coefficient ring of every symbolic object here.
class ParamScalar {
public:
    ParamScalar() = default;
    ParamScalar(GaussRat c);
    ParamScalar(long n) : ParamScalar(GaussRat(n)) {}

    static ParamScalar sym(ParamSym s, int exp = 1);
    static ParamScalar nu(int k) { return sym(ParamSym::nu(k)); }
    static ParamScalar h(int exp = 1) { return sym(ParamSym::h(), exp); }
    static ParamScalar vs() { return sym(ParamSym::vs()); }
    static ParamScalar rational(const mpq_class& q) { return ParamScalar(GaussRat(q)); }

    // mu_n = nu_n - rho_n with rho_n = n - (N+1)/2
    static ParamScalar mu(int n, int N);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_value() const; // requires is_constant()

    const std::map<ParamMonomial, GaussRat>& terms() const { return terms_; }

    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }
    std::strong_ordering operator<=>(const ParamScalar& o) const;

    // substitute vs -> +1/-1
    ParamScalar subst_vs(int sign) const;
    // numeric evaluation with nu_k -> i*lambda_k, h -> 1/hbar, vs -> sign
    std::complex<double> eval(const std::vector<double>& lambda, double hbar, int vs_sign) const;

    std::string str() const;

private:
    std::map<ParamMonomial, GaussRat> terms_; // canonical: no zero coeffs
    void add_term(ParamMonomial m, GaussRat c);
    friend class ParamScalarBuilder;
};

} // namespace grtoda

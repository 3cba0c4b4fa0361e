#pragma once

#include "grtoda/expfunction.hpp"

namespace grtoda {

// Monomial in partial derivatives: sorted (variable, degree>0) pairs.
using DerivKey = std::vector<std::pair<VarId, int>>;

DerivKey deriv_mul(const DerivKey& a, const DerivKey& b);
int deriv_order(const DerivKey& k);

// Finite-order differential operator, normal form: ExpPoly coefficients to
// the left of derivative monomials, canonical term order, no zero terms.
class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(ExpPoly c); // order-0 multiplication operator
    DiffOperator(long n) : DiffOperator(ExpPoly(n)) {}

    static DiffOperator identity() { return DiffOperator(ExpPoly(1)); }
    static DiffOperator deriv(VarId v, int degree = 1);
    static DiffOperator term(ExpPoly coeff, DerivKey key);

    bool is_zero() const { return terms_.empty(); }
    const std::map<DerivKey, ExpPoly>& terms() const { return terms_; }
    int order() const;
    ExpPoly coefficient(const DerivKey& k) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    DiffOperator& operator*=(const ParamScalar& s);
    DiffOperator mul_coeff(const ExpPoly& c) const; // c * this (left multiplication)

    void add_term(DerivKey k, ExpPoly c);

    ExpPoly apply_poly(const ExpPoly& p) const;
    ExpFunction apply(const ExpFunction& f) const;

    DiffOperator subst_vs(int sign) const;

    std::string str() const;

private:
    std::map<DerivKey, ExpPoly> terms_;
};

// Normal-form composition A∘B via the Leibniz rewrite d_v c = (d_v c) + c d_v.
DiffOperator compose(const DiffOperator& A, const DiffOperator& B);
DiffOperator commutator(const DiffOperator& A, const DiffOperator& B);

} // namespace grtoda

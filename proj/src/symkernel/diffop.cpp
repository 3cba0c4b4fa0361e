#include "grtoda/diffop.hpp"

#include <functional>
#include <sstream>

namespace grtoda {

DerivKey deriv_mul(const DerivKey& a, const DerivKey& b) {
    DerivKey r;
    auto i = a.begin(); auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) r.push_back(*i++);
        else if (i == a.end() || j->first < i->first) r.push_back(*j++);
        else { r.push_back({i->first, i->second + j->second}); ++i; ++j; }
    }
    return r;
}

int deriv_order(const DerivKey& k) {
    int d = 0;
    for (const auto& [v, e] : k) d += e;
    return d;
}

DiffOperator::DiffOperator(ExpPoly c) {
    if (!c.is_zero()) terms_.emplace(DerivKey{}, std::move(c));
}

DiffOperator DiffOperator::deriv(VarId v, int degree) {
    if (degree < 0) throw std::invalid_argument("DiffOperator::deriv: negative degree");
    DiffOperator d;
    DerivKey k;
    if (degree > 0) k.push_back({v, degree});
    d.terms_.emplace(std::move(k), ExpPoly(1));
    return d;
}

DiffOperator DiffOperator::term(ExpPoly coeff, DerivKey key) {
    DiffOperator d;
    d.add_term(std::move(key), std::move(coeff));
    return d;
}

int DiffOperator::order() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, deriv_order(k));
    return d;
}

ExpPoly DiffOperator::coefficient(const DerivKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ExpPoly() : it->second;
}

void DiffOperator::add_term(DerivKey k, ExpPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) terms_.emplace(std::move(k), std::move(c));
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

DiffOperator& DiffOperator::operator*=(const ParamScalar& s) {
    DiffOperator r;
    for (const auto& [k, c] : terms_) {
        ExpPoly c2 = c; c2 *= s;
        r.add_term(k, std::move(c2));
    }
    terms_ = std::move(r.terms_);
    return *this;
}

DiffOperator DiffOperator::mul_coeff(const ExpPoly& c) const {
    DiffOperator r;
    for (const auto& [k, co] : terms_) r.add_term(k, c * co);
    return r;
}

namespace {
// iterate over sub-multi-indices beta <= alpha with multinomial coefficients
void for_each_sub(const DerivKey& alpha,
                  const std::function<void(const DerivKey&, const DerivKey&, long)>& fn) {
    std::vector<int> idx(alpha.size(), 0);
    for (;;) {
        DerivKey beta, rem;
        long coef = 1;
        for (size_t i = 0; i < alpha.size(); ++i) {
            int d = alpha[i].second, b = idx[i];
            long bin = 1;
            for (int t = 0; t < b; ++t) bin = bin * (d - t) / (t + 1);
            coef *= bin;
            if (b > 0) beta.push_back({alpha[i].first, b});
            if (d - b > 0) rem.push_back({alpha[i].first, d - b});
        }
        fn(beta, rem, coef);
        size_t i = 0;
        while (i < alpha.size() && idx[i] == alpha[i].second) { idx[i] = 0; ++i; }
        if (i == alpha.size()) break;
        ++idx[i];
    }
}
} // namespace

DiffOperator compose(const DiffOperator& A, const DiffOperator& B) {
    DiffOperator r;
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            for_each_sub(ka, [&](const DerivKey& beta, const DerivKey& rem, long coef) {
                ExpPoly c = cb;
                for (const auto& [v, d] : beta)
                    for (int t = 0; t < d; ++t) c = c.diff(v);
                if (c.is_zero()) return;
                c *= ca;
                c *= ParamScalar(coef);
                r.add_term(deriv_mul(rem, kb), std::move(c));
            });
        }
    }
    return r;
}

DiffOperator commutator(const DiffOperator& A, const DiffOperator& B) {
    return compose(A, B) - compose(B, A);
}

ExpPoly DiffOperator::apply_poly(const ExpPoly& p) const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) {
        ExpPoly t = p;
        for (const auto& [v, d] : k)
            for (int i = 0; i < d && !t.is_zero(); ++i) t = t.diff(v);
        r += c * t;
    }
    return r;
}

ExpFunction DiffOperator::apply(const ExpFunction& f) const {
    std::optional<ExpFunction> acc;
    for (const auto& [k, c] : terms_) {
        ExpFunction t = f;
        for (const auto& [v, d] : k)
            for (int i = 0; i < d; ++i) t = t.diff(v);
        t = t.mul(c);
        acc = acc ? acc->add_same_phase(t) : t;
    }
    if (!acc) return f.with_prefactor(ExpPoly());
    return *acc;
}

DiffOperator DiffOperator::subst_vs(int sign) const {
    DiffOperator r;
    for (const auto& [k, c] : terms_) r.add_term(k, c.subst_vs(sign));
    return r;
}

std::string DiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [v, d] : k) {
            os << "*D[" << v.str() << "]";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

} // namespace grtoda

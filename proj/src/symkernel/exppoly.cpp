#include "grtoda/exppoly.hpp"

#include <sstream>

namespace grtoda {

ExpExponent ExpExponent::nu_term(int k, mpq_class coeff) {
    ExpExponent e;
    coeff.canonicalize();
    if (coeff != 0) e.nu.push_back({k, std::move(coeff)});
    return e;
}

ExpExponent& ExpExponent::operator+=(const ExpExponent& o) {
    c0 += o.c0;
    std::vector<std::pair<int, mpq_class>> out;
    auto i = nu.begin();
    auto j = o.nu.begin();
    while (i != nu.end() || j != o.nu.end()) {
        if (j == o.nu.end() || (i != nu.end() && i->first < j->first)) out.push_back(*i++);
        else if (i == nu.end() || j->first < i->first) out.push_back(*j++);
        else {
            mpq_class s = i->second + j->second;
            if (s != 0) out.push_back({i->first, std::move(s)});
            ++i; ++j;
        }
    }
    nu = std::move(out);
    return *this;
}

ExpExponent ExpExponent::operator-() const {
    ExpExponent r;
    r.c0 = -c0;
    for (const auto& [k, c] : nu) r.nu.push_back({k, -c});
    return r;
}

bool operator==(const ExpExponent& a, const ExpExponent& b) {
    return a.c0 == b.c0 && a.nu == b.nu;
}

std::strong_ordering ExpExponent::operator<=>(const ExpExponent& o) const {
    if (int c = cmp(c0, o.c0); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto i = nu.begin(); auto j = o.nu.begin();
    for (; i != nu.end() && j != o.nu.end(); ++i, ++j) {
        if (i->first != j->first) return i->first <=> j->first;
        if (int c = cmp(i->second, j->second); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i != nu.end()) return std::strong_ordering::greater;
    if (j != o.nu.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

ParamScalar ExpExponent::to_scalar() const {
    ParamScalar r = ParamScalar::rational(c0);
    for (const auto& [k, c] : nu) r += ParamScalar::rational(c) * ParamScalar::nu(k);
    return r;
}

std::complex<double> ExpExponent::eval(const std::vector<double>& lambda) const {
    std::complex<double> r(c0.get_d(), 0.0);
    for (const auto& [k, c] : nu) {
        if (k < 1 || static_cast<size_t>(k) > lambda.size())
            throw std::invalid_argument("ExpExponent::eval: nu index out of range");
        r += std::complex<double>(0.0, lambda[k - 1]) * c.get_d();
    }
    return r;
}

std::string ExpExponent::str() const {
    std::ostringstream os;
    bool first = true;
    if (c0 != 0 || nu.empty()) { os << rat_str(c0); first = false; }
    for (const auto& [k, c] : nu) {
        if (!first && c > 0) os << "+";
        if (c == 1) os << "nu[" << k << "]";
        else if (c == -1) os << "-nu[" << k << "]";
        else os << rat_str(c) << "*nu[" << k << "]";
        first = false;
    }
    return os.str();
}

int MonoKey::power_of(VarId v) const {
    for (const auto& [w, p] : powers) if (w == v) return p;
    return 0;
}

const ExpExponent* MonoKey::exp_of(VarId v) const {
    for (const auto& [w, e] : exps) if (w == v) return &e;
    return nullptr;
}

MonoKey key_mul(const MonoKey& a, const MonoKey& b) {
    MonoKey r;
    {
        auto i = a.powers.begin(); auto j = b.powers.begin();
        while (i != a.powers.end() || j != b.powers.end()) {
            if (j == b.powers.end() || (i != a.powers.end() && i->first < j->first)) r.powers.push_back(*i++);
            else if (i == a.powers.end() || j->first < i->first) r.powers.push_back(*j++);
            else { r.powers.push_back({i->first, i->second + j->second}); ++i; ++j; }
        }
    }
    {
        auto i = a.exps.begin(); auto j = b.exps.begin();
        while (i != a.exps.end() || j != b.exps.end()) {
            if (j == b.exps.end() || (i != a.exps.end() && i->first < j->first)) r.exps.push_back(*i++);
            else if (i == a.exps.end() || j->first < i->first) r.exps.push_back(*j++);
            else {
                ExpExponent e = i->second; e += j->second;
                if (!e.is_zero()) r.exps.push_back({i->first, std::move(e)});
                ++i; ++j;
            }
        }
    }
    return r;
}

ExpPoly::ExpPoly(ParamScalar c) {
    if (!c.is_zero()) terms_.emplace(MonoKey{}, std::move(c));
}

ExpPoly ExpPoly::monomial(ParamScalar coeff, MonoKey key) {
    ExpPoly p;
    p.add_term(std::move(key), std::move(coeff));
    return p;
}

ExpPoly ExpPoly::exp_of(VarId v, ExpExponent e) {
    MonoKey k;
    if (!e.is_zero()) k.exps.push_back({v, std::move(e)});
    return monomial(ParamScalar(1), std::move(k));
}

ExpPoly ExpPoly::exp_linear(const std::vector<std::pair<VarId, ExpExponent>>& entries,
                            ParamScalar coeff) {
    MonoKey k;
    std::map<VarId, ExpExponent> acc;
    for (const auto& [v, e] : entries) {
        auto it = acc.find(v);
        if (it == acc.end()) acc.emplace(v, e);
        else it->second += e;
    }
    for (auto& [v, e] : acc)
        if (!e.is_zero()) k.exps.push_back({v, std::move(e)});
    return monomial(std::move(coeff), std::move(k));
}

ExpPoly ExpPoly::var(VarId v, int power) {
    MonoKey k;
    if (power < 0) throw std::invalid_argument("ExpPoly::var: negative power");
    if (power > 0) k.powers.push_back({v, power});
    return monomial(ParamScalar(1), std::move(k));
}

bool ExpPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

ParamScalar ExpPoly::constant_value() const {
    if (terms_.empty()) return ParamScalar();
    if (!is_constant()) throw std::logic_error("ExpPoly: not constant");
    return terms_.begin()->second;
}

void ExpPoly::add_term(MonoKey k, ParamScalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) terms_.emplace(std::move(k), std::move(c));
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
    ExpPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(key_mul(ka, kb), ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const ParamScalar& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    ExpPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    terms_ = std::move(r.terms_);
    return *this;
}

ExpPoly ExpPoly::diff(VarId v) const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) {
        int p = k.power_of(v);
        if (p > 0) {
            MonoKey k2 = k;
            for (auto& [w, pw] : k2.powers)
                if (w == v) --pw;
            std::erase_if(k2.powers, [](const auto& e) { return e.second == 0; });
            r.add_term(std::move(k2), c * ParamScalar(p));
        }
        if (const ExpExponent* e = k.exp_of(v)) {
            r.add_term(k, c * e->to_scalar());
        }
    }
    return r;
}

ExpPoly ExpPoly::subst_zero(VarId v) const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.power_of(v) > 0) continue; // v^p -> 0
        MonoKey k2 = k;
        std::erase_if(k2.exps, [&](const auto& e) { return e.first == v; });
        r.add_term(std::move(k2), c);
    }
    return r;
}

ExpPoly ExpPoly::subst_vs(int sign) const {
    ExpPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k, c.subst_vs(sign));
    return r;
}

std::complex<double> ExpPoly::eval(const std::map<VarId, std::complex<double>>& vals,
                                   const std::vector<double>& lambda, double hbar,
                                   int vs_sign) const {
    std::complex<double> tot = 0.0;
    for (const auto& [k, c] : terms_) {
        std::complex<double> t = c.eval(lambda, hbar, vs_sign);
        for (const auto& [v, p] : k.powers) {
            auto it = vals.find(v);
            if (it == vals.end()) throw std::invalid_argument("ExpPoly::eval: missing value for " + v.str());
            for (int q = 0; q < p; ++q) t *= it->second;
        }
        std::complex<double> arg = 0.0;
        for (const auto& [v, e] : k.exps) {
            auto it = vals.find(v);
            if (it == vals.end()) throw std::invalid_argument("ExpPoly::eval: missing value for " + v.str());
            arg += e.eval(lambda) * it->second;
        }
        tot += t * std::exp(arg);
    }
    return tot;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> pieces;
        if (c.terms().size() > 1) pieces.push_back("(" + c.str() + ")");
        else if (!(c == ParamScalar(1)) || k.is_unit()) pieces.push_back(c.str());
        for (const auto& [v, p] : k.powers)
            pieces.push_back(p == 1 ? v.str() : v.str() + "^" + std::to_string(p));
        if (!k.exps.empty()) {
            std::ostringstream part;
            part << "exp(";
            bool f2 = true;
            for (const auto& [v, e] : k.exps) {
                if (e.is_rational()) {
                    if (e.c0 == 1) part << (f2 ? "" : " + ") << v.str();
                    else if (e.c0 == -1) part << (f2 ? "-" : " - ") << v.str();
                    else if (e.c0 > 0) part << (f2 ? "" : " + ") << rat_str(e.c0) << "*" << v.str();
                    else part << (f2 ? "-" : " - ") << rat_str(-e.c0) << "*" << v.str();
                } else {
                    part << (f2 ? "" : " + ") << "(" << e.str() << ")*" << v.str();
                }
                f2 = false;
            }
            part << ")";
            pieces.push_back(part.str());
        }
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) os << "*";
            os << pieces[i];
        }
    }
    return os.str();
}

} // namespace grtoda

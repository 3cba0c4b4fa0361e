#include "grtoda/paramscalar.hpp"

#include <complex>
#include <sstream>

namespace grtoda {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

mpq_class rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string GaussRat::str() const {
    if (im_ == 0) return rat_str(re_);
    std::ostringstream os;
    if (re_ == 0) {
        if (im_ == 1) return "i";
        if (im_ == -1) return "-i";
        return rat_str(im_) + "*i";
    }
    os << "(" << rat_str(re_);
    if (im_ > 0) os << "+" << (im_ == 1 ? "" : rat_str(im_) + "*") << "i";
    else os << "-" << (im_ == -1 ? "" : rat_str(-im_) + "*") << "i";
    os << ")";
    return os.str();
}

GaussRat GaussRat::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("GaussRat::parse: empty");
    if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    // split at the last top-level '+' or '-' (not the leading sign)
    size_t split = std::string::npos;
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == '+' || (t[i] == '-' && t[i - 1] != '/')) split = i;
    auto parse_part = [](const std::string& u) -> std::pair<mpq_class, bool> {
        // returns (value, is_imaginary)
        if (u == "i") return {mpq_class(1), true};
        if (u == "-i") return {mpq_class(-1), true};
        std::string w = u;
        if (!w.empty() && w.front() == '+') w = w.substr(1);
        if (!w.empty() && w.back() == 'i') {
            std::string v = w.substr(0, w.size() - 1);
            if (!v.empty() && v.back() == '*') v.pop_back();
            if (v.empty()) return {mpq_class(1), true};
            if (v == "-") return {mpq_class(-1), true};
            return {rat_parse(v), true};
        }
        return {rat_parse(w), false};
    };
    if (split == std::string::npos) {
        auto [v, imag] = parse_part(t);
        return imag ? GaussRat(mpq_class(0), v) : GaussRat(v);
    }
    std::string a = t.substr(0, split);
    std::string b = t.substr(split); // includes sign
    auto [va, ia] = parse_part(a);
    auto [vb, ib] = parse_part(b);
    if (ia == ib) throw std::invalid_argument("GaussRat::parse: bad form " + s);
    return ia ? GaussRat(vb, va) : GaussRat(va, vb);
}

std::string VarId::str() const {
    switch (kind) {
        case Kind::GZ: return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case Kind::Torus: return "x[" + std::to_string(a) + "]";
        case Kind::P: return "p[" + std::to_string(a) + "]";
        case Kind::Q: return "q";
        case Kind::Lambda: return "lam";
        case Kind::Sigma: return "sig[" + std::to_string(a) + "]";
    }
    return "?";
}

std::string ParamSym::str() const {
    switch (kind) {
        case Kind::Nu: return "nu[" + std::to_string(idx) + "]";
        case Kind::H: return "h";
        case Kind::VS: return "vs";
    }
    return "?";
}

ParamScalar::ParamScalar(GaussRat c) {
    if (!c.is_zero()) terms_.emplace(ParamMonomial{}, std::move(c));
}

ParamScalar ParamScalar::sym(ParamSym s, int exp) {
    ParamScalar p;
    if (exp == 0) return ParamScalar(GaussRat(1));
    if (s.kind == ParamSym::Kind::Nu && exp < 0)
        throw std::invalid_argument("ParamScalar: negative nu exponent");
    if (s.kind == ParamSym::Kind::VS) exp = ((exp % 2) + 2) % 2;
    if (s.kind == ParamSym::Kind::VS && exp == 0) return ParamScalar(GaussRat(1));
    ParamMonomial m;
    m.factors.push_back({s, exp});
    p.terms_.emplace(std::move(m), GaussRat(1));
    return p;
}

ParamScalar ParamScalar::mu(int n, int N) {
    // rho_n = n - (N+1)/2
    ParamScalar r = nu(n);
    r += ParamScalar(GaussRat(mpq_class(-(2 * n - (N + 1)), 2)));
    return r;
}

bool ParamScalar::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

GaussRat ParamScalar::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw std::logic_error("ParamScalar: not constant");
    return terms_.begin()->second;
}

void ParamScalar::add_term(ParamMonomial m, GaussRat c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {
ParamMonomial mono_mul(const ParamMonomial& x, const ParamMonomial& y) {
    ParamMonomial r;
    auto ix = x.factors.begin(), iy = y.factors.begin();
    while (ix != x.factors.end() || iy != y.factors.end()) {
        if (iy == y.factors.end() || (ix != x.factors.end() && ix->first < iy->first)) {
            r.factors.push_back(*ix++);
        } else if (ix == x.factors.end() || iy->first < ix->first) {
            r.factors.push_back(*iy++);
        } else {
            int e = ix->second + iy->second;
            if (ix->first.kind == ParamSym::Kind::VS) e = ((e % 2) + 2) % 2;
            if (e != 0) r.factors.push_back({ix->first, e});
            ++ix; ++iy;
        }
    }
    return r;
}
} // namespace

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
    ParamScalar r;
    for (const auto& [mx, cx] : terms_)
        for (const auto& [my, cy] : o.terms_)
            r.add_term(mono_mul(mx, my), cx * cy);
    terms_ = std::move(r.terms_);
    return *this;
}

std::strong_ordering ParamScalar::operator<=>(const ParamScalar& o) const {
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first <=> j->first;
        int c = cmp3(i->second, j->second);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i != terms_.end()) return std::strong_ordering::greater;
    if (j != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

ParamScalar ParamScalar::subst_vs(int sign) const {
    ParamScalar r;
    for (const auto& [m, c] : terms_) {
        ParamMonomial m2;
        GaussRat c2 = c;
        for (const auto& [s, e] : m.factors) {
            if (s.kind == ParamSym::Kind::VS) {
                if (sign < 0 && (e % 2)) c2 = -c2;
            } else {
                m2.factors.push_back({s, e});
            }
        }
        r.add_term(std::move(m2), std::move(c2));
    }
    return r;
}

std::complex<double> ParamScalar::eval(const std::vector<double>& lambda, double hbar,
                                       int vs_sign) const {
    std::complex<double> tot = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(c.re_double(), c.im_double());
        for (const auto& [s, e] : m.factors) {
            switch (s.kind) {
                case ParamSym::Kind::Nu: {
                    if (s.idx < 1 || static_cast<size_t>(s.idx) > lambda.size())
                        throw std::invalid_argument("ParamScalar::eval: nu index out of range");
                    std::complex<double> v(0.0, lambda[s.idx - 1]);
                    for (int k = 0; k < e; ++k) t *= v;
                    break;
                }
                case ParamSym::Kind::H:
                    t *= std::pow(1.0 / hbar, e);
                    break;
                case ParamSym::Kind::VS:
                    if (vs_sign < 0 && (e % 2)) t = -t;
                    break;
            }
        }
        tot += t;
    }
    return tot;
}

std::string ParamScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_syms = !m.factors.empty();
        if (!has_syms) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            bool f2 = true;
            for (const auto& [s, e] : m.factors) {
                if (!f2) os << "*";
                f2 = false;
                os << s.str();
                if (e != 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

} // namespace grtoda

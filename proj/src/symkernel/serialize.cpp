#include "grtoda/serialize.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

namespace grtoda {

std::string to_text(const ExpPoly& p) { return p.str(); }
std::string to_text(const DiffOperator& d) { return d.str(); }

namespace {

struct Lexer {
    std::string s;
    size_t pos = 0;

    explicit Lexer(std::string in) : s(std::move(in)) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() { skip(); return pos >= s.size(); }
    char peek() { skip(); return pos < s.size() ? s[pos] : '\0'; }
    bool accept(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("parse error: expected '" + std::string(1, c) +
                                        "' at offset " + std::to_string(pos) + " in: " + s);
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s.compare(pos, w.size(), w) == 0) {
            // do not swallow identifier prefixes ("h" of "hx" etc. cannot occur here)
            pos += w.size();
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("parse error: integer expected at " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
    mpq_class rational() {
        long n = integer();
        mpq_class q(n);
        if (accept('/')) {
            long d = integer();
            q = mpq_class(n, d);
            q.canonicalize();
        }
        return q;
    }
    bool rational_ahead() {
        skip();
        return pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])));
    }
};

VarId parse_var(Lexer& lx) {
    if (lx.accept_word("x[")) {
        long a = lx.integer();
        if (lx.accept(',')) {
            long b = lx.integer();
            lx.expect(']');
            return VarId::gz(static_cast<int>(a), static_cast<int>(b));
        }
        lx.expect(']');
        return VarId::tor(static_cast<int>(a));
    }
    if (lx.accept_word("p[")) {
        long a = lx.integer();
        lx.expect(']');
        return VarId::p(static_cast<int>(a));
    }
    if (lx.accept_word("sig[")) {
        long a = lx.integer();
        lx.expect(']');
        return VarId::sigma(static_cast<int>(a));
    }
    if (lx.accept_word("lam")) return VarId::lambda();
    if (lx.accept_word("q")) return VarId::q();
    throw std::invalid_argument("parse error: variable expected at " + std::to_string(lx.pos));
}

bool var_ahead(Lexer& lx) {
    lx.skip();
    const std::string& s = lx.s;
    size_t p = lx.pos;
    return s.compare(p, 2, "x[") == 0 || s.compare(p, 2, "p[") == 0 ||
           s.compare(p, 4, "sig[") == 0 || s.compare(p, 3, "lam") == 0 ||
           (p < s.size() && s[p] == 'q');
}

bool param_ahead(Lexer& lx) {
    lx.skip();
    const std::string& s = lx.s;
    size_t p = lx.pos;
    return s.compare(p, 3, "nu[") == 0 || s.compare(p, 2, "vs") == 0 ||
           (p < s.size() && s[p] == 'h');
}

ParamSym parse_param(Lexer& lx) {
    if (lx.accept_word("nu[")) {
        long k = lx.integer();
        lx.expect(']');
        return ParamSym::nu(static_cast<int>(k));
    }
    if (lx.accept_word("vs")) return ParamSym::vs();
    if (lx.accept_word("h")) return ParamSym::h();
    throw std::invalid_argument("parse error: parameter symbol expected");
}

// affine form inside exp(): rational and rational*nu[k] terms
ExpExponent parse_affine(Lexer& lx) {
    ExpExponent e;
    bool neg = lx.accept('-');
    if (!neg) lx.accept('+');
    for (;;) {
        mpq_class c(1);
        bool have_c = false;
        if (lx.rational_ahead()) { c = lx.rational(); have_c = true; }
        if (neg) c = -c;
        if ((have_c && lx.accept('*')) || !have_c) {
            if (lx.accept_word("nu[")) {
                long k = lx.integer();
                lx.expect(']');
                ExpExponent t = ExpExponent::nu_term(static_cast<int>(k), c);
                e += t;
            } else if (!have_c) {
                throw std::invalid_argument("parse error in affine exponent");
            } else {
                e += ExpExponent(c); // consumed '*', but next is a var: caller handles
                throw std::invalid_argument("parse error in affine exponent: unexpected '*'");
            }
        } else {
            e += ExpExponent(c);
        }
        if (lx.accept('+')) neg = false;
        else if (lx.accept('-')) neg = true;
        else break;
    }
    return e;
}

// one additive term inside exp(...): [rational '*']var | '(' affine ')*'var | ['-']var
void parse_exp_entry(Lexer& lx, bool negated, std::map<VarId, ExpExponent>& acc) {
    ExpExponent coeff(1);
    if (lx.peek() == '(') {
        lx.expect('(');
        coeff = parse_affine(lx);
        lx.expect(')');
        lx.expect('*');
    } else if (lx.rational_ahead()) {
        coeff = ExpExponent(lx.rational());
        lx.expect('*');
    }
    if (negated) coeff = -coeff;
    VarId v = parse_var(lx);
    auto it = acc.find(v);
    if (it == acc.end()) acc.emplace(v, coeff);
    else it->second += coeff;
}

GaussRat parse_gauss(Lexer& lx) {
    if (lx.accept('(')) {
        mpq_class re = lx.rational();
        mpq_class im(0);
        bool plus = false, minus = false;
        if (lx.accept('+')) plus = true;
        else if (lx.accept('-')) minus = true;
        if (plus || minus) {
            mpq_class a(1);
            if (lx.rational_ahead()) {
                a = lx.rational();
                lx.expect('*');
            }
            lx.expect('i');
            im = minus ? mpq_class(-a) : a;
        }
        lx.expect(')');
        return GaussRat(re, im);
    }
    if (lx.accept('i')) return GaussRat::i();
    mpq_class re = lx.rational();
    size_t save = lx.pos;
    if (lx.accept('*')) {
        if (lx.accept('i')) return GaussRat(mpq_class(0), re);
        lx.pos = save;
    }
    return GaussRat(re);
}

bool gauss_ahead(Lexer& lx) {
    lx.skip();
    if (lx.pos >= lx.s.size()) return false;
    char c = lx.s[lx.pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') return true;
    if (c == '(') {
        // '(' starts a GaussRat only if followed by a digit or sign-digit
        size_t p = lx.pos + 1;
        while (p < lx.s.size() && std::isspace(static_cast<unsigned char>(lx.s[p]))) ++p;
        if (p < lx.s.size() && (lx.s[p] == '-' || std::isdigit(static_cast<unsigned char>(lx.s[p]))))
            return true;
    }
    return false;
}

// a multiplicative term of an ExpPoly
void parse_term(Lexer& lx, bool negated, ExpPoly& out) {
    while (lx.accept('-')) negated = !negated;
    GaussRat g(1);
    ParamScalar coeff(1);
    MonoKey key;
    std::map<VarId, ExpExponent> exps;
    bool any = false;
    for (;;) {
        if (lx.accept_word("exp(")) {
            bool neg2 = lx.accept('-');
            parse_exp_entry(lx, neg2, exps);
            while (!lx.accept(')')) {
                if (lx.accept('+')) parse_exp_entry(lx, false, exps);
                else if (lx.accept('-')) parse_exp_entry(lx, true, exps);
                else throw std::invalid_argument("parse error inside exp()");
            }
        } else if (param_ahead(lx)) {
            ParamSym s = parse_param(lx);
            int e = 1;
            if (lx.accept('^')) e = static_cast<int>(lx.integer());
            coeff *= ParamScalar::sym(s, e);
        } else if (var_ahead(lx)) {
            VarId v = parse_var(lx);
            int e = 1;
            if (lx.accept('^')) e = static_cast<int>(lx.integer());
            key.powers.push_back({v, e});
        } else if (lx.peek() == '(' && gauss_ahead(lx)) {
            // parenthesized Gaussian rational, with rollback to a scalar
            // group if the tail does not match "(re +/- im*i)"
            size_t save = lx.pos;
            bool ok = true;
            GaussRat gg(0);
            try { gg = parse_gauss(lx); } catch (const std::invalid_argument&) { ok = false; }
            if (ok) { g *= gg; any = true; if (!lx.accept('*')) break; continue; }
            lx.pos = save;
            lx.expect('(');
            bool neg2 = lx.accept('-');
            ParamScalar acc;
            for (;;) {
                while (lx.accept('-')) neg2 = !neg2;
                ParamScalar t(GaussRat(1));
                bool anyf = false;
                for (;;) {
                    if (gauss_ahead(lx)) { t *= ParamScalar(parse_gauss(lx)); anyf = true; }
                    else if (param_ahead(lx)) {
                        ParamSym s = parse_param(lx);
                        int e = 1;
                        if (lx.accept('^')) e = static_cast<int>(lx.integer());
                        t *= ParamScalar::sym(s, e);
                        anyf = true;
                    } else break;
                    if (!lx.accept('*')) break;
                }
                if (!anyf) throw std::invalid_argument("parse error in scalar group");
                if (neg2) t *= ParamScalar(GaussRat(-1));
                acc += t;
                if (lx.accept('+')) neg2 = false;
                else if (lx.accept('-')) neg2 = true;
                else break;
            }
            lx.expect(')');
            coeff *= acc;
        } else if (lx.peek() == '(') {
            lx.expect('(');
            bool neg2 = lx.accept('-');
            ParamScalar acc;
            for (;;) {
                while (lx.accept('-')) neg2 = !neg2;
                ParamScalar t(GaussRat(1));
                bool anyf = false;
                for (;;) {
                    if (gauss_ahead(lx)) { t *= ParamScalar(parse_gauss(lx)); anyf = true; }
                    else if (param_ahead(lx)) {
                        ParamSym s = parse_param(lx);
                        int e = 1;
                        if (lx.accept('^')) e = static_cast<int>(lx.integer());
                        t *= ParamScalar::sym(s, e);
                        anyf = true;
                    } else break;
                    if (!lx.accept('*')) break;
                }
                if (!anyf) throw std::invalid_argument("parse error in scalar group");
                if (neg2) t *= ParamScalar(GaussRat(-1));
                acc += t;
                if (lx.accept('+')) neg2 = false;
                else if (lx.accept('-')) neg2 = true;
                else break;
            }
            lx.expect(')');
            coeff *= acc;
        } else if (gauss_ahead(lx)) {
            g *= parse_gauss(lx);
        } else {
            if (!any) throw std::invalid_argument("parse error: empty term at " + std::to_string(lx.pos));
            break;
        }
        any = true;
        if (!lx.accept('*')) break;
    }
    std::sort(key.powers.begin(), key.powers.end());
    for (auto& [v, e] : exps)
        if (!e.is_zero()) key.exps.push_back({v, e});
    ParamScalar full = coeff * ParamScalar(negated ? -g : g);
    out.add_term(std::move(key), std::move(full));
}

ExpPoly parse_poly(Lexer& lx) {
    ExpPoly out;
    bool neg = lx.accept('-');
    parse_term(lx, neg, out);
    for (;;) {
        if (lx.accept('+')) parse_term(lx, false, out);
        else if (lx.accept('-')) parse_term(lx, true, out);
        else break;
    }
    return out;
}

} // namespace

ExpPoly parse_exppoly(const std::string& s) {
    Lexer lx(s);
    if (lx.eof()) return ExpPoly();
    if (lx.peek() == '0' && s.find_first_not_of(" 0") == std::string::npos) return ExpPoly();
    ExpPoly p = parse_poly(lx);
    if (!lx.eof()) throw std::invalid_argument("parse error: trailing input in: " + s);
    return p;
}

DiffOperator parse_diffop(const std::string& s) {
    Lexer lx(s);
    DiffOperator out;
    if (lx.eof()) return out;
    if (lx.peek() == '0' && s.find_first_not_of(" 0") == std::string::npos) return out;
    bool neg = lx.accept('-');
    for (;;) {
        lx.expect('(');
        ExpPoly c = parse_poly(lx);
        lx.expect(')');
        if (neg) c = -c;
        DerivKey k;
        while (lx.accept('*')) {
            if (!lx.accept_word("D[")) throw std::invalid_argument("parse error: D[...] expected");
            VarId v = parse_var(lx);
            lx.expect(']');
            int e = 1;
            if (lx.accept('^')) e = static_cast<int>(lx.integer());
            k.push_back({v, e});
        }
        std::sort(k.begin(), k.end());
        out.add_term(std::move(k), std::move(c));
        if (lx.accept('+')) neg = false;
        else if (lx.accept('-')) neg = true;
        else break;
    }
    if (!lx.eof()) throw std::invalid_argument("parse error: trailing input in: " + s);
    return out;
}

nlohmann::json to_json(const GaussRat& c) {
    return nlohmann::json{{"re", rat_str(c.re())}, {"im", rat_str(c.im())}};
}

nlohmann::json to_json(const ParamScalar& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::json syms = nlohmann::json::array();
        for (const auto& [sym, e] : m.factors)
            syms.push_back({{"sym", sym.str()}, {"exp", e}});
        terms.push_back({{"coeff", to_json(c)}, {"syms", syms}});
    }
    return nlohmann::json{{"terms", terms}};
}

nlohmann::json to_json(const VarId& v) { return v.str(); }

nlohmann::json to_json(const ExpPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) {
        nlohmann::json powers = nlohmann::json::array();
        for (const auto& [v, e] : k.powers) powers.push_back({{"var", v.str()}, {"exp", e}});
        nlohmann::json exps = nlohmann::json::array();
        for (const auto& [v, e] : k.exps) exps.push_back({{"var", v.str()}, {"coeff", e.str()}});
        terms.push_back({{"coeff", to_json(c)}, {"powers", powers}, {"exps", exps}});
    }
    return nlohmann::json{{"text", to_text(p)}, {"terms", terms}};
}

nlohmann::json to_json(const DiffOperator& d) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : d.terms()) {
        nlohmann::json derivs = nlohmann::json::array();
        for (const auto& [v, e] : k) derivs.push_back({{"var", v.str()}, {"deg", e}});
        terms.push_back({{"coeff", to_json(c)}, {"derivs", derivs}});
    }
    return nlohmann::json{{"text", to_text(d)}, {"order", d.order()}, {"terms", terms}};
}

} // namespace grtoda

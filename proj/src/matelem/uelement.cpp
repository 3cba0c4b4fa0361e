#include "grtoda/uelement.hpp"

#include <sstream>

namespace grtoda {

UElement::UElement(ExpPoly c) {
    if (!c.is_zero()) terms_.emplace(UWord{}, std::move(c));
}

UElement UElement::generator(int a, int b) {
    UElement u;
    u.terms_.emplace(UWord{{a, b}}, ExpPoly(1));
    return u;
}

UElement UElement::word(UWord w, ExpPoly c) {
    UElement u;
    u.add_term(std::move(w), std::move(c));
    return u;
}

int UElement::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
}

void UElement::add_term(UWord w, ExpPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) terms_.emplace(std::move(w), std::move(c));
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

UElement UElement::operator-() const {
    UElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

UElement UElement::operator*(const UElement& o) const {
    UElement r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            UWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(std::move(w), ca * cb);
        }
    return r;
}

UElement UElement::normalize(int N) const {
    (void)N;
    UElement out;
    std::vector<std::pair<ExpPoly, UWord>> stack;
    for (const auto& [w, c] : terms_) stack.push_back({c, w});
    while (!stack.empty()) {
        auto [c, w] = std::move(stack.back());
        stack.pop_back();
        size_t pos = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) { pos = i; break; }
        if (pos == w.size()) {
            out.add_term(std::move(w), std::move(c));
            continue;
        }
        auto [a, b] = w[pos];
        auto [cc, d] = w[pos + 1];
        UWord swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        stack.push_back({c, std::move(swapped)});
        // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
        if (b == cc) {
            UWord v(w.begin(), w.begin() + pos);
            v.push_back({a, d});
            v.insert(v.end(), w.begin() + pos + 2, w.end());
            stack.push_back({c, std::move(v)});
        }
        if (d == a) {
            UWord v(w.begin(), w.begin() + pos);
            v.push_back({cc, b});
            v.insert(v.end(), w.begin() + pos + 2, w.end());
            stack.push_back({-c, std::move(v)});
        }
    }
    return out;
}

UElement UElement::commutator_with(const UElement& o, int N) const {
    return ((*this * o) - (o * *this)).normalize(N);
}

std::string UElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [a, b] : w) os << "*E[" << a << "," << b << "]";
    }
    return os.str();
}

UElement casimir1(int N) {
    UElement u;
    for (int i = 1; i <= N; ++i) u += UElement::generator(i, i);
    return u;
}

UElement casimir2(int N) {
    auto rho = [N](int i) { return mpq_class(N + 1 - 2 * i, 2); };
    UElement u;
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            u += UElement::word({{i, i}, {j, j}});
            u -= UElement::word({{j, i}, {i, j}});
            u += UElement(ExpPoly(ParamScalar::rational(rho(i) * rho(j))));
        }
        u -= UElement::word({{i, i}}, ExpPoly(ParamScalar::rational(rho(i))));
    }
    return u;
}

} // namespace grtoda

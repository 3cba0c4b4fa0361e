#pragma once

#include <vector>

#include "grtoda/exppoly.hpp"

namespace grtoda {

// Word in the abstract generators E_{ij}.
using UWord = std::vector<std::pair<int, int>>;

// Formal associative polynomial in the E_{ij} with ExpPoly coefficients.
// normalize() rewrites every word into the PBW basis of weakly increasing
// words under the lexicographic symbol order, using the gl_N relations.
class UElement {
public:
    UElement() = default;
    explicit UElement(ExpPoly c);

    static UElement generator(int a, int b);
    static UElement word(UWord w, ExpPoly c = ExpPoly(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<UWord, ExpPoly>& terms() const { return terms_; }
    int degree() const;

    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement operator-() const;
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    UElement operator*(const UElement& o) const; // concatenation, no rewriting
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }

    // PBW normal form for a given N (the gl_N commutation relations)
    UElement normalize(int N) const;
    UElement commutator_with(const UElement& o, int N) const; // [this, o] normalized

    void add_term(UWord w, ExpPoly c);

    std::string str() const;

private:
    std::map<UWord, ExpPoly> terms_;
};

// Casimir elements of U(gl_N); the quadratic one uses rho_i = (N+1-2i)/2
// exactly as printed (the opposite sign convention from the spectral
// parameters; both conventions are surfaced in the conformance report).
UElement casimir1(int N);
UElement casimir2(int N);

} // namespace grtoda

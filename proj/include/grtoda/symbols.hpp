#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace grtoda {

// A variable of the exponential-polynomial ring. Kinds:
//   gz(n,i)   Gelfand-Zetlin vertex coordinate x_{n,i}
//   tor(k)    torus coordinate x_k
//   pp(k)     Lax symbol p_k
//   qq        quantum parameter q
//   ll        spectral variable lambda of characteristic polynomials
//   sig(k)    Chern generator sigma_k of the quantum cohomology ring
struct VarId {
    enum class Kind : std::uint8_t { GZ = 0, Torus = 1, P = 2, Q = 3, Lambda = 4, Sigma = 5 };
    Kind kind{Kind::GZ};
    std::int16_t a{0};
    std::int16_t b{0};

    static VarId gz(int n, int i) {
        if (n < 1 || i < 1 || i > n) throw std::invalid_argument("VarId::gz: bad vertex");
        return {Kind::GZ, static_cast<std::int16_t>(n), static_cast<std::int16_t>(i)};
    }
    static VarId tor(int k) {
        if (k < 1) throw std::invalid_argument("VarId::tor: bad index");
        return {Kind::Torus, static_cast<std::int16_t>(k), 0};
    }
    static VarId p(int k) { return {Kind::P, static_cast<std::int16_t>(k), 0}; }
    static VarId q() { return {Kind::Q, 0, 0}; }
    static VarId lambda() { return {Kind::Lambda, 0, 0}; }
    static VarId sigma(int k) { return {Kind::Sigma, static_cast<std::int16_t>(k), 0}; }

    auto operator<=>(const VarId&) const = default;

    std::string str() const;
};

// Parameter symbols of the coefficient ring: nu_k (for i*lambda_k), h (for
// hbar^{-1}, Laurent), vs (the sign varsigma, vs^2 = 1).
struct ParamSym {
    enum class Kind : std::uint8_t { Nu = 0, H = 1, VS = 2 };
    Kind kind{Kind::H};
    std::int16_t idx{0};

    static ParamSym nu(int k) {
        if (k < 1) throw std::invalid_argument("ParamSym::nu: bad index");
        return {Kind::Nu, static_cast<std::int16_t>(k)};
    }
    static ParamSym h() { return {Kind::H, 0}; }
    static ParamSym vs() { return {Kind::VS, 0}; }

    auto operator<=>(const ParamSym&) const = default;

    std::string str() const;
};

} // namespace grtoda

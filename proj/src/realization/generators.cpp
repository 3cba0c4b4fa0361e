#include "grtoda/realization.hpp"

#include <sstream>

namespace grtoda {

namespace {
bool vertex_ok(int N, int r, int c) { return 1 <= c && c <= r && r <= N; }

// exp(x_{r1,c1} - x_{r2,c2}) with x_{N,*} = 0
ExpPoly pair_exp(int N, int r1, int c1, int r2, int c2) {
    std::vector<std::pair<VarId, ExpExponent>> entries;
    if (r1 < N) entries.push_back({VarId::gz(r1, c1), ExpExponent(mpq_class(1))});
    if (r2 < N) entries.push_back({VarId::gz(r2, c2), ExpExponent(mpq_class(-1))});
    return ExpPoly::exp_linear(entries);
}

// derivative slot, dropped when the vertex does not exist (or row N)
void add_deriv(DiffOperator& op, const ExpPoly& coeff, int N, int r, int c, int sign) {
    if (r >= N || c < 1 || c > r) return;
    ExpPoly co = coeff;
    if (sign < 0) co = -co;
    op += DiffOperator::term(std::move(co), {{VarId::gz(r, c), 1}});
}
} // namespace

DiffOperator GeneratorTable::chevalley_diag(int N, int i) {
    DiffOperator op(ExpPoly(ParamScalar::mu(i, N)));
    for (int k = 1; k <= i - 1; ++k) add_deriv(op, ExpPoly(1), N, N + k - i, k, -1);
    for (int k = i; k <= N - 1; ++k) add_deriv(op, ExpPoly(1), N, k, i, +1);
    return op;
}

DiffOperator GeneratorTable::chevalley_raise(int N, int i) {
    // E_{i,i+1} = -sum_{n=1}^{i} e^{x_{N-1-i+n,n} - x_{N-i+n,n}}
    //             sum_{k=1}^{n} { d_{N-1-i+k,k} - d_{N-1-i+k,k-1} }
    DiffOperator op;
    for (int n = 1; n <= i; ++n) {
        ExpPoly coeff = -pair_exp(N, N - 1 - i + n, n, N - i + n, n);
        for (int k = 1; k <= n; ++k) {
            add_deriv(op, coeff, N, N - 1 - i + k, k, +1);
            add_deriv(op, coeff, N, N - 1 - i + k, k - 1, -1);
        }
    }
    return op;
}

DiffOperator GeneratorTable::chevalley_lower(int N, int i) {
    // E_{i+1,i} = sum_{n=1}^{N-i} e^{x_{n+i,i+1} - x_{n+i-1,i}}
    //             [ mu_i - mu_{i+1} + sum_{k=1}^{n} { d_{i+k-1,i} - d_{i+k-1,i+1} } ]
    DiffOperator op;
    ParamScalar mudiff = ParamScalar::mu(i, N) - ParamScalar::mu(i + 1, N);
    for (int n = 1; n <= N - i; ++n) {
        ExpPoly coeff = pair_exp(N, n + i, i + 1, n + i - 1, i);
        op += DiffOperator(coeff * mudiff);
        for (int k = 1; k <= n; ++k) {
            add_deriv(op, coeff, N, i + k - 1, i, +1);
            add_deriv(op, coeff, N, i + k - 1, i + 1, -1);
        }
    }
    return op;
}

GeneratorTable::GeneratorTable(int N) : N_(N) {
    if (N < 2) throw std::invalid_argument("GeneratorTable: N >= 2 required");
}

const DiffOperator& GeneratorTable::get(int a, int b) const {
    auto it = table_.find({a, b});
    if (it != table_.end()) return it->second;
    DiffOperator op;
    if (a == b) op = chevalley_diag(N_, a);
    else if (b == a + 1) op = chevalley_raise(N_, a);
    else if (a == b + 1) op = chevalley_lower(N_, b);
    else if (a < b) op = commutator(get(a, b - 1), get(b - 1, b));
    else op = commutator(get(a, b + 1), get(b + 1, b));
    return table_.emplace(std::make_pair(a, b), std::move(op)).first->second;
}

const DiffOperator& GeneratorTable::E(int a, int b) const {
    if (a < 1 || a > N_ || b < 1 || b > N_)
        throw std::invalid_argument("GeneratorTable::E: index out of range");
    return get(a, b);
}

DiffOperator GeneratorTable::D_op(int N, int n, int j) {
    // D_{n,j} = d_{n+1-j,1} + sum_{i=1}^{j-1} ( d_{n+1+i-j,i+1} - d_{n+1+i-j,i} )
    DiffOperator op;
    add_deriv(op, ExpPoly(1), N, n + 1 - j, 1, +1);
    for (int i = 1; i <= j - 1; ++i) {
        add_deriv(op, ExpPoly(1), N, n + 1 + i - j, i + 1, +1);
        add_deriv(op, ExpPoly(1), N, n + 1 + i - j, i, -1);
    }
    return op;
}

DiffOperator GeneratorTable::Dt_op(int N, int n, int j) {
    // Dt^mu_{n,j} = mu_j - mu_{j+1} + d_{j,j} + sum_{i=1}^{n-j} ( d_{i+j,j} - d_{i+j,j+1} )
    DiffOperator op(ExpPoly(ParamScalar::mu(j, N) - ParamScalar::mu(j + 1, N)));
    add_deriv(op, ExpPoly(1), N, j, j, +1);
    for (int i = 1; i <= n - j; ++i) {
        add_deriv(op, ExpPoly(1), N, i + j, j, +1);
        add_deriv(op, ExpPoly(1), N, i + j, j + 1, -1);
    }
    return op;
}

DiffOperator GeneratorTable::path_E_n1(int N, int n) {
    // E_{n,1} = sum_{c=1}^{n-1} (-1)^{c+1} sum_{a>=c} Pt^{n-1}_{a,c}(1) Dt^mu_{a,c}
    DiffOperator total;
    for (int c = 1; c <= n - 1; ++c) {
        int sgn = (c % 2 == 1) ? +1 : -1;
        for (int a = c; a <= N - 1; ++a) {
            ExpPoly w = path_Pt(N, n - 1, a, c, 1);
            if (w.is_zero()) continue;
            if (sgn < 0) w = -w;
            total += Dt_op(N, a, c).mul_coeff(w);
        }
    }
    return total;
}

DiffOperator GeneratorTable::path_E_nN(int N, int n) {
    // E_{n,N} = sum_{(a,c)} (-1)^{a-c+1} P^{N-n}_{a,c}(N-n) D_{a,c}
    DiffOperator total;
    for (int c = 1; c <= N - 1; ++c) {
        for (int a = c; a <= N - 1; ++a) {
            ExpPoly w = path_P(N, N - n, a, c, N - n);
            if (w.is_zero()) continue;
            if ((a - c) % 2 == 0) w = -w;
            total += D_op(N, a, c).mul_coeff(w);
        }
    }
    return total;
}

RelationReport verify_chevalley_relations(int N) {
    GeneratorTable g(N);
    RelationReport rep;
    auto idx = [](std::initializer_list<int> xs) {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (int x : xs) { if (!first) os << ","; os << x; first = false; }
        os << ")";
        return os.str();
    };
    std::vector<DiffOperator> H;
    for (int i = 1; i <= N - 1; ++i) H.push_back(g.E(i, i) - g.E(i + 1, i + 1));
    // [E_{i,i+1}, E_{j+1,j}] = delta_ij (E_ii - E_{i+1,i+1})
    for (int i = 1; i <= N - 1; ++i)
        for (int j = 1; j <= N - 1; ++j) {
            DiffOperator c = commutator(g.E(i, i + 1), g.E(j + 1, j));
            DiffOperator want = (i == j) ? H[i - 1] : DiffOperator();
            rep.instances.push_back(make_instance("chevalley-ef", idx({i, j}), c - want));
        }
    // Cartan relations
    for (int i = 1; i <= N - 1; ++i)
        for (int j = 1; j <= N - 1; ++j) {
            long a = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            DiffOperator w1 = g.E(j, j + 1); w1 *= ParamScalar(a);
            rep.instances.push_back(make_instance(
                "chevalley-cartan-e", idx({i, j}), commutator(H[i - 1], g.E(j, j + 1)) - w1));
            DiffOperator w2 = g.E(j + 1, j); w2 *= ParamScalar(-a);
            rep.instances.push_back(make_instance(
                "chevalley-cartan-f", idx({i, j}), commutator(H[i - 1], g.E(j + 1, j)) - w2));
            rep.instances.push_back(make_instance(
                "chevalley-hh", idx({i, j}), commutator(H[i - 1], H[j - 1])));
        }
    // Serre relations
    for (int i = 1; i <= N - 1; ++i)
        for (int j = 1; j <= N - 1; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) == 1) {
                rep.instances.push_back(make_instance(
                    "chevalley-serre-e", idx({i, j}),
                    commutator(g.E(i, i + 1), commutator(g.E(i, i + 1), g.E(j, j + 1)))));
                rep.instances.push_back(make_instance(
                    "chevalley-serre-f", idx({i, j}),
                    commutator(g.E(i + 1, i), commutator(g.E(i + 1, i), g.E(j + 1, j)))));
            } else {
                rep.instances.push_back(make_instance(
                    "chevalley-commute-e", idx({i, j}),
                    commutator(g.E(i, i + 1), g.E(j, j + 1))));
                rep.instances.push_back(make_instance(
                    "chevalley-commute-f", idx({i, j}),
                    commutator(g.E(i + 1, i), g.E(j + 1, j))));
            }
        }
    return rep;
}

} // namespace grtoda

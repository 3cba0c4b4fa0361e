#pragma once

#include "grtoda/diffop.hpp"
#include "grtoda/graphs.hpp"

#include <optional>

namespace grtoda {

// Arrow exponentials on the size-N Gelfand-Zetlin pattern with x_{N,i} = 0:
//   down  arrow (r,c) -> (r-1,c):   e^{x_{r-1,c} - x_{r,c}}   (valid if c <= r-1, r <= N)
//   diag  arrow (r,c) -> (r+1,c+1): e^{x_{r+1,c+1} - x_{r,c}} (valid if c <= r <= N-1)
std::optional<ExpPoly> down_arrow_exp(int N, int r, int c);
std::optional<ExpPoly> diag_arrow_exp(int N, int r, int c);

// Path-sum functions attached to GZ vertices. Index typos of the printed
// formulas are resolved to the reading below; the resolution is validated by
// the relation sweeps and by agreement with the commutator-built generators
// (see docs/conventions.md).
ExpPoly path_A(int N, int r, int n, int j);
ExpPoly path_B(int N, int n, int j, int k);
ExpPoly path_At(int N, int r, int n, int j);
ExpPoly path_Bt(int N, int n, int j, int k);
ExpPoly path_P(int N, int r, int n, int j, int k);
ExpPoly path_Pt(int N, int r, int n, int j, int k);

struct PathFamily {
    enum class Tag { A, B, Atilde, Btilde, P, Ptilde } tag;
    int n = 0, j = 0;
    int r = 0; // order (A-type and P-type)
    int k = 0; // line argument (B-type and P-type)
};

ExpPoly path_function(const PathFamily& fam, const GZGraph& graph);

struct RelationInstance {
    std::string relation_id;
    std::string indices;
    std::string residual_text; // empty on success, the residual verbatim otherwise
    bool ok() const { return residual_text.empty(); }
};

RelationInstance make_instance(std::string id, std::string indices, const ExpPoly& residual);
RelationInstance make_instance(std::string id, std::string indices, const DiffOperator& residual);

struct RelationReport {
    std::vector<RelationInstance> instances;
    bool all_ok() const {
        for (const auto& i : instances)
            if (!i.ok()) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& i : instances)
            if (!i.ok()) ++n;
        return n;
    }
};

RelationReport verify_path_relations(int N);
RelationReport verify_box_relations(int m, int N);

// sum of arrow exponentials over the Gr_{m,N} graph
ExpPoly phase_from_graph(int m, int N);
ExpPoly phase_from_graph(const GrGraph& g);

// product of arrow exponentials along the canonical source-to-sink path;
// equals e^{-x_{N,1}} (the quantum parameter q under x_1 <-> x_{N,1})
ExpPoly cycle_product(const GrGraph& g);

} // namespace grtoda

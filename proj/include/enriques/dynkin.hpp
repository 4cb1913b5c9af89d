#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "enriques/linalg.hpp"

namespace enriques {

enum class Family { A, D, E, AStar };

using IVec = std::vector<std::int64_t>;
using Permutation = std::vector<int>;

struct Edge {
    int a = 0;
    int b = 0;
    int mult = 1;
};

// Extended Dynkin diagram of a reducible genus-1 fibre.
//
// Canonical vertex order:
//   A~n   cycle 0..n, attached vertex 0
//   D~4   centre 0, leaves 1..4, attached 4
//   D~n   chain c_1..c_{n-3} as 0..n-4 (c_1 next to the attached leaf),
//         leaves at c_{n-3}: n-3, n-2; leaves at c_1: n-1 and attached n
//   E~6   centre 0, arms (1,2) (3,4) (5,6) inner->outer, attached 6
//   E~7   centre 0, short leaf 1, arms (2,3,4) (5,6,7), attached 7
//   E~8   centre 0, leaf 1, arm (2,3), arm (4..8), attached 8
//   A~*1  two vertices, one edge of multiplicity 2, attached 0
//   A~*2  triangle, attached 0
class DynkinDiagram {
public:
    DynkinDiagram(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int attached() const { return attached_; }
    const std::vector<Permutation>& automorphism_generators() const { return generators_; }

    std::string name() const;
    // Two curves of the fibre meet transversally (false only for A~*1).
    bool transversal() const { return family_ != Family::AStar || rank_ != 1; }
    // A/D/E: the excess cycle lemma applies.
    bool is_standard() const { return family_ != Family::AStar; }

    int multiplicity(int u, int v) const { return adj_[u][v]; }
    const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    IMatrix gram() const;
    // Inverse Gram of the diagram with the attached vertex removed.
    const RMatrix& finite_gram_inverse() const { return finite_inverse_; }
    // Kodaira-Neron cycle, computed once at construction.
    const IVec& fibre_cycle() const { return fibre_; }

    // Vertices in the order the paper's pictures list them.
    std::vector<int> display_order() const;

private:
    Family family_;
    int rank_;
    int attached_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<Permutation> generators_;
    RMatrix finite_inverse_;
    IVec fibre_;

    void add_edge(int a, int b, int mult = 1);
};

DynkinDiagram build_diagram(Family family, int rank);
// Accepts "A~3", "D~4", "E~8", "A~*1", "A~*2" (the "~" is optional).
DynkinDiagram parse_diagram(const std::string& name);

// All diagrams with at most max_vertices vertices, in a fixed order.
std::vector<DynkinDiagram> diagrams_up_to(int max_vertices);

IVec kodaira_neron_cycle(const DynkinDiagram& d);
// Integer per edge (index into d.edges()).
IVec excess_cycle(const DynkinDiagram& d);
IVec branch_vertex_cycle(const DynkinDiagram& d);
// The n of n*F = E - V: 2 for A~, 1 otherwise.
int excess_denominator(const DynkinDiagram& d);

std::int64_t pair(const IVec& a, const IVec& b, const DynkinDiagram& d);
Rational pair(const RVec& a, const RVec& b, const DynkinDiagram& d);

// Every automorphism, generated from the generator list; identity first.
std::vector<Permutation> automorphism_group(const DynkinDiagram& d);

nlohmann::json to_json(const DynkinDiagram& d);
DynkinDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace enriques

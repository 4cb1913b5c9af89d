#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "enriques/q444.hpp"

// Configurations of curves on exceptional Enriques surfaces, modelled inside
// Q'' by the q444 calculus, and the genus 1 fibration census built on them.
namespace enriques {

enum class SurfaceType { T6, T7, T8 };  // conductrix support T_{3,3,3}, T_{2,4,5}, T_{2,3,7}

std::string to_string(SurfaceType t);
SurfaceType parse_surface(const std::string& s);

struct SurfaceModel {
    SurfaceType type = SurfaceType::T6;
    int mw_rank = 0;                   // T6 only: 0, 1 or 2
    bool second_fibre_double = false;  // T7 only: the second reducible fibre is double
    std::vector<q444::Vec> extraneous_classes;
};

// Fills extraneous_classes from the MW-rank: rank 0 {e-f_i}, rank 1 {e+-f_1}, rank 2 none.
SurfaceModel make_surface(SurfaceType type, int mw_rank = 0, bool second_fibre_double = false);

std::optional<q444::Config> effective_flip(const SurfaceModel& s, const q444::Config& t, int arm);

struct FlipEdge {
    int from = 0;
    int arm = 0;
    int to = 0;
};

struct FlipGraph {
    std::vector<q444::Config> nodes;  // BFS order, node 0 is the standard configuration
    std::vector<int> depth;
    std::vector<FlipEdge> edges;      // from < to, one per undirected edge
    int radius = 0;
    int node_of(const q444::Config& t) const;  // -1 when absent
    int degree(int node) const;
};

FlipGraph build_flip_graph(const SurfaceModel& s, int radius);
std::string to_dot(const FlipGraph& g);

// Number of elements of length <= radius in the Coxeter group with three
// generators and all pairwise orders 3, computed in its Tits representation.
std::size_t coxeter_ball_size(int radius);

struct FibrationClass {
    q444::Vec half_fibre;        // half the Kodaira-Neron cycle of the E~7 sub-configuration
    std::vector<int> members;    // flip-graph nodes containing it, sorted
    bool interior = false;       // some member lies strictly inside the ball
};

struct Census {
    SurfaceModel surface;
    int radius = 0;
    int elliptic_count = 0;
    int quasi_elliptic_count = 0;          // for T6 the distinct classes inside the ball
    std::vector<FibrationClass> classes;   // T6 only, sorted by class
    FlipGraph graph;                       // T6 only
    bool multiplicities_ok = true;         // interior classes have 1 or 2 members
    bool extraneous_pairing_ok = true;     // extraneous classes pair 0 or 2 with end-vertices
};

Census fibration_census(const SurfaceModel& s, int radius);

struct CurveClass {
    q444::Vec vec;
    std::vector<int> members;
    bool interior = false;
};

struct Inventory {
    std::vector<CurveClass> curves;  // end-vertex classes, sorted
    int max_interior_membership = 0;
};

Inventory minus_two_curve_inventory(const SurfaceModel& s, int radius);

nlohmann::json to_json(const FlipGraph& g);
nlohmann::json to_json(const Census& c);
nlohmann::json to_json(const Inventory& inv);

}  // namespace enriques

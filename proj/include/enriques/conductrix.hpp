#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "enriques/weightings.hpp"

namespace enriques {

enum class FibrationKind { Elliptic, QuasiElliptic };

std::string to_string(FibrationKind k);
FibrationKind parse_kind(const std::string& s);

struct CurveInvariantRow {
    int r = 0;
    int s = 1;
    int AE = 0;
    int self_int = 0;
    int g = 0;
};

const std::vector<CurveInvariantRow>& invariant_table();

using Cusp = std::vector<std::pair<int, int>>;  // (vertex, attachment degree), sorted by vertex

struct ConductrixProfile {
    std::string diagram;
    FibrationKind kind = FibrationKind::Elliptic;
    int d = 0;  // fibre multiplicity for quasi-elliptic rows; 0 when not recorded
    IVec A_s;
    IVec self_int;
    Cusp cusp;
    Weighting weight;          // source weighting (not part of row identity)
    std::string family;        // golden rows standing for a whole family, e.g. "A~n"

    // Row identity: everything the paper displays.
    auto key() const { return std::tie(diagram, d, A_s, self_int, cusp); }
    friend bool operator<(const ConductrixProfile& a, const ConductrixProfile& b) { return a.key() < b.key(); }
    friend bool operator==(const ConductrixProfile& a, const ConductrixProfile& b) { return a.key() == b.key(); }
};

// Fibre weight forced by the kind and the fibre multiplicity.
std::int64_t expected_fibre_weight(FibrationKind kind, const DynkinDiagram& d, int fibre_mult);

struct MultiplicitySolution {
    IVec A_s;
    Cusp cusp;
};

std::vector<MultiplicitySolution> weight_to_multiplicities(const Weighting& w, const DynkinDiagram& d,
                                                           FibrationKind kind, int fibre_mult);

// Every self-intersection assignment compatible with the invariant table and
// the adjacency rules for transversal fibres.
std::vector<IVec> assign_self_intersections(const Weighting& w, const DynkinDiagram& d);

// Weight recomputed from a profile: (A_s, v) + cusp degree at v.
Weighting profile_weight(const ConductrixProfile& p, const DynkinDiagram& d);

ConductrixProfile canonicalize(ConductrixProfile p);

std::vector<ConductrixProfile> generate_table(FibrationKind kind, int max_components, std::int64_t lower = -6);

struct DiffReport {
    std::vector<ConductrixProfile> matched;
    std::vector<ConductrixProfile> missing;  // in golden, not generated
    std::vector<ConductrixProfile> extra;    // generated, not in golden
    bool empty() const { return missing.empty() && extra.empty(); }
};

DiffReport diff_against_golden(const std::vector<ConductrixProfile>& generated,
                               const std::vector<ConductrixProfile>& golden);

nlohmann::json to_json(const ConductrixProfile& p);
ConductrixProfile profile_from_json(const nlohmann::json& j);

struct GoldenTable {
    FibrationKind kind = FibrationKind::Elliptic;
    int max_components = 9;
    std::vector<ConductrixProfile> rows;
};

nlohmann::json to_json(const GoldenTable& t);
GoldenTable golden_from_json(const nlohmann::json& j);
GoldenTable load_golden(const std::string& path);
// $ENRIQUES_GOLDEN_DIR if set, else the data directory of the source tree.
std::string golden_directory();
std::string golden_path(FibrationKind kind);

// One line per row, vertices in the paper's picture order, cusp vertices in brackets.
std::string render_profile(const ConductrixProfile& p);

}  // namespace enriques

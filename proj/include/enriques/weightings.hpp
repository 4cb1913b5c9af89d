#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "enriques/dynkin.hpp"

namespace enriques {

using Weighting = IVec;

struct Representation {
    IVec u;           // reduced representing element
    IVec complement;  // w' = w - (., u), nonnegative
};

struct AdmissibilityCertificate {
    bool admissible = false;
    bool semi = false;  // A~*1: the edge-excess condition is not imposed
    std::int64_t fibre_weight = 0;
    std::optional<std::int64_t> excess;                      // absent for A~*1
    std::vector<std::pair<int, std::int64_t>> excessive_edges;  // (edge index, excess > 0)
    std::optional<Representation> representation;
    std::optional<int> failed_condition;  // 1..6
};

std::int64_t fibre_weight(const Weighting& w, const DynkinDiagram& d);
// Minus the value of w on the (multiplicity-weighted) root of edge `edge`.
std::int64_t edge_excess(const Weighting& w, int edge, const DynkinDiagram& d);
// Minus the value of w on the excess cycle. A~*2 uses the A~2 cycle; throws for A~*1.
std::int64_t total_excess(const Weighting& w, const DynkinDiagram& d);

// (v, u) for every vertex v.
IVec weight_of(const IVec& u, const DynkinDiagram& d);

// Reduced representative of u modulo F: nonnegative, not >= F.
IVec reduce_mod_fibre(IVec u, const DynkinDiagram& d);

// Every (u, w') with u reduced, w' = w - (., u) >= 0 and w'(F) = m. With
// `condition6`, u must vanish on the multiplicity-1 vertices of F.
std::vector<Representation> all_representations(const Weighting& w, const DynkinDiagram& d, std::int64_t m,
                                                bool condition6);
std::optional<Representation> find_representing_element(const Weighting& w, const DynkinDiagram& d, std::int64_t m);

AdmissibilityCertificate check_admissible(const Weighting& w, const DynkinDiagram& d);

struct AdmissibleWeight {
    Weighting w;
    AdmissibilityCertificate cert;
};

// Admissible weights with values in [lower, 1] and fibre weight m (all of 0,1,2
// when m is absent), lexicographic in canonical vertex order.
std::vector<AdmissibleWeight> enumerate_admissible(const DynkinDiagram& d, std::optional<std::int64_t> m,
                                                   std::int64_t lower = -6);

struct ClauseResult {
    std::string clause;
    bool pass = true;
    std::string detail;
};

struct ExcessReport {
    std::string diagram;
    std::size_t admissible = 0;
    std::size_t zero_excess_nonzero_m0 = 0;
    std::size_t zero_excess_m2 = 0;
    std::vector<ClauseResult> clauses;
    bool pass() const;
};

ExcessReport verify_excess_results(const DynkinDiagram& d, std::int64_t lower = -6);

std::string format_weight(const Weighting& w);
nlohmann::json to_json(const AdmissibilityCertificate& c, const DynkinDiagram& d);

}  // namespace enriques

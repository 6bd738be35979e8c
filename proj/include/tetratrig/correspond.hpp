#pragma once

#include <string>
#include <vector>

#include "tetratrig/tetra.hpp"

namespace tetratrig {

struct ChainLink {
    std::string name;
    cplx value;
    double residual = 0.0;  // against the character value
};

struct ChainReport {
    std::string recipe;
    LatticeVec root;
    cplx lhs, rhs;
    double residual = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|)
    std::vector<ChainLink> links;
    double concurrency = 0.0;  // scatter of the three pairwise intersections, when applicable
    std::vector<std::pair<std::string, double>> incidences;

    double worst() const;
};

double relative_residual(cplx a, cplx b);

// Face root ½(e23+e24+e34+e_∅) through the conic on H3 projected from E12.
ChainReport res_F1_face_recipe(const MarkedTetra& T);
// Root ½(e12+e13+e23+e_∅) through the conic on H4.
ChainReport res_F1_edge_recipe(const MarkedTetra& T);
// Root ½(e12+e13+e14+e_I): conic on H2, ruling R(E12), pencil about it, line (H2∨ H4∨).
ChainReport res_F2_vertex_recipe(const MarkedTetra& T);
// Root ½(e14+e24+e34+e_I), with the concurrency of (Ẽ41 Ẽ43), (H1∨ H3∨) and the plane ⟨U, R(E12)⟩.
ChainReport res_F2_face_recipe(const MarkedTetra& T);

std::vector<ChainReport> all_chains(const MarkedTetra& T);

// F2 recipes on T against F1 recipes on the dual tetrahedron.
double duality_residual(const MarkedTetra& T);

struct Thm14Report {
    std::vector<ChainReport> chains;
    double chain_residual = 0.0;    // worst link or end-to-end residual
    double pattern_residual = 0.0;  // recipes and edge values against lengths and oracle angles
    double worst() const { return std::max(chain_residual, pattern_residual); }
};

Thm14Report verify_thm14(const MetricSpec& spec);

}  // namespace tetratrig

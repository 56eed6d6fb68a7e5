#pragma once

#include "bpl/fibered.hpp"
#include "bpl/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bpl {

using MatL = Mat<Laurent>;

// Local-system variable indices inside Laurent.
enum LocalVar { kAlpha = 0, kBeta = 1, kAlphaP = 2, kBetaP = 3 };

struct CandidateDisc {
    Bigon bigon;
    long index = 0;
    std::string from, to;
};

// Maslov index of a candidate disc: one for the convex bigon plus the corner contribution of every
// configuration its boundary passes, counted -1 when traversed positively along the boundary.
long index_filter(const Bigon& b, const FiberedLagrangian& L, const FiberedLagrangian* Lp = nullptr);
// A lens between the two fiberwise perturbed circles over one dot.
long fiber_lens_index();

struct Generator {
    std::string id;
    int crossing = 0;
    int grading = 0;
    Point at;
};

struct FloerComplex {
    std::vector<Generator> generators;
    MatL differential;  // column j is d(generator j)
    std::optional<int> grading_modulus;  // nullopt for absolute gradings
};

bool differential_squares_to_zero(const FloerComplex& c);
int rank_over_function_field(const MatL& m);
MatL specialize(const MatL& m, int var, const Rat& coeff, int target);

struct SphereFloer {
    long rank = 0;
    long generators = 0;
    std::vector<CandidateDisc> certificate;
};

SphereFloer hf_with_sphere(const FiberedLagrangian& L, const MatchingPath& sphere);

struct Specialization {
    std::string name;
    Rat ratio;  // beta' = ratio * beta
    long rank = 0;
    long rank_direct = 0;
};

struct ToriFloer {
    int lambda = 0;
    int dots = 0, green = 0, blue = 0;
    FloerComplex complex;
    long rank_generic = 0;
    std::vector<Specialization> specializations;
    std::vector<CandidateDisc> certificate;
};

ToriFloer hf_tori(const FiberedLagrangian& L, const FiberedLagrangian& Lp, const std::vector<Rat>& ratios = {1, -1, 2});

struct RankRow {
    std::vector<int> params;
    std::vector<long> ranks;
};

struct RankTable {
    std::vector<std::string> param_names;
    std::vector<std::string> columns;
    std::vector<RankRow> rows;
    bool injective = true;
};

RankTable family_rank_table(const std::vector<std::array<int, 3>>& grid);
RankTable tori_rank_table(const std::vector<std::array<int, 4>>& grid, const std::vector<Rat>& ratios);
RankTable lambda_rank_table(const std::vector<std::vector<std::array<int, 3>>>& grid);

}  // namespace bpl

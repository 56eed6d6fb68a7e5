#pragma once

#include "bpl/planar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bpl {

enum class Label { a, b, c, d };
enum class TokenKind { BB, BC, CC, BD, CD, DD };

const char* label_name(Label l);
const char* kind_name(TokenKind k);
Label parse_label(const std::string& s);
TokenKind parse_kind(const std::string& s);

struct FiberCycleState {
    Label label = Label::b;
    int orientation = 1;

    friend bool operator==(const FiberCycleState& x, const FiberCycleState& y) {
        return x.label == y.label && x.orientation == y.orientation;
    }
};

bool disjoint(Label x, Label y);

struct ConfigToken {
    TokenKind kind = TokenKind::BB;
    int traversal = 1;

    friend bool operator==(const ConfigToken&, const ConfigToken&) = default;
};

// Transport conventions for configurations beyond BB, BC.
enum class TransportConvention {
    // BD, CD swap like BC; CC, DD reflect like BB.
    ChainPattern,
    // BD, CD additionally reverse orientation on the swapped pair.
    ChainPatternTwisted,
};

FiberCycleState transport(const FiberCycleState& s, const ConfigToken& t,
                          TransportConvention conv = TransportConvention::ChainPattern);

struct PlacedToken {
    ConfigToken token;
    LoopPos pos;
    std::string site;

    friend bool operator==(const PlacedToken&, const PlacedToken&) = default;
};

struct MatchingPath {
    std::string name;
    BaseLoop path;
    Label label = Label::a;
    int orientation = 1;

    friend bool operator==(const MatchingPath&, const MatchingPath&) = default;
};

struct SurgeryMark {
    int piece_a = 0, piece_b = 0;
    std::string matching;
    Point at;

    friend bool operator==(const SurgeryMark&, const SurgeryMark&) = default;
};

// Closed curve with corner tokens used for longitudes that leave a single piece.
struct Longitude {
    BaseLoop loop;
    std::vector<PlacedToken> corners;

    friend bool operator==(const Longitude&, const Longitude&) = default;
};

struct FiberedLagrangian {
    std::string id;
    std::string builder;
    std::map<std::string, int> params;
    BaseLoop loop;
    std::vector<PlacedToken> tokens;
    FiberCycleState initial;
    std::vector<MatchingPath> spheres;
    std::vector<FiberedLagrangian> summands;
    std::vector<SurgeryMark> surgery_marks;
    std::optional<Longitude> first_longitude;
    std::optional<std::vector<Rat>> area_assignment;
    std::optional<Rat> kappa;
    bool a3 = false;
    TransportConvention convention = TransportConvention::ChainPattern;

    friend bool operator==(const FiberedLagrangian&, const FiberedLagrangian&) = default;
};

struct Holonomy {
    std::vector<FiberCycleState> trace;
    bool closes = false;
    bool orientation_preserving = false;
};

Holonomy holonomy(const FiberedLagrangian& L);
FiberCycleState state_at(const FiberedLagrangian& L, const LoopPos& pos);

struct CrossingState {
    Crossing crossing;
    FiberCycleState first, second;
    bool parallel = false;
};

std::vector<CrossingState> crossing_states(const FiberedLagrangian& L);
std::vector<CrossingState> crossing_states(const FiberedLagrangian& L, const FiberedLagrangian& Lp);
// Throws an invalid-construction error naming the offending crossing.
void check_embedded(const FiberedLagrangian& L);
void check_a3(const FiberedLagrangian& L);

long maslov_longitude(const FiberedLagrangian& L);
long maslov_of(const Longitude& lon);
std::vector<long> maslov_vector(const FiberedLagrangian& L);

struct SurfaceType {
    bool orientable = true;
    int genus = 0;
    int crosscaps = 0;
    int euler = 0;
};

SurfaceType surface_type_from_euler(int euler, bool orientable);
SurfaceType orientability_and_type(const FiberedLagrangian& L);

long homology_pairing(const FiberedLagrangian& L, const MatchingPath& sphere);
const MatchingPath& sphere_named(const FiberedLagrangian& L, const std::string& name);

struct AreaAssignment {
    std::vector<Rat> areas;
    std::vector<int> depth;
    Rat signed_total;
    Rat target;
};

AreaAssignment solve_monotone_areas(const FiberedLagrangian& L, const Rat& kappa);

FiberedLagrangian polterovich_sum(const std::vector<FiberedLagrangian>& pieces, const std::vector<MatchingPath>& matchings,
                                  const std::vector<int>& ordering);

struct CapacityBound {
    int sites = 0;
    int naive = 0;
    std::optional<int> refined;
};

CapacityBound min_r(const FiberedLagrangian& L);

// Builders.
struct BuildOptions {
    // Extra or missing windings relative to 2k (left) and 2l (right) for Klein variants.
    int left_delta = 0;
    int right_delta = 0;
    bool a3 = false;
};

FiberedLagrangian build_T(int k, int l, int m, const BuildOptions& opts = {});
FiberedLagrangian build_R(int k, int l, int m, const BuildOptions& opts = {});
FiberedLagrangian build_S(int n, int p, int q, const BuildOptions& opts = {});
FiberedLagrangian build_klein_T(int k, int l, int m, int left_delta, int right_delta);

// T_{k,l,m} drawn alongside T_{k+lambda,l+lambda,m}: returns {L, Lp}.
std::pair<FiberedLagrangian, FiberedLagrangian> build_T_pair(int k, int l, int m, int lambda);

// R_{k,l,m} with the joining arc of S used as the overlay test arc.
struct LinkedPair {
    FiberedLagrangian R, S;
    MatchingPath joining_arc;
};
LinkedPair build_RS(int k, int l, int m, int n, int p, int q);

FiberedLagrangian build_Lambda(const std::vector<std::array<int, 3>>& params);
FiberedLagrangian build_zeta(int g, std::array<int, 3> t1, std::array<int, 3> t2);
FiberedLagrangian build_Xi(int g, const std::vector<std::array<int, 3>>& params);

BaseLoop offset_loop(const BaseLoop& loop, const Rat& delta);

}  // namespace bpl

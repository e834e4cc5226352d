#pragma once

#include <map>
#include <string>
#include <vector>

#include "conifold/sheaf.hpp"

namespace conifold {

// Bipartite graph on the 2-torus, encoded combinatorially by the rotation
// system (counterclockwise cyclic order of the incident edges at each node).
struct DimerModel {
    enum class Color { Black, White };
    struct Node {
        std::string id;
        Color color;
    };
    struct Edge {
        std::string id;
        std::string black;  // node ids
        std::string white;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::map<std::string, std::vector<std::string>> rotation;  // node id -> edge ids
};

struct DimerError : std::runtime_error {
    explicit DimerError(const std::string& w) : std::runtime_error(w) {}
};

// Faces traced from the rotation system; every dart is visited exactly once,
// so every edge appears on exactly two face sides.
struct DimerFaces {
    // each face is a cyclic list of (edge index, towardWhite flag)
    std::vector<std::vector<std::pair<int, bool>>> faces;
};
DimerFaces trace_faces(const DimerModel& d);

// Checks bipartiteness, connectivity and Euler characteristic 0.
void validate_dimer(const DimerModel& d);

struct Quiver {
    struct Arrow {
        std::string id;  // inherits the edge id
        int source;      // face index
        int target;
    };
    int vertexCount = 0;
    std::vector<Arrow> arrows;
    // relation p+(a) = p-(a) per arrow; words are stored in composition
    // order (the rightmost arrow acts first)
    struct Relation {
        std::string arrow;
        std::vector<std::string> plus;   // the path around the white node
        std::vector<std::string> minus;  // the path around the black node
    };
    std::vector<Relation> relations;
};

// Dual quiver with the orientation rule that the white node sits on the
// right of each arrow, plus the node-cycle relations.
Quiver dimer_to_quiver(const DimerModel& d);

// Cycles of arrows around each node in arrow-path order (first entry acts
// first); used for both relations and the cyclic A-infinity operations.
struct NodeCycles {
    std::vector<std::vector<std::string>> whiteCycles;
    std::vector<std::vector<std::string>> blackCycles;
};
NodeCycles node_cycles(const DimerModel& d);

// Word of conifold quiver arrows in composition order (rightmost first),
// evaluated through the sheaf-side closed form under
// x -> Q_{-1/2}, y -> Q_{+1/2}, t1 -> R_{-1/2}, t2 -> R_{+1/2}.
using PathWord = std::vector<std::string>;
SheafElement evaluate_path_word(const PathWord& word);

// The two-node four-edge dimer of the conifold.
DimerModel conifold_dimer();

std::string dimer_to_json(const DimerModel& d);
DimerModel dimer_from_json(const std::string& text);
std::string quiver_to_json(const Quiver& q);

}  // namespace conifold

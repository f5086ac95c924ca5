#pragma once
// Core domain types: cognitive maps, decision frames, and the projection of
// decision frames into simplicial families.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qmap {

enum class Role { EvokedAlternative, PerceivedConsequence, Plain };
enum class Sign { Positive, Negative, Unsigned };

struct Concept {
    std::string id;
    std::string label;
    Role role = Role::Plain;

    bool operator==(const Concept&) const = default;
};

struct CausalLink {
    std::string source;
    std::string target;
    Sign sign = Sign::Unsigned;

    bool operator==(const CausalLink&) const = default;
};

// Directed labeled graph of concepts and causal links. The empty map is
// legal. Structural invariants are checked by validate_map, not enforced at
// construction, so partially broken maps can be loaded and reported on.
struct CognitiveMap {
    std::string map_id;
    std::optional<std::string> period;
    std::vector<Concept> concepts;
    std::vector<CausalLink> links;
};

// Order-insensitive equality: concepts and links compare as sets.
bool operator==(const CognitiveMap& a, const CognitiveMap& b);

// Bipartite decision structure: evoked alternatives relate to perceived
// consequences. The two concept lists keep their given order; relations is a
// set of (alternative id, consequence id) pairs.
struct DecisionFrame {
    std::string frame_id;
    std::vector<Concept> alternatives;
    std::vector<Concept> consequences;
    std::set<std::pair<std::string, std::string>> relations;
};

bool operator==(const DecisionFrame& a, const DecisionFrame& b);

// A named vertex set. dimension() = |vertices| - 1.
struct Simplex {
    std::string name;
    std::set<std::string> vertices;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
};

// A set of uniquely named simplices, kept sorted by name.
struct SimplicialFamily {
    std::vector<Simplex> simplices;

    std::set<std::string> vertex_universe() const;
};

bool operator==(const SimplicialFamily& a, const SimplicialFamily& b);

struct Violation {
    std::string code;     // "self-loop", "dangling-endpoint", ...
    std::string where;    // offending id or id pair
    std::string message;
};

// Empty result means every invariant holds. Violations are data, not errors.
std::vector<Violation> validate_map(const CognitiveMap& map);
std::vector<Violation> validate_frame(const DecisionFrame& frame);

struct FamilyProjection {
    SimplicialFamily family;
    std::vector<std::string> warnings;
};

// One simplex per alternative that has at least one relation; its vertices
// are the consequence ids related to that alternative. Alternatives with no
// relations produce no simplex and are named in the warning channel.
FamilyProjection to_simplicial_family(const DecisionFrame& frame);

// Re-expresses a family as a frame: names become alternatives, vertices
// become consequences, membership becomes relations. Projecting the result
// back yields the original family.
DecisionFrame to_decision_frame(const SimplicialFamily& family,
                                const std::string& frame_id = "frame");

// The graph induced by a frame: concepts from both layers, one unsigned link
// per relation.
CognitiveMap to_cognitive_map(const DecisionFrame& frame);

std::string role_name(Role role);
std::string sign_name(Sign sign);

}  // namespace qmap

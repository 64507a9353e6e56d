#pragma once

#include <stdexcept>
#include <string>

namespace semedge {

// Error categories; the CLI maps these onto process exit codes
// (identifiability -> 2, input/validation -> 3, numerical -> 4).
enum class errc {
    // validation / input
    cycle_detected,
    unknown_vertex,
    vertex_not_in_subset,
    not_a_descendant,
    no_such_edge,
    edge_exists,
    would_create_cycle,
    duplicate_edge,
    label_mismatch,
    wrong_dimension,
    parse_error,
    bad_argument,
    // identifiability
    not_identifiable,
    no_plan_found,
    plan_invalid,
    // numerical
    not_positive_definite,
    singular_block,
    trek_explosion,
    too_few_rows,
    generation_failed,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::vertex_not_in_subset: return "VertexNotInSubset";
        case errc::not_a_descendant: return "NotADescendant";
        case errc::no_such_edge: return "NoSuchEdge";
        case errc::edge_exists: return "EdgeExists";
        case errc::would_create_cycle: return "WouldCreateCycle";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::label_mismatch: return "LabelMismatch";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::parse_error: return "ParseError";
        case errc::bad_argument: return "BadArgument";
        case errc::not_identifiable: return "NotIdentifiable";
        case errc::no_plan_found: return "NoPlanFound";
        case errc::plan_invalid: return "PlanInvalid";
        case errc::not_positive_definite: return "NotPositiveDefinite";
        case errc::singular_block: return "SingularConditioningBlock";
        case errc::trek_explosion: return "TrekExplosion";
        case errc::too_few_rows: return "TooFewRows";
        case errc::generation_failed: return "GenerationFailed";
    }
    return "Error";
}

// CLI exit-code contract: 0 success, 2 identifiability, 3 input, 4 numerical.
inline int exit_code_of(errc c) {
    switch (c) {
        case errc::not_identifiable:
        case errc::no_plan_found:
        case errc::plan_invalid:
            return 2;
        case errc::not_positive_definite:
        case errc::singular_block:
        case errc::trek_explosion:
        case errc::too_few_rows:
        case errc::generation_failed:
            return 4;
        default:
            return 3;
    }
}

}  // namespace semedge

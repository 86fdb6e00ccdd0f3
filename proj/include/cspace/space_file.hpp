#pragma once

#include <string>
#include <vector>

#include "cspace/concept.hpp"

namespace cspace {

/// A named registry of concepts over one domain structure, as described by
/// a UTF-8 JSON space file:
///
/// {"version": 1,
///  "domains": [{"name": "color", "dimensions": ["hue"]}, ...],
///  "concepts": [{"name": "apple", "domains": ["color", ...],
///                "cuboids": [{"p_min": {"hue": 0.5, ...},
///                             "p_max": {"hue": 0.8, ...}}, ...],
///                "mu0": 1.0, "c": 10.0,
///                "domain_weights": {"color": 0.5, ...},
///                "dimension_weights": {"hue": 1.0, ...}}, ...]}
///
/// Concepts are defined only on their own domains; infinities never appear
/// in files (undeclared domains are simply omitted).
class ConceptSpace {
public:
    ConceptSpace(StructurePtr structure, std::vector<std::pair<std::string, Concept>> concepts);

    const DomainStructure& structure() const { return *structure_; }
    StructurePtr structure_ptr() const { return structure_; }
    const std::vector<std::pair<std::string, Concept>>& concepts() const { return concepts_; }

    const Concept& at(const std::string& name) const;
    bool has(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    StructurePtr structure_;
    std::vector<std::pair<std::string, Concept>> concepts_;
};

/// Parses and validates a space file; throws validation_error with a
/// location-anchored message on malformed input.
ConceptSpace parse_space_file(const std::string& json_text);
ConceptSpace load_space_file(const std::string& path);

/// Serializes back to the schema above (semantic round-trip).
std::string serialize_space(const ConceptSpace& space, int indent = 2);

} // namespace cspace

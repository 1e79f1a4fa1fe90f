#pragma once

#include <map>
#include <optional>
#include <string>

#include "evensym/continuity.hpp"

namespace evensym {

// A model description loaded from JSON. Field values are expression strings
// in the grammar of parser.hpp; matrices are row-major arrays of strings.
//
//   {
//     "mode": "chart" | "torus",
//     "dim": 2, "rank": 2,
//     "omega": [["0", "1"], ["-1", "0"]],
//     "g": [r x r matrix]             (optional, identity when absent)
//     "gamma": [d matrices, r x r]    (optional, zero when absent)
//     "metric_scale": "1/2"           (optional rational constant)
//     "sections": {"f": "x1*e[1]^e[2]"},
//     "derivations": {"D": {"nabla": [d entries], "contra": [r entries]}},
//     "rescale": "1 + e[1]^e[2]"      (optional, even with invertible body)
//     "canonical_volume": "1"         (optional coefficient, excludes rescale)
//     "density": {"base": "...", "sigma": "..."}  (optional)
//   }
struct Manifest {
	SymplecticData data;
	std::map<std::string, Superfunction> sections;
	std::map<std::string, GradedDerivation> derivations;
	std::optional<Superfunction> rescale;
	std::optional<CoeffFn> canonical_volume;
	std::optional<TimeDependentSection> density;
};

// Reads and validates a manifest file. Syntax problems raise ParseError with
// positions; inconsistent shapes or inadmissible model data raise
// SemanticError with the offending field path. A mode override reinterprets
// every expression in the given mode.
Manifest parse_manifest(const std::string& path, std::optional<Mode> mode_override = std::nullopt);
Manifest parse_manifest_text(const std::string& text,
                             std::optional<Mode> mode_override = std::nullopt);

}  // namespace evensym

#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "hkd/ade_catalog.hpp"
#include "hkd/betti.hpp"
#include "hkd/bivariate.hpp"
#include "hkd/combinators.hpp"
#include "hkd/graded_ring.hpp"
#include "hkd/hn_dim2.hpp"
#include "hkd/lattice.hpp"

namespace hkd::io {

using Json = nlohmann::ordered_json;

// Every reader throws ParseError on malformed input (missing keys, wrong
// types, bad rational literals). Semantic checks stay with the domain types.

Json parse_text(const std::string& text);
Json read_file(const std::filesystem::path& path);
/// Canonical text: two-space indentation, trailing newline.
std::string dump(const Json& j);

/// {"breakpoints": ["0", ...], "pieces": [["c0", "c1", ...], ...], "tail": null | [...]}
Json to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const Json& j);
/// Accepts a bare PiecewisePoly object or any object carrying one under "f".
PiecewisePoly density_from_json(const Json& j);

/// {"d": 2, "betti": [{"i": 1, "j": 12, "b": 1}, ...]}
Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

/// {"d": 2, "F": ..., "f": ...}
Json to_json(const DensityPair& pair);
DensityPair pair_from_json(const Json& j);

/// {"d": 1, "components": [{"slope": "-1", "rank": 1}], "twists": [1, 1]}; twists optional.
Json to_json(const HNData& data);
HNData hn_from_json(const Json& j);
std::optional<std::vector<long>> twists_from_json(const Json& j);

struct LatticeSpec {
  SemigroupSpec semigroup;
  MonomialIdealSpec ideal;
};
/// {"rank", "gens", "weights", "p"}; p defaults to 5.
SemigroupSpec semigroup_from_json(const Json& j);
/// {"semigroup": {...}, "ideal": {"gens"}}
Json to_json(const LatticeSpec& spec);
LatticeSpec lattice_spec_from_json(const Json& j);

/// {"ring": {"type": "ci", "gens": [...], "rels": [...]}} or
/// {"ring": {"type": "semigroup", "ref": "file.json"}} (ref resolved against base_dir)
/// or {"ring": {"type": "polynomial", "d": 2}}.
GradedRingSpec ring_from_json(const Json& j, const std::filesystem::path& base_dir);

/// Nested 2x3 arrays of sparse-term lists [a, b, coef]; coef is a rational
/// string or ["a", "b", "D"] for a + b sqrt(D).
Json to_json(const HbMatrix& m);
HbMatrix hb_matrix_from_json(const Json& j);

Json to_json(const SupDistance& d);
Json to_json(const CatalogVerdict& v);

}  // namespace hkd::io

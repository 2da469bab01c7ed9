#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/heptagon.hpp"
#include "polyknot/hexagon.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/polygon.hpp"
#include "polyknot/projection.hpp"
#include "polyknot/sampler.hpp"

namespace polyknot {

/// Reads {"vertices": [[x,y,z], ...]} or, if the text does not start with
/// '{', one "x y z" triple per line ('#' starts a comment). Throws
/// Error(ParseError) on malformed input, fewer than three vertices or
/// non-finite coordinates.
Polygon parse_polygon(const std::string& text, const Tolerance& tol = {});

/// JSON array whose elements are polygon objects or bare vertex arrays.
std::vector<Polygon> parse_polygon_list(const std::string& text, const Tolerance& tol = {});

nlohmann::json polygon_to_json(const Polygon& p);
/// Round-trip precision text, one vertex per line.
std::string polygon_to_text(const Polygon& p);

/// Throws Error(ParseError) if the file cannot be read.
std::string read_file(const std::string& path);

nlohmann::json to_json(const EmbeddingReport& r);
nlohmann::json to_json(const JointClass& j);
nlohmann::json to_json(const XiReport& x);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const Identification& id);
nlohmann::json to_json(const HullRelabeling& h);
nlohmann::json to_json(const IsotopyPath& p);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const PermutahedronGraph& g);

CensusReport census_from_json(const nlohmann::json& j);

}  // namespace polyknot

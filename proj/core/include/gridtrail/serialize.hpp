#pragma once

#include <string>

#include "gridtrail/trail.hpp"
#include "gridtrail/trees.hpp"

namespace gridtrail {

// Compact JSON with sorted keys and canonical rationals, so equal values give
// byte-identical text.
std::string trail_to_json(const Trail& t);
std::string tree_to_json(const CoveringTree& t);
std::string report_to_json(const CoverageReport& r);
std::string report_to_json(const TreeReport& r);

// Throw ParseError on malformed input.
Trail trail_from_json(const std::string& text);
CoveringTree tree_from_json(const std::string& text);

// Distinguishes the two document kinds by their keys.
enum class DocumentKind { trail, tree };
DocumentKind detect_document(const std::string& text);

std::string node_to_string(const Node& n);   // "(1,0,2)"
std::string point_to_string(const Point& p);

}  // namespace gridtrail

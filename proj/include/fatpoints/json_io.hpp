#pragma once

#include <json.hpp>

#include "fatpoints/scheme.hpp"

namespace fatpoints {

using Json = nlohmann::ordered_json;

// A scheme together with its ambient system.
struct SchemeDocument {
  MultiProjectiveSpace space;
  Multidegree degree;
  FatPointScheme scheme;
};

Json to_json(const CoordinateSubvariety& sub);
CoordinateSubvariety subvariety_from_json(const Json& j, int factors);

// Consecutive identical unpinned points are written as one entry with a "count" field.
Json to_json(const SchemeDocument& doc);
SchemeDocument document_from_json(const Json& j);

}  // namespace fatpoints

#pragma once

#include <json.hpp>

#include "polyform/form.hpp"

// Shared JSON building blocks for the library's serialization surface.
// Internal to the implementation: public headers never expose the json type.
namespace polyform::detail {

using ordered_json = nlohmann::ordered_json;

// [{"indices": [...], "coeff": [{"exps": [...], "num": "...", "den": "..."}]}]
// in index-set order, terms in monomial order; both orders are the map
// iteration orders, so equal forms produce identical documents.
ordered_json form_json(const Form& a);

}  // namespace polyform::detail

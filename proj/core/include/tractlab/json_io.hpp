#pragma once

#include <span>
#include <string>

#include "tractlab/fmatroid.hpp"
#include "tractlab/hyperfield.hpp"
#include "tractlab/partial_field.hpp"
#include "tractlab/perfection.hpp"
#include "tractlab/report.hpp"
#include "tractlab/tract.hpp"

namespace tractlab {

// Parsers for the wire descriptions.  Element tables are matrices of
// element names; formal sums appear either as lists of term names
// (explicit null sets) or as sorted [element, multiplicity] pairs.
Tract tract_from_json(const std::string& text);
Hyperfield hyperfield_from_json(const std::string& text);
PartialField partial_field_from_json(const std::string& text);
FMatroid fmatroid_from_json(const std::string& text);

// Reference resolution: "builtin:<name>" for the built-in catalog,
// "fixture:<key>" for the canonical dual pairs, anything else a file path.
Tract load_tract(const std::string& ref);
Hyperfield load_hyperfield(const std::string& ref);
FMatroid load_fmatroid(const std::string& ref);

// Serializers emit compact JSON with a fixed key order plus a trailing
// newline, so output is byte-stable.
std::string report_to_json(const AxiomReport& r);
std::string reports_to_json(std::span<const AxiomReport> rs);
std::string certificate_to_json(const Certificate& c);

// [[element, multiplicity], ...] in term order
std::string sum_to_wire(const FormalSum& s);

// {"kind": ..., "subject": ..., "bound": ..., "count": ..., "members":
// [wire sums]} for closure listings
std::string members_to_json(const std::string& kind, const std::string& subject,
                            int bound, std::span<const FormalSum> members);

}  // namespace tractlab

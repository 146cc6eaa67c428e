#pragma once

#include "json.hpp"
#include "lha/abacus.hpp"
#include "lha/partition.hpp"

namespace lha {

// Key order is fixed by insertion, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// {"kind":"lecture_hall","n":N,"parts":[...]}
Json to_json(const LectureHallPartition& lambda);

// {"kind":"bounded","n":N,"parts":[...]}
Json to_json(const BoundedPartition& p);

// {"n":N,"defining_beads":[...]}
Json to_json(const AbacusDiagram& a);

// Readers check structure only (semantic validity belongs to the operation
// consuming the value): parse_error on a missing/mistyped field or on a
// "kind" that contradicts the requested type. Unknown keys are ignored so
// command output pipes back in.
LectureHallPartition lecture_hall_from_json(const Json& j);
BoundedPartition bounded_from_json(const Json& j);
AbacusDiagram abacus_from_json(const Json& j);

}  // namespace lha

#include "lha/json_io.hpp"

#include <string>

#include "lha/errors.hpp"

namespace lha {

namespace {

Int int_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field \"") + key + '"');
    const Json& v = j.at(key);
    if (!v.is_number_integer())
        throw parse_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<Int>();
}

std::vector<Int> int_array_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field \"") + key + '"');
    const Json& v = j.at(key);
    if (!v.is_array())
        throw parse_error(std::string("field \"") + key + "\" must be an array");
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Json& e : v) {
        if (!e.is_number_integer())
            throw parse_error(std::string("field \"") + key + "\" must hold integers only");
        out.push_back(e.get<Int>());
    }
    return out;
}

void check_kind(const Json& j, const char* expected) {
    if (!j.is_object() || !j.contains("kind")) return;  // kind is optional on input
    const Json& v = j.at("kind");
    if (!v.is_string())
        throw parse_error("field \"kind\" must be a string");
    if (v.get<std::string>() != expected)
        throw parse_error("expected kind \"" + std::string(expected) + "\", got \"" +
                          v.get<std::string>() + '"');
}

}  // namespace

Json to_json(const LectureHallPartition& lambda) {
    Json j;
    j["kind"] = "lecture_hall";
    j["n"] = lambda.n;
    j["parts"] = lambda.parts;
    return j;
}

Json to_json(const BoundedPartition& p) {
    Json j;
    j["kind"] = "bounded";
    j["n"] = p.n;
    j["parts"] = p.parts;
    return j;
}

Json to_json(const AbacusDiagram& a) {
    Json j;
    j["n"] = a.n;
    j["defining_beads"] = a.defining_beads;
    return j;
}

LectureHallPartition lecture_hall_from_json(const Json& j) {
    check_kind(j, "lecture_hall");
    return LectureHallPartition{int_field(j, "n"), int_array_field(j, "parts")};
}

BoundedPartition bounded_from_json(const Json& j) {
    check_kind(j, "bounded");
    return BoundedPartition{int_field(j, "n"), int_array_field(j, "parts")};
}

AbacusDiagram abacus_from_json(const Json& j) {
    return AbacusDiagram{int_field(j, "n"), int_array_field(j, "defining_beads")};
}

}  // namespace lha

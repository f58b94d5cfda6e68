#pragma once

// JSON documents exchanged by the CLI.
//
// Configuration: {"dim": 2|3, "point": [..], "mode": "open"|"closed",
//                 "balls": [{"center": [..], "radius": r}, ..]}
// Certificate:   {"covered": bool, "margin": m,
//                 "checks": {"outside_point": bool, "pairwise_disjoint": bool,
//                            "centers_on_boundary": bool|null},
//                 "witness": [..]|null, "samples_used": n, ...}
// Domain:        {"dim": 2|3, "kind": "implicit"|"polygon"|"mesh",
//                 "payload": "<expression>"
//                          | {"vertices": [[..], ..]}
//                          | {"vertices": [[..], ..], "triangles": [[i,j,k], ..]}}
//
// Malformed documents raise Error(io_error).

#include <filesystem>
#include <string>
#include <string_view>

#include "shadow/constructions.hpp"
#include "shadow/domain.hpp"
#include "shadow/solver.hpp"

namespace shadow {

std::string config_to_json(const ShadowConfig& cfg);
ShadowConfig config_from_json(std::string_view text);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

std::string domain_to_json(const Domain& d);
Domain domain_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace shadow

#pragma once

#include <string>

#include "abp/channels.hpp"

namespace abp {

// JSON extension descriptor:
//   {"kind": "theta"|"beta"|"friedrichs"|"krein",
//    "re": [[..4x4..]], "im": [[..4x4..]]}
// row-major in the flat channel ordering; "krein" expands to Theta = 0 and
// matrix-free kinds omit "re"/"im". Values round-trip bit-exactly.
ExtensionParam ext_from_json_text(const std::string& text);
ExtensionParam ext_from_json_file(const std::string& path);
std::string ext_to_json_text(const ExtensionParam& ext);

}  // namespace abp

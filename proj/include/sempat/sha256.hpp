#pragma once

#include <string>
#include <string_view>

namespace sempat {

// FIPS 180-4 SHA-256, returned as a lowercase hex digest.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

}  // namespace sempat

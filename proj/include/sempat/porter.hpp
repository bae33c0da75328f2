#pragma once

#include <string>
#include <string_view>

namespace sempat {

// Porter suffix-stripping stemmer, steps 1a-5b as originally published.
// Input is expected to be a lowercase alphabetic token; output never has
// more characters than the input.
std::string porter_stem(std::string_view token);

}  // namespace sempat

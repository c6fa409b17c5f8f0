#pragma once

#include <string>
#include <string_view>

namespace flcc::detail {

// Lowercase hex sha256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace flcc::detail

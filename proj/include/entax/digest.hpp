#pragma once

#include <string>

namespace entax {

/// sha-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& data);

/// Digest of a file's contents; throws std::runtime_error if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace entax

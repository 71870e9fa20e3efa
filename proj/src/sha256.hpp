#ifndef QUIVERCERT_SHA256_HPP
#define QUIVERCERT_SHA256_HPP

#include <string>

namespace qvc {

// Lowercase hex SHA-256 digest of the bytes.
std::string sha256_hex(const std::string& data);

}  // namespace qvc

#endif

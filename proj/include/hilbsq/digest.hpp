#ifndef HILBSQ_DIGEST_HPP
#define HILBSQ_DIGEST_HPP

#include <string>
#include <string_view>

namespace hilbsq {

// SHA-256 of the given bytes as lowercase hex.
std::string sha256_hex(std::string_view bytes);

}  // namespace hilbsq

#endif

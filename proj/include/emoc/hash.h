// include/emoc/hash.h

// Copyright 2026  EmoCorrector Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOC_HASH_H_
#define EMOC_HASH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace emoc {

// Streaming FNV-1a 64. Used for artifact content hashes and the index body
// checksum; any single-byte change flips the digest.
class Fnv1a64 {
 public:
  Fnv1a64& update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ull;
    }
    return *this;
  }

  Fnv1a64& update(std::string_view s) { return update(s.data(), s.size()); }

  Fnv1a64& update_u64(uint64_t v) { return update(&v, sizeof(v)); }

  uint64_t digest() const { return h_; }

 private:
  uint64_t h_ = 0xcbf29ce484222325ull;
};

inline uint64_t fnv1a64(std::string_view bytes) {
  return Fnv1a64().update(bytes).digest();
}

std::string hash_hex(uint64_t h);
uint64_t hash_from_hex(const std::string& hex);

}  // namespace emoc

#endif  // EMOC_HASH_H_

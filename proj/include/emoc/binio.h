// include/emoc/binio.h

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

#ifndef EMOC_BINIO_H_
#define EMOC_BINIO_H_

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <string_view>

#include "emoc/common.h"

namespace emoc {

std::string read_file(const std::filesystem::path& path);
bool file_exists(const std::filesystem::path& path);
// Writes via a temp file + rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
void append_line(const std::filesystem::path& path, const std::string& line);

// Little-endian byte packing for the binary artifact formats.
class ByteWriter {
 public:
  void put_u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void put_u16(uint16_t v) { put_raw(&v, sizeof(v)); }
  void put_u32(uint32_t v) { put_raw(&v, sizeof(v)); }
  void put_u64(uint64_t v) { put_raw(&v, sizeof(v)); }
  void put_f32(float v) { put_raw(&v, sizeof(v)); }
  void put_bytes(std::string_view s) { buf_.append(s); }

  const std::string& bytes() const { return buf_; }
  std::string take() { return std::move(buf_); }
  size_t size() const { return buf_.size(); }

 private:
  void put_raw(const void* p, size_t n) {
    buf_.append(static_cast<const char*>(p), n);
  }
  std::string buf_;
};

class ByteReader {
 public:
  ByteReader(std::string_view data, std::string context)
      : data_(data), context_(std::move(context)) {}

  uint8_t get_u8() { return get<uint8_t>("u8"); }
  uint16_t get_u16() { return get<uint16_t>("u16"); }
  uint32_t get_u32() { return get<uint32_t>("u32"); }
  uint64_t get_u64() { return get<uint64_t>("u64"); }
  float get_f32() { return get<float>("f32"); }

  std::string_view get_bytes(size_t n, const char* what) {
    require(n, what);
    std::string_view out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  size_t pos() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  template <typename T>
  T get(const char* what) {
    require(sizeof(T), what);
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }

  void require(size_t n, const char* what) {
    if (pos_ + n > data_.size()) {
      throw FormatError(context_ + ": truncated while reading " + what +
                        " at offset " + std::to_string(pos_));
    }
  }

  std::string_view data_;
  std::string context_;
  size_t pos_ = 0;
};

// Row-major f32 matrix blob helpers (frames.bin, weights.bin).
void append_f32_matrix(std::string& out, const MatF& m);
MatF read_f32_matrix(std::string_view bytes, size_t float_offset, int rows,
                     int cols, const std::string& context);

}  // namespace emoc

#endif  // EMOC_BINIO_H_

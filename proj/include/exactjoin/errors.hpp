// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactjoin {

enum class Errc {
  parse,              // malformed input text
  dimension_mismatch, // operands of different space dimension
  domain_form,        // constraint outside the domain's syntactic class
  precondition,       // operation precondition violated
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what, std::size_t offset = npos)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  bool has_offset() const { return offset_ != npos; }
  std::size_t offset() const { return offset_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  Errc code_;
  std::size_t offset_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw Error(Errc::dimension_mismatch,
                std::string(op) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                    std::to_string(b) + ")");
}

} // namespace exactjoin

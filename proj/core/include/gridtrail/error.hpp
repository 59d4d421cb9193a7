#pragma once

#include <stdexcept>
#include <string>

namespace gridtrail {

// Invalid input or violated precondition.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized document. offset is the byte position of the first
// syntax error, or npos for schema errors (the message then names a JSON pointer).
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(const std::string& what, std::size_t offset = npos)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  bool has_offset() const { return offset_ != npos; }

 private:
  std::size_t offset_;
};

// Workload exceeds a configured node or lattice limit.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

}  // namespace gridtrail

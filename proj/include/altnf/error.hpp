#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altnf {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string &what) : std::runtime_error(what) {}
};

/// Raised by the text parsers; carries a 1-based character position.
class parse_error : public error {
public:
  parse_error(const std::string &what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        _position(position) {}

  std::size_t position() const { return _position; }

private:
  std::size_t _position;
};

} // namespace altnf

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degen {

// Malformed input: bad graph6/planar_code bytes, inconsistent rotation systems.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit FormatError(const std::string& what)
      : std::runtime_error(what), offset_(0) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotPlanarError : public std::runtime_error {
 public:
  NotPlanarError() : std::runtime_error("graph is not planar") {}
};

// Raised when a planar input defeats the reduction search. Mathematically this
// should never happen; the payload is everything needed to reproduce it.
class CounterexampleFound : public std::runtime_error {
 public:
  CounterexampleFound(const std::string& what, std::string graph6, std::string ledger)
      : std::runtime_error(what), graph6_(std::move(graph6)), ledger_(std::move(ledger)) {}

  const std::string& graph6() const noexcept { return graph6_; }
  const std::string& ledger() const noexcept { return ledger_; }

 private:
  std::string graph6_;
  std::string ledger_;
};

}  // namespace degen

#ifndef GLUING_ERROR_HPP_
#define GLUING_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gluing {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the supported desk-scale limits (vertex count, multiplicity, enumeration size).
class cap_exceeded : public error {
 public:
  using error::error;
};

/// Malformed text input (GFMT graphs, assembly scripts, data tables).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit parse_error(const std::string& what) : parse_error(what, 0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph, embedding or gluing specification violates its structural invariants.
class invalid_input : public error {
 public:
  using error::error;
};

/// A guard needs data it was not given and cannot derive within the caps.
class missing_parameter : public error {
 public:
  using error::error;
};

/// A guarded gluing was refused. `step` is the script step index when known.
class guard_rejected : public error {
 public:
  guard_rejected(std::string guard, std::size_t step)
      : error("step " + std::to_string(step) + ": guard " + guard + " rejected the gluing"),
        guard_(std::move(guard)),
        step_(step) {}

  const std::string& guard() const noexcept { return guard_; }
  std::size_t step() const noexcept { return step_; }

 private:
  std::string guard_;
  std::size_t step_;
};

/// A post-condition that the library verifies internally did not hold.
class internal_inconsistency : public error {
 public:
  using error::error;
};

}  // namespace gluing

#endif  // GLUING_ERROR_HPP_

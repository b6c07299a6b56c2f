#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

#include "omni/model.hpp"

namespace omni {

// Malformed or inconsistent model file. line is 1-based, 0 when the problem
// is not tied to one line (e.g. a missing user).
class ModelFileError : public std::runtime_error {
 public:
  ModelFileError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Model file grammar ('#' starts a comment, blank lines ignored):
//
//   type=bitpool
//   user <id>: <bit> <bit> ...
//
//   type=table
//   H <id>,<id>,... = <p/q | integer | decimal>
//
// Ids are 1..|V| with none missing. A table lists every nonempty subset once.
// Throws ModelFileError on syntax or coverage problems, CapacityError when a
// table has more than 24 users.
SourceModel read_model(std::istream& in);
SourceModel read_model_file(const std::string& path);

// Writers produce input that read_model accepts.
std::string write_bitpool(const BitPoolSource& source);
std::string write_table(const SourceModel& model);

}  // namespace omni

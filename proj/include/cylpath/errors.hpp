#pragma once

// Error taxonomy. parse_error covers malformed input text, precondition_error
// covers callers breaking an operation's contract, and internal_error means a
// library invariant broke mid-operation (the message carries the walk trace
// when one exists). Size-guard refusals get their own type so the CLI can map
// them to a dedicated exit code.

#include <stdexcept>
#include <string>

namespace cylpath {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class not_balanced_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

class not_origin_connected_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

class size_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A walk from a weld point visited a weld point above its start, or an
// extracted lap closed with the wrong length. Valid inputs cannot trigger
// this; it signals a corrupted weight function or a bug.
class walk_invariant_error : public internal_error {
 public:
  using internal_error::internal_error;
};

}  // namespace cylpath

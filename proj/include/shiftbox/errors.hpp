#pragma once

#include <stdexcept>
#include <string>

namespace shiftbox {

/// Classified failure reasons. Everything except parse_error and
/// limit_exceeded is a precondition violation.
enum class errc {
  parse_error,
  limit_exceeded,
  bad_coset,
  invalid_move,
  invalid_tuple,
  no_empty_coset,
  no_extraction,
  no_entry_in_subgroup,
  tuple_larger_than_index,
  rank_too_large,
  not_lr_cleaned,
  multiple_entries_in_subgroup,
  presentation_mismatch,
  non_square_blocks,
  not_a_transversal,
  not_normal,
  entry_not_in_subgroup,
  index_too_large,
  search_too_large,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

inline bool is_precondition(errc code) {
  return code != errc::parse_error && code != errc::limit_exceeded;
}

}  // namespace shiftbox

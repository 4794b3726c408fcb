#pragma once

#include <stdexcept>
#include <string>

namespace coxmat {

enum class errc {
  invalid_rank,
  invalid_comparison,
  invalid_pair_input,
  empty_projection,
  non_split_form,
  invalid_input,
  parse_error,
  internal,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::invalid_rank: return "invalid-rank";
    case errc::invalid_comparison: return "invalid-comparison";
    case errc::invalid_pair_input: return "invalid-pair-input";
    case errc::empty_projection: return "empty-projection";
    case errc::non_split_form: return "non-split-form";
    case errc::invalid_input: return "invalid-input";
    case errc::parse_error: return "parse-error";
    case errc::internal: return "internal-invariant-violation";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace coxmat

#pragma once

#include <stdexcept>
#include <string>

namespace tevelev {

enum class Errc {
  non_monotone,
  negative_part,
  does_not_fit,
  bad_grading,
  ctx_mismatch,
  bad_numerology,
  n_too_small,
  bad_divisibility,
  internal_mismatch,
  hypothesis_not_met,
  unsupported_regime,
  bad_input,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace tevelev

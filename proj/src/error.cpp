#include "tevelev/error.hpp"

namespace tevelev {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_monotone: return "NON_MONOTONE";
    case Errc::negative_part: return "NEGATIVE_PART";
    case Errc::does_not_fit: return "DOES_NOT_FIT";
    case Errc::bad_grading: return "BAD_GRADING";
    case Errc::ctx_mismatch: return "CTX_MISMATCH";
    case Errc::bad_numerology: return "BAD_NUMEROLOGY";
    case Errc::n_too_small: return "N_TOO_SMALL";
    case Errc::bad_divisibility: return "BAD_DIVISIBILITY";
    case Errc::internal_mismatch: return "INTERNAL_MISMATCH";
    case Errc::hypothesis_not_met: return "HYPOTHESIS_NOT_MET";
    case Errc::unsupported_regime: return "UNSUPPORTED_REGIME";
    case Errc::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tevelev

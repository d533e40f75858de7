#pragma once

#include <stdexcept>
#include <string>

namespace por {

enum class Errc {
  mismatched_fields,
  division_by_zero,
  length_mismatch,
  parameter_error,
  not_a_codeword,
  too_large_to_enumerate,
  empty_codebook,
  ordinal_out_of_range,
  invalid_challenge,
  shape_mismatch,
  invalid_params,
  store_exhausted,
  oracle_inconsistent,
  protocol_error,
  connection_error,
  io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace por

#include "por/errors.hpp"

namespace por {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::mismatched_fields: return "MismatchedFields";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::parameter_error: return "ParameterError";
    case Errc::not_a_codeword: return "NotACodeword";
    case Errc::too_large_to_enumerate: return "TooLargeToEnumerate";
    case Errc::empty_codebook: return "EmptyCodebook";
    case Errc::ordinal_out_of_range: return "OrdinalOutOfRange";
    case Errc::invalid_challenge: return "InvalidChallenge";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::store_exhausted: return "StoreExhausted";
    case Errc::oracle_inconsistent: return "OracleInconsistent";
    case Errc::protocol_error: return "ProtocolError";
    case Errc::connection_error: return "ConnectionError";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace por

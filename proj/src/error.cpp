#include "kidemonas/error.hpp"

namespace kidemonas {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_key_size: return "InvalidKeySize";
    case Errc::message_too_long: return "MessageTooLong";
    case Errc::decryption_failure: return "DecryptionFailure";
    case Errc::already_owned: return "AlreadyOwned";
    case Errc::auth_failure: return "AuthFailure";
    case Errc::invalid_pcr_index: return "InvalidPcrIndex";
    case Errc::ingest_rejected: return "IngestRejected";
    case Errc::no_detector: return "NoDetector";
    case Errc::channel_corruption: return "ChannelCorruption";
    case Errc::empty_input: return "EmptyInput";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::access_violation: return "AccessViolation";
    case Errc::config_error: return "ConfigError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

ConfigError::ConfigError(std::string field_path, const std::string& message)
    : Error(Errc::config_error, field_path + ": " + message), field_(std::move(field_path)) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace kidemonas

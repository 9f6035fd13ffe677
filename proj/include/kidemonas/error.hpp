#pragma once

#include <stdexcept>
#include <string>

namespace kidemonas {

enum class Errc {
  invalid_key_size,
  message_too_long,
  decryption_failure,
  already_owned,
  auth_failure,
  invalid_pcr_index,
  ingest_rejected,
  no_detector,
  channel_corruption,
  empty_input,
  unknown_node,
  access_violation,
  config_error,
  io_error,
};

const char* errc_name(Errc code);

/// Domain error carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Scenario/config validation failure; `field()` is the offending field path,
/// e.g. "attacker.stages[2].actions[0].target".
class ConfigError : public Error {
 public:
  ConfigError(std::string field_path, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace kidemonas

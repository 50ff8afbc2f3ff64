#pragma once

#include <stdexcept>
#include <string>

namespace calibra {

// Error taxonomy maps 1:1 onto CLI exit codes: usage/config -> 2, io -> 3,
// numeric -> 4.
enum class ErrorKind { usage, config, io, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::usage:
      case ErrorKind::config:
        return 2;
      case ErrorKind::io:
        return 3;
      case ErrorKind::numeric:
        return 4;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void fail_config(const std::string& msg) { throw Error(ErrorKind::config, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(ErrorKind::numeric, msg); }

}  // namespace calibra

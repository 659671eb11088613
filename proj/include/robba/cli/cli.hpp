// Command-line front end: session configuration, command dispatch and JSON
// results. run_cli is the whole program minus process plumbing, so tests
// drive it in-process.
#pragma once

#include "robba/witt.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace robba::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode {
  kExitOk = 0,
  kExitParse = 2,
  kExitIndeterminate = 3,
  kExitPrecondition = 4,
  kExitInternal = 5,
};

struct SessionConfig {
  int p = 2;
  int q = 2;
  int m = 1;
  FpPoly modulus;
  Rational t_exponent{1};
  Rational default_tprec{16};
  EMode e_mode = EMode::EqualChar;
  int wprec = 6;

  /// Flat "key = value" lines; '#' starts a comment. Keys: p, q, m, modulus
  /// (comma separated coefficients, low to high), t_exponent, tprec, wprec,
  /// backend. Throws Error(Parse, "config") naming the line.
  static SessionConfig parse(std::string_view text);
  /// One key; same keys and errors as parse.
  void set(const std::string& key, const std::string& value);

  /// Validated ring; Precondition "bad_config" when inconsistent.
  RingPtr ring() const;
};

/// Backend names accepted on the command line: equalchar, mixed.
EMode parse_backend(const std::string& text);
std::string backend_name(EMode mode);

/// args excludes the program name. Results and errors go to `out` as JSON,
/// usage text and one-line diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robba::cli

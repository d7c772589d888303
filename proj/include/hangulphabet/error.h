#pragma once

#include <stdexcept>
#include <string>

namespace hangulphabet {

enum class Errc {
  LeadingCombiningMark,
  UnpairedTieBar,
  UnknownSymbol,
  NoOfficialSymbol,
  IndexOutOfRange,
  CoordinateOutOfRange,
  NotEncodable,
  UnassignedCodepoint,
  MissingGeometry,
  MalformedData,
  InvalidUtf8,
  BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Problems with what the caller handed us: unknown symbols, malformed
// codepoint streams, out-of-range features, bad flags. CLI exit code 2.
class InputError : public Error {
 public:
  InputError(Errc code, const std::string& message) : Error(code, message) {}
};

// Problems with shipped/selected data files or geometry. CLI exit code 3.
class DataError : public Error {
 public:
  DataError(Errc code, const std::string& message) : Error(code, message) {}
};

}  // namespace hangulphabet

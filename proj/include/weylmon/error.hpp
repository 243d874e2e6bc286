#pragma once

#include <stdexcept>
#include <string>

namespace weylmon {

enum class Errc {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  BadCompletion,
  NotDominant,
  NotDominantIntegral,
  DominanceViolated,
  NotMuConnected,
  PiNotMuConnected,
  NotIdempotent,
  NotARealRoot,
  TooLarge,
  FiniteTypeRequired,
  ElementParseError,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace weylmon

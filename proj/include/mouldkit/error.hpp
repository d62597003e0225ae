#ifndef MOULDKIT_ERROR_HPP
#define MOULDKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mouldkit {

enum class errc {
  zero_denominator,
  mixed_alphabet,
  not_generic,
  target_mismatch,
  parse_error,
  non_expandable,
  order_too_low,
  divergent,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::mixed_alphabet: return "MixedAlphabet";
    case errc::not_generic: return "NotGeneric";
    case errc::target_mismatch: return "TargetMismatch";
    case errc::parse_error: return "ParseError";
    case errc::non_expandable: return "NonExpandable";
    case errc::order_too_low: return "OrderTooLow";
    case errc::divergent: return "Divergent";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Parse failures carry the byte offset and the token classes that would
// have been accepted there.
class parse_error : public error {
 public:
  parse_error(std::size_t pos, std::string expected, std::string msg)
      : error(errc::parse_error,
              msg + " at position " + std::to_string(pos) + " (expected " + expected + ")"),
        pos_(pos),
        expected_(std::move(expected)) {}
  std::size_t position() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::string expected_;
};

}  // namespace mouldkit

#endif

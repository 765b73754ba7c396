#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace endoforge {

enum class ErrorCode {
  kInvalidArgument,
  kGroupMismatch,
  kNotAGroup,
  kNotASubgroup,
  kNotNormal,
  kIntersectionNontrivial,
  kProductIncomplete,
  kNotHomomorphism,
  kNotAutomorphism,
  kNotPGroup,
  kNotAbelian,
  kNotSpecial,
  kNotFpf,
  kNotNilpotent,
  kNotInvariant,
  kGlueConditions,
  kCapExceeded,
  kParse,
  kSemantic,
  kInternal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a group specification; `offset` is the byte position.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kParse, what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void ensure(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}
inline void ensure(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

// Minimal value-or-error holder; std::expected is not available on our
// toolchains yet.
template <class T, class E>
class Expected {
 public:
  Expected(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : v_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const& {
    if (!has_value()) throw Error(ErrorCode::kInternal, "Expected: no value");
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!has_value()) throw Error(ErrorCode::kInternal, "Expected: no value");
    return std::get<0>(std::move(v_));
  }
  const E& error() const& {
    if (has_value()) throw Error(ErrorCode::kInternal, "Expected: no error");
    return std::get<1>(v_);
  }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> v_;
};

}  // namespace endoforge

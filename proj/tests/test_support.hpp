#pragma once

#include <functional>
#include <optional>

#include <doctest.h>

#include "strange/error.hpp"

// Runs f and reports which ErrorCode it raised, if any.
inline std::optional<strange::ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const strange::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define CHECK_ERROR(expr, code) CHECK(error_of([&] { (void)(expr); }) == std::optional(strange::ErrorCode::code))

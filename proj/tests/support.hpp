#pragma once

#include <doctest.h>

#include "a1u/error.hpp"

namespace a1u::test {

// Code of the a1u::Error thrown by f; fails the test if nothing is thrown.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an a1u::Error");
  return ErrorCode::DataError;
}

}  // namespace a1u::test

#pragma once

#include <doctest.h>

#include "sdcat/error.hpp"

// Runs `expr` and checks that it throws sdcat::Error of the given kind.
#define CHECK_KIND(expr, expected_kind)                                       \
  do {                                                                        \
    bool thrown_ = false;                                                     \
    try {                                                                     \
      (void)(expr);                                                           \
    } catch (const sdcat::Error& e_) {                                        \
      thrown_ = true;                                                         \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());                 \
    }                                                                         \
    CHECK_MESSAGE(thrown_, "expected " << sdcat::to_string(expected_kind));   \
  } while (false)

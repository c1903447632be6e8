#pragma once

#include "curvgraph/error.hpp"

#include <doctest.h>

#include <map>
#include <string>

// Runs `expr` and checks that it throws curvgraph::Error with the given code.
#define CHECK_ERROR(expr, expected)                                        \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void)(expr);                                                        \
    } catch (const curvgraph::Error& e_) {                                 \
      thrown_ = true;                                                      \
      CHECK_MESSAGE(e_.code() == (expected), "got ",                       \
                    std::string(curvgraph::error_code_name(e_.code())));   \
    }                                                                      \
    CHECK_MESSAGE(thrown_, "no curvgraph::Error from " #expr);             \
  } while (0)

template <class K, class V>
V get_or_zero(const std::map<K, V>& m, K key) {
  auto it = m.find(key);
  return it == m.end() ? V{} : it->second;
}

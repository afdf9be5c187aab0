#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "gedsim/error.hpp"

namespace gedsim::testing {

inline ::testing::AssertionResult throws_code(const std::function<void()>& f, ErrorCode want) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == want) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << to_string(e.code()) << " instead of " << to_string(want);
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "threw foreign exception: " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << to_string(want);
}

}  // namespace gedsim::testing

#define EXPECT_CODE(stmt, code) EXPECT_TRUE(::gedsim::testing::throws_code([&] { (void)(stmt); }, ::gedsim::ErrorCode::code))

#pragma once

#include <gmock/gmock.h>

#include "hahn/error.hpp"

// Expects `stmt` to throw hahn::Error carrying `err_code`.
#define EXPECT_HAHN_ERROR(stmt, err_code)                                 \
  EXPECT_THAT([&] { (void)(stmt); },                                      \
              ::testing::Throws<::hahn::Error>(                           \
                  ::testing::Property(&::hahn::Error::code, ::hahn::ErrorCode::err_code)))

#pragma once

#include <filesystem>
#include <string>

#ifndef WCITE_FIXTURE_DIR
#error "WCITE_FIXTURE_DIR must be defined by the build"
#endif

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(WCITE_FIXTURE_DIR) / name;
}

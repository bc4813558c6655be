#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cyc/error.hpp"

// Asserts that an expression throws cyc::Error with the given kind.
#define CHECK_KIND(expr, kind_)                                    \
  do {                                                             \
    bool caught_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const cyc::Error& e_) {                               \
      caught_ = true;                                              \
      CHECK_MESSAGE(e_.kind() == cyc::ErrorKind::kind_, e_.what()); \
    }                                                              \
    CHECK_MESSAGE(caught_, #expr " did not throw");                 \
  } while (0)

// Like CHECK_KIND but also asserts the message contains a fragment.
#define CHECK_KIND_MSG(expr, kind_, fragment_)                              \
  do {                                                                      \
    bool caught_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const cyc::Error& e_) {                                        \
      caught_ = true;                                                       \
      CHECK_MESSAGE(e_.kind() == cyc::ErrorKind::kind_, e_.what());          \
      CHECK_MESSAGE(std::string(e_.what()).find(fragment_) != std::string::npos, \
                    e_.what());                                             \
    }                                                                       \
    CHECK_MESSAGE(caught_, #expr " did not throw");                          \
  } while (0)

inline std::string data_file(const std::string& name) {
  return std::string(CYC_DATA_DIR) + "/" + name;
}

// Writes content to a file in a per-process temp directory and returns its path.
inline std::string write_temp(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cyc-tests";
  fs::create_directories(dir);
  fs::path path = dir / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

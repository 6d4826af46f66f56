#include "vacalib/errors.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace vacalib {

namespace {
std::mutex g_warn_mutex;
WarningHandler g_handler = [](const std::string& msg) {
  std::cerr << "[vacalib warning] " << msg << "\n";
};
}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard<std::mutex> lock(g_warn_mutex);
  std::swap(g_handler, handler);
  return handler;
}

void warn(const std::string& message) {
  WarningHandler h;
  {
    std::lock_guard<std::mutex> lock(g_warn_mutex);
    h = g_handler;
  }
  if (h) h(message);
}

}  // namespace vacalib

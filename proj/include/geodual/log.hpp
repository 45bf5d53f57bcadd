#pragma once

#include <string>

namespace geodual::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Threshold comes from the GEODUAL_LOG environment variable
// (error|warn|info|debug), read once; default is warn.
Level threshold();
void set_threshold(Level lvl);

void emit(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { emit(Level::error, msg); }
inline void warn(const std::string& msg) { emit(Level::warn, msg); }
inline void info(const std::string& msg) { emit(Level::info, msg); }
inline void debug(const std::string& msg) { emit(Level::debug, msg); }

} // namespace geodual::log

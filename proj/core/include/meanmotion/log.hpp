#pragma once

#include <string>

namespace meanmotion::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Threshold comes from MEANMOTION_LOG={error,warn,info,debug}; default warn.
Level threshold();
void set_threshold(Level lvl);

void write(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { write(Level::error, msg); }
inline void warn(const std::string& msg) { write(Level::warn, msg); }
inline void info(const std::string& msg) { write(Level::info, msg); }
inline void debug(const std::string& msg) { write(Level::debug, msg); }

}  // namespace meanmotion::log

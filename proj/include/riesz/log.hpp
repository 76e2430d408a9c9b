#ifndef RIESZ_LOG_HPP
#define RIESZ_LOG_HPP

#include <sstream>
#include <string>

namespace riesz::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from the RIESZ_TILER_LOG environment variable
// (error|warn|info|debug); default is warn.
Level level();
void set_level(Level lv);
void write(Level lv, const std::string& msg);

template <typename... Args>
void emit(Level lv, Args&&... args) {
    if (lv > level()) return;
    std::ostringstream os;
    (os << ... << args);
    write(lv, os.str());
}

template <typename... Args> void error(Args&&... a) { emit(Level::Error, a...); }
template <typename... Args> void warn(Args&&... a) { emit(Level::Warn, a...); }
template <typename... Args> void info(Args&&... a) { emit(Level::Info, a...); }
template <typename... Args> void debug(Args&&... a) { emit(Level::Debug, a...); }

} // namespace riesz::log

#endif

#include "riesz/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace riesz::log {

namespace {

Level parse_env() {
    const char* env = std::getenv("RIESZ_TILER_LOG");
    if (!env) return Level::Warn;
    if (std::strcmp(env, "error") == 0) return Level::Error;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
}

Level g_level = parse_env();

const char* tag(Level lv) {
    switch (lv) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        case Level::Debug: return "debug";
    }
    return "?";
}

} // namespace

Level level() { return g_level; }
void set_level(Level lv) { g_level = lv; }

void write(Level lv, const std::string& msg) {
    std::fprintf(stderr, "[riesz-tiler %s] %s\n", tag(lv), msg.c_str());
}

} // namespace riesz::log

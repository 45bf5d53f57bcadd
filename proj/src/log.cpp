#include "geodual/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace geodual::log {

namespace {

Level parse_env() {
    const char* v = std::getenv("GEODUAL_LOG");
    if (v == nullptr) return Level::warn;
    if (std::strcmp(v, "error") == 0) return Level::error;
    if (std::strcmp(v, "warn") == 0) return Level::warn;
    if (std::strcmp(v, "info") == 0) return Level::info;
    if (std::strcmp(v, "debug") == 0) return Level::debug;
    return Level::warn;
}

Level g_threshold = parse_env();

const char* label(Level lvl) {
    switch (lvl) {
        case Level::error: return "error";
        case Level::warn: return "warn";
        case Level::info: return "info";
        case Level::debug: return "debug";
    }
    return "?";
}

} // namespace

Level threshold() { return g_threshold; }

void set_threshold(Level lvl) { g_threshold = lvl; }

void emit(Level lvl, const std::string& msg) {
    if (static_cast<int>(lvl) <= static_cast<int>(g_threshold)) {
        std::fprintf(stderr, "[geodual %s] %s\n", label(lvl), msg.c_str());
    }
}

} // namespace geodual::log

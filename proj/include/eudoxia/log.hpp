#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string_view>

namespace eudoxia {

enum class LogLevel { error = 0, info = 1, debug = 2 };

// Verbosity comes from EUDOXIA_LOG ("error", "info", "debug"); default error.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("EUDOXIA_LOG");
        if (env == nullptr) return LogLevel::error;
        std::string_view v{env};
        if (v == "debug") return LogLevel::debug;
        if (v == "info") return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

inline bool log_enabled(LogLevel lvl) {
    return static_cast<int>(lvl) <= static_cast<int>(log_level());
}

template <typename... Args>
void log_at(LogLevel lvl, std::string_view component, Args&&... args) {
    if (!log_enabled(lvl)) return;
    std::ostringstream oss;
    oss << (lvl == LogLevel::debug ? "debug" : lvl == LogLevel::info ? "info" : "error");
    oss << " [" << component << "] ";
    (oss << ... << std::forward<Args>(args));
    oss << '\n';
    std::cerr << oss.str();
}

}  // namespace eudoxia

// Hot-path logging: arguments are not evaluated unless the level is enabled.
#define EUDOXIA_LOG_DEBUG(component, ...)                                              \
    do {                                                                               \
        if (::eudoxia::log_enabled(::eudoxia::LogLevel::debug))                        \
            ::eudoxia::log_at(::eudoxia::LogLevel::debug, component, __VA_ARGS__);     \
    } while (0)

#define EUDOXIA_LOG_INFO(component, ...)                                               \
    do {                                                                               \
        if (::eudoxia::log_enabled(::eudoxia::LogLevel::info))                         \
            ::eudoxia::log_at(::eudoxia::LogLevel::info, component, __VA_ARGS__);      \
    } while (0)

#pragma once

#include <spdlog/spdlog.h>

#include <utility>

namespace resched {

/// Shared stderr logger. Its level comes from RESCHED_LOG (off, info or
/// debug; anything else means off) the first time it is requested.
spdlog::logger& logger();

template <class... Args>
void log_info(fmt::format_string<Args...> format, Args&&... args)
{
    logger().info(format, std::forward<Args>(args)...);
}

template <class... Args>
void log_debug(fmt::format_string<Args...> format, Args&&... args)
{
    logger().debug(format, std::forward<Args>(args)...);
}

} // namespace resched

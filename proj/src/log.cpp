#include "resched/log.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>

#include <cstdlib>
#include <string_view>

namespace resched {

spdlog::logger& logger()
{
    static std::shared_ptr<spdlog::logger> instance = [] {
        auto l = spdlog::stderr_color_mt("resched");
        l->set_pattern("[%l] %v");
        std::string_view level = std::getenv("RESCHED_LOG") ? std::getenv("RESCHED_LOG") : "off";
        if (level == "debug")
            l->set_level(spdlog::level::debug);
        else if (level == "info")
            l->set_level(spdlog::level::info);
        else
            l->set_level(spdlog::level::off);
        return l;
    }();
    return *instance;
}

} // namespace resched

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace automult {

// Library failure carrying a short machine-greppable tag plus detail text.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& detail)
        : std::runtime_error(tag + ": " + detail), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

}  // namespace automult

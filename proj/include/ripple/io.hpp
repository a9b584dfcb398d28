#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ripple {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ripple

#pragma once

#include <cstdio>
#include <string>

namespace nts {

/// Round-trip text for a double (17 significant digits).
inline std::string format_real(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace nts

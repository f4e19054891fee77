#ifndef CAPA_ISAC_TOOLS_CSV_HPP
#define CAPA_ISAC_TOOLS_CSV_HPP

#include <cstdio>
#include <string>

namespace capa_isac::cli {

/// All CSV numbers go through this: 12 significant digits, shortest form.
inline std::string fmt_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace capa_isac::cli

#endif

#include "splitquat/algebra.hpp"

#include <ostream>
#include <sstream>

namespace splitquat {

namespace {

void append_term(std::ostream& os, bool& first, double v, const char* unit) {
    if (v == 0.0) return;
    if (first) {
        if (v < 0) os << "-";
        first = false;
    } else {
        os << (v < 0 ? " - " : " + ");
    }
    const double a = std::abs(v);
    if (a != 1.0 || unit[0] == '\0') os << a;
    os << unit;
}

} // namespace

std::ostream& operator<<(std::ostream& os, const SplitQuaternion& h) {
    bool first = true;
    std::ostringstream buf;
    append_term(buf, first, h.w, "");
    append_term(buf, first, h.x, "i");
    append_term(buf, first, h.y, "j");
    append_term(buf, first, h.z, "k");
    if (first) buf << "0";
    return os << buf.str();
}

} // namespace splitquat

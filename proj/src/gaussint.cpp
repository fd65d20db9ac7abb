#include "su21/gaussint.hpp"

#include <sstream>

namespace su21 {

std::string GaussInt::str() const {
    std::ostringstream os;
    os << re.str();
    if (im >= 0)
        os << "+" << im.str() << "i";
    else
        os << "-" << bigint(-im).str() << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    return os << z.str();
}

std::string GMat3::str() const {
    std::ostringstream os;
    for (int i = 0; i < 9; ++i) {
        os << a[i].str();
        if (i < 8) os << ",";
    }
    return os.str();
}

} // namespace su21

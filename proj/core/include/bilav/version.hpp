#ifndef BILAV_VERSION_HPP
#define BILAV_VERSION_HPP

namespace bilav {

inline constexpr const char* kVersion = "0.1.0";

}

#endif

#ifndef PTSH_VERSION_HPP
#define PTSH_VERSION_HPP

namespace ptsh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptsh

#endif  // PTSH_VERSION_HPP

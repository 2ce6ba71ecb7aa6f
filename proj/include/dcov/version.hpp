#ifndef DCOV_VERSION_HPP
#define DCOV_VERSION_HPP

namespace dcov {

constexpr const char* artifact_name = "dblcov";
constexpr const char* artifact_version = "0.1.0";

} // namespace dcov

#endif

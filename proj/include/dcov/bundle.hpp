#ifndef DCOV_BUNDLE_HPP
#define DCOV_BUNDLE_HPP

#include <map>
#include <string>
#include <variant>

#include "dcov/poly.hpp"

namespace dcov {

// Instance bundle: a named collection of polynomials with roles, plus the
// (n, d, k) parameters when they apply (-1 when they do not). This is the
// unit of exchange for the CLI and the C API.
template <class F>
struct Bundle {
    std::string name;
    int n = -1, d = -1, k = -1;
    std::map<std::string, PolyT<F>> polys;

    bool has(const std::string& role) const { return polys.count(role) > 0; }

    const PolyT<F>& at(const std::string& role) const {
        auto it = polys.find(role);
        if (it == polys.end())
            fail(ErrorCode::bad_argument, "bundle is missing the '" + role + "' polynomial");
        return it->second;
    }
};

using AnyBundle = std::variant<Bundle<QField>, Bundle<ZpField>>;

} // namespace dcov

#endif

#pragma once

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "twistk/int_types.hpp"

namespace twistk::detail {

// Int <-> JSON: a plain number when it fits in 64 bits, a decimal string
// otherwise.
inline nlohmann::json int_to_json(const Int& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline Int int_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace twistk::detail

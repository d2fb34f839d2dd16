#include "realbundles/field.hpp"

#include <string>

#include "realbundles/error.hpp"

namespace rb {

void validate_field(const FieldSpec& k) {
    const unsigned p = k.characteristic;
    if (p == 0)
        return;
    if (p == 2)
        throw ValidationError("char2", "characteristic 2 unsupported");
    if (p == 1)
        throw ValidationError("char", "characteristic must be 0 or an odd prime");
    for (unsigned f = 2; f * f <= p; ++f)
        if (p % f == 0)
            throw ValidationError("char", "characteristic " + std::to_string(p) + " is not prime");
}

} // namespace rb

#pragma once

namespace rb {

/// Coefficient field: the rationals (characteristic 0) or F_p for an odd prime p.
struct FieldSpec {
    unsigned characteristic = 0;

    bool is_rational() const noexcept { return characteristic == 0; }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Rejects characteristic 2 and non-prime characteristics.
void validate_field(const FieldSpec& k);

} // namespace rb

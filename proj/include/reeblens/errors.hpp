#pragma once

#include <stdexcept>
#include <string>

namespace reeblens {

enum class errc {
    not_coprime,
    bad_modulus,
    out_of_range,
    trivial_class,
    eps_too_large,
    dimension_mismatch,
    empty_table,
    on_spectrum,
    bad_spectrum,
    bad_params,
    pinching_fails,
    unresolved_winding,
    not_symplectic,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_coprime: return "NotCoprime";
        case errc::bad_modulus: return "BadModulus";
        case errc::out_of_range: return "OutOfRange";
        case errc::trivial_class: return "TrivialClass";
        case errc::eps_too_large: return "EpsTooLarge";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::empty_table: return "EmptyTable";
        case errc::on_spectrum: return "OnSpectrum";
        case errc::bad_spectrum: return "BadSpectrum";
        case errc::bad_params: return "BadParams";
        case errc::pinching_fails: return "PinchingFails";
        case errc::unresolved_winding: return "UnresolvedWinding";
        case errc::not_symplectic: return "NotSymplectic";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace reeblens

#pragma once

// JSON renderings of library values. Rationals and group elements are
// rendered as their exact text forms.

#include <nlohmann/json.hpp>

#include <optional>

#include "bsn/dioph.hpp"
#include "bsn/endo.hpp"
#include "bsn/group.hpp"
#include "bsn/tcp.hpp"

namespace bsn {

/// {"type":"I"|"II","alpha":<rat>,"beta":<rat>,"c":<int>}; type II has alpha "0",
/// type I has c = 1.
inline nlohmann::json endo_json(const Endo& e) {
    if (e.is_type_i()) {
        const auto& f = e.as_type_i();
        return {{"type", "I"}, {"alpha", f.alpha.str()}, {"beta", f.beta.str()}, {"c", 1}};
    }
    const auto& f = e.as_type_ii();
    return {{"type", "II"}, {"alpha", "0"}, {"beta", f.beta.str()}, {"c", f.c}};
}

inline nlohmann::json element_json(const std::optional<GroupElement>& g) {
    if (!g)
        return nullptr;
    return to_string(*g);
}

inline nlohmann::json tcp_json(const TcpResult& r) {
    return {{"decision", r.decision}, {"witness", element_json(r.witness)}, {"trace", r.trace}};
}

/// {"solvable":bool,"x":..,"y":..,"z":..}; y is a decimal string when it does
/// not fit a 64-bit integer.
inline nlohmann::json dioph_json(const std::optional<DiophSolution>& s) {
    if (!s)
        return {{"solvable", false}};
    nlohmann::json y = s->y.fits_slong_p() ? nlohmann::json(s->y.get_si()) : nlohmann::json(s->y.get_str());
    return {{"solvable", true}, {"x", s->x}, {"y", y}, {"z", s->z}};
}

} // namespace bsn

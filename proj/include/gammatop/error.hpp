#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammatop {

enum class errc {
    invalid_point_set,
    mask_out_of_range,
    missing_empty_or_whole,
    not_closed_under_union,
    not_closed_under_intersection,
    not_an_open_set,
    unknown_point,
    size_too_large,
    table_mode_too_large,
    gamma_not_expansive,
    table_domain_mismatch,
    empty_member,
    not_directed,
    invalid_directed_set,
    syntax_error,
    unknown_label,
    topology_invalid,
    unknown_predicate,
    unknown_example,
};

inline const char* to_string(errc code)
{
    switch (code) {
    case errc::invalid_point_set: return "InvalidPointSet";
    case errc::mask_out_of_range: return "MaskOutOfRange";
    case errc::missing_empty_or_whole: return "MissingEmptyOrWhole";
    case errc::not_closed_under_union: return "NotClosedUnderUnion";
    case errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case errc::not_an_open_set: return "NotAnOpenSet";
    case errc::unknown_point: return "UnknownPoint";
    case errc::size_too_large: return "SizeTooLarge";
    case errc::table_mode_too_large: return "TableModeTooLarge";
    case errc::gamma_not_expansive: return "GammaNotExpansive";
    case errc::table_domain_mismatch: return "TableDomainMismatch";
    case errc::empty_member: return "EmptyMember";
    case errc::not_directed: return "NotDirected";
    case errc::invalid_directed_set: return "InvalidDirectedSet";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_label: return "UnknownLabel";
    case errc::topology_invalid: return "TopologyInvalid";
    case errc::unknown_predicate: return "UnknownPredicate";
    case errc::unknown_example: return "UnknownExample";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type. `witness()`
/// carries the raw bit patterns of the offending subsets, if any.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::vector<std::uint32_t> witness = {},
          std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
        , witness_(std::move(witness))
        , line_(line)
    {
    }

    errc code() const noexcept { return code_; }
    const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    errc code_;
    std::vector<std::uint32_t> witness_;
    std::optional<std::size_t> line_;
};

} // namespace gammatop

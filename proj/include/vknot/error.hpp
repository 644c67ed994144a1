#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vknot {

enum class ErrorKind {
    MalformedToken,
    LabelCountMismatch,
    RoleConflict,
    SignConflict,
    NotAKnot,
    PartialResolution,
    EdgeNotOutgoing,
    SiteOutOfRange,
    SizeLimitExceeded,
    NotAComplex,
    NotEvenDiagram,
    MoveNotApplicable,
    EndMismatch,
    DisconnectedSurface,
    NonIntegerGenus,
    MalformedCertificate,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelCountMismatch: return "LabelCountMismatch";
    case ErrorKind::RoleConflict: return "RoleConflict";
    case ErrorKind::SignConflict: return "SignConflict";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::PartialResolution: return "PartialResolution";
    case ErrorKind::EdgeNotOutgoing: return "EdgeNotOutgoing";
    case ErrorKind::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotEvenDiagram: return "NotEvenDiagram";
    case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorKind::EndMismatch: return "EndMismatch";
    case ErrorKind::DisconnectedSurface: return "DisconnectedSurface";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    }
    return "Unknown";
}

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what), step_(step) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }  // what() without the kind prefix

    // Index of the failing move when raised while replaying a certificate.
    std::optional<std::size_t> step() const noexcept { return step_; }

private:
    ErrorKind kind_;
    std::string message_;
    std::optional<std::size_t> step_;
};

}  // namespace vknot

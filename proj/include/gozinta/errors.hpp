// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gozinta {

enum class Errc {
    NonPositiveSide,
    TooFewSides,
    DimensionMismatch,
    NoExpandSide,
    AmountNotLarger,
    BoundExceeded,
    NotMutuallyNestable,
    AdjacentEqualities,
    MalformedSystem,
    MissingVariable,
    NormalizeUnsupported,
    InconsistentCase,
    NotVerified,
    BudgetExceeded,
    DimensionTooSmall,
    UnverifiedInput,
    ElementAbsent,
    ArrangementMismatch,
    NonPositiveConstant,
    NoIsolationGap,
    ValueOutsideGap,
    ReductionMismatch,
    ParseError,
    DuplicateLabel,
    UnknownLabel,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPositiveSide: return "NonPositiveSide";
        case Errc::TooFewSides: return "TooFewSides";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NoExpandSide: return "NoExpandSide";
        case Errc::AmountNotLarger: return "AmountNotLarger";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::NotMutuallyNestable: return "NotMutuallyNestable";
        case Errc::AdjacentEqualities: return "AdjacentEqualities";
        case Errc::MalformedSystem: return "MalformedSystem";
        case Errc::MissingVariable: return "MissingVariable";
        case Errc::NormalizeUnsupported: return "NormalizeUnsupported";
        case Errc::InconsistentCase: return "InconsistentCase";
        case Errc::NotVerified: return "NotVerified";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::DimensionTooSmall: return "DimensionTooSmall";
        case Errc::UnverifiedInput: return "UnverifiedInput";
        case Errc::ElementAbsent: return "ElementAbsent";
        case Errc::ArrangementMismatch: return "ArrangementMismatch";
        case Errc::NonPositiveConstant: return "NonPositiveConstant";
        case Errc::NoIsolationGap: return "NoIsolationGap";
        case Errc::ValueOutsideGap: return "ValueOutsideGap";
        case Errc::ReductionMismatch: return "ReductionMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::UnknownLabel: return "UnknownLabel";
    }
    return "Unknown";
}

/// Library error: a code for programmatic handling plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace gozinta

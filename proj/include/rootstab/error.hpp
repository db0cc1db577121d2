#pragma once

#include <stdexcept>
#include <string>

namespace rootstab {

/// Stable error codes shared by the library and the CLI's structured
/// error documents.
enum class Errc {
    NonSymmetricGram,
    WrongSignature,
    NonPositive,
    BadRoot,
    DimensionMismatch,
    BTwistWithGerbeComponent,
    SectorOutOfRange,
    RankMismatch,
    SectorCountMismatch,
    BadWindow,
    ZeroCharge,
    OutOfSector,
    PreconditionViolated,
    HypothesisViolated,
    BadT,
    UnboundedRequest,
    ZeroImaginary,
    SingularTransform,
    ZeroChargeSample,
    NotPositiveDefinite,
    WindowViolated,
    ParseError,
    ValidationError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace rootstab

#include "rootstab/error.hpp"

namespace rootstab {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NonSymmetricGram: return "NonSymmetricGram";
    case Errc::WrongSignature: return "WrongSignature";
    case Errc::NonPositive: return "NonPositive";
    case Errc::BadRoot: return "BadRoot";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BTwistWithGerbeComponent: return "BTwistWithGerbeComponent";
    case Errc::SectorOutOfRange: return "SectorOutOfRange";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::SectorCountMismatch: return "SectorCountMismatch";
    case Errc::BadWindow: return "BadWindow";
    case Errc::ZeroCharge: return "ZeroCharge";
    case Errc::OutOfSector: return "OutOfSector";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BadT: return "BadT";
    case Errc::UnboundedRequest: return "UnboundedRequest";
    case Errc::ZeroImaginary: return "ZeroImaginary";
    case Errc::SingularTransform: return "SingularTransform";
    case Errc::ZeroChargeSample: return "ZeroChargeSample";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::WindowViolated: return "WindowViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace rootstab

#pragma once

#include <stdexcept>
#include <string>

namespace itelab {

// Base class for all itelab failures; `code()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct OrderOverflow : Error {
    explicit OrderOverflow(const std::string& w) : Error("OrderOverflow", w) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& w) : Error("InvalidParams", w) {}
};
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& w) : Error("QuadratureFailure", w) {}
};
struct StiffnessFailure : Error {
    explicit StiffnessFailure(const std::string& w) : Error("StiffnessFailure", w) {}
};
struct InvalidK : Error {
    explicit InvalidK(const std::string& w) : Error("InvalidK", w) {}
};
struct BoundaryZero : Error {
    explicit BoundaryZero(const std::string& w) : Error("BoundaryZero", w) {}
};
struct PhaseJump : Error {
    explicit PhaseJump(const std::string& w) : Error("PhaseJump", w) {}
};
struct InsufficientData : Error {
    explicit InsufficientData(const std::string& w) : Error("InsufficientData", w) {}
};
struct MatchSingular : Error {
    explicit MatchSingular(const std::string& w) : Error("MatchSingular", w) {}
};
struct PoleOnGrid : Error {
    explicit PoleOnGrid(const std::string& w) : Error("PoleOnGrid", w) {}
};
struct ContourTooClose : Error {
    explicit ContourTooClose(const std::string& w) : Error("ContourTooClose", w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};

}  // namespace itelab

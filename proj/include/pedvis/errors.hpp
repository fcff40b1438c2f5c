#pragma once

#include <stdexcept>
#include <string>

namespace pedvis {

/// Base of every error thrown by the library. `code()` is a stable
/// machine-readable tag used by the CLI and the HTTP layer.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define PEDVIS_DEFINE_ERROR(Name, Code)                                        \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& message) : Error(Code, message) {}    \
    }

PEDVIS_DEFINE_ERROR(CycleError, "CYCLE");
PEDVIS_DEFINE_ERROR(DanglingReference, "DANGLING_PARENT");
PEDVIS_DEFINE_ERROR(DuplicatePerson, "DUPLICATE_PERSON");
PEDVIS_DEFINE_ERROR(InvalidInput, "INVALID_INPUT");
PEDVIS_DEFINE_ERROR(UnknownPerson, "UNKNOWN_PERSON");
PEDVIS_DEFINE_ERROR(UnknownUnit, "UNKNOWN_UNIT");
PEDVIS_DEFINE_ERROR(UnknownFamily, "UNKNOWN_FAMILY");
PEDVIS_DEFINE_ERROR(SchemaError, "SCHEMA");
PEDVIS_DEFINE_ERROR(ConfigError, "CONFIG");
PEDVIS_DEFINE_ERROR(DomainError, "DOMAIN");
PEDVIS_DEFINE_ERROR(IndexOutOfRange, "INDEX_OUT_OF_RANGE");
PEDVIS_DEFINE_ERROR(PaletteError, "PALETTE");

#undef PEDVIS_DEFINE_ERROR

}  // namespace pedvis
